"""Knowledge-backed annotation service for German rhetorical figures."""

__version__ = "0.1.0"
