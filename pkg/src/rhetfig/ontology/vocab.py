"""Predicate vocabulary of the figure ontology, bound to its base namespace."""

from __future__ import annotations

from dataclasses import dataclass

from .terms import Iri


@dataclass(frozen=True)
class FigureVocab:
    """Well-known predicates and classes, resolved against the base namespace.

    The base namespace is the document's default (empty) prefix.
    """

    base: str

    @classmethod
    def from_prefixes(cls, prefixes: dict[str, str]) -> "FigureVocab":
        if "" not in prefixes:
            raise ValueError("ontology document declares no default prefix")
        return cls(prefixes[""])

    def term(self, localname: str) -> Iri:
        return Iri(self.base + localname)

    @property
    def figure_root(self) -> Iri:
        return self.term("RhetoricalFigure")

    @property
    def has_operation(self) -> Iri:
        return self.term("hasOperation")

    @property
    def affected_element(self) -> Iri:
        return self.term("affectedElement")

    @property
    def has_operation_form(self) -> Iri:
        return self.term("hasOperationForm")

    @property
    def is_in_position(self) -> Iri:
        return self.term("isInPosition")

    @property
    def is_in_area(self) -> Iri:
        return self.term("isInArea")

    @property
    def has_definition(self) -> Iri:
        return self.term("hasDefinition")

    @property
    def is_definition(self) -> Iri:
        return self.term("isDefinition")

    @property
    def has_example(self) -> Iri:
        return self.term("hasExample")

    @property
    def is_example(self) -> Iri:
        return self.term("isExample")

    @property
    def has_author(self) -> Iri:
        return self.term("hasAuthor")

    @property
    def has_source(self) -> Iri:
        return self.term("hasSource")

    # Dropdown dimension -> construction predicate.
    @property
    def dimension_predicates(self) -> dict[str, Iri]:
        return {
            "operation": self.has_operation,
            "affected_element": self.affected_element,
            "operational_form": self.has_operation_form,
            "position": self.is_in_position,
            "area": self.is_in_area,
        }


DIMENSIONS = ("operation", "affected_element", "operational_form", "position", "area")
