from .app import AppContext, create_app
from .settings import Settings

__all__ = ["AppContext", "Settings", "create_app"]
