"""HTTP service wrapping the library: pydantic schemas, handlers, app factory."""

from .app import app, create_app

__all__ = ["app", "create_app"]
