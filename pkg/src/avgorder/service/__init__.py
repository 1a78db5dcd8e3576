"""Service layer: FastAPI app plus the request/response schemas the CLI shares."""

from .app import app, create_app

__all__ = ["app", "create_app"]
