"""FastAPI application factory.

Error mapping: no-solution errors (ghost vector with no preimage, no
admissible prime below the bound, ...) answer 422; invalid input --
including request-shape validation -- answers 400.

Run with: uvicorn wittkit.service.app:app
"""

from __future__ import annotations

import typing

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from ..errors import InvalidInputError, NoSolutionError, WittkitError
from .handlers import ENDPOINTS


def create_app() -> FastAPI:
    app = FastAPI(
        title="wittkit",
        description=(
            "Exact arithmetic in truncated big Witt rings, endomorphism "
            "classes, the Burnside ring of the infinite cyclic group, and "
            "a crystallographic toolkit."
        ),
        version="0.1.0",
    )

    for path, (request_model, handler) in ENDPOINTS.items():
        response_model = typing.get_type_hints(handler).get("return")
        app.post(
            path,
            name=handler.__name__,
            response_model=response_model,
            response_model_exclude_none=True,
        )(_make_endpoint(request_model, handler))

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.exception_handler(NoSolutionError)
    async def no_solution(request: Request, exc: NoSolutionError):
        return JSONResponse(status_code=422, content={"error": str(exc)})

    @app.exception_handler(InvalidInputError)
    async def invalid_input(request: Request, exc: InvalidInputError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(WittkitError)
    async def other_domain_error(request: Request, exc: WittkitError):
        return JSONResponse(status_code=500, content={"error": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def bad_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    return app


def _make_endpoint(request_model, handler):
    def endpoint(payload):
        return handler(payload)

    # set the annotation explicitly: postponed annotation evaluation would
    # otherwise hand FastAPI an unresolvable string
    endpoint.__annotations__ = {"payload": request_model}
    endpoint.__name__ = handler.__name__
    return endpoint


app = create_app()
