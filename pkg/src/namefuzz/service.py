"""Local HTTP JSON API over one index snapshot.

Binds to localhost by default: the corpus is private, on-device-style data.
Every request reads one consistent (snapshot, params) pair; parameter
updates swap that pair atomically, rebuilding the snapshot in memory when
k or lambda change. ``latency_us`` covers the search call only, not
transport.
"""

from __future__ import annotations

import threading
import time
from dataclasses import asdict, replace

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .index import SearchIndex, rebuild_index
from .search import SearchParams, result_to_dict, search

__all__ = ["ServiceState", "create_app", "run", "MAX_QUERY_LEN", "DEFAULT_PORT"]

MAX_QUERY_LEN = 256
DEFAULT_PORT = 7700

_PARAM_FIELDS = {
    "k": int,
    "lambda": (int, float),
    "t1": (int, float),
    "t2": int,
    "min_fuzzy_len": int,
    "limit": int,
}


class ServiceState:
    """Atomically replaceable (snapshot, params) pair plus a request counter."""

    def __init__(self, index: SearchIndex, params: SearchParams | None = None) -> None:
        if params is None:
            params = SearchParams(k=index.k, lam=index.lam)
        params.validate()
        if (params.k, params.lam) != (index.k, index.lam):
            raise ValueError("params do not match the index")
        self._lock = threading.Lock()
        self._current: tuple[SearchIndex, SearchParams] = (index, params)
        self._searches = 0

    @property
    def current(self) -> tuple[SearchIndex, SearchParams]:
        return self._current  # single reference read; always a consistent pair

    @property
    def searches_served(self) -> int:
        return self._searches

    def count_search(self) -> None:
        with self._lock:
            self._searches += 1

    def apply_params(self, params: SearchParams) -> None:
        with self._lock:
            index, _ = self._current
            if (params.k, params.lam) != (index.k, index.lam):
                index = rebuild_index(index, params.k, params.lam)
            self._current = (index, params)


def _params_dict(params: SearchParams) -> dict:
    doc = asdict(params)
    doc["lambda"] = doc.pop("lam")
    return {key: doc[key] for key in ("k", "lambda", "t1", "t2", "min_fuzzy_len", "limit")}


def _error(status: int, message: str, violations: list[str] | None = None) -> JSONResponse:
    body: dict = {"error": message}
    if violations:
        body["violations"] = violations
    return JSONResponse(body, status_code=status)


def create_app(state: ServiceState) -> FastAPI:
    app = FastAPI(title="namefuzz", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["null"],  # pages opened from file:// report a null origin
        allow_origin_regex=r"^https?://(localhost|127\.0\.0\.1)(:\d+)?$",
        allow_methods=["GET", "PUT", "OPTIONS"],
        allow_headers=["Content-Type"],
    )

    @app.get("/api/search")
    def api_search(request: Request):
        q = request.query_params.get("q")
        if q is None:
            return _error(400, "missing query parameter 'q'")
        if len(q) > MAX_QUERY_LEN:
            return _error(400, f"query longer than {MAX_QUERY_LEN} characters")
        index, params = state.current
        raw_limit = request.query_params.get("limit")
        if raw_limit is not None:
            try:
                limit = int(raw_limit)
            except ValueError:
                return _error(400, "limit must be an integer")
            if limit < 0:
                return _error(400, "limit must be >= 0")
            params = replace(params, limit=limit)
        start = time.perf_counter_ns()
        results = search(index, q, params)
        latency_us = (time.perf_counter_ns() - start) // 1000
        state.count_search()
        return {
            "query": q,
            "results": [result_to_dict(r) for r in results],
            "corpus_size": len(index),
            "latency_us": latency_us,
        }

    @app.get("/api/params")
    def get_params():
        _, params = state.current
        return _params_dict(params)

    @app.put("/api/params")
    async def put_params(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "body must be a JSON object")
        if not isinstance(body, dict):
            return _error(400, "body must be a JSON object")
        violations = []
        for key, value in body.items():
            expected = _PARAM_FIELDS.get(key)
            if expected is None:
                violations.append(f"unknown parameter {key!r}")
            elif isinstance(value, bool) or not isinstance(value, expected):
                violations.append(f"{key} has the wrong type")
        if violations:
            return _error(400, "invalid parameters", violations)
        _, params = state.current
        updates = {("lam" if key == "lambda" else key): value for key, value in body.items()}
        candidate = replace(params, **updates)
        violations = candidate.violations()
        if violations:
            return _error(400, "invalid parameters", violations)
        state.apply_params(candidate)
        return _params_dict(candidate)

    @app.get("/api/stats")
    def api_stats():
        index, _ = state.current
        return {
            "corpus_size": len(index),
            "k": index.k,
            "lambda": index.lam,
            "total_bigrams": sum(len(e.profile) for e in index.entries),
            "requests_served": state.searches_served,
        }

    return app


def run(
    index: SearchIndex,
    host: str = "127.0.0.1",
    port: int = DEFAULT_PORT,
    params: SearchParams | None = None,
) -> None:
    """Serve one index until interrupted."""
    import uvicorn

    uvicorn.run(create_app(ServiceState(index, params)), host=host, port=port, log_level="warning")
