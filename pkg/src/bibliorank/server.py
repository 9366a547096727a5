"""HTTP JSON service exposing the index and the ranking stratagems.

Every stratagem runs over the full match set per request, on the fly;
pagination slices the re-ranked list afterwards so page boundaries can
never reorder results. The index is immutable and shared read-only, so
any number of requests may be in flight at once.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .bradford import journal_yields, partition_zones, zone_report
from .coauthor import (
    DEFAULT_NODE_CAP,
    GraphTooLargeError,
    betweenness,
    build_coauthor_graph,
    doc_centrality,
    graph_export,
    rerank_by_centrality,
)
from .index import EmptyQueryError, Index, RankedList, search_tfidf
from .stratagems import STRATAGEMS, apply_stratagem

__all__ = ["create_app"]

MAX_LIMIT = 1000


class _BadRequest(Exception):
    def __init__(self, message: str):
        self.message = message


def _base_search(index: Index, q: str) -> RankedList:
    if not q.strip():
        raise _BadRequest("empty query")
    try:
        return search_tfidf(index, q)
    except EmptyQueryError:
        raise _BadRequest("empty query") from None


def create_app(index: Index, node_cap: int = DEFAULT_NODE_CAP) -> FastAPI:
    """Build the service around one loaded index."""
    app = FastAPI(title="bibliorank", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(_BadRequest)
    async def bad_request_handler(request: Request, exc: _BadRequest):
        return JSONResponse(status_code=400, content={"error": exc.message})

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": "invalid parameter"})

    @app.exception_handler(GraphTooLargeError)
    async def graph_too_large_handler(request: Request, exc: GraphTooLargeError):
        return JSONResponse(status_code=503, content={"error": str(exc)})

    @app.get("/health")
    def health():
        return {"status": "ok", "doc_count": index.doc_count}

    @app.get("/search")
    def search(q: str = "", rank: str = "tfidf", limit: int = 20, offset: int = 0):
        if rank not in STRATAGEMS:
            raise _BadRequest(f"unknown rank: {rank!r}")
        if not 1 <= limit <= MAX_LIMIT:
            raise _BadRequest(f"limit must be between 1 and {MAX_LIMIT}")
        if offset < 0:
            raise _BadRequest("offset must be >= 0")

        started = time.perf_counter()
        base = _base_search(index, q)
        search_ms = (time.perf_counter() - started) * 1000.0

        zones: dict[str, str] = {}
        centrality_table = None
        started = time.perf_counter()
        if rank == "authcent":
            graph = build_coauthor_graph(base, index)
            if len(graph.nodes) > node_cap:
                raise GraphTooLargeError(len(graph.nodes), node_cap)
            centrality_table = betweenness(graph)
            ranked = rerank_by_centrality(base, index, centrality_table)
        else:
            ranked = apply_stratagem(rank, base, index, node_cap=node_cap)
            if rank in ("bradford", "bradford_mult"):
                table = journal_yields(ranked, index)
                if table.yields:
                    zones = partition_zones(table).zones
        rerank_ms = (time.perf_counter() - started) * 1000.0

        results = []
        for entry in ranked.entries[offset : offset + limit]:
            record = index.record(entry.doc_id)
            row = {
                "id": record.id,
                "rank": entry.rank,
                "score": entry.score,
                "title": record.title,
                "authors": list(record.authors),
                "journal": record.journal,
                "issn": record.issn,
            }
            if rank in ("bradford", "bradford_mult"):
                row["zone"] = zones.get(record.issn) if record.issn else None
            if rank == "authcent":
                value, author = doc_centrality(record, centrality_table or {})
                row["author_centrality"] = value
                row["central_author"] = author
            results.append(row)

        return {
            "query": q,
            "stratagem": rank,
            "total": len(ranked.entries),
            "limit": limit,
            "offset": offset,
            "timing": {"search_ms": search_ms, "rerank_ms": rerank_ms},
            "results": results,
        }

    @app.get("/zones")
    def zones_endpoint(q: str = ""):
        base = _base_search(index, q)
        return zone_report(base, index)

    @app.get("/graph")
    def graph_endpoint(q: str = ""):
        base = _base_search(index, q)
        graph = build_coauthor_graph(base, index)
        if len(graph.nodes) > node_cap:
            raise GraphTooLargeError(len(graph.nodes), node_cap)
        return graph_export(graph, betweenness(graph))

    @app.get("/documents/{doc_id}")
    def document(doc_id: str):
        record = index.docs.get(doc_id)
        if record is None:
            return JSONResponse(status_code=404, content={"error": f"unknown document: {doc_id}"})
        return {
            "id": record.id,
            "title": record.title,
            "abstract": record.abstract,
            "keywords": list(record.keywords),
            "authors": list(record.authors),
            "journal": record.journal,
            "issn": record.issn,
            "year": record.year,
        }

    return app
