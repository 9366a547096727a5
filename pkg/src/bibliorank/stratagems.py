"""Named ranking stratagems: the baseline plus the on-the-fly re-rankers."""

from __future__ import annotations

from .bradford import rerank_bradford_mult, rerank_bradford_pure
from .coauthor import DEFAULT_NODE_CAP, rerank_author_centrality
from .index import Index, RankedList, search_tfidf

__all__ = ["STRATAGEMS", "apply_stratagem", "run_stratagem"]

STRATAGEMS = ("tfidf", "bradford", "bradford_mult", "authcent")


def apply_stratagem(
    name: str, base: RankedList, index: Index, node_cap: int = DEFAULT_NODE_CAP
) -> RankedList:
    """Re-rank a baseline result list with the named stratagem.

    ``tfidf`` returns the baseline unchanged; the others permute it.
    """
    if name == "tfidf":
        return base
    if name == "bradford":
        return rerank_bradford_pure(base, index)
    if name == "bradford_mult":
        return rerank_bradford_mult(base, index)
    if name == "authcent":
        return rerank_author_centrality(base, index, node_cap=node_cap)
    raise ValueError(f"unknown rank mode: {name!r}")


def run_stratagem(
    name: str, index: Index, query: str, node_cap: int = DEFAULT_NODE_CAP
) -> RankedList:
    """Search and re-rank in one step, over the full match set."""
    return apply_stratagem(name, search_tfidf(index, query), index, node_cap=node_cap)
