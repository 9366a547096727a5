"""Result-set co-authorship networks and betweenness-centrality re-ranking.

The graph is induced per query from the documents in the ranked list:
every multi-author document contributes a clique over its normalized
author names. Betweenness is exact and unnormalized, with each unordered
node pair counted once, computed by the linear-accumulation scheme in
O(V*E) rather than by all-pairs enumeration. The kernel is JIT-compiled
when numba is available and falls back to the same code in plain Python
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .corpus import BibRecord, EmptyNameError, normalize_author
from .index import Index, RankedEntry, RankedList

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is an install-time dependency
    njit = None

__all__ = [
    "CoauthorGraph",
    "CentralityTable",
    "GraphTooLargeError",
    "DEFAULT_NODE_CAP",
    "build_coauthor_graph",
    "betweenness",
    "doc_centrality",
    "rerank_by_centrality",
    "rerank_author_centrality",
    "graph_export",
]

DEFAULT_NODE_CAP = 50_000

# author key -> exact betweenness value; every graph node has an entry
CentralityTable = dict[str, float]


class GraphTooLargeError(RuntimeError):
    """Graph exceeds the node cap; the stratagem refuses rather than degrade."""

    def __init__(self, node_count: int, node_cap: int):
        super().__init__(
            f"co-authorship graph has {node_count} nodes, above the cap of {node_cap}"
        )
        self.node_count = node_count
        self.node_cap = node_cap


@dataclass
class CoauthorGraph:
    """Undirected, unweighted author graph with per-edge document provenance.

    ``edges`` maps each sorted (a, b) author-key pair to the ids of the
    documents that contributed it; repeated collaboration merges into one
    edge. No self-loops can occur because author keys are deduplicated
    per document before pairing.
    """

    nodes: set[str] = field(default_factory=set)
    edges: dict[tuple[str, str], set[str]] = field(default_factory=dict)


def build_coauthor_graph(results: RankedList, index: Index) -> CoauthorGraph:
    """Induce the co-authorship graph from the documents of a result set.

    A document with k >= 2 authors adds all k(k-1)/2 pairs; a single-author
    document only guarantees its author a node; zero-author documents
    contribute nothing. Construction is order-independent: any permutation
    of the result list produces the identical graph.
    """
    graph = CoauthorGraph()
    for entry in results.entries:
        record = index.record(entry.doc_id)
        keys = set()
        for raw in record.authors:
            try:
                keys.add(normalize_author(raw))
            except EmptyNameError:
                continue
        if not keys:
            continue
        graph.nodes.update(keys)
        if len(keys) >= 2:
            for pair in combinations(sorted(keys), 2):
                graph.edges.setdefault(pair, set()).add(entry.doc_id)
    return graph


def _brandes_csr(indptr: np.ndarray, indices: np.ndarray, n: int) -> np.ndarray:
    """Per-source BFS with backward dependency accumulation over a CSR graph.

    Shortest-path counts and dependencies are accumulated in a fixed order,
    so results are bitwise reproducible. Returns unordered-pair betweenness
    (the ordered-pair sum halved).
    """
    betw = np.zeros(n, dtype=np.float64)
    dist = np.full(n, -1, dtype=np.int32)
    sigma = np.zeros(n, dtype=np.float64)
    delta = np.zeros(n, dtype=np.float64)
    queue = np.empty(n, dtype=np.int32)

    for s in range(n):
        if indptr[s] == indptr[s + 1]:
            continue  # isolated source reaches nothing
        dist[s] = 0
        sigma[s] = 1.0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            next_dist = dist[v] + 1
            sigma_v = sigma[v]
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                dw = dist[w]
                if dw < 0:
                    dist[w] = next_dist
                    queue[tail] = w
                    tail += 1
                    sigma[w] += sigma_v
                elif dw == next_dist:
                    sigma[w] += sigma_v
        # BFS queue doubles as the non-increasing-distance stack.
        for i in range(tail - 1, 0, -1):
            w = queue[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            prev_dist = dist[w] - 1
            for p in range(indptr[w], indptr[w + 1]):
                v = indices[p]
                if dist[v] == prev_dist:
                    delta[v] += sigma[v] * coeff
            betw[w] += delta[w]
        for i in range(tail):
            v = queue[i]
            dist[v] = -1
            sigma[v] = 0.0
            delta[v] = 0.0

    return betw * 0.5


if njit is not None:
    _brandes_csr = njit(cache=True)(_brandes_csr)


def _to_csr(graph: CoauthorGraph) -> tuple[np.ndarray, np.ndarray, list[str]]:
    """CSR adjacency with nodes renumbered in BFS discovery order.

    BFS numbering keeps each component's rows adjacent in memory, which
    matters for the kernel's random accesses; it is derived from the
    sorted node list, so the layout (and the accumulation order) is a
    pure function of the graph.
    """
    nodes = sorted(graph.nodes)
    position = {key: i for i, key in enumerate(nodes)}
    neighbors: list[list[int]] = [[] for _ in nodes]
    for a, b in graph.edges:
        ia, ib = position[a], position[b]
        neighbors[ia].append(ib)
        neighbors[ib].append(ia)
    for adj in neighbors:
        adj.sort()

    order: list[int] = []
    seen = [False] * len(nodes)
    for start in range(len(nodes)):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            order.append(v)
            for w in neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    renumber = [0] * len(nodes)
    for new, old in enumerate(order):
        renumber[old] = new
    indptr = np.zeros(len(nodes) + 1, dtype=np.int32)
    flat: list[int] = []
    for new, old in enumerate(order):
        flat.extend(sorted(renumber[w] for w in neighbors[old]))
        indptr[new + 1] = len(flat)
    indices = np.array(flat, dtype=np.int32) if flat else np.empty(0, dtype=np.int32)
    return indptr, indices, [nodes[old] for old in order]


def betweenness(graph: CoauthorGraph) -> CentralityTable:
    """Exact betweenness for every node, unordered pairs counted once.

    Disconnected pairs contribute nothing; isolated nodes and 2-cliques
    score 0. The empty graph gives an empty table.
    """
    if not graph.nodes:
        return {}
    indptr, indices, nodes = _to_csr(graph)
    values = _brandes_csr(indptr, indices, len(nodes))
    return {key: float(values[i]) for i, key in enumerate(nodes)}


def doc_centrality(record: BibRecord, table: CentralityTable) -> tuple[float, str | None]:
    """A document's relevance under the author-centrality model.

    Returns (max betweenness over the document's authors, the raw name of
    the author attaining it). Documents whose authors are all outside the
    table, or which have no authors, score 0. Ties go to the earliest
    author in document order.
    """
    best = 0.0
    best_author: str | None = None
    for raw in record.authors:
        try:
            key = normalize_author(raw)
        except EmptyNameError:
            continue
        value = table.get(key, 0.0)
        if best_author is None or value > best:
            best = value
            best_author = raw
    return best, best_author


def rerank_by_centrality(results: RankedList, index: Index, table: CentralityTable) -> RankedList:
    """Order documents by their authors' maximum betweenness.

    Ties keep the baseline order (score desc, then doc id), so documents
    of purely solo authors, all scoring 0, fall back to the baseline
    ranking at the bottom of the list.
    """
    decorated = []
    for entry in results.entries:
        value, _ = doc_centrality(index.record(entry.doc_id), table)
        decorated.append((value, entry))
    decorated.sort(key=lambda item: (-item[0], -item[1].score, item[1].doc_id))
    entries = [
        RankedEntry(doc_id=entry.doc_id, score=value, rank=pos)
        for pos, (value, entry) in enumerate(decorated, start=1)
    ]
    return RankedList(query=results.query, entries=entries)


def rerank_author_centrality(
    results: RankedList, index: Index, node_cap: int = DEFAULT_NODE_CAP
) -> RankedList:
    """Build the result-set graph, compute betweenness, and re-rank.

    Raises GraphTooLargeError when the graph exceeds ``node_cap`` nodes;
    betweenness cost grows with V*E and the cap keeps re-ranking
    interactive instead of silently degrading.
    """
    graph = build_coauthor_graph(results, index)
    if len(graph.nodes) > node_cap:
        raise GraphTooLargeError(len(graph.nodes), node_cap)
    return rerank_by_centrality(results, index, betweenness(graph))


def graph_export(graph: CoauthorGraph, table: CentralityTable) -> dict:
    """JSON-ready node/edge listing for inspection UIs."""
    return {
        "nodes": [
            {"author": key, "betweenness": table.get(key, 0.0)}
            for key in sorted(graph.nodes)
        ],
        "edges": [list(pair) for pair in sorted(graph.edges)],
    }
