"""Ranking comparison and relevance evaluation.

Rankings here are plain id lists in rank order. Kendall's tau is the
tau-a form without tie handling, which is safe because ranked lists are
strict orderings by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .coauthor import DEFAULT_NODE_CAP
from .index import EmptyQueryError, Index, search_tfidf
from .stratagems import STRATAGEMS, apply_stratagem

__all__ = [
    "Qrels",
    "MismatchedSetsError",
    "TooShortError",
    "KTooLargeError",
    "NoRelevantDocsError",
    "kendall_tau",
    "overlap_at_k",
    "precision_recall_at_k",
    "compare_stratagems",
    "load_qrels",
]


class MismatchedSetsError(ValueError):
    """The two rankings do not hold the same duplicate-free id set."""


class TooShortError(ValueError):
    """Fewer than two items; rank correlation is undefined."""


class KTooLargeError(ValueError):
    """Cutoff k exceeds the length of a ranking."""


class NoRelevantDocsError(ValueError):
    """Qrels hold no relevant document for the query; recall is undefined."""


@dataclass
class Qrels:
    """Binary relevance judgments keyed by (query id, doc id)."""

    judgments: dict[tuple[str, str], int] = field(default_factory=dict)

    def relevant(self, query_id: str) -> set[str]:
        return {
            doc_id
            for (qid, doc_id), value in self.judgments.items()
            if qid == query_id and value == 1
        }


def load_qrels(path: str | Path) -> Qrels:
    """Read qrels from headerless TSV: query_id, doc_id, relevance (0/1)."""
    judgments: dict[tuple[str, str], int] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 3:
                raise ValueError(f"qrels line {line_no}: expected 3 tab-separated fields")
            qid, doc_id, rel = parts
            if rel not in ("0", "1"):
                raise ValueError(f"qrels line {line_no}: relevance must be 0 or 1")
            key = (qid, doc_id)
            if key in judgments:
                raise ValueError(f"qrels line {line_no}: duplicate judgment for {key}")
            judgments[key] = int(rel)
    return Qrels(judgments=judgments)


def _count_inversions(sequence: list[int]) -> int:
    """Inversion count by merge sort; O(n log n)."""
    if len(sequence) < 2:
        return 0
    mid = len(sequence) // 2
    left = sequence[:mid]
    right = sequence[mid:]
    inversions = _count_inversions(left) + _count_inversions(right)
    merged = []
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            inversions += len(left) - i
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    sequence[:] = merged
    return inversions


def kendall_tau(rank_a: list[str], rank_b: list[str]) -> float:
    """Tau-a over all unordered pairs: (concordant - discordant) / (n(n-1)/2).

    Both rankings must order the same duplicate-free id set of size >= 2.
    """
    if len(rank_a) < 2 or len(rank_b) < 2:
        raise TooShortError("rankings must hold at least two items")
    set_a, set_b = set(rank_a), set(rank_b)
    if len(set_a) != len(rank_a) or len(set_b) != len(rank_b):
        raise MismatchedSetsError("rankings must not contain duplicates")
    if set_a != set_b:
        raise MismatchedSetsError("rankings must hold the same id set")

    position_b = {doc_id: pos for pos, doc_id in enumerate(rank_b)}
    sequence = [position_b[doc_id] for doc_id in rank_a]
    discordant = _count_inversions(sequence)
    n = len(rank_a)
    total = n * (n - 1) // 2
    return (total - 2 * discordant) / total


def overlap_at_k(rank_a: list[str], rank_b: list[str], k: int) -> float:
    """Fraction of shared ids between the two top-k prefixes."""
    if k < 1 or k > min(len(rank_a), len(rank_b)):
        raise KTooLargeError(f"k={k} outside 1..{min(len(rank_a), len(rank_b))}")
    return len(set(rank_a[:k]) & set(rank_b[:k])) / k


def precision_recall_at_k(
    ranking: list[str], qrels: Qrels, query_id: str, k: int
) -> tuple[float, float]:
    """Precision and recall of the top k against binary judgments.

    Precision divides by k even when fewer than k documents were
    retrieved. Raises NoRelevantDocsError when the query has no relevant
    documents, rather than returning an undefined recall.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    relevant = qrels.relevant(query_id)
    if not relevant:
        raise NoRelevantDocsError(f"no relevant documents judged for query {query_id!r}")
    hits = sum(1 for doc_id in ranking[:k] if doc_id in relevant)
    return hits / k, hits / len(relevant)


def compare_stratagems(
    index: Index,
    query: str,
    k: int,
    qrels: Qrels | None = None,
    query_id: str | None = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> dict:
    """Run all four stratagems on one query and compare their rankings.

    The report carries per-stratagem totals and top-k ids (plus
    precision/recall when qrels are given) and pairwise tau / top-k
    overlap. A stratagem that fails is recorded as an error entry without
    aborting the others; key order is fixed so serialized reports are
    stable.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    try:
        base = search_tfidf(index, query)
    except EmptyQueryError as exc:
        return {"query": query, "k": k, "error": str(exc), "rankers": {}, "pairwise": {}}

    rankings: dict[str, list[str]] = {}
    rankers: dict[str, dict] = {}
    for name in STRATAGEMS:
        try:
            ranked = apply_stratagem(name, base, index, node_cap=node_cap)
        except Exception as exc:
            rankers[name] = {"error": str(exc)}
            continue
        ids = ranked.ids()
        rankings[name] = ids
        entry: dict = {"total": len(ids), "top_ids": ids[:k]}
        if qrels is not None and query_id is not None:
            try:
                precision, recall = precision_recall_at_k(ids, qrels, query_id, k)
                entry["precision_at_k"] = precision
                entry["recall_at_k"] = recall
            except NoRelevantDocsError as exc:
                entry["metrics_error"] = str(exc)
        rankers[name] = entry

    pairwise: dict[str, dict] = {}
    for i, name_a in enumerate(STRATAGEMS):
        for name_b in STRATAGEMS[i + 1 :]:
            key = f"{name_a}|{name_b}"
            if name_a not in rankings or name_b not in rankings:
                pairwise[key] = {"error": "stratagem unavailable"}
                continue
            ids_a, ids_b = rankings[name_a], rankings[name_b]
            try:
                effective_k = min(k, len(ids_a), len(ids_b))
                pairwise[key] = {
                    "kendall_tau": kendall_tau(ids_a, ids_b),
                    "overlap_at_k": overlap_at_k(ids_a, ids_b, effective_k),
                    "k": effective_k,
                }
            except (TooShortError, KTooLargeError) as exc:
                pairwise[key] = {"error": str(exc)}

    report: dict = {"query": query, "k": k, "rankers": rankers, "pairwise": pairwise}
    if query_id is not None:
        report = {"query_id": query_id, **report}
    return report
