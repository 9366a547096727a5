"""Bradfordizing: journal-coreness re-ranking and the 3-zone partition.

Journal identity is the ISSN. Two re-ranking variants exist and are not
equivalent: the pure form orders whole journal blocks by yield, while the
multiplicative form scales each document's baseline score by its journal's
yield, which can interleave journals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .index import Index, RankedEntry, RankedList

__all__ = [
    "YieldTable",
    "BradfordPartition",
    "EmptyTableError",
    "ZONE_CORE",
    "ZONE_2",
    "ZONE_3",
    "journal_yields",
    "partition_zones",
    "zone_report",
    "rerank_bradford_pure",
    "rerank_bradford_mult",
]

ZONE_CORE = "core"
ZONE_2 = "zone2"
ZONE_3 = "zone3"


class EmptyTableError(ValueError):
    """Zone partition requested for a result set with no ISSN-bearing docs."""


@dataclass
class YieldTable:
    """Per-journal article counts within one result set.

    ``yields`` maps ISSN to the number of result documents published
    there; documents without an ISSN are tallied in ``no_issn_count``.
    """

    yields: dict[str, int]
    total_with_issn: int
    no_issn_count: int


@dataclass
class BradfordPartition:
    """Journal ranking by yield with its core / zone-2 / zone-3 split.

    ``ranking`` is sorted by (yield desc, issn asc); zones are contiguous
    segments of that ranking, so no journal is ever split across zones.
    """

    ranking: list[tuple[str, int]]
    zones: dict[str, str]


def journal_yields(results: RankedList, index: Index) -> YieldTable:
    """Count result-set documents per ISSN."""
    yields: dict[str, int] = {}
    no_issn = 0
    for entry in results.entries:
        record = index.record(entry.doc_id)
        if record.issn is None:
            no_issn += 1
        else:
            yields[record.issn] = yields.get(record.issn, 0) + 1
    return YieldTable(
        yields=yields,
        total_with_issn=len(results.entries) - no_issn,
        no_issn_count=no_issn,
    )


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def partition_zones(table: YieldTable) -> BradfordPartition:
    """Split the yield ranking into core, zone 2, and zone 3.

    The core is the shortest prefix whose cumulative yield reaches
    ceil(total/3); zone 2 is the shortest following block reaching
    ceil(2*total/3), taking at least one journal so that three or more
    journals always produce three nonempty zones. With fewer than three
    journals the zones are filled in order, one journal each.
    """
    if not table.yields:
        raise EmptyTableError("no ISSN-bearing documents to partition")

    ranking = sorted(table.yields.items(), key=lambda item: (-item[1], item[0]))
    zones: dict[str, str] = {}

    if len(ranking) < 3:
        for (issn, _), zone in zip(ranking, (ZONE_CORE, ZONE_2, ZONE_3)):
            zones[issn] = zone
        return BradfordPartition(ranking=ranking, zones=zones)

    total = table.total_with_issn
    core_target = _ceil_div(total, 3)
    zone2_target = _ceil_div(2 * total, 3)

    cumulative = 0
    position = 0
    while position < len(ranking):
        issn, count = ranking[position]
        zones[issn] = ZONE_CORE
        cumulative += count
        position += 1
        if cumulative >= core_target:
            break

    zone2_size = 0
    while position < len(ranking):
        issn, count = ranking[position]
        zones[issn] = ZONE_2
        cumulative += count
        position += 1
        zone2_size += 1
        if cumulative >= zone2_target and zone2_size >= 1:
            break

    for issn, _ in ranking[position:]:
        zones[issn] = ZONE_3

    return BradfordPartition(ranking=ranking, zones=zones)


def zone_report(results: RankedList, index: Index) -> list[dict]:
    """Zone rows {issn, journal, yield, zone} in ranking order.

    The journal name shown for an ISSN comes from the lowest doc id
    carrying it, which keeps the report deterministic. Empty result sets
    (or ones without any ISSN) yield an empty report.
    """
    table = journal_yields(results, index)
    if not table.yields:
        return []
    partition = partition_zones(table)

    names: dict[str, str] = {}
    for doc_id in sorted(results.ids()):
        record = index.record(doc_id)
        if record.issn is not None and record.issn not in names:
            names[record.issn] = record.journal
    return [
        {
            "issn": issn,
            "journal": names.get(issn, ""),
            "yield": count,
            "zone": partition.zones[issn],
        }
        for issn, count in partition.ranking
    ]


def _renumber(query: str, ordered: list[RankedEntry]) -> RankedList:
    entries = [
        RankedEntry(doc_id=e.doc_id, score=e.score, rank=pos)
        for pos, e in enumerate(ordered, start=1)
    ]
    return RankedList(query=query, entries=entries)


def rerank_bradford_pure(results: RankedList, index: Index) -> RankedList:
    """Order documents in journal blocks by descending journal yield.

    Blocks order by (yield desc, issn asc); within a block the baseline
    order (score desc, doc id asc) is kept. Documents without an ISSN form
    a single trailing block. Scores carried through are the original
    baseline scores; position, not score, expresses the new ranking.
    """
    table = journal_yields(results, index)

    def sort_key(entry: RankedEntry):
        issn = index.record(entry.doc_id).issn
        if issn is None:
            return (1, 0, "", -entry.score, entry.doc_id)
        return (0, -table.yields[issn], issn, -entry.score, entry.doc_id)

    return _renumber(results.query, sorted(results.entries, key=sort_key))


def rerank_bradford_mult(results: RankedList, index: Index) -> RankedList:
    """Multiply each baseline score by its journal's yield and re-sort.

    Documents without an ISSN keep their baseline score (factor 1).
    """
    table = journal_yields(results, index)

    rescored: list[RankedEntry] = []
    for entry in results.entries:
        issn = index.record(entry.doc_id).issn
        factor = table.yields[issn] if issn is not None else 1
        rescored.append(RankedEntry(entry.doc_id, entry.score * factor, entry.rank))

    rescored.sort(key=lambda e: (-e.score, e.doc_id))
    return _renumber(results.query, rescored)
