"""Inverted index and the TF-IDF baseline ranking.

Every ranking, baseline or re-ranked, travels as a :class:`RankedList`;
the re-rankers permute these lists without touching the index.
"""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .corpus import BibRecord, Corpus, parse_record, serialize_record

__all__ = [
    "Index",
    "RankedEntry",
    "RankedList",
    "EmptyQueryError",
    "UnknownDocError",
    "IndexFormatError",
    "tokenize",
    "build_index",
    "search_tfidf",
]

INDEX_FORMAT = "bibliorank.index"
INDEX_VERSION = 1
INDEX_FILENAME = "index.json"

# Alphanumeric runs only: underscores and all punctuation are separators.
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


class EmptyQueryError(ValueError):
    """No tokens survive tokenization of the query."""


class UnknownDocError(KeyError):
    """A ranked list references a doc id the index does not hold."""


class IndexFormatError(ValueError):
    """On-disk index is missing, unversioned, or from another format."""


def tokenize(text: str) -> list[str]:
    """Case-fold and split on any non-alphanumeric character.

    No stemming, no stopword removal; empty tokens are dropped.
    """
    return _TOKEN_RE.findall(text.casefold())


@dataclass(frozen=True)
class RankedEntry:
    doc_id: str
    score: float
    rank: int


@dataclass
class RankedList:
    """An ordered list of (doc id, score, 1-based rank) for one query.

    Score-driven producers keep scores non-increasing with rank and break
    ties by ascending doc id. Positional re-rankers (journal-block
    ordering) carry the original baseline scores instead, so the order is
    authoritative there, not the score column.
    """

    query: str
    entries: list[RankedEntry]

    def __len__(self) -> int:
        return len(self.entries)

    def ids(self) -> list[str]:
        return [entry.doc_id for entry in self.entries]


def _indexable_text(record: BibRecord) -> str:
    return record.title + " " + record.abstract + " " + " ".join(record.keywords)


class Index:
    """Postings plus the per-document metadata the re-rankers need.

    Immutable after build; concurrent queries are safe.
    """

    def __init__(self, postings: dict[str, list[tuple[str, int]]], docs: dict[str, BibRecord]):
        self.postings = postings
        self.docs = docs
        self.doc_count = len(docs)

    def doc_freq(self, term: str) -> int:
        return len(self.postings.get(term, ()))

    def record(self, doc_id: str) -> BibRecord:
        try:
            return self.docs[doc_id]
        except KeyError:
            raise UnknownDocError(f"doc id not in index: {doc_id!r}") from None

    # --- persistence ------------------------------------------------

    def save(self, directory: str | Path) -> Path:
        """Write the index into a directory; returns the index file path."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        payload = {
            "format": INDEX_FORMAT,
            "version": INDEX_VERSION,
            "doc_count": self.doc_count,
            "postings": {term: [[d, tf] for d, tf in plist] for term, plist in self.postings.items()},
            "records": [json.loads(serialize_record(rec)) for rec in self.docs.values()],
        }
        path = directory / INDEX_FILENAME
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, ensure_ascii=False)
        return path

    @classmethod
    def load(cls, directory: str | Path) -> "Index":
        path = Path(directory) / INDEX_FILENAME
        if not path.exists():
            raise IndexFormatError(f"no index file at {path}")
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
        if not isinstance(payload, dict) or payload.get("format") != INDEX_FORMAT:
            raise IndexFormatError(f"{path} is not a bibliorank index")
        if payload.get("version") != INDEX_VERSION:
            raise IndexFormatError(f"unsupported index version: {payload.get('version')!r}")
        postings = {
            term: [(str(d), int(tf)) for d, tf in plist]
            for term, plist in payload["postings"].items()
        }
        docs = {}
        for obj in payload["records"]:
            rec = parse_record(json.dumps(obj, ensure_ascii=False))
            docs[rec.id] = rec
        return cls(postings=postings, docs=dict(sorted(docs.items())))


def build_index(corpus: Corpus) -> Index:
    """Build the inverted index over title + abstract + keywords."""
    postings: dict[str, list[tuple[str, int]]] = {}
    docs: dict[str, BibRecord] = {}
    for record in corpus:  # ascending id, so postings stay id-sorted
        docs[record.id] = record
        counts = Counter(tokenize(_indexable_text(record)))
        for term, tf in counts.items():
            postings.setdefault(term, []).append((record.id, tf))
    return Index(postings=dict(sorted(postings.items())), docs=docs)


def idf(index: Index, term: str) -> float:
    """Smoothed inverse document frequency: ln((N+1)/(df+1)) + 1."""
    return math.log((index.doc_count + 1) / (index.doc_freq(term) + 1)) + 1.0


def search_tfidf(index: Index, query: str, limit: int | None = None) -> RankedList:
    """Rank all documents containing at least one query term (OR semantics).

    score(d, q) = sum over unique query terms t of tf(t, d) * idf(t).
    Ties break by ascending doc id. ``limit=None`` returns the full match
    set, which is what the re-rankers consume.
    """
    tokens = tokenize(query)
    if not tokens:
        raise EmptyQueryError(f"query has no indexable tokens: {query!r}")
    if limit is not None and limit < 1:
        raise ValueError("limit must be a positive integer")

    scores: dict[str, float] = {}
    for term in sorted(set(tokens)):
        plist = index.postings.get(term)
        if not plist:
            continue
        weight = idf(index, term)
        for doc_id, tf in plist:
            scores[doc_id] = scores.get(doc_id, 0.0) + tf * weight

    ordered = sorted(scores.items(), key=lambda item: (-item[1], item[0]))
    if limit is not None:
        ordered = ordered[:limit]
    entries = [
        RankedEntry(doc_id=doc_id, score=score, rank=pos)
        for pos, (doc_id, score) in enumerate(ordered, start=1)
    ]
    return RankedList(query=query, entries=entries)
