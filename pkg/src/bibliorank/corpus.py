"""Bibliographic corpus handling: JSONL parsing, validation, normalization.

The corpus line format is UTF-8 JSONL, one record per line, with fields
``id`` (required), ``title`` (required, may be empty), ``abstract``,
``keywords``, ``authors``, ``journal``, ``issn``, ``year``. Unknown keys
are ignored.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

__all__ = [
    "BibRecord",
    "Corpus",
    "LoadReport",
    "CorpusError",
    "MalformedLineError",
    "MissingIdError",
    "BadIssnError",
    "EmptyNameError",
    "DuplicateIdError",
    "parse_record",
    "serialize_record",
    "normalize_author",
    "normalize_issn",
    "load_corpus",
]

# Canonical ISSN shape: 4 digits, hyphen, 3 digits, final digit or X.
_ISSN_RE = re.compile(r"^\d{4}-\d{3}[\dX]$")
_ISSN_COMPACT_RE = re.compile(r"^\d{7}[\dX]$")
_WS_RUN_RE = re.compile(r"\s+")


class CorpusError(ValueError):
    """Base class for corpus data errors."""


class MalformedLineError(CorpusError):
    """Line is not a JSON object or a field has the wrong type."""


class MissingIdError(CorpusError):
    """Record has no id, or an empty one."""


class BadIssnError(CorpusError):
    """ISSN present but cannot be normalized to the canonical shape."""


class EmptyNameError(CorpusError):
    """Author name is empty after normalization; callers drop the author."""


class DuplicateIdError(CorpusError):
    """Two records in one corpus share an id."""


@dataclass(frozen=True)
class BibRecord:
    """One bibliographic document.

    ``authors`` keeps the raw names in document order; identity resolution
    happens later via :func:`normalize_author`. ``issn``, when present, is
    already in canonical form.
    """

    id: str
    title: str
    abstract: str = ""
    keywords: tuple[str, ...] = ()
    authors: tuple[str, ...] = ()
    journal: str = ""
    issn: str | None = None
    year: int | None = None


def normalize_issn(value: str) -> str:
    """Normalize an ISSN string, inserting the hyphen for 8-character input.

    Raises BadIssnError when the result does not match ``NNNN-NNN[0-9X]``.
    """
    cleaned = value.strip().upper()
    if _ISSN_COMPACT_RE.match(cleaned):
        cleaned = cleaned[:4] + "-" + cleaned[4:]
    if not _ISSN_RE.match(cleaned):
        raise BadIssnError(f"not a normalizable ISSN: {value!r}")
    return cleaned


def normalize_author(raw: str) -> str:
    """Produce the canonical author key for a raw name.

    Whitespace is trimmed and collapsed, the name is case-folded, and
    trailing periods are stripped. Equal keys are treated as the same
    author node everywhere downstream; this string policy is the whole
    of the name-disambiguation story (homonyms collide, synonyms split).
    """
    key = _WS_RUN_RE.sub(" ", raw.strip()).casefold().rstrip(". ")
    if not key:
        raise EmptyNameError(f"author name is empty after normalization: {raw!r}")
    return key


def _string_field(obj: dict, key: str) -> str:
    value = obj.get(key, "")
    if value is None:
        return ""
    if not isinstance(value, str):
        raise MalformedLineError(f"{key} must be a string")
    return value


def _string_list_field(obj: dict, key: str) -> tuple[str, ...]:
    value = obj.get(key, [])
    if value is None:
        return ()
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise MalformedLineError(f"{key} must be an array of strings")
    return tuple(value)


def parse_record(line: str) -> BibRecord:
    """Parse one JSONL line into a BibRecord.

    Missing optional fields default to empty/absent. Raises
    MalformedLineError, MissingIdError, or BadIssnError.
    """
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedLineError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise MalformedLineError("line is not a JSON object")

    rec_id = obj.get("id")
    if rec_id is None or (isinstance(rec_id, str) and not rec_id.strip()):
        raise MissingIdError("record has no id")
    if not isinstance(rec_id, str):
        raise MalformedLineError("id must be a string")

    if "title" not in obj:
        raise MalformedLineError("record has no title")
    title = _string_field(obj, "title")

    issn_raw = obj.get("issn")
    issn: str | None = None
    if issn_raw is not None:
        if not isinstance(issn_raw, str):
            raise MalformedLineError("issn must be a string")
        if issn_raw.strip():
            issn = normalize_issn(issn_raw)

    year_raw = obj.get("year")
    year: int | None = None
    if year_raw is not None:
        if isinstance(year_raw, bool) or not isinstance(year_raw, int):
            raise MalformedLineError("year must be an integer")
        year = year_raw

    return BibRecord(
        id=rec_id,
        title=title,
        abstract=_string_field(obj, "abstract"),
        keywords=_string_list_field(obj, "keywords"),
        authors=_string_list_field(obj, "authors"),
        journal=_string_field(obj, "journal"),
        issn=issn,
        year=year,
    )


def serialize_record(record: BibRecord) -> str:
    """Serialize a record back to its JSONL line form (round-trip safe)."""
    obj: dict = {
        "id": record.id,
        "title": record.title,
        "abstract": record.abstract,
        "keywords": list(record.keywords),
        "authors": list(record.authors),
        "journal": record.journal,
    }
    if record.issn is not None:
        obj["issn"] = record.issn
    if record.year is not None:
        obj["year"] = record.year
    return json.dumps(obj, ensure_ascii=False)


class Corpus:
    """Immutable id-indexed collection of records.

    Lookup by id is total over ingested ids; iteration is in ascending
    id order, so a corpus built from the same records is always traversed
    identically.
    """

    def __init__(self, records: Iterable[BibRecord]):
        by_id: dict[str, BibRecord] = {}
        for rec in records:
            if rec.id in by_id:
                raise DuplicateIdError(f"duplicate record id: {rec.id!r}")
            by_id[rec.id] = rec
        self._records = dict(sorted(by_id.items()))

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[BibRecord]:
        return iter(self._records.values())

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self._records

    def __getitem__(self, doc_id: str) -> BibRecord:
        return self._records[doc_id]

    def get(self, doc_id: str) -> BibRecord | None:
        return self._records.get(doc_id)

    def ids(self) -> list[str]:
        return list(self._records.keys())


@dataclass
class LoadReport:
    """Counts and per-line errors from one load_corpus call."""

    loaded: int = 0
    skipped: int = 0
    errors: list[tuple[int, str]] = field(default_factory=list)


def load_corpus(path: str | Path) -> tuple[Corpus, LoadReport]:
    """Load a JSONL corpus file.

    Lines that fail to parse are skipped and reported in the LoadReport;
    duplicate ids abort the load with DuplicateIdError. Blank lines are
    ignored. Loading the same file bytes always yields an identical corpus.
    """
    report = LoadReport()
    records: list[BibRecord] = []
    seen: set[str] = set()
    with open(path, "r", encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                rec = parse_record(line)
            except CorpusError as exc:
                report.skipped += 1
                report.errors.append((line_no, str(exc)))
                continue
            if rec.id in seen:
                raise DuplicateIdError(
                    f"duplicate record id {rec.id!r} at line {line_no}"
                )
            seen.add(rec.id)
            records.append(rec)
            report.loaded += 1
    return Corpus(records), report
