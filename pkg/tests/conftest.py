"""Shared fixture helpers for building tiny corpora and rankings."""

from __future__ import annotations

import pytest

from bibliorank.corpus import BibRecord, Corpus
from bibliorank.index import Index, RankedEntry, RankedList, build_index


def make_record(doc_id: str, title: str = "untitled", **kwargs) -> BibRecord:
    kwargs.setdefault("keywords", ())
    kwargs.setdefault("authors", ())
    if isinstance(kwargs["keywords"], list):
        kwargs["keywords"] = tuple(kwargs["keywords"])
    if isinstance(kwargs["authors"], list):
        kwargs["authors"] = tuple(kwargs["authors"])
    return BibRecord(id=doc_id, title=title, **kwargs)


def index_of(*records: BibRecord) -> Index:
    return build_index(Corpus(records))


def ranked(query: str, *pairs: tuple[str, float]) -> RankedList:
    entries = [
        RankedEntry(doc_id=doc_id, score=score, rank=pos)
        for pos, (doc_id, score) in enumerate(pairs, start=1)
    ]
    return RankedList(query=query, entries=entries)


@pytest.fixture
def three_journal_index() -> Index:
    """Six documents over three journals with yields 3, 2, 1."""
    return index_of(
        make_record("d1", "law of scattering", issn="1111-1111", journal="Alpha"),
        make_record("d2", "law again", issn="1111-1111", journal="Alpha"),
        make_record("d3", "more law", issn="1111-1111", journal="Alpha"),
        make_record("d4", "law elsewhere", issn="2222-2222", journal="Beta"),
        make_record("d5", "law revisited", issn="2222-2222", journal="Beta"),
        make_record("d6", "law fringe", issn="3333-3333", journal="Gamma"),
    )
