"""Reproducible synthetic corpora for fixtures, demos, and property tests.

Journal popularity and author productivity are both skewed so that the
generated corpora show the long-tailed structure the re-rankers exploit:
a few high-yield journals, a few prolific collaborators, and a tail of
one-hit sources and solo authors.
"""

from __future__ import annotations

import math
import random
from typing import IO, Iterable

from .corpus import BibRecord, serialize_record

__all__ = ["generate_corpus", "write_jsonl"]

_VOCABULARY = [
    "analysis", "social", "network", "research", "model", "data", "science",
    "information", "study", "retrieval", "theory", "structure", "method",
    "evaluation", "knowledge", "community", "system", "digital", "library",
    "search", "ranking", "journal", "collaboration", "measure", "survey",
    "empirical", "statistical", "distribution", "citation", "indicator",
    "policy", "field", "discipline", "topic", "query", "relevance", "user",
    "interface", "collection", "corpus", "graph", "centrality", "cluster",
    "dynamics", "growth", "impact", "publication", "author", "coauthor",
    "pattern", "behavior", "interaction", "communication", "discourse",
    "semantic", "lexical", "language", "text", "document", "metadata",
    "taxonomy", "ontology", "classification", "annotation", "extraction",
    "mining", "learning", "inference", "prediction", "validation",
    "experiment", "simulation", "framework", "architecture", "protocol",
    "algorithm", "complexity", "optimization", "heuristic", "baseline",
    "benchmark", "precision", "recall", "coverage", "novelty", "diversity",
    "longitudinal", "comparative", "qualitative", "quantitative", "hybrid",
    "emergent", "latent", "explicit", "implicit", "temporal", "spatial",
    "regional", "global", "institutional", "organizational", "economic",
    "educational", "historical", "cognitive", "collective", "individual",
]

_SURNAMES = [
    "Abel", "Baker", "Castro", "Dietrich", "Endo", "Fischer", "Garcia",
    "Haas", "Ibrahim", "Jansen", "Keller", "Larsen", "Meyer", "Novak",
    "Okafor", "Petrov", "Quinn", "Rossi", "Sato", "Tanaka", "Ueda",
    "Vogel", "Weber", "Xu", "Yilmaz", "Zhang", "Almeida", "Bergström",
    "Costa", "Dubois", "Eriksen", "Fontaine", "Gruber", "Horvat",
    "Ivanova", "Jokinen", "Kowalski", "Lindqvist", "Moreau", "Nakamura",
    "Olsen", "Pavlov", "Ricci", "Silva", "Takahashi", "Ustinov", "Varga",
    "Wagner", "Yamamoto", "Zimmermann",
]

_AUTHOR_COUNT_CHOICES = (0, 1, 2, 3, 4, 5)
_AUTHOR_COUNT_CUM = (3, 35, 65, 85, 95, 100)
# Fraction of documents published outside any ISSN-bearing journal.
_NO_ISSN_RATE = 0.06


def _journal_issn(j: int) -> str:
    digits = f"{(j * 2003 + 1201) % 100_000_000:08d}"
    check = "X" if digits[-1] == "7" else digits[-1]
    return f"{digits[:4]}-{digits[4:7]}{check}"


def _journal_name(j: int) -> str:
    a = _VOCABULARY[j % len(_VOCABULARY)]
    b = _VOCABULARY[(j * 7 + 3) % len(_VOCABULARY)]
    return f"Journal of {a.capitalize()} {b.capitalize()}"


def _author_name(a: int) -> str:
    surname = _SURNAMES[a % len(_SURNAMES)]
    initial = chr(ord("A") + (a // len(_SURNAMES)) % 26)
    branch = a // (len(_SURNAMES) * 26)
    if branch:
        surname = f"{surname}-{branch}"
    return f"{surname}, {initial}."


def _cumulative(weights: list[float]) -> list[float]:
    total = 0.0
    out = []
    for w in weights:
        total += w
        out.append(total)
    return out


def generate_corpus(docs: int, journals: int, authors: int, seed: int) -> list[BibRecord]:
    """Generate ``docs`` records over skewed journal and author pools.

    The same arguments always produce the identical record list.
    """
    if docs < 0 or journals < 1 or authors < 1:
        raise ValueError("docs must be >= 0, journals and authors >= 1")
    rng = random.Random(seed)

    journal_ids = list(range(journals))
    journal_cum = _cumulative([1.0 / (j + 1) for j in journal_ids])
    journal_names = [_journal_name(j) for j in journal_ids]
    journal_issns = [_journal_issn(j) for j in journal_ids]
    author_ids = list(range(authors))
    author_cum = _cumulative([1.0 / math.sqrt(a + 1) for a in author_ids])
    author_names = [_author_name(a) for a in author_ids]
    word_cum = _cumulative([1.0 / (i + 1) for i in range(len(_VOCABULARY))])

    records: list[BibRecord] = []
    for i in range(docs):
        n_authors = rng.choices(_AUTHOR_COUNT_CHOICES, cum_weights=_AUTHOR_COUNT_CUM)[0]
        drawn = rng.choices(author_ids, cum_weights=author_cum, k=n_authors) if n_authors else []
        names = []
        seen = set()
        for a in drawn:
            if a not in seen:
                seen.add(a)
                names.append(author_names[a])

        j = rng.choices(journal_ids, cum_weights=journal_cum)[0]
        if rng.random() < _NO_ISSN_RATE:
            issn = None
            journal = journal_names[j] if rng.random() < 0.5 else ""
        else:
            issn = journal_issns[j]
            journal = journal_names[j]

        n_title = rng.randint(4, 8)
        n_abstract = rng.randint(12, 28)
        n_keywords = rng.randint(0, 4)
        pool = rng.choices(
            _VOCABULARY, cum_weights=word_cum, k=n_title + n_abstract + n_keywords
        )
        records.append(
            BibRecord(
                id=f"d{i:06d}",
                title=" ".join(pool[:n_title]),
                abstract=" ".join(pool[n_title : n_title + n_abstract]),
                keywords=tuple(pool[n_title + n_abstract :]),
                authors=tuple(names),
                journal=journal,
                issn=issn,
                year=rng.randint(1985, 2024),
            )
        )
    return records


def write_jsonl(records: Iterable[BibRecord], handle: IO[str]) -> int:
    """Write records as JSONL; returns the number written."""
    count = 0
    for record in records:
        handle.write(serialize_record(record) + "\n")
        count += 1
    return count
