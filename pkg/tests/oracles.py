"""Independent reference implementations used to check the production code.

Everything here is deliberately naive: full scans, exhaustive path
enumeration, all-pairs comparisons. None of it shares code with the
library's fast paths.
"""

from __future__ import annotations

import math
import re
from collections import Counter

_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)


def naive_tokens(text: str) -> list[str]:
    return _WORD_RE.findall(text.casefold())


def naive_tfidf_scores(records, query: str) -> dict[str, float]:
    """Full-scan TF-IDF scoring: no index, no postings.

    score(d) = sum over unique query terms t of tf(t, d) * (ln((N+1)/(df+1)) + 1)
    """
    doc_tokens = {
        rec.id: Counter(naive_tokens(rec.title + " " + rec.abstract + " " + " ".join(rec.keywords)))
        for rec in records
    }
    n = len(doc_tokens)
    terms = sorted(set(naive_tokens(query)))
    scores: dict[str, float] = {}
    for term in terms:
        df = sum(1 for counts in doc_tokens.values() if term in counts)
        weight = math.log((n + 1) / (df + 1)) + 1.0
        for doc_id, counts in doc_tokens.items():
            if term in counts:
                scores[doc_id] = scores.get(doc_id, 0.0) + counts[term] * weight
    return scores


def naive_betweenness(nodes, edges) -> dict[str, float]:
    """Betweenness by explicit enumeration of every shortest path.

    For each unordered pair {s, t}, all shortest s-t paths are listed and
    each interior node collects 1/(number of paths). Only feasible on tiny
    graphs, which is the point.
    """
    adjacency: dict[str, set[str]] = {v: set() for v in nodes}
    for a, b in edges:
        adjacency[a].add(b)
        adjacency[b].add(a)

    centrality = {v: 0.0 for v in nodes}
    ordered = sorted(nodes)
    for i, source in enumerate(ordered):
        dist = {source: 0}
        frontier = [source]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adjacency[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        for target in ordered[i + 1 :]:
            if target not in dist:
                continue
            paths: list[list[str]] = []
            stack = [[source]]
            while stack:
                path = stack.pop()
                tail = path[-1]
                if tail == target:
                    paths.append(path)
                    continue
                for w in adjacency[tail]:
                    if dist.get(w) == dist[tail] + 1 and dist[w] <= dist[target]:
                        stack.append(path + [w])
            share = 1.0 / len(paths)
            for path in paths:
                for v in path[1:-1]:
                    centrality[v] += share
    return centrality


def naive_path_interior_weight(nodes, edges) -> float:
    """Sum over all pairs of the path-share-weighted interior node count."""
    adjacency: dict[str, set[str]] = {v: set() for v in nodes}
    for a, b in edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    total = 0.0
    ordered = sorted(nodes)
    for i, source in enumerate(ordered):
        dist = {source: 0}
        frontier = [source]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adjacency[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        for target in ordered[i + 1 :]:
            if target not in dist:
                continue
            paths: list[list[str]] = []
            stack = [[source]]
            while stack:
                path = stack.pop()
                tail = path[-1]
                if tail == target:
                    paths.append(path)
                    continue
                for w in adjacency[tail]:
                    if dist.get(w) == dist[tail] + 1 and dist[w] <= dist[target]:
                        stack.append(path + [w])
            for path in paths:
                total += (len(path) - 2) / len(paths)
    return total


def naive_kendall_tau(rank_a: list[str], rank_b: list[str]) -> float:
    """Tau-a by checking every unordered pair explicitly."""
    pos_a = {x: i for i, x in enumerate(rank_a)}
    pos_b = {x: i for i, x in enumerate(rank_b)}
    items = rank_a
    concordant = discordant = 0
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            x, y = items[i], items[j]
            a_sign = pos_a[x] - pos_a[y]
            b_sign = pos_b[x] - pos_b[y]
            if (a_sign > 0) == (b_sign > 0):
                concordant += 1
            else:
                discordant += 1
    total = len(items) * (len(items) - 1) // 2
    return (concordant - discordant) / total


def naive_mult_order(entries, records_by_id) -> list[str]:
    """Recompute the yield-multiplied ordering from scratch.

    entries: iterable of (doc_id, baseline_score). Returns doc ids sorted
    by descending score*yield with ascending-id tie-break.
    """
    yields = Counter()
    for doc_id, _ in entries:
        issn = records_by_id[doc_id].issn
        if issn is not None:
            yields[issn] += 1
    products = []
    for doc_id, score in entries:
        issn = records_by_id[doc_id].issn
        factor = yields[issn] if issn is not None else 1
        products.append((score * factor, doc_id))
    products.sort(key=lambda item: (-item[0], item[1]))
    return [doc_id for _, doc_id in products]
