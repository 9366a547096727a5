"""bibliorank: bibliometric-enhanced retrieval.

A TF-IDF baseline over a scholarly corpus plus two on-the-fly re-ranking
stratagems grounded in science models: Bradfordizing (journal coreness)
and author betweenness centrality in result-set co-authorship networks,
with an evaluation kit for comparing the rankings they produce.
"""

from .corpus import (
    BibRecord,
    Corpus,
    load_corpus,
    normalize_author,
    normalize_issn,
    parse_record,
    serialize_record,
)
from .index import Index, RankedEntry, RankedList, build_index, search_tfidf, tokenize
from .bradford import (
    BradfordPartition,
    YieldTable,
    journal_yields,
    partition_zones,
    rerank_bradford_mult,
    rerank_bradford_pure,
    zone_report,
)
from .coauthor import (
    CoauthorGraph,
    betweenness,
    build_coauthor_graph,
    rerank_author_centrality,
)
from .evalkit import (
    Qrels,
    compare_stratagems,
    kendall_tau,
    load_qrels,
    overlap_at_k,
    precision_recall_at_k,
)
from .stratagems import STRATAGEMS, apply_stratagem, run_stratagem
from .synth import generate_corpus

__version__ = "0.1.0"
