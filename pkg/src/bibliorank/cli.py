"""Operator command line: ingest, search, zones, eval, serve, gen.

Machine-readable output (TSV, JSONL, JSON) goes to stdout; everything
meant for humans goes to stderr, so pipes stay clean. Exit codes:
0 success, 1 usage error, 2 data error, 3 runtime error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coauthor import DEFAULT_NODE_CAP, GraphTooLargeError
from .corpus import CorpusError, DuplicateIdError, load_corpus
from .evalkit import compare_stratagems, load_qrels
from .index import EmptyQueryError, Index, IndexFormatError, build_index, search_tfidf
from .bradford import zone_report
from .stratagems import STRATAGEMS, apply_stratagem
from .synth import generate_corpus, write_jsonl

__all__ = ["main", "entrypoint"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_RUNTIME = 3


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits 1 on usage errors instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="bibliorank", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load a JSONL corpus and build an index")
    p.add_argument("--input", required=True, help="corpus JSONL file")
    p.add_argument("--out", required=True, help="index output directory")
    p.add_argument("--strict", action="store_true", help="fail when any line is skipped")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("search", help="run one query and print a TSV ranking")
    p.add_argument("--index", required=True, help="index directory")
    p.add_argument("--query", required=True)
    p.add_argument("--rank", choices=STRATAGEMS, default="tfidf")
    p.add_argument("--top", type=int, default=10, metavar="N")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("zones", help="print the Bradford zone table for a query")
    p.add_argument("--index", required=True)
    p.add_argument("--query", required=True)
    p.set_defaults(func=_cmd_zones)

    p = sub.add_parser("eval", help="compare all stratagems against qrels")
    p.add_argument("--index", required=True)
    p.add_argument("--queries", required=True, help="TSV: query_id <tab> query_text")
    p.add_argument("--qrels", required=True, help="TSV: query_id, doc_id, relevance")
    p.add_argument("--k", type=int, default=10)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--index", required=True)
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--authcent-node-cap", type=int, default=DEFAULT_NODE_CAP)
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("gen", help="generate a reproducible synthetic corpus")
    p.add_argument("--docs", type=int, required=True)
    p.add_argument("--journals", type=int, default=20)
    p.add_argument("--authors", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_gen)

    return parser


def _cmd_ingest(args) -> int:
    corpus, report = load_corpus(args.input)
    for line_no, message in report.errors:
        print(f"line {line_no}: {message}", file=sys.stderr)
    print(f"loaded {report.loaded} records, skipped {report.skipped}", file=sys.stderr)
    index = build_index(corpus)
    index.save(args.out)
    print(f"indexed {index.doc_count} documents into {args.out}", file=sys.stderr)
    if args.strict and report.skipped:
        return EXIT_DATA
    return EXIT_OK


def _cmd_search(args) -> int:
    if args.top < 1:
        raise ValueError("--top must be >= 1")
    index = Index.load(args.index)
    ranked = apply_stratagem(args.rank, search_tfidf(index, args.query), index)
    for entry in ranked.entries[: args.top]:
        title = index.record(entry.doc_id).title
        print(f"{entry.rank}\t{entry.doc_id}\t{entry.score:.6f}\t{title}")
    return EXIT_OK


def _cmd_zones(args) -> int:
    index = Index.load(args.index)
    for row in zone_report(search_tfidf(index, args.query), index):
        print(f"{row['issn']}\t{row['journal']}\t{row['yield']}\t{row['zone']}")
    return EXIT_OK


def _read_queries(path: str) -> list[tuple[str, str]]:
    queries = []
    with open(path, "r", encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t", 1)
            if len(parts) != 2:
                raise ValueError(f"queries line {line_no}: expected query_id <tab> query_text")
            queries.append((parts[0], parts[1]))
    return queries


def _cmd_eval(args) -> int:
    index = Index.load(args.index)
    qrels = load_qrels(args.qrels)
    reports = [
        compare_stratagems(index, query, args.k, qrels=qrels, query_id=query_id)
        for query_id, query in _read_queries(args.queries)
    ]
    print(json.dumps(reports, indent=2, ensure_ascii=False))
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    port = args.port
    env_port = os.environ.get("BIBLIORANK_PORT")
    if env_port is not None:
        try:
            port = int(env_port)
        except ValueError:
            print(f"error: BIBLIORANK_PORT is not an integer: {env_port!r}", file=sys.stderr)
            return EXIT_USAGE

    index = Index.load(args.index)
    print(f"serving {index.doc_count} documents on {args.host}:{port}", file=sys.stderr)
    app = create_app(index, node_cap=args.authcent_node_cap)
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return EXIT_OK


def _cmd_gen(args) -> int:
    records = generate_corpus(args.docs, args.journals, args.authors, args.seed)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            count = write_jsonl(records, handle)
        print(f"wrote {count} records to {args.out}", file=sys.stderr)
    else:
        write_jsonl(records, sys.stdout)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DuplicateIdError, IndexFormatError, CorpusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except EmptyQueryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as exc:  # keep the contract: anything else is a runtime failure
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
