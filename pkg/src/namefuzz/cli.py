"""Command-line entry points: build, query, repl, bench, serve.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 data-format error.
"""

from __future__ import annotations

import argparse
import json
import socket
import sys
import time

from .index import IndexLoadError, SearchIndex, build_index, load_index, read_corpus, save_index
from .normalize import span_in_folded
from .search import SearchParams, SearchResult, result_to_dict, search, search_exhaustive

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_FORMAT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; route through UsageError instead
    def error(self, message):  # noqa: D102
        raise UsageError(message)


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, default=None, help="skip-bigram order (must match the index)")
    p.add_argument("--lambda", dest="lam", type=float, default=None, help="bigram weight decay (must match the index)")
    p.add_argument("--t1", type=float, default=1.0, help="stage-1 bigram distance threshold")
    p.add_argument("--t2", type=int, default=1, help="stage-2 local distance threshold")
    p.add_argument("--min-fuzzy-len", type=int, default=3, help="shortest query that gets fuzzy matching")
    p.add_argument("--limit", type=int, default=20, help="max results, 0 for unlimited")


def _build_parser() -> _Parser:
    parser = _Parser(prog="namefuzz", description="Fuzzy name search over small corpora.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an index file from a corpus file")
    p.add_argument("--corpus", required=True, help="UTF-8 text, one name per line")
    p.add_argument("--index", required=True, help="output index path (JSON)")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="run one query against an index")
    p.add_argument("--index", required=True)
    p.add_argument("--q", required=True, help="query text")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_param_flags(p)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("repl", help="interactive search loop (one query per line)")
    p.add_argument("--index", required=True)
    _add_param_flags(p)
    p.set_defaults(func=cmd_repl)

    p = sub.add_parser("bench", help="latency and recall benchmark")
    p.add_argument("--index", required=True)
    p.add_argument("--queries", required=True, help="UTF-8 text, one query per line")
    p.add_argument("--reps", type=int, default=3, help="timed repetitions per query")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_param_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="run the local HTTP search service")
    p.add_argument("--index", required=True)
    p.add_argument("--port", type=int, default=7700)
    p.add_argument("--host", default="127.0.0.1")
    _add_param_flags(p)
    p.set_defaults(func=cmd_serve)

    return parser


def _load(path: str) -> SearchIndex:
    return load_index(path)


def _params_for(index: SearchIndex, args) -> SearchParams:
    if args.k is not None and args.k != index.k:
        raise UsageError(f"--k {args.k} does not match the index (built with k={index.k})")
    if args.lam is not None and args.lam != index.lam:
        raise UsageError(f"--lambda {args.lam} does not match the index (built with lambda={index.lam})")
    params = SearchParams(
        k=index.k,
        lam=index.lam,
        t1=args.t1,
        t2=args.t2,
        min_fuzzy_len=args.min_fuzzy_len,
        limit=args.limit,
    )
    problems = params.violations()
    if problems:
        raise UsageError("; ".join(problems))
    return params


def _format_line(rank: int, r: SearchResult) -> str:
    return f"{rank}. {r.name} (lld={r.lld}, bd={r.bd:g}, span={r.span[0]}-{r.span[1]})"


def cmd_build(args) -> int:
    if args.k is None or args.k < 0:
        raise UsageError("--k must be >= 0")
    if args.lam is None or not 0.0 < args.lam <= 1.0:
        raise UsageError("--lambda must be in (0, 1]")
    names = read_corpus(args.corpus)
    start = time.perf_counter()
    index = build_index(names, k=args.k, lam=args.lam)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    save_index(index, args.index)
    skipped = len(names) - len(index)
    print(f"built {len(index)} entries ({skipped} skipped) in {elapsed_ms:.1f} ms -> {args.index}")
    return EXIT_OK


def cmd_query(args) -> int:
    index = _load(args.index)
    params = _params_for(index, args)
    results = search(index, args.q, params)
    if args.format == "json":
        print(json.dumps([result_to_dict(r) for r in results], ensure_ascii=False))
    else:
        for rank, r in enumerate(results, start=1):
            print(_format_line(rank, r))
    return EXIT_OK


def _bracket(index: SearchIndex, r: SearchResult) -> str:
    """Render a result name with the matched range in [brackets]."""
    entry = next(e for e in index.entries if e.entry_id == r.entry_id)
    rng = span_in_folded(entry.name, r.span)
    if rng is None:
        return f"{r.name}  [initials]"
    text = r.name if len(r.name) == len(entry.name.folded) else entry.name.folded
    s, e = rng
    return f"{text[:s]}[{text[s:e + 1]}]{text[e + 1:]}"


def cmd_repl(args) -> int:
    index = _load(args.index)
    params = _params_for(index, args)
    interactive = sys.stdin.isatty()
    while True:
        try:
            line = input("search> " if interactive else "")
        except EOFError:
            break
        if not line.strip():
            continue
        for rank, r in enumerate(search(index, line, params), start=1):
            print(f"{rank}. {_bracket(index, r)} (lld={r.lld}, bd={r.bd:g})")
    return EXIT_OK


def _percentile(sorted_values: list[float], q: float) -> float:
    if not sorted_values:
        return 0.0
    pos = min(int(q * len(sorted_values)), len(sorted_values) - 1)
    return sorted_values[pos]


def _bench_rows(index: SearchIndex, queries: list[str], params: SearchParams, reps: int) -> list[dict]:
    from .bigrams import generate_profile, score_items
    from .normalize import normalize_query

    by_len: dict[int, dict] = {}
    for q in queries:
        folded = normalize_query(q).folded
        if not folded:
            continue
        staged = search(index, q, params)
        exhaustive = search_exhaustive(index, q, params)
        profile = generate_profile(normalize_query(q).augmented, params.k, params.lam)
        items = list(profile.weights.items())
        survivors = sum(1 for e in index.entries if score_items(items, e.profile.weights) <= params.t1)
        timings = []
        for _ in range(reps):
            start = time.perf_counter()
            search(index, q, params)
            timings.append((time.perf_counter() - start) * 1000.0)
        staged_ids = {r.entry_id for r in staged}
        exhaustive_ids = {r.entry_id for r in exhaustive}
        recall = len(staged_ids & exhaustive_ids) / len(exhaustive_ids) if exhaustive_ids else 1.0
        bucket = by_len.setdefault(
            len(folded),
            {"query_len": len(folded), "queries": 0, "timings_ms": [], "stage1_candidates": [], "results": [], "recalls": []},
        )
        bucket["queries"] += 1
        bucket["timings_ms"].extend(timings)
        bucket["stage1_candidates"].append(survivors)
        bucket["results"].append(len(staged))
        bucket["recalls"].append(recall)

    rows = []
    for length in sorted(by_len):
        b = by_len[length]
        t = sorted(b["timings_ms"])
        rows.append(
            {
                "query_len": length,
                "queries": b["queries"],
                "p50_ms": round(_percentile(t, 0.50), 3),
                "p95_ms": round(_percentile(t, 0.95), 3),
                "p99_ms": round(_percentile(t, 0.99), 3),
                "mean_stage1_candidates": round(sum(b["stage1_candidates"]) / b["queries"], 1),
                "mean_results": round(sum(b["results"]) / b["queries"], 1),
                "recall": round(sum(b["recalls"]) / b["queries"], 4),
            }
        )
    return rows


def cmd_bench(args) -> int:
    index = _load(args.index)
    params = _params_for(index, args)
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    queries = read_corpus(args.queries)
    for q in queries[:5]:
        search(index, q, params)  # warm-up
    rows = _bench_rows(index, queries, params, args.reps)
    recalls = [r["recall"] for r in rows]
    overall = {
        "corpus_size": len(index),
        "queries": sum(r["queries"] for r in rows),
        "reps": args.reps,
        "recall": round(sum(recalls) / len(recalls), 4) if recalls else 1.0,
    }
    if args.format == "json":
        print(json.dumps({"overall": overall, "rows": rows}, ensure_ascii=False))
    else:
        print(f"corpus={overall['corpus_size']} queries={overall['queries']} reps={args.reps}")
        header = f"{'len':>4} {'n':>5} {'p50ms':>8} {'p95ms':>8} {'p99ms':>8} {'stage1':>8} {'results':>8} {'recall':>7}"
        print(header)
        for r in rows:
            print(
                f"{r['query_len']:>4} {r['queries']:>5} {r['p50_ms']:>8.3f} {r['p95_ms']:>8.3f} "
                f"{r['p99_ms']:>8.3f} {r['mean_stage1_candidates']:>8.1f} {r['mean_results']:>8.1f} {r['recall']:>7.4f}"
            )
        print(f"staged-vs-exhaustive recall: {overall['recall']:.4f}")
    return EXIT_OK


def cmd_serve(args) -> int:
    index = _load(args.index)
    params = _params_for(index, args)
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((args.host, args.port))
    except OSError as exc:
        print(f"cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return EXIT_IO
    finally:
        probe.close()
    from .service import run

    run(index, host=args.host, port=args.port, params=params)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IndexLoadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
