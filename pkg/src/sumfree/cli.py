"""Command-line front end.

Every operation is bound to a verb; each run emits a single JSON document
{"manifest": ..., "result": ...} on stdout.  The manifest carries the verb,
its parameters, the engine version and a sha256 digest of the canonical
serialization of the result (wall time is reported but excluded from the
digest), so reruns are reproducible bit-for-bit for any --threads value.

Exit codes: 0 success, 1 unknown verb, 2 precondition violation,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import __version__, counting, kernels, oracles, optlab, schur, structure
from .intset import IntSet, from_file, from_text

VERBS = ("classify", "stability", "types", "mu", "h", "witness", "count",
         "verify", "search", "example42", "bound", "opt")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3


def to_jsonable(value):
    """Canonical JSON-friendly form: sets ascend, rationals are 'a/b'."""
    if isinstance(value, IntSet):
        return list(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name))
                for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    return value


def canonical_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def result_digest(result) -> str:
    return hashlib.sha256(canonical_json(result).encode()).hexdigest()


def _read_set(inline: str | None, path: str | None) -> IntSet:
    if (inline is None) == (path is None):
        raise ValueError("provide exactly one of --set / --set-file")
    return from_text(inline) if inline is not None else from_file(path)


class BudgetExhausted(RuntimeError):
    def __init__(self, result):
        super().__init__("search budget exhausted")
        self.result = result


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sumfree")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("classify")
    p.add_argument("--set")
    p.add_argument("--set-file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eta", type=float, required=True)
    common(p)

    p = sub.add_parser("stability")
    p.add_argument("--set1", required=True)
    p.add_argument("--set2", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eta", type=float, required=True)
    common(p)

    p = sub.add_parser("types")
    p.add_argument("--set1", required=True)
    p.add_argument("--set2", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    common(p)

    p = sub.add_parser("mu")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget", type=int, default=schur.DEFAULT_SEARCH_BUDGET)
    common(p)

    p = sub.add_parser("h")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget", type=int, default=schur.DEFAULT_SEARCH_BUDGET)
    common(p)

    p = sub.add_parser("witness")
    p.add_argument("--set")
    p.add_argument("--set-file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--modulus", type=int)
    common(p)

    p = sub.add_parser("count")
    p.add_argument("--family", choices=("sf1", "sf2"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--engine", choices=("dfs", "naive", "both"), default="dfs")
    common(p)

    p = sub.add_parser("verify")
    p.add_argument("--lemma", required=True,
                   choices=("long-interval", "summation", "bootstrap",
                            "lev-smeliansky", "plunnecke"))
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--max-span", type=int, default=8)
    p.add_argument("--k-max", type=int, default=4)
    common(p)

    p = sub.add_parser("search")
    p.add_argument("--max-size", type=int, default=8)
    p.add_argument("--max-span", type=int, default=24)
    common(p)

    p = sub.add_parser("example42")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    common(p)

    p = sub.add_parser("bound")
    p.add_argument("--name", required=True,
                   choices=("entropy", "partitions", "green-morris",
                            "janson-graph"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--alpha", type=float)
    p.add_argument("--l", type=int)
    p.add_argument("--delta", type=float)
    p.add_argument("--ratio", type=float)
    p.add_argument("--s", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--set")
    p.add_argument("--brute", action="store_true")
    common(p)

    p = sub.add_parser("opt")
    p.add_argument("--claim", default="h310", choices=("h310",))
    p.add_argument("--delta", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=1e-6)
    common(p)

    return parser


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _run(args) -> dict:
    verb = args.verb
    if verb == "classify":
        a = _read_set(args.set, args.set_file)
        return to_jsonable(structure.classify(a, args.n, args.eta))
    if verb == "stability":
        rep = structure.stability_classify(from_text(args.set1),
                                           from_text(args.set2),
                                           args.n, args.eta)
        return to_jsonable(rep)
    if verb == "types":
        rep = structure.type_ab_classify(from_text(args.set1),
                                         from_text(args.set2),
                                         args.n, args.delta)
        return to_jsonable(rep)
    if verb == "mu":
        res = schur.mu(args.n, args.r, args.budget)
        doc = to_jsonable(res)
        if res.status != "exact":
            raise BudgetExhausted(doc)
        return doc
    if verb == "h":
        res = schur.h(args.r, args.budget)
        doc = to_jsonable(res)
        if res.status != "exact":
            raise BudgetExhausted(doc)
        return doc
    if verb == "witness":
        a = _read_set(args.set, args.set_file)
        witness = schur.r_wise_witness(a, args.r, args.modulus)
        if witness is None:
            return {"witness": None, "set": to_jsonable(a), "r": args.r}
        return {"witness": to_jsonable(witness), "set": to_jsonable(a),
                "r": args.r}
    if verb == "count":
        fn = (counting.count_sum_free if args.family == "sf1"
              else counting.count_two_wise_sum_free)
        if args.engine == "both":
            rec = fn(args.n, threads=args.threads, engine="dfs")
            naive = fn(args.n, threads=args.threads, engine="naive")
            _require(rec.exact_count == naive.exact_count, "engine mismatch")
            doc = to_jsonable(rec)
            doc["engines_agree"] = True
            return doc
        return to_jsonable(fn(args.n, threads=args.threads, engine=args.engine))
    if verb == "verify":
        if args.lemma == "long-interval":
            rep = oracles.verify_long_interval(args.max)
        elif args.lemma == "summation":
            rep = oracles.verify_summation(args.max, args.max_span)
        elif args.lemma == "bootstrap":
            rep = oracles.verify_bootstrap(args.max)
        elif args.lemma == "lev-smeliansky":
            rep = oracles.verify_lev_smeliansky_diff(args.max)
        else:
            rep = oracles.plunnecke_sweep(args.max, args.k_max)
        doc = to_jsonable(rep)
        doc["ok"] = rep.ok
        return doc
    if verb == "search":
        return to_jsonable(oracles.conjecture41_search(args.max_size,
                                                       args.max_span))
    if verb == "example42":
        return to_jsonable(oracles.example42(args.x, args.y))
    if verb == "bound":
        if args.name == "entropy":
            _require(args.n is not None and args.k is not None
                     and args.alpha is not None,
                     "entropy bound needs --n, --k, --alpha")
            return to_jsonable(counting.entropy_binomial_check(
                args.n, args.k, args.alpha))
        if args.name == "partitions":
            _require(args.k is not None and args.l is not None,
                     "partition bound needs --k, --l")
            return to_jsonable(counting.restricted_partitions(args.k, args.l))
        if args.name == "green-morris":
            _require(None not in (args.delta, args.ratio, args.s, args.d),
                     "green-morris needs --delta, --ratio, --s, --d")
            return to_jsonable(counting.green_morris_bound(
                args.delta, args.ratio, args.s, args.d, brute=args.brute))
        _require(args.set is not None and args.n is not None,
                 "janson-graph needs --set, --n")
        graph = counting.forbidden_graph(from_text(args.set), args.n)
        u_sets = [frozenset({x - graph.vertices[0] + 1, y - graph.vertices[0] + 1})
                  for x, y in graph.edges]
        bound = counting.janson_bound(u_sets, len(graph.vertices),
                                      brute=args.brute)
        doc = to_jsonable(graph)
        doc["janson"] = to_jsonable(bound)
        return doc
    if verb == "opt":
        rep = optlab.maximize_h(args.delta, args.tol)
        doc = to_jsonable(rep)
        doc["gradient"] = to_jsonable(optlab.gradient_check(args.delta))
        return doc
    raise AssertionError(f"unhandled verb {verb}")


def _emit(verb: str, args, result: dict, started: float) -> None:
    if getattr(args, "format", "json") == "csv":
        if verb != "count":
            raise ValueError("csv format is only offered for count tables")
        print("n,family,exact_count,ratio")
        print(f"{result['n']},{result['family']},{result['exact_count']},"
              f"{result['ratio']!r}")
        return
    params = {k: v for k, v in vars(args).items()
              if k not in ("verb", "format") and v is not None}
    manifest = {
        "verb": verb,
        "parameters": to_jsonable(params),
        "engine_version": f"{__version__}+{kernels.BACKEND}",
        "shard_count": getattr(args, "threads", 1),
        "wall_time": round(time.perf_counter() - started, 6),
        "result_digest": result_digest(result),
    }
    print(canonical_json({"manifest": manifest, "result": result}))


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    if not argv or argv[0] in ("-h", "--help"):
        parser.print_help()
        return EXIT_OK
    if argv[0] not in VERBS:
        parser.print_usage(sys.stderr)
        print(f"unknown verb: {argv[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return EXIT_PRECONDITION
    if getattr(args, "format", "json") == "csv" and args.verb != "count":
        print("error: csv format is only offered for count tables",
              file=sys.stderr)
        return EXIT_PRECONDITION
    started = time.perf_counter()
    try:
        result = _run(args)
    except BudgetExhausted as exc:
        _emit(args.verb, args, exc.result, started)
        print("budget exhausted", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, counting.CapExceededError,
            structure.NotSumFreeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(args.verb, args, result, started)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
