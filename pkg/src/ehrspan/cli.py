"""Command-line front end.

Analysis subcommands print one JSON run report on stdout::

    {"tool_version", "input_digest", "command", "results", "elapsed_ms"}

``gen``, ``coarsen`` and ``corpus`` print bare polytope JSON instead, so their
output can be fed straight back in.  Exit codes: 0 pass, 1 an inequality or
theorem check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .constructions import CorpusSpec, SplitMix64, dilate, iter_corpus, join, standard_family
from .ehrhart import ehrhart_polynomial, hstar_vector
from .geometry import LatticePolytope, lattice_points, polytope_from_json
from .idp import is_idp
from .inequalities import check_lower_bounds, check_stanley, check_strong
from .lattice import coarsen, spanning_index
from .upp import (WeightedSpace, check_min_formula, check_upp_bound, hilbert_function, is_uniform_position,
                  point_set_from_json, random_point_set)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_json(path: str) -> tuple[dict, str]:
    try:
        raw = sys.stdin.buffer.read() if path == "-" else open(path, "rb").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: JSON parse error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return data, hashlib.sha256(raw).hexdigest()


def _polytope(path: str) -> tuple[LatticePolytope, str]:
    data, digest = _read_json(path)
    try:
        return polytope_from_json(data), digest
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _point_set(path: str):
    data, digest = _read_json(path)
    try:
        return point_set_from_json(data), digest
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _args_digest(argv: list[str]) -> str:
    return hashlib.sha256(" ".join(argv).encode()).hexdigest()


def hstar_payload(P: LatticePolytope) -> dict:
    h = hstar_vector(P)
    return {"hstar": list(h), "degree": h.degree, "normalized_volume": h.normalized_volume}


def cmd_hstar(args):
    P, digest = _polytope(args.file)
    out = hstar_payload(P)
    if args.polynomial:
        out["ehrhart_polynomial"] = [str(c) for c in ehrhart_polynomial(P).coefficients]
    return out, digest, EXIT_OK


def cmd_spanning(args):
    P, digest = _polytope(args.file)
    info = spanning_index(P)
    return {"index": info.index, "spanning": info.spanning, "snf_diagonal": list(info.snf_diagonal)}, digest, EXIT_OK


def cmd_idp(args):
    P, digest = _polytope(args.file)
    try:
        verdict = is_idp(P, args.kmax)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return verdict.to_json(), digest, EXIT_OK


def cmd_check(args):
    P, digest = _polytope(args.file)
    h = hstar_vector(P)
    spanning = spanning_index(P).spanning
    reports = []
    if args.family in ("all", "stanley"):
        reports.append(check_stanley(h, spanning))
    if args.family in ("all", "strong"):
        reports.append(check_strong(h, spanning))
    if args.family in ("all", "lower"):
        reports.extend(check_lower_bounds(P))
    failed = any(r.applicable and not r.passed for r in reports)
    return [r.to_json() for r in reports], digest, EXIT_VIOLATION if failed else EXIT_OK


def check_instance(P: LatticePolytope) -> dict:
    """Run every corpus-level theorem check on one polytope."""
    h = hstar_vector(P)
    info = spanning_index(P)
    Q = coarsen(P)
    hq = hstar_vector(Q)
    problems = []
    reports = [check_stanley(h, info.spanning)]
    if info.spanning:
        reports.append(check_strong(h, info.spanning))
        reports.extend(r for r in check_lower_bounds(P) if r.family == "no_internal_zeros")
    for r in reports:
        if not r.passed:
            problems.append(r.to_json())
    if h.normalized_volume != info.index * hq.normalized_volume:
        problems.append({"family": "volume_index", "lhs": h.normalized_volume,
                         "rhs": info.index * hq.normalized_volume})
    if any(a < b for a, b in zip(h, hq)):
        problems.append({"family": "coarsening_monotone", "hstar": list(h), "coarsened_hstar": list(hq)})
    return {"dim": P.ambient_dim, "hstar": list(h), "spanning_index": info.index,
            "coarsened_hstar": list(hq), "violations": problems,
            **({"polytope": P.to_json()} if problems else {})}


def _workers() -> int:
    try:
        return max(0, int(os.environ.get("EHRSPAN_THREADS", "0") or 0))
    except ValueError:
        raise UsageError("EHRSPAN_THREADS must be an integer") from None


def cmd_corpus_check(args, argv):
    spec = _corpus_spec(args)
    corpus = list(iter_corpus(spec))
    workers = _workers()
    if workers > 0:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check_instance, corpus, chunksize=8))
    else:
        results = [check_instance(P) for P in corpus]
    bad = [dict(index=i, **r) for i, r in enumerate(results) if r["violations"]]
    payload = {
        "seed": spec.seed, "count": spec.count, "dim_range": list(spec.dim_range),
        "coordinate_bound": spec.coordinate_bound, "family": spec.family,
        "spanning_count": sum(r["spanning_index"] == 1 for r in results),
        "violations": bad,
        "instances": [{"dim": r["dim"], "hstar": r["hstar"], "spanning_index": r["spanning_index"]}
                      for r in results],
    }
    return payload, _args_digest(argv), EXIT_VIOLATION if bad else EXIT_OK


def _corpus_spec(args) -> CorpusSpec:
    try:
        return CorpusSpec(args.seed, args.count, (args.dim_min, args.dim_max), args.bound, args.family)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_upp(args):
    G, digest = _point_set(args.file)
    try:
        ok, witness = is_uniform_position(G)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    l0 = G.stabilization_degree
    out = {"uniform_position": ok, "witness": witness.to_json() if witness else None,
           "stabilization_degree": l0, "hilbert_function": [G.hilbert(l) for l in range(l0 + 1)]}
    if len(G) <= 10:
        out["min_formula"] = check_min_formula(G).min_formula
    if ok:
        out["bounds"] = [check_upp_bound(G, i, j).to_json()
                         for i in range(l0 + 1) for j in range(i, l0 + 1 - i)]
    failed = ok and not all(b["pass"] for b in out["bounds"])
    return out, digest, EXIT_VIOLATION if failed else EXIT_OK


def cmd_hilb(args):
    G, digest = _point_set(args.file)
    if args.deg < 0:
        raise UsageError("--deg must be nonnegative")
    return {"degree": args.deg, "value": hilbert_function(G, args.deg), "points": len(G)}, digest, EXIT_OK


def _generated(args) -> LatticePolytope:
    try:
        P = standard_family(args.family, args.params)
        if args.join:
            Q = standard_family(args.join[0], [int(x) for x in args.join[1:]])
            P = join(P, Q)
        if args.dilate:
            P = dilate(P, args.dilate)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return P


def _human(command: str, results) -> str:
    if isinstance(results, list):
        return "\n".join(f"{r['family']:>18}: {'pass' if r['pass'] else 'FAIL'}"
                         + ("" if r["applicable"] else " (not applicable)")
                         + "".join(f"\n{'':>20}{v['params']}: {v['lhs']} > {v['rhs']}" for v in r["violations"])
                         for r in results)
    return "\n".join(f"{k:>22}: {v}" for k, v in results.items() if k not in ("instances",))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ehrspan", description="Ehrhart invariants and h*-inequality checks for lattice polytopes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--human", action="store_true", help="also write a readable summary to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hstar", help="h*-vector, degree and normalized volume")
    s.add_argument("file")
    s.add_argument("--polynomial", action="store_true", help="include Ehrhart polynomial coefficients")

    s = sub.add_parser("spanning", help="spanning index via Smith normal form")
    s.add_argument("file")

    s = sub.add_parser("coarsen", help="polytope in the lattice spanned by its lattice points")
    s.add_argument("file")

    s = sub.add_parser("idp", help="integer decomposition property")
    s.add_argument("file")
    s.add_argument("--kmax", type=int, default=None)

    s = sub.add_parser("check", help="h*-inequality families")
    s.add_argument("file")
    s.add_argument("--family", choices=["all", "stanley", "strong", "lower"], default="all")

    s = sub.add_parser("gen", help="print a named polytope")
    s.add_argument("--family", required=True)
    s.add_argument("--params", type=int, nargs="*", default=[])
    s.add_argument("--join", nargs="+", metavar="FAMILY [PARAM ...]", help="join with another named polytope")
    s.add_argument("--dilate", type=int, default=None)

    for name, helptext in (("corpus", "stream a seeded random corpus as JSON lines"),
                           ("corpus-check", "check every theorem on a seeded random corpus")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--seed", type=int, required=True)
        s.add_argument("--count", type=int, required=True)
        s.add_argument("--dim-min", type=int, default=2)
        s.add_argument("--dim-max", type=int, default=3)
        s.add_argument("--bound", type=int, default=6, help="coordinates are drawn from [0, bound]")
        s.add_argument("--family", choices=["random_simplex", "random_polytope"], default="random_simplex")

    s = sub.add_parser("upp", help="uniform position test for a weighted projective point set")
    s.add_argument("file")

    s = sub.add_parser("hilb", help="Hilbert function value of a point set")
    s.add_argument("file")
    s.add_argument("--deg", type=int, required=True)

    s = sub.add_parser("random-points", help="print a seeded random rational point set")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--weights", type=int, nargs="+", default=[1, 1, 1])
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--bound", type=int, default=2)
    return p


REPORTING = {"hstar": cmd_hstar, "spanning": cmd_spanning, "idp": cmd_idp, "check": cmd_check,
             "upp": cmd_upp, "hilb": cmd_hilb}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    start = time.perf_counter()
    try:
        if args.command == "gen":
            _emit(_generated(args).to_json())
            return EXIT_OK
        if args.command == "coarsen":
            P, _ = _polytope(args.file)
            _emit(coarsen(P).to_json())
            return EXIT_OK
        if args.command == "corpus":
            for P in iter_corpus(_corpus_spec(args)):
                _emit(P.to_json())
            return EXIT_OK
        if args.command == "random-points":
            try:
                G = random_point_set(SplitMix64(args.seed), WeightedSpace.from_weights(args.weights),
                                     args.size, args.bound)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            _emit(G.to_json())
            return EXIT_OK
        if args.command == "corpus-check":
            results, digest, code = cmd_corpus_check(args, argv)
        else:
            results, digest, code = REPORTING[args.command](args)
    except UsageError as exc:
        print(f"ehrspan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = int((time.perf_counter() - start) * 1000)
    _emit({"tool_version": __version__, "input_digest": digest, "command": args.command,
           "results": results, "elapsed_ms": elapsed})
    if args.human:
        print(_human(args.command, results), file=sys.stderr)
    if code == EXIT_VIOLATION:
        print(f"ehrspan: {args.command}: violation found", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
