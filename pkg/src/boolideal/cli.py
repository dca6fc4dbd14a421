"""Command line entry point.

Every command prints one JSON object (``bench`` prints one per line).

Exit codes: 0 completed, 1 completed with an Unsat verdict (``sat`` only),
2 usage or parse error, 3 guard exceeded, 4 oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Iterator

from . import core, duality, hilbert, ideal, ingest
from .core import BoolPoly, ConsistencyError, GuardExceeded, PolySystem

EXIT_OK, EXIT_UNSAT, EXIT_USAGE, EXIT_GUARD, EXIT_ORACLE = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    command: str
    result: dict[str, Any] = field(default_factory=dict)
    timing: float = 0.0
    term_high_water: int = 0
    oracle_checked: bool = False

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))

    def pretty(self) -> str:
        lines = [f"{self.command}: {self.timing:.4f}s, term high-water {self.term_high_water}"
                 + (", oracle checked" if self.oracle_checked else "")]
        for k, v in self.result.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


class UsageError(Exception):
    pass


def _points_json(points, n: int) -> list[list[int]]:
    return [list(core.coords(p, n)) for p in sorted(points, key=lambda p: core.coords(p, n))]


def _read_input(args) -> str:
    if args.input:
        return Path(args.input).read_text(encoding="utf-8")
    return sys.stdin.read()


def _load_system(args) -> PolySystem:
    text = _read_input(args)
    fmt = args.format
    if fmt is None:
        fmt = "dimacs" if args.input and args.input.endswith(".cnf") else "poly"
    if fmt == "dimacs":
        sysm = ingest.stone_transform(ingest.parse_dimacs(text))
        if args.vars is not None and args.vars != sysm.n:
            sysm = PolySystem((BoolPoly(g.terms, args.vars) for g in sysm), args.vars)
        return sysm
    return ingest.parse_system(text, args.vars)


def _timed(fn: Callable[[], Any]) -> tuple[Any, float]:
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


# -- commands -----------------------------------------------------------------


def cmd_sat(args) -> tuple[RunReport, int]:
    sysm = _load_system(args)
    rep, dt = _timed(lambda: core.sat_product(sysm, early_stop=args.early_stop,
                                              staged=args.staged, split=not args.no_split))
    result: dict[str, Any] = {
        "verdict": rep.verdict,
        "vars": sysm.n,
        "generators": len(sysm),
        "components": rep.components,
    }
    if rep.full_monomial is not None:
        result["full_monomial"] = rep.full_monomial
        if sysm.n >= 1 and rep.satisfiable:
            result["parity"] = "odd" if rep.full_monomial else "even"
    checked = False
    if args.oracle:
        core.check_guard(sysm.n, args.guard)
        truth = bool(sysm.common_zeros(args.guard))
        if truth != rep.satisfiable:
            raise ConsistencyError(f"product verdict {rep.verdict} but brute force says "
                                   f"{'sat' if truth else 'unsat'}")
        checked = True
    if args.witness and rep.satisfiable:
        sol = duality.particular_solution(sysm)
        if sol is None:
            core.check_guard(sysm.n, args.guard)
            sol = min(sysm.common_zeros(args.guard), key=core.mono_key)
            result["witness_source"] = "enumeration"
        else:
            result["witness_source"] = "support"
        result["witness"] = list(core.coords(sol, sysm.n))
    report = RunReport("sat", result, dt, rep.term_high_water, checked)
    return report, EXIT_OK if rep.satisfiable else EXIT_UNSAT


def cmd_count(args) -> tuple[RunReport, int]:
    sysm = _load_system(args)

    def run():
        f, high = ideal.combine(sysm)
        method = args.count_method
        if method == "auto":
            method = "subsets" if len(f) <= args.subset_guard else "lattice"
        out: dict[str, Any] = {"vars": sysm.n, "support_size": len(f), "method": method}
        if method == "subsets":
            br = hilbert.count_terms(f, args.subset_guard)
            out["d"] = br.d
            out["count"] = br.total
        else:
            out["count"] = hilbert.count_solutions(f, "lattice", args.guard, args.subset_guard)
        return out, high

    (result, high), dt = _timed(run)
    checked = False
    if args.oracle:
        truth = len(sysm.common_zeros(args.guard))
        if truth != result["count"]:
            raise ConsistencyError(f"closed form gives {result['count']}, brute force {truth}")
        checked = True
    return RunReport("count", result, dt, high, checked), EXIT_OK


VARIETY_METHODS: dict[str, Callable[..., frozenset[int]]] = {
    "brute": lambda f, a: core.variety_bruteforce(f, a.guard),
    "explicit1": lambda f, a: hilbert.variety_explicit1(f, a.guard, a.subset_guard),
    "explicit2": lambda f, a: hilbert.variety_explicit2(f, a.guard, a.subset_guard),
    "mod2": lambda f, a: hilbert.variety_mod2_projection(f, a.guard),
}


def cmd_variety(args) -> tuple[RunReport, int]:
    sysm = _load_system(args)
    method = args.method or "explicit2"

    def run():
        f, high = ideal.combine(sysm)
        return f, high, VARIETY_METHODS[method](f, args)

    (f, high, pts), dt = _timed(run)
    checked = False
    if args.oracle:
        for name, fn in VARIETY_METHODS.items():
            if name != method and fn(f, args) != pts:
                raise ConsistencyError(f"variety by {name} differs from {method}")
        checked = True
    result = {"vars": sysm.n, "method": method, "count": len(pts),
              "points": _points_json(pts, sysm.n)}
    return RunReport("variety", result, dt, high, checked), EXIT_OK


def _ideal_operands(args) -> tuple[BoolPoly, BoolPoly, BoolPoly | None]:
    given = [args.f, args.g, args.h]
    if args.f is None or args.g is None:
        lines = [ln.split("#", 1)[0].strip() for ln in _read_input(args).splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("vars")]
        for i, ln in enumerate(lines[:3]):
            if given[i] is None:
                given[i] = ln
    if given[0] is None or given[1] is None:
        raise UsageError("ideal operations need f and g (--f/--g or two input lines)")
    n = args.vars
    if n is None:
        n = max(ingest.parse_poly(t).n for t in given if t is not None)
    f, g = ingest.parse_poly(given[0], n), ingest.parse_poly(given[1], n)
    h = ingest.parse_poly(given[2], n) if given[2] is not None else None
    return f, g, h


def cmd_ideal(args) -> tuple[RunReport, int]:
    f, g, h = _ideal_operands(args)
    i, j = ideal.BooleanIdeal.of(f), ideal.BooleanIdeal.of(g)
    op = args.op

    def run() -> dict[str, Any]:
        if op == "nf":
            return {"normal_form": str(ideal.normal_form(g, i, h))}
        if op == "member":
            return {"member": ideal.contains(i, g)}
        fn = {"colon": ideal.colon, "sum": ideal.ideal_sum, "intersect": ideal.intersect}[op]
        return {"defining": str(fn(i, j).f)}

    result, dt = _timed(run)
    result = {"op": op, "vars": f.n, **result}
    checked = False
    if args.oracle:
        vf, vg = core.variety_bruteforce(f, args.guard), core.variety_bruteforce(g, args.guard)
        if op == "member":
            ok = result["member"] == (vf <= vg)
        elif op == "nf":
            # nf_h(g, f) must agree with g + h on every point of V(f)
            nf = ingest.parse_poly(result["normal_form"], f.n)
            hh = h if h is not None else BoolPoly.zero(f.n)
            ok = all(core.evaluate(nf, p) == core.evaluate(g + hh, p) for p in vf)
        else:
            expected = {"colon": vf - vg, "sum": vf & vg, "intersect": vf | vg}[op]
            got = core.variety_bruteforce(ingest.parse_poly(result["defining"], f.n), args.guard)
            ok = got == expected
        if op == "member":
            report = ideal.equivalences_report(i, g, h, args.guard)
            result["equivalences"] = report
            ok = ok and len(set(report)) == 1
        if not ok:
            raise ConsistencyError(f"ideal {op} disagrees with the brute-force varieties")
        checked = True
    return RunReport("ideal", result, dt, 0, checked), EXIT_OK


# -- bench --------------------------------------------------------------------


def _bench_cases(suite: str, seed: int, pairs: list[int]) -> Iterator[tuple[str, PolySystem, str | None, bool]]:
    """(case name, system, expected verdict or None, run oracle)."""
    if suite == "cyclic13":
        yield "cyclic13-ex1", ingest.fixture_cyclic_truncated(1), "sat", False
        yield "cyclic13-ex2", ingest.fixture_cyclic_truncated(2), "sat", False
    elif suite == "pairs":
        for k in pairs:
            yield f"pairs-{k}", ingest.fixture_pair_family(k), "sat", False
    elif suite == "random":
        r15 = ingest.fixture_random_quadratic(15, 4, 13, seed)
        yield "random-quadratic-15", r15, None, False
        yield "random-quadratic-19", ingest.fixture_random_quadratic(19, 4, 13, seed), None, False
        yield "random-15-contradiction", ingest.with_contradiction(r15), "unsat", False
        yield "random-15-all-ones", ingest.with_all_ones(r15), None, False
    elif suite == "smoke":
        rng = random.Random(seed)
        for k in range(20):
            n = rng.randint(1, 10)
            sysm = ingest.random_system(n, rng.randint(1, 4), rng.randint(1, 5), rng)
            yield f"smoke-{k}", sysm, None, True
    else:
        raise UsageError(f"unknown suite {suite!r}")


BENCH_SUITES = ("cyclic13", "pairs", "random", "smoke")


def cmd_bench(args) -> Iterator[RunReport]:
    for name, sysm, expected, oracle in _bench_cases(args.suite, args.seed or 0, args.pairs):
        best = None
        rep = None
        for _ in range(max(1, args.repetitions)):
            rep, dt = _timed(lambda: core.sat_product(sysm, early_stop=args.early_stop,
                                                      staged=args.staged))
            best = dt if best is None else min(best, dt)
        result: dict[str, Any] = {
            "suite": args.suite, "case": name, "vars": sysm.n,
            "generators": len(sysm), "verdict": rep.verdict, "expected": expected,
            "match": None if expected is None else rep.verdict == expected,
        }
        if rep.full_monomial is not None and rep.satisfiable:
            result["parity"] = "odd" if rep.full_monomial else "even"
        checked = False
        if oracle or args.oracle:
            core.check_guard(sysm.n, args.guard)
            sols = sysm.common_zeros(args.guard)
            count = hilbert.count_solutions(sysm, guard=args.guard, subset_guard=args.subset_guard)
            if bool(sols) != rep.satisfiable or count != len(sols):
                raise ConsistencyError(f"{name}: oracle disagreement")
            result["count"] = count
            checked = True
        yield RunReport("bench", result, best, rep.term_high_water, checked)


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="input file (default: stdin)")
    common.add_argument("--format", choices=("poly", "dimacs"),
                        help="input format (default: dimacs for *.cnf, else poly)")
    common.add_argument("--vars", type=int, metavar="N", help="declare the variable count")
    common.add_argument("--method", choices=tuple(VARIETY_METHODS),
                        help="variety engine (variety command)")
    common.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    common.add_argument("--early-stop", action="store_true",
                        help="stop the product as soon as it reaches zero")
    common.add_argument("--staged", action="store_true",
                        help="compute the product degree by degree")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--seed", type=int, help="seed for random suites")
    common.add_argument("--guard", type=int, default=core.DEFAULT_GUARD, metavar="N",
                        help="largest n for exhaustive operations")
    common.add_argument("--subset-guard", type=int, default=hilbert.DEFAULT_SUBSET_GUARD,
                        metavar="S", help="largest support size for subset sums")

    parser = argparse.ArgumentParser(prog="boolideal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sat", parents=[common], help="satisfiability via the direct product")
    p.add_argument("--witness", action="store_true", help="also report a solution")
    p.add_argument("--no-split", action="store_true",
                   help="multiply all generators together even if they share no variables")
    p.set_defaults(func=cmd_sat)

    p = sub.add_parser("count", parents=[common], help="exact number of solutions")
    p.add_argument("--count-method", choices=("auto", "subsets", "lattice"), default="auto")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("variety", parents=[common], help="list the solution points")
    p.set_defaults(func=cmd_variety)

    p = sub.add_parser("ideal", parents=[common], help="normal forms and ideal operations")
    p.add_argument("op", choices=("nf", "member", "colon", "sum", "intersect"))
    p.add_argument("--f", help="defining polynomial of I")
    p.add_argument("--g", help="the element g, or the defining polynomial of J")
    p.add_argument("--h", help="normal form offset h (nf) or nf_h witness (member)")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("bench", parents=[common], help="run a benchmark suite")
    p.add_argument("suite", choices=BENCH_SUITES)
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--pairs", type=int, nargs="+", default=[8, 17, 22])
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "bench":
            for rep in args.func(args):
                print(rep.pretty() if args.pretty else rep.to_json(), flush=True)
            return EXIT_OK
        report, code = args.func(args)
    except (ingest.ParseError, UsageError, OSError) as exc:
        print(f"boolideal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"boolideal: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ConsistencyError as exc:
        print(f"boolideal: oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except ValueError as exc:
        print(f"boolideal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(report.pretty() if args.pretty else report.to_json())
    return code


if __name__ == "__main__":
    sys.exit(main())
