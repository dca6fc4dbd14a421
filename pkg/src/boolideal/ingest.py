"""Text formats in, polynomial systems out.

Polynomial files hold one polynomial per line, 1-indexed variables::

    # comment
    vars 3
    x1*x2 + x3 + 1
    x1^3*x3 + x2

``*`` is the only product operator (no implicit juxtaposition) and any
exponent >= 1 collapses to the variable itself.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Sequence

from .core import BoolPoly, PolySystem, format_monomial


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"x(\d+)|(\d+)|([+*^])|(\S)")


def _tokens(text: str, line: int) -> list[tuple[str, str, int]]:
    out = []
    for m in _TOKEN.finditer(text):
        col = m.start() + 1
        if m.group(1) is not None:
            out.append(("var", m.group(1), col))
        elif m.group(2) is not None:
            out.append(("num", m.group(2), col))
        elif m.group(3) is not None:
            out.append((m.group(3), m.group(3), col))
        else:
            raise ParseError(f"unexpected character {m.group(4)!r}", line, col)
    return out


def _parse_line(text: str, n: int | None, line: int) -> tuple[list[int], int]:
    """Monomials of one line (not yet cancelled) and the largest variable index seen."""
    toks = _tokens(text, line)
    end_col = len(text.rstrip()) + 1
    pos = 0
    top = 0

    def peek() -> tuple[str, str, int] | None:
        return toks[pos] if pos < len(toks) else None

    def factor() -> int | None:
        # None marks a literal 0, which annihilates its term
        nonlocal pos, top
        tok = peek()
        if tok is None:
            raise ParseError("expression ends with an operator" if toks else "empty polynomial",
                             line, end_col if toks else 1)
        kind, val, col = tok
        pos += 1
        if kind == "num":
            return 0 if int(val) & 1 else None
        if kind != "var":
            raise ParseError(f"unexpected {val!r}", line, col)
        idx = int(val)
        if idx < 1:
            raise ParseError("variables are numbered from x1", line, col)
        if n is not None and idx > n:
            raise ParseError(f"x{idx} outside declared {n} variables", line, col)
        top = max(top, idx)
        nxt = peek()
        if nxt is not None and nxt[0] == "^":
            pos += 1
            exp = peek()
            if exp is None or exp[0] != "num":
                raise ParseError("exponent expected after '^'", line, exp[2] if exp else end_col)
            if int(exp[1]) == 0:
                raise ParseError("zero exponents are not supported", line, exp[2])
            pos += 1
        return 1 << (idx - 1)

    terms: list[int] = []
    while True:
        cur = factor()
        while (tok := peek()) is not None and tok[0] == "*":
            pos += 1
            f = factor()
            cur = None if cur is None or f is None else cur | f
        if cur is not None:
            terms.append(cur)
        tok = peek()
        if tok is None:
            return terms, top
        if tok[0] != "+":
            shown = f"x{tok[1]}" if tok[0] == "var" else tok[1]
            raise ParseError(f"expected '+' or '*' before {shown!r}", line, tok[2])
        pos += 1


def parse_poly(text: str, n: int | None = None) -> BoolPoly:
    """Parse one polynomial; ``n`` defaults to the largest index used."""
    terms, top = _parse_line(text, n, 1)
    return BoolPoly(terms, top if n is None else n)


def parse_system(text: str, n: int | None = None) -> PolySystem:
    """Parse a polynomial file.  ``n`` overrides a ``vars`` header."""
    rows: list[tuple[list[int], int]] = []
    declared: int | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        head = body.split()
        if head[0] == "vars":
            if rows or declared is not None:
                raise ParseError("'vars' must precede every polynomial", lineno, 1)
            if len(head) != 2 or not head[1].isdigit():
                raise ParseError("expected 'vars <n>'", lineno, 1)
            declared = int(head[1])
            continue
        rows.append(_parse_line(body, n if n is not None else declared, lineno))
    if n is None:
        n = declared if declared is not None else max((t for _, t in rows), default=0)
    return PolySystem((BoolPoly(terms, n) for terms, _ in rows), n)


def format_poly(f: BoolPoly) -> str:
    return str(f)


def format_system(sys: PolySystem) -> str:
    lines = [f"vars {sys.n}"]
    lines.extend(str(g) for g in sys.generators)
    return "\n".join(lines) + "\n"


# -- CNF ----------------------------------------------------------------------


@dataclass(frozen=True)
class ClauseSystem:
    n: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for c in self.clauses:
            if not c:
                raise ValueError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.n:
                    raise ValueError(f"literal {lit} outside 1..{self.n}")

    def satisfied_by(self, p: int) -> bool:
        """Truth-table check; bit i of ``p`` is the value of variable i+1."""
        return all(
            any(((p >> (abs(lit) - 1)) & 1) == (lit > 0) for lit in c) for c in self.clauses
        )


def parse_dimacs(text: str) -> ClauseSystem:
    n: int | None = None
    expected: int | None = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf" or n is not None:
                raise ParseError("expected a single 'p cnf <vars> <clauses>' header", lineno, 1)
            try:
                n, expected = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer header field", lineno, 1) from None
            continue
        if n is None:
            raise ParseError("clause before 'p cnf' header", lineno, 1)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno, raw.find(tok) + 1) from None
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", lineno, raw.find(tok) + 1)
                clauses.append(tuple(dict.fromkeys(current)))
                current = []
            else:
                if abs(lit) > n:
                    raise ParseError(f"literal {lit} outside 1..{n}", lineno, raw.find(tok) + 1)
                current.append(lit)
    if n is None:
        raise ParseError("missing 'p cnf' header", 1, 1)
    if current:
        clauses.append(tuple(dict.fromkeys(current)))
    if expected is not None and len(clauses) != expected:
        raise ParseError(f"header declares {expected} clauses, found {len(clauses)}", 1, 1)
    return ClauseSystem(n, tuple(clauses))


def format_dimacs(cs: ClauseSystem) -> str:
    lines = [f"p cnf {cs.n} {len(cs.clauses)}"]
    lines.extend(" ".join(map(str, c)) + " 0" for c in cs.clauses)
    return "\n".join(lines) + "\n"


def clause_poly(clause: Sequence[int], n: int) -> BoolPoly:
    """Polynomial that is 0 exactly where the clause is true.

    The clause is false only when every literal is false, so the polynomial
    is the product of (x+1) over positive literals and x over negative ones.
    A clause holding both x and not-x is always true and maps to 0.
    """
    lits = set(clause)
    if any(-lit in lits for lit in lits):
        return BoolPoly.zero(n)
    acc = BoolPoly.one(n)
    for lit in sorted(lits, key=abs):
        x = BoolPoly.var(abs(lit), n)
        acc = acc * (x + 1 if lit > 0 else x)
    return acc


def stone_transform(cs: ClauseSystem) -> PolySystem:
    return PolySystem((clause_poly(c, cs.n) for c in cs.clauses), cs.n)


# -- fixtures -----------------------------------------------------------------


def _mono_poly(groups: Sequence[Sequence[int]], n: int) -> BoolPoly:
    terms = []
    for g in groups:
        m = 0
        for i in g:
            m |= 1 << (i - 1)
        terms.append(m)
    return BoolPoly(terms, n)


def fixture_cyclic_truncated(variant: int = 1) -> PolySystem:
    """Truncated cyclic 13-roots: variant 1 has six consecutive triples, variant 2 all thirteen."""
    n = 13
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    f1 = _mono_poly([[i] for i in range(1, n + 1)], n)
    f2 = _mono_poly([[i, i % n + 1] for i in range(1, n + 1)], n)
    count = 6 if variant == 1 else n
    f3 = _mono_poly([[i, i % n + 1, (i + 1) % n + 1] for i in range(1, count + 1)], n)
    return PolySystem([f1, f2, f3], n)


def fixture_pair_family(pairs: int) -> PolySystem:
    """x_{2i-1} x_{2i} + x_{2i-1} + x_{2i} + 1 for i = 1..pairs."""
    if pairs < 1:
        raise ValueError("need at least one pair")
    n = 2 * pairs
    gens = []
    for i in range(1, pairs + 1):
        a, b = 2 * i - 1, 2 * i
        gens.append(_mono_poly([[a, b], [a], [b], []], n))
    return PolySystem(gens, n)


def random_poly(n: int, terms: int, rng: random.Random, max_degree: int | None = None) -> BoolPoly:
    """Random polynomial with up to ``terms`` distinct monomials."""
    top = n if max_degree is None else min(n, max_degree)
    picked: set[int] = set()
    limit = sum(1 for m in range(1 << n) if m.bit_count() <= top)
    want = min(terms, limit)
    while len(picked) < want:
        m = 0
        for i in rng.sample(range(n), rng.randint(0, top)) if n else ():
            m |= 1 << i
        picked.add(m)
    return BoolPoly(frozenset(picked), n)


def random_system(n: int, gens: int, terms: int, rng: random.Random,
                  max_degree: int | None = None) -> PolySystem:
    return PolySystem([random_poly(n, terms, rng, max_degree) for _ in range(gens)], n)


def fixture_random_quadratic(n: int, gens: int = 4, terms: int = 13, seed: int = 0) -> PolySystem:
    """Random degree-two generators with ``terms`` terms each, from an explicit seed."""
    rng = random.Random(seed)
    return random_system(n, gens, terms, rng, max_degree=2)


def with_contradiction(sys: PolySystem) -> PolySystem:
    """Append x1*x2 + 1 and (x1+1)(x3+1)(x4+1)(x5+1) + 1, which no point satisfies."""
    n = sys.n
    if n < 5:
        raise ValueError("needs at least 5 variables")
    x = [None] + [BoolPoly.var(i, n) for i in range(1, n + 1)]
    extra1 = x[1] * x[2] + 1
    extra2 = (x[1] + 1) * (x[3] + 1) * (x[4] + 1) * (x[5] + 1) + 1
    return PolySystem(list(sys.generators) + [extra1, extra2], n)


def with_all_ones(sys: PolySystem) -> PolySystem:
    """Append x1*...*xn + 1, forcing every coordinate to 1."""
    n = sys.n
    top = BoolPoly.from_monomial((1 << n) - 1, n)
    return PolySystem(list(sys.generators) + [top + 1], n)


def random_3cnf(n: int, clauses: int, rng: random.Random) -> ClauseSystem:
    out = []
    for _ in range(clauses):
        vs = rng.sample(range(1, n + 1), min(3, n))
        out.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return ClauseSystem(n, tuple(out))


__all__ = [
    "ClauseSystem", "ParseError", "clause_poly", "fixture_cyclic_truncated",
    "fixture_pair_family", "fixture_random_quadratic", "format_dimacs",
    "format_monomial", "format_poly", "format_system", "parse_dimacs",
    "parse_poly", "parse_system", "random_3cnf", "random_poly", "random_system",
    "stone_transform", "with_all_ones", "with_contradiction",
]
