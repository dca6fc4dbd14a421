"""The boolean ring Z2[x1..xn]/(x1^2+x1, ..., xn^2+xn).

A square-free monomial is stored as a Python int used as a bitset: bit ``i``
set means variable ``x{i+1}`` occurs.  The same int doubles as a point of
Z2^n (bit set means coordinate 1), so divisibility is a subset test, lcm is
bitwise or, and degree is a population count.  Python ints are unbounded, so
there is no word-size limit on ``n``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_GUARD = 24


class GuardExceeded(ValueError):
    """An exhaustive operation was asked to run beyond its configured size limit."""


class ConsistencyError(AssertionError):
    """Two routes that must agree produced different results."""


def check_guard(value: int, guard: int, what: str = "variables") -> None:
    if value > guard:
        raise GuardExceeded(f"{what}={value} exceeds guard {guard}")


# -- monomials / points -------------------------------------------------------


def monomial(*indices: int) -> int:
    """Monomial from 0-based variable indices; repeats collapse (x^k -> x)."""
    mask = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"negative variable index {i}")
        mask |= 1 << i
    return mask


def degree(m: int) -> int:
    return m.bit_count()


def divides(a: int, b: int) -> bool:
    return a & b == a


def lcm(*ms: int) -> int:
    out = 0
    for m in ms:
        out |= m
    return out


def indices(m: int) -> tuple[int, ...]:
    """0-based variable indices present in ``m``, ascending."""
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def point(bits: Sequence[int]) -> int:
    """Point from a coordinate tuple, ``bits[0]`` being the x1 coordinate."""
    mask = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"coordinate must be 0 or 1, got {b!r}")
        if b:
            mask |= 1 << i
    return mask


def coords(p: int, n: int) -> tuple[int, ...]:
    return tuple((p >> i) & 1 for i in range(n))


def mono_key(m: int) -> tuple[int, tuple[int, ...]]:
    """Degree, then lexicographic on index sets."""
    return (m.bit_count(), indices(m))


def sort_points(points: Iterable[int]) -> list[int]:
    return sorted(points, key=mono_key)


def format_monomial(m: int) -> str:
    if m == 0:
        return "1"
    return "*".join(f"x{i + 1}" for i in indices(m))


def _odd_terms(products: Iterable[int]) -> frozenset[int]:
    return frozenset(m for m, c in Counter(products).items() if c & 1)


# -- polynomials --------------------------------------------------------------


class BoolPoly:
    """A boolean polynomial: an XOR-set of square-free monomials in ``n`` variables.

    Construction is always canonical; duplicate terms cancel in pairs.
    """

    __slots__ = ("terms", "n")

    def __init__(self, terms: Iterable[int] = (), n: int = 0):
        if n < 0:
            raise ValueError("variable count must be non-negative")
        if isinstance(terms, frozenset):
            canon = terms
        else:
            canon = _odd_terms(terms)
        limit = 1 << n
        for m in canon:
            if m < 0 or m >= limit:
                raise ValueError(f"monomial {m:#b} outside {n} variables")
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("BoolPoly is immutable")

    @classmethod
    def _raw(cls, terms: frozenset[int], n: int) -> "BoolPoly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "n", n)
        return obj

    @classmethod
    def zero(cls, n: int) -> "BoolPoly":
        return cls._raw(frozenset(), n)

    @classmethod
    def one(cls, n: int) -> "BoolPoly":
        return cls._raw(frozenset((0,)), n)

    @classmethod
    def var(cls, i: int, n: int) -> "BoolPoly":
        """The variable ``x{i}`` (1-based, matching the usual notation)."""
        if not 1 <= i <= n:
            raise ValueError(f"x{i} outside 1..{n}")
        return cls._raw(frozenset((1 << (i - 1),)), n)

    @classmethod
    def from_monomial(cls, m: int, n: int) -> "BoolPoly":
        return cls(frozenset((m,)), n)

    # supp(f)
    @property
    def support(self) -> frozenset[int]:
        return self.terms

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0}

    def degree(self) -> int:
        return max((m.bit_count() for m in self.terms), default=-1)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[int]:
        """Terms in display order: highest degree first, lex within a degree."""
        return sorted(self.terms, key=lambda m: (-m.bit_count(), indices(m)))

    def _check(self, other: "BoolPoly") -> None:
        if not isinstance(other, BoolPoly):
            raise TypeError(f"expected BoolPoly, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} != {other.n}")

    def _coerce(self, other) -> "BoolPoly":
        if isinstance(other, int) and not isinstance(other, bool) and other in (0, 1):
            return BoolPoly.one(self.n) if other else BoolPoly.zero(self.n)
        self._check(other)
        return other

    def __add__(self, other) -> "BoolPoly":
        other = self._coerce(other)
        return BoolPoly._raw(self.terms ^ other.terms, self.n)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self) -> "BoolPoly":
        return self

    def __mul__(self, other) -> "BoolPoly":
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return BoolPoly.zero(self.n)
        if len(a) < len(b):
            a, b = b, a
        return BoolPoly._raw(_odd_terms(x | y for y in b for x in a), self.n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BoolPoly":
        if k < 0:
            raise ValueError("negative power")
        return self if k else BoolPoly.one(self.n)

    def __call__(self, p: int) -> int:
        return evaluate(self, p)

    def __eq__(self, other) -> bool:
        if isinstance(other, BoolPoly):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(format_monomial(m) for m in self.sorted_terms())

    def __repr__(self) -> str:
        return f"BoolPoly({str(self)!r}, n={self.n})"


def add(f: BoolPoly, g: BoolPoly) -> BoolPoly:
    f._check(g)
    return f + g


def mul(f: BoolPoly, g: BoolPoly) -> BoolPoly:
    f._check(g)
    return f * g


def product(polys: Iterable[BoolPoly], n: int) -> BoolPoly:
    out = BoolPoly.one(n)
    for f in polys:
        out = out * f
        if not out:
            break
    return out


def evaluate(f: BoolPoly, p: int) -> int:
    """Value of ``f`` at point ``p``: parity of the terms dividing x^p."""
    if p < 0 or p >= 1 << f.n:
        raise ValueError(f"point {p:#b} outside Z2^{f.n}")
    return sum(1 for m in f.terms if m & p == m) & 1


def all_points(n: int) -> range:
    return range(1 << n)


def variety_bruteforce(f: BoolPoly, guard: int = DEFAULT_GUARD) -> frozenset[int]:
    """Every point of Z2^n where ``f`` evaluates to 0, by exhaustive evaluation.

    This is the oracle the closed-form variety routines are checked against,
    so it evaluates each monomial at each point directly and uses no
    transform.
    """
    check_guard(f.n, guard)
    pts = np.arange(1 << f.n, dtype=np.int64)
    value = np.zeros(pts.shape, dtype=bool)
    for m in f.terms:
        value ^= (pts & m) == m
    return frozenset(int(p) for p in np.flatnonzero(~value))


def full_sum(n: int, guard: int = DEFAULT_GUARD) -> BoolPoly:
    """The polynomial containing every one of the 2^n square-free monomials."""
    check_guard(n, guard)
    return BoolPoly._raw(frozenset(range(1 << n)), n)


# -- systems and the direct satisfiability product -----------------------------


@dataclass(frozen=True)
class PolySystem:
    """An ordered list of generators ``f_i = 0`` over ``n`` variables."""

    generators: tuple[BoolPoly, ...]
    n: int

    def __init__(self, generators: Iterable[BoolPoly], n: int | None = None):
        gens = tuple(generators)
        if n is None:
            if not gens:
                raise ValueError("empty system needs an explicit variable count")
            n = gens[0].n
        for g in gens:
            if g.n != n:
                raise ValueError(f"generator has {g.n} variables, system has {n}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "n", n)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[BoolPoly]:
        return iter(self.generators)

    def common_zeros(self, guard: int = DEFAULT_GUARD) -> frozenset[int]:
        """Brute-force solution set of the system."""
        check_guard(self.n, guard)
        sols = frozenset(all_points(self.n))
        for g in self.generators:
            sols &= variety_bruteforce(g, guard)
            if not sols:
                break
        return sols


@dataclass
class ProductReport:
    """Outcome of the direct satisfiability product."""

    satisfiable: bool
    term_high_water: int = 0
    components: int = 1
    # verdict certified by the full monomial x1*..*xn being in the support;
    # None when the product was not fully expanded
    full_monomial: bool | None = None
    stages: list[int] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "sat" if self.satisfiable else "unsat"


def _variable_components(gens: Sequence[BoolPoly]) -> list[list[int]]:
    """Group generator positions whose variable sets overlap (union-find)."""
    parent = list(range(len(gens)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[int, int] = {}
    for i, g in enumerate(gens):
        used = lcm(*g.terms)
        for v in indices(used):
            if v in owner:
                a, b = find(owner[v]), find(i)
                if a != b:
                    parent[b] = a
            else:
                owner[v] = i
    groups: dict[int, list[int]] = {}
    for i in range(len(gens)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _accumulate(factors: Sequence[frozenset[int]], early_stop: bool,
                max_degree: int | None = None) -> tuple[frozenset[int], int]:
    acc: frozenset[int] = frozenset((0,))
    high = 1
    for fac in factors:
        if max_degree is None:
            acc = _odd_terms(a | b for b in fac for a in acc)
        else:
            acc = _odd_terms(
                m for b in fac for a in acc if (m := a | b).bit_count() <= max_degree
            )
        high = max(high, len(acc))
        if early_stop and not acc:
            break
    return acc, high


def sat_product(sys: PolySystem, early_stop: bool = False, staged: bool = False,
                split: bool = True) -> ProductReport:
    """Decide satisfiability by testing whether (f1+1)...(fm+1) is zero.

    ``early_stop`` stops as soon as a partial product is the zero polynomial.
    ``staged`` computes the product degree by degree (terms above the current
    degree are dropped, which is exact for the low-degree part since lcms only
    grow) and stops at the first nonzero stage.  ``split`` multiplies
    generators with disjoint variable sets separately: a product of nonzero
    polynomials in disjoint variables is never zero.
    """
    n = sys.n
    factors = [(g + 1).terms for g in sys.generators]
    groups = _variable_components(sys.generators) if split else [list(range(len(factors)))]
    high = 1
    stages: list[int] = []
    full_parts: list[int] = []
    for grp in groups:
        facs = [factors[i] for i in grp]
        if staged:
            used = lcm(*(lcm(*f) for f in facs))
            nonzero = False
            for d in range(used.bit_count() + 1):
                acc, h = _accumulate(facs, True, d)
                high = max(high, h)
                if acc:
                    stages.append(d)
                    nonzero = True
                    break
            if not nonzero:
                return ProductReport(False, high, len(groups), None, stages)
        else:
            acc, h = _accumulate(facs, early_stop)
            high = max(high, h)
            if not acc:
                return ProductReport(False, high, len(groups), None, stages)
            used = lcm(*(lcm(*f) for f in facs))
            full_parts.append(used if used in acc else -1)
    full = None
    if not staged:
        covered = lcm(*(u for u in full_parts if u >= 0))
        full = all(u >= 0 for u in full_parts) and covered == (1 << n) - 1
    return ProductReport(True, high, len(groups), full, stages)
