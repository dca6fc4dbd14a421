"""Fine Hilbert series of square-free monomial ideals and the variety formulas.

Series live in Q[y1..yn]/(y1^2, ..., yn^2), whose monomials are exactly the
square-free ones, so a series is stored densely as one integer per bitmask.
The zero set of f = x^a1 + ... + x^as is read off an integer combination of
such series as the positions whose coefficient is exactly 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .core import (
    DEFAULT_GUARD,
    BoolPoly,
    PolySystem,
    check_guard,
    degree,
    evaluate,
    lcm,
)

DEFAULT_SUBSET_GUARD = 20


def _superset_sum(coeffs: np.ndarray, n: int) -> np.ndarray:
    """out[b] = sum of coeffs[a] over a ⊆ b (a sum of principal series)."""
    out = coeffs.copy()
    for i in range(n):
        v = out.reshape(-1, 2, 1 << i)
        v[:, 1, :] += v[:, 0, :]
    return out


class FineHilbertSeries:
    """Integer coefficients indexed by square-free multidegree."""

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs: np.ndarray, n: int):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape != (1 << n,):
            raise ValueError(f"expected {1 << n} coefficients, got shape {coeffs.shape}")
        self.coeffs = coeffs
        self.n = n

    @classmethod
    def zero(cls, n: int) -> "FineHilbertSeries":
        return cls(np.zeros(1 << n, dtype=np.int64), n)

    @classmethod
    def from_terms(cls, terms: dict[int, int], n: int) -> "FineHilbertSeries":
        c = np.zeros(1 << n, dtype=np.int64)
        for m, v in terms.items():
            c[m] += v
        return cls(c, n)

    def __getitem__(self, m: int) -> int:
        return int(self.coeffs[m])

    def terms(self) -> dict[int, int]:
        nz = np.flatnonzero(self.coeffs)
        return {int(m): int(self.coeffs[m]) for m in nz}

    def support(self) -> frozenset[int]:
        return frozenset(int(m) for m in np.flatnonzero(self.coeffs))

    def log(self) -> frozenset[int]:
        """Positions whose coefficient is exactly 1."""
        return frozenset(int(m) for m in np.flatnonzero(self.coeffs == 1))

    def mod2(self) -> "FineHilbertSeries":
        return FineHilbertSeries(np.mod(self.coeffs, 2), self.n)

    def _other(self, other: "FineHilbertSeries") -> np.ndarray:
        if not isinstance(other, FineHilbertSeries):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} != {other.n}")
        return other.coeffs

    def __add__(self, other):
        return FineHilbertSeries(self.coeffs + self._other(other), self.n)

    def __sub__(self, other):
        return FineHilbertSeries(self.coeffs - self._other(other), self.n)

    def __neg__(self):
        return FineHilbertSeries(-self.coeffs, self.n)

    def __rmul__(self, k: int):
        return FineHilbertSeries(self.coeffs * int(k), self.n)

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FineHilbertSeries):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self) -> str:
        parts = []
        for m, c in sorted(self.terms().items(), key=lambda t: (degree(t[0]), t[0])):
            mono = "*".join(f"y{i + 1}" for i in range(self.n) if m >> i & 1) or "1"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return f"FineHilbertSeries({' + '.join(parts) or '0'}, n={self.n})"


def series_of_monomial_ideal(gens: Iterable[int], n: int,
                             guard: int = DEFAULT_GUARD) -> FineHilbertSeries:
    """0/1 indicator of membership in the ideal generated by ``gens``."""
    check_guard(n, guard)
    c = np.zeros(1 << n, dtype=np.int64)
    for g in gens:
        c[g] = 1
    return FineHilbertSeries((_superset_sum(c, n) > 0).astype(np.int64), n)


def principal_series(m: int, n: int, guard: int = DEFAULT_GUARD) -> FineHilbertSeries:
    return series_of_monomial_ideal((m,), n, guard)


def lcm_ideal_series(f: BoolPoly, guard: int = DEFAULT_GUARD,
                     subset_guard: int = DEFAULT_SUBSET_GUARD) -> list[FineHilbertSeries]:
    """[h_0, ..., h_s]: h_i is the series of the ideal generated by all i-fold lcms of supp(f)."""
    check_guard(f.n, guard)
    terms = sorted(f.terms)
    check_guard(len(terms), subset_guard, "support size")
    out = []
    for i in range(len(terms) + 1):
        gens = {lcm(*c) for c in combinations(terms, i)}
        out.append(series_of_monomial_ideal(gens, f.n, guard))
    return out


def alternating_series(f: BoolPoly, guard: int = DEFAULT_GUARD,
                       subset_guard: int = DEFAULT_SUBSET_GUARD) -> FineHilbertSeries:
    """h_0 - h_1 + h_2 - ... + (-1)^s h_s."""
    total = FineHilbertSeries.zero(f.n)
    for i, h in enumerate(lcm_ideal_series(f, guard, subset_guard)):
        total = total + h if i % 2 == 0 else total - h
    return total


def variety_explicit1(f: BoolPoly, guard: int = DEFAULT_GUARD,
                      subset_guard: int = DEFAULT_SUBSET_GUARD) -> frozenset[int]:
    return alternating_series(f, guard, subset_guard).log()


def _subset_lcms(terms: list[int]) -> tuple[np.ndarray, np.ndarray]:
    """lcm and size of every subset of ``terms`` (index bit j <=> terms[j] chosen)."""
    lcms = np.zeros(1, dtype=np.int64)
    ranks = np.zeros(1, dtype=np.int64)
    for t in terms:
        lcms = np.concatenate((lcms, lcms | t))
        ranks = np.concatenate((ranks, ranks + 1))
    return lcms, ranks


def signed_principal_series(f: BoolPoly, guard: int = DEFAULT_GUARD,
                            subset_guard: int = DEFAULT_SUBSET_GUARD) -> FineHilbertSeries:
    """g_0 + 1/2 * sum_i (-2)^i g_i, with g_i the sum of principal lcm-series over i-subsets.

    The factor 1/2 (-2)^i is applied as (-1)^i 2^(i-1), so every intermediate
    stays integral.  Weights are accumulated per lcm and expanded into
    principal series with one superset-sum pass.
    """
    n = f.n
    check_guard(n, guard)
    terms = sorted(f.terms)
    s = len(terms)
    check_guard(s, subset_guard, "support size")
    lcms, ranks = _subset_lcms(terms)
    weights = np.where(ranks % 2 == 0, 1, -1) * np.left_shift(1, np.maximum(ranks - 1, 0))
    weights[0] = 1  # g_0 = H((1))
    c = np.zeros(1 << n, dtype=np.int64)
    np.add.at(c, lcms, weights)
    return FineHilbertSeries(_superset_sum(c, n), n)


def variety_explicit2(f: BoolPoly, guard: int = DEFAULT_GUARD,
                      subset_guard: int = DEFAULT_SUBSET_GUARD) -> frozenset[int]:
    return signed_principal_series(f, guard, subset_guard).log()


def mod2_projection_series(f: BoolPoly, guard: int = DEFAULT_GUARD) -> FineHilbertSeries:
    """pi(H((1)) - H((y^a1)) - ... - H((y^as))), coefficients reduced mod 2.

    Every term of rank >= 2 in the signed expansion carries an even
    coefficient, so only the rank 0 and rank 1 series survive reduction.
    """
    n = f.n
    check_guard(n, guard)
    c = np.zeros(1 << n, dtype=np.int64)
    c[0] += 1
    for a in f.terms:
        c[a] -= 1
    return FineHilbertSeries(_superset_sum(c, n), n).mod2()


def variety_mod2_projection(f: BoolPoly, guard: int = DEFAULT_GUARD) -> frozenset[int]:
    return mod2_projection_series(f, guard).log()


# -- counting -----------------------------------------------------------------


@dataclass
class CountBreakdown:
    """2^n + d_1 + ... + d_s for the combined polynomial of a system."""

    n: int
    support_size: int
    d: list[int]
    total: int


def count_terms(f: BoolPoly, subset_guard: int = DEFAULT_SUBSET_GUARD) -> CountBreakdown:
    """The d_i of the closed-form solution count, with exact integers.

    d_i = (-1)^i 2^(i-1) * sum over i-subsets of 2^(n - deg lcm).  The
    exponent is n - deg: a degree-k square-free monomial has 2^(n-k)
    square-free multiples in n variables.
    """
    n = f.n
    check_guard(n, 62)
    terms = sorted(f.terms)
    s = len(terms)
    check_guard(s, subset_guard, "support size")
    lcms, ranks = _subset_lcms(terms)
    degs = np.bitwise_count(lcms.astype(np.uint64)).astype(np.int64)
    # hist[i, k] = number of i-subsets whose lcm has degree k
    hist = np.zeros((s + 1, n + 1), dtype=np.int64)
    np.add.at(hist, (ranks, degs), 1)
    d = []
    for i in range(1, s + 1):
        inner = sum(int(hist[i, k]) << (n - k) for k in range(n + 1) if hist[i, k])
        d.append((-1) ** i * (inner << (i - 1)))
    return CountBreakdown(n, s, d, (1 << n) + sum(d))


def _count_lattice(f: BoolPoly, guard: int) -> int:
    """Same closed form, summed over the lcm lattice instead of over subsets.

    W[u] accumulates (-2)^|S| over subsets S with lcm u, one support term at a
    time: adding term a sends every u to u | a with weight -2.  The total
    T = sum_u W[u] 2^(n-|u|) equals 2*count - 2^n, so |T| <= 2^n and working
    modulo 2^64 is exact for n <= 62.
    """
    n = f.n
    check_guard(n, min(guard, 62))
    if n == 0:
        return 0 if 0 in f.terms else 1
    w = np.zeros(1 << n, dtype=np.uint64)
    w[0] = 1
    minus_two = np.uint64((1 << 64) - 2)
    shape = (2,) * n
    for a in f.terms:
        wv = w.reshape(shape)
        # reshape axis k holds bit n-1-k
        axes = tuple(n - 1 - i for i in range(n) if a >> i & 1)
        s = wv.sum(axis=axes, keepdims=True, dtype=np.uint64) if axes else wv.copy()
        idx = tuple(slice(1, 2) if k in axes else slice(None) for k in range(n))
        wv[idx] += s * minus_two
    pc = np.bitwise_count(np.arange(1 << n, dtype=np.uint64))
    scale = np.left_shift(np.uint64(1), (np.uint64(n) - pc))
    t = int((w * scale).sum(dtype=np.uint64))
    if t >= 1 << 63:
        t -= 1 << 64
    return ((1 << n) + t) // 2


def count_solutions(sys: PolySystem | BoolPoly, method: str = "auto",
                    guard: int = DEFAULT_GUARD,
                    subset_guard: int = DEFAULT_SUBSET_GUARD) -> int:
    """Number of common zeros in Z2^n of a system (or of a single polynomial).

    The system is first reduced to (f1+1)...(fm+1)+1.  ``method`` is
    ``"subsets"`` (ranked subset sums, bounded by ``subset_guard``),
    ``"lattice"`` (lcm-lattice aggregation, bounded by ``guard`` on n), or
    ``"auto"`` (subsets when the support is small enough, else lattice).
    """
    from .ideal import defining_polynomial

    f = sys if isinstance(sys, BoolPoly) else defining_polynomial(sys).f
    if method == "auto":
        method = "subsets" if len(f) <= subset_guard else "lattice"
    if method == "subsets":
        return count_terms(f, subset_guard).total
    if method == "lattice":
        return _count_lattice(f, guard)
    raise ValueError(f"unknown counting method {method!r}")


# -- separators ----------------------------------------------------------------


def separator(p: int, n: int, guard: int = DEFAULT_GUARD) -> BoolPoly:
    """S_p = sum of every monomial multiple of x^p: 1 at p, 0 at every other point."""
    free = ((1 << n) - 1) & ~p
    check_guard(free.bit_count(), guard)
    terms = []
    sub = free
    while True:
        terms.append(p | sub)
        if sub == 0:
            break
        sub = (sub - 1) & free
    return BoolPoly(frozenset(terms), n)


def interpolation_nf(a: int, points: Iterable[int], n: int,
                     guard: int = DEFAULT_GUARD) -> BoolPoly:
    """x^a(p1) S_p1 + ... + x^a(pm) S_pm: agrees with x^a on every given point."""
    pts = set(points)
    if not pts:
        raise ValueError("interpolation needs at least one point")
    mono = BoolPoly.from_monomial(a, n)
    out = BoolPoly.zero(n)
    for p in pts:
        if evaluate(mono, p):
            out = out + separator(p, n, guard)
    return out
