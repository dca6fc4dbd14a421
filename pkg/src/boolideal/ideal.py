"""Boolean ideals carried by a single defining polynomial.

An ideal containing every field polynomial x_i^2 + x_i is (field polys, f) for
exactly one boolean polynomial f, so an ideal is stored as ``(n, f)`` and the
field polynomials are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    DEFAULT_GUARD,
    BoolPoly,
    PolySystem,
    all_points,
    check_guard,
    evaluate,
    variety_bruteforce,
)
from .hilbert import separator, variety_mod2_projection


@dataclass(frozen=True)
class BooleanIdeal:
    n: int
    f: BoolPoly

    def __post_init__(self):
        if self.f.n != self.n:
            raise ValueError(f"defining polynomial has {self.f.n} variables, ideal has {self.n}")

    @classmethod
    def of(cls, f: BoolPoly) -> "BooleanIdeal":
        return cls(f.n, f)

    @classmethod
    def unit(cls, n: int) -> "BooleanIdeal":
        return cls(n, BoolPoly.one(n))

    @classmethod
    def full(cls, n: int) -> "BooleanIdeal":
        """The ideal of the field polynomials alone; its variety is all of Z2^n."""
        return cls(n, BoolPoly.zero(n))

    def is_unit(self) -> bool:
        return self.f.is_one()

    def __contains__(self, g: BoolPoly) -> bool:
        return contains(self, g)

    def _check(self, other: "BooleanIdeal") -> None:
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} != {other.n}")

    def __str__(self) -> str:
        return f"({self.f})"


def combine(sys: PolySystem, size_sorted: bool = False) -> tuple[BoolPoly, int]:
    """(f1+1)...(fm+1)+1 together with the largest intermediate support size."""
    factors = [g + 1 for g in sys.generators]
    if size_sorted:
        factors.sort(key=len)
    acc = BoolPoly.one(sys.n)
    high = 1
    for fac in factors:
        acc = acc * fac
        high = max(high, len(acc))
        if not acc:
            break
    return acc + 1, high


def defining_polynomial(sys: PolySystem | Iterable[BoolPoly], n: int | None = None,
                        size_sorted: bool = False) -> BooleanIdeal:
    """Reduce generators f1..fm to the ideal with defining polynomial (f1+1)...(fm+1)+1.

    With ``size_sorted`` the factors are multiplied smallest support first;
    the result is the same, only intermediate sizes change.  No generators
    gives the zero polynomial.
    """
    if not isinstance(sys, PolySystem):
        sys = PolySystem(sys, n)
    return BooleanIdeal(sys.n, combine(sys, size_sorted)[0])


def normal_form(g: BoolPoly, ideal: BooleanIdeal, h: BoolPoly | None = None) -> BoolPoly:
    """nf_h(g, f) = (f + 1) g + h, a representative constant on the coset g + I."""
    f = ideal.f
    f._check(g)
    if h is None:
        h = BoolPoly.zero(f.n)
    return (f + 1) * g + h


def contains(ideal: BooleanIdeal, g: BoolPoly) -> bool:
    ideal.f._check(g)
    return ((ideal.f + 1) * g).is_zero()


def colon(i: BooleanIdeal, j: BooleanIdeal) -> BooleanIdeal:
    """I : J, with defining polynomial 1 + g + fg; its variety is V(I) minus V(J)."""
    i._check(j)
    return BooleanIdeal(i.n, i.f * j.f + j.f + 1)


def ideal_sum(i: BooleanIdeal, j: BooleanIdeal) -> BooleanIdeal:
    i._check(j)
    return BooleanIdeal(i.n, (i.f + 1) * (j.f + 1) + 1)


def intersect(i: BooleanIdeal, j: BooleanIdeal) -> BooleanIdeal:
    """I ∩ J, which for boolean ideals coincides with the product IJ."""
    i._check(j)
    return BooleanIdeal(i.n, i.f * j.f)


product = intersect


EQUIVALENCE_LABELS = (
    "g in I",
    "J subset I",
    "V(I) subset V(J)",
    "V(f) subset V(g)",
    "f*h = g for some h",
    "f*g = g",
    "V(f) & V(g+1) empty",
    "(f+1)*g = 0",
    "nf_0(g,f) = 0",
    "nf_h(g,f) = h",
)


def equivalences_report(ideal: BooleanIdeal, g: BoolPoly, h: BoolPoly | None = None,
                        guard: int = DEFAULT_GUARD) -> list[bool]:
    """Evaluate each of the ten equivalent membership conditions separately.

    Every entry is computed by its own route; they must all agree.  The
    variety conditions use brute force and the mod-2 series projection, so
    ``n`` is bounded by ``guard``.
    """
    n = ideal.n
    check_guard(n, guard)
    f = ideal.f
    f._check(g)
    if h is None:
        h = BoolPoly.one(n)
    vf = variety_bruteforce(f, guard)
    vg = variety_bruteforce(g, guard)
    j = BooleanIdeal(n, g)

    # g vanishes at every point of V(I)
    in_ideal = all(evaluate(g, p) == 0 for p in vf)
    # J in I  <=>  I + J == I
    j_in_i = ideal_sum(ideal, j).f == f
    vi_in_vj = variety_mod2_projection(f, guard) <= variety_mod2_projection(g, guard)
    vf_in_vg = vf <= vg
    # witness h' = sum of separators over points where f = 1 and g = 1
    witness = BoolPoly.zero(n)
    for p in all_points(n):
        if evaluate(f, p) and evaluate(g, p):
            witness = witness + separator(p, n)
    factor_exists = f * witness == g
    fg_is_g = f * g == g
    disjoint = not (vf & variety_bruteforce(g + 1, guard))
    annihilated = ((f + 1) * g).is_zero()
    nf0 = normal_form(g, ideal).is_zero()
    nfh = normal_form(g, ideal, h) == h
    return [in_ideal, j_in_i, vi_in_vj, vf_in_vg, factor_exists, fg_is_g,
            disjoint, annihilated, nf0, nfh]
