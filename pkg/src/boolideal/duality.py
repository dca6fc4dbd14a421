"""Point sets versus polynomials: pol, the phi map, factorization, parity."""

from __future__ import annotations

import enum
from typing import Iterable

from .core import (
    DEFAULT_GUARD,
    BoolPoly,
    ConsistencyError,
    PolySystem,
    all_points,
    check_guard,
    evaluate,
    full_sum,
    mono_key,
    sat_product,
    sort_points,
    variety_bruteforce,
)
from .hilbert import separator
from .ideal import defining_polynomial


def points_to_poly(points: Iterable[int], n: int) -> BoolPoly:
    """x^{p1, ..., ps} = x^p1 + ... + x^ps."""
    pts = frozenset(points)
    return BoolPoly(pts, n)


def poly_to_points(f: BoolPoly) -> frozenset[int]:
    """Log(f): the exponents of the support, read as points."""
    return f.terms


def point_poly(p: int, n: int) -> BoolPoly:
    """pol({p}) = 1 + prod_i (x_i + p_i + 1), vanishing only at ``p``."""
    acc = BoolPoly.one(n)
    for i in range(n):
        xi = BoolPoly.var(i + 1, n)
        acc = acc * (xi if p >> i & 1 else xi + 1)
    return acc + 1


def _times_point_poly(f: BoolPoly, p: int) -> BoolPoly:
    # f * pol({p}) = f + f*S_p = f + f(p) S_p, since S_p is the indicator of p
    if evaluate(f, p):
        return f + separator(p, f.n)
    return f


def pol(omega: Iterable[int], n: int) -> BoolPoly:
    """The unique boolean polynomial whose zero set is ``omega``.

    Defined as the product of the point polynomials pol({p}); multiplying by
    pol({p}) only toggles S_p in or out, which keeps this linear in |omega|.
    """
    pts = sort_points(set(omega))
    if not pts:
        return BoolPoly.one(n)
    acc = point_poly(pts[0], n)
    for p in pts[1:]:
        acc = _times_point_poly(acc, p)
    return acc


def phi(f: BoolPoly, guard: int = DEFAULT_GUARD) -> BoolPoly:
    """phi(f) = x^{V(f)}."""
    return points_to_poly(variety_bruteforce(f, guard), f.n)


def phi_square_check(f: BoolPoly, guard: int = DEFAULT_GUARD) -> BoolPoly:
    """f + (sum of all monomials) + 1, checked against phi(phi(f))."""
    expected = f + full_sum(f.n, guard) + 1
    got = phi(phi(f, guard), guard)
    if got != expected:
        raise ConsistencyError(f"phi^2({f}) = {got}, expected {expected}")
    return expected


def vanishing_dual(f: BoolPoly, guard: int = DEFAULT_GUARD) -> frozenset[int]:
    """V(x^{V(f)}): the complement of Log(f) with the origin toggled per 1 in supp(f)."""
    got = variety_bruteforce(phi(f, guard), guard)
    complement = frozenset(all_points(f.n)) - f.terms
    expected = complement | {0} if 0 in f.terms else complement - {0}
    if got != expected:
        raise ConsistencyError(f"V(phi({f})) disagrees with Log(f)^c adjusted at 0")
    return got


def inverse_variety(points: Iterable[int], n: int, guard: int = DEFAULT_GUARD) -> BoolPoly:
    """The unique g with V(g) = ``points``.

    Dual route: a target set P is Log(f)^c with the origin toggled, for
    f = x^{P^c xor {0}}; then g = x^{V(f)}.  The result is cross-checked
    against pol(P).
    """
    check_guard(n, guard)
    target = frozenset(points)
    f = points_to_poly((frozenset(all_points(n)) - target) ^ {0}, n)
    g = phi(f, guard)
    if g != pol(target, n):
        raise ConsistencyError("dual-route inverse variety disagrees with pol")
    return g


def variety_via_inverse(f: BoolPoly, guard: int = DEFAULT_GUARD) -> frozenset[int]:
    """V(f) = Log(sum of all monomials + g + 1) where g vanishes exactly on Log(f)."""
    g = inverse_variety(f.terms, f.n, guard)
    return poly_to_points(full_sum(f.n, guard) + g + 1)


def factorize(f: BoolPoly, guard: int = DEFAULT_GUARD) -> list[BoolPoly]:
    """[pol({p}) for p in V(f)], ordered by the points; their product is f."""
    return [point_poly(p, f.n) for p in sort_points(variety_bruteforce(f, guard))]


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


def parity(f: BoolPoly) -> Parity:
    """Parity of |V(f)|: odd exactly when x1*...*xn is in the support (n >= 1)."""
    if f.n < 1:
        raise ValueError("parity rule needs at least one variable")
    return Parity.ODD if (1 << f.n) - 1 in f.terms else Parity.EVEN


def system_parity(sys: PolySystem) -> Parity:
    """Parity of the solution count, read from the product support.

    For n >= 1 the combined polynomial (f1+1)...(fm+1)+1 differs from the
    product only in the constant, so its top monomial is the product's.  The
    product is expanded per group of generators sharing variables, so the
    full expansion is never built for systems that split.
    """
    if sys.n < 1:
        raise ValueError("parity rule needs at least one variable")
    rep = sat_product(sys)
    if not rep.satisfiable:
        return Parity.EVEN
    return Parity.ODD if rep.full_monomial else Parity.EVEN


def particular_solution(sys: PolySystem) -> int | None:
    """A solution read off the support of (f1+1)...(fm+1)+1, or None.

    No constant term: the origin is a solution.  Otherwise any non-unit
    support monomial x^a whose only submonomial in the support is 1 gives
    the solution a; the smallest in degree-then-lex order is taken.
    """
    f = defining_polynomial(sys).f
    if 0 not in f.terms:
        return 0
    support = f.terms
    for a in sorted(support - {0}, key=mono_key):
        if not any(b != a and b != 0 and b & a == b for b in support):
            return a
    return None
