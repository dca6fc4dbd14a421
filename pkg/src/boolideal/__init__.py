"""Groebner-free computation with boolean ideals in Z2[x1..xn]/(x_i^2 + x_i)."""

from .core import (
    DEFAULT_GUARD,
    BoolPoly,
    ConsistencyError,
    GuardExceeded,
    PolySystem,
    ProductReport,
    add,
    coords,
    evaluate,
    full_sum,
    monomial,
    mul,
    point,
    sat_product,
    variety_bruteforce,
)
from .duality import (
    Parity,
    factorize,
    inverse_variety,
    parity,
    particular_solution,
    phi,
    pol,
    points_to_poly,
    poly_to_points,
)
from .hilbert import (
    FineHilbertSeries,
    count_solutions,
    count_terms,
    separator,
    series_of_monomial_ideal,
    variety_explicit1,
    variety_explicit2,
    variety_mod2_projection,
)
from .ideal import (
    BooleanIdeal,
    colon,
    contains,
    defining_polynomial,
    ideal_sum,
    intersect,
    normal_form,
)
from .ingest import parse_dimacs, parse_poly, parse_system, stone_transform

__version__ = "0.1.0"
