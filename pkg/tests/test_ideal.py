import random

import pytest
from hypothesis import given

from boolideal import BoolPoly, PolySystem
from boolideal.core import point, variety_bruteforce
from boolideal.ideal import (
    EQUIVALENCE_LABELS, BooleanIdeal, colon, contains, defining_polynomial,
    equivalences_report, ideal_sum, intersect, normal_form,
)
from boolideal.ingest import parse_poly as P

from conftest import poly_pairs, poly_triples
import oracle

F = "x1*x2*x3 + x3 + 1"


@pytest.fixture
def I():
    return BooleanIdeal.of(P(F))


def test_normal_form_example(I):
    assert normal_form(P("x1*x3 + 1", 3), I) == P("x1*x3 + x3", 3)


def test_membership_examples(I):
    assert contains(I, P("x3 + 1", 3))
    assert P("x3 + 1", 3) in I
    assert not contains(I, P("x1*x3 + 1", 3))
    assert contains(I, BoolPoly.zero(3))
    assert contains(I, I.f)


def test_colon_examples(I):
    J = BooleanIdeal.of(P("x3 + 1", 3))
    assert colon(I, J).f == BoolPoly.one(3)
    ji = colon(J, I)
    assert ji.f == P("x1*x2*x3 + 1")
    assert variety_bruteforce(ji.f) == {point((1, 1, 1))}


def test_product_with_non_member_gives_member(I):
    g = P("x1*x3 + 1", 3)
    assert I.f * g == P("x3 + 1", 3)
    assert variety_bruteforce(g) == {point((1, 0, 1)), point((1, 1, 1))}


def test_sum_and_intersect_examples():
    a, b = BooleanIdeal.of(P("x1", 2)), BooleanIdeal.of(P("x2", 2))
    assert ideal_sum(a, b).f == P("x1*x2 + x1 + x2")
    assert intersect(a, b).f == P("x1*x2")
    assert ideal_sum(a, BooleanIdeal.unit(2)).is_unit()
    assert intersect(a, BooleanIdeal.full(2)).f.is_zero()


def test_defining_polynomial_examples():
    assert defining_polynomial([P("x1", 2), P("x2", 2)]).f == P("x1*x2 + x1 + x2")
    assert defining_polynomial([P("x1"), P("x1 + 1")]).is_unit()
    assert defining_polynomial([], n=3).f.is_zero()
    # the generator list printed beside the three-variable worked example
    gens = [P("x1*x2 + x3"), P("x1*x3 + x2", 3), P("x3 + 1", 3)]
    assert defining_polynomial(gens).f == P("x1*x2*x3 + 1")


def test_size_sorted_gives_same_result(rng):
    for _ in range(30):
        n = rng.randint(1, 7)
        gens = [BoolPoly([rng.randrange(1 << n) for _ in range(rng.randint(0, 6))], n)
                for _ in range(rng.randint(1, 5))]
        assert defining_polynomial(gens, n).f == defining_polynomial(gens, n, size_sorted=True).f


def test_mismatched_n_rejected():
    with pytest.raises(ValueError):
        ideal_sum(BooleanIdeal.unit(2), BooleanIdeal.unit(3))
    with pytest.raises(ValueError):
        BooleanIdeal(2, BoolPoly.one(3))


def test_equivalences_labels():
    assert len(EQUIVALENCE_LABELS) == 10


@given(poly_pairs(max_n=5))
def test_defining_polynomial_variety_is_common_zeros(fg):
    f, g = fg
    combined = defining_polynomial([f, g]).f
    assert variety_bruteforce(combined) == oracle.system_zeros([f.terms, g.terms], f.n)


@given(poly_triples())
def test_normal_form_well_defined_on_cosets(fgh):
    f, g, r = fgh
    ideal = BooleanIdeal.of(f)
    member = f * r
    assert contains(ideal, member)
    assert normal_form(g + member, ideal) == normal_form(g, ideal)


@given(poly_triples())
def test_normal_form_agrees_with_g_plus_h_on_variety(fgh):
    f, g, h = fgh
    nf = normal_form(g, BooleanIdeal.of(f), h)
    for p in oracle.zeros(f.terms, f.n):
        assert oracle.value(nf.terms, p) == oracle.value(g.terms, p) ^ oracle.value(h.terms, p)


@given(poly_pairs())
def test_ideal_operation_varieties(fg):
    f, g = fg
    i, j = BooleanIdeal.of(f), BooleanIdeal.of(g)
    vf, vg = oracle.zeros(f.terms, f.n), oracle.zeros(g.terms, g.n)
    assert oracle.zeros(ideal_sum(i, j).f.terms, f.n) == vf & vg
    assert oracle.zeros(intersect(i, j).f.terms, f.n) == vf | vg
    assert oracle.zeros(colon(i, j).f.terms, f.n) == vf - vg


@given(poly_pairs(max_n=5))
def test_equivalences_agree(fg):
    f, g = fg
    report = equivalences_report(BooleanIdeal.of(f), g)
    assert len(set(report)) == 1


def test_equivalences_on_members_are_all_true():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 6)
        f = BoolPoly([rng.randrange(1 << n) for _ in range(rng.randint(0, 6))], n)
        r = BoolPoly([rng.randrange(1 << n) for _ in range(rng.randint(0, 6))], n)
        assert all(equivalences_report(BooleanIdeal.of(f), f * r))


def test_membership_matches_vanishing_oracle(rng):
    for _ in range(100):
        n = rng.randint(1, 6)
        f = BoolPoly([rng.randrange(1 << n) for _ in range(rng.randint(0, 6))], n)
        g = BoolPoly([rng.randrange(1 << n) for _ in range(rng.randint(0, 6))], n)
        expected = all(oracle.value(g.terms, p) == 0 for p in oracle.zeros(f.terms, n))
        assert contains(BooleanIdeal.of(f), g) == expected


def test_polysystem_dimension_check():
    with pytest.raises(ValueError):
        PolySystem([P("x1"), P("x1", 2)])
