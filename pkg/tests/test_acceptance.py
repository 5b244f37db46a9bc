"""Acceptance suite. Run with pytest; a PASS/FAIL line per criterion is printed at the end.

    python tests/test_acceptance.py
"""

import math
import time

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from oracles import brute_apery, brute_factorizations, brute_gaps, brute_pf, members_up_to, expected_leading_set
from semigroup_forge import (
    Binomial,
    TermOrder,
    apery,
    buchberger,
    closed_apery_e4,
    closed_apery_e5,
    closed_pf_e4,
    closed_pf_e5,
    contains,
    family,
    gastinger_check,

    minimality_check,
    mu_and_betti_degrees,
    new_semigroup,
    pseudo_frobenius,
    q5_generator_set,
    toric_ideal_generators,
)
from semigroup_forge.semigroup import genus
from semigroup_forge.poly import check_homogeneous, is_groebner, s_polynomial, normal_form
from semigroup_forge.presentation import factorizations, ideals_equal

E4 = [(n - 3, n) for n in range(5, 11)]  # (i, n)
E5 = [(2, 8), (3, 10)]
MANY = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def generic_apery(params):
    return apery(params.semigroup, params.m0).as_set()


# -- 1 -----------------------------------------------------------------------------

AC1 = pytest.mark.criterion(1, "Apery closed forms, e=4 n=5..10 and e=5 n=8,10")


@AC1
@pytest.mark.parametrize("i,n", E4)
def test_ac1_apery_e4(i, n):
    p = family(4, i)
    assert p.n == n
    closed, dt = timed(closed_apery_e4, p)
    generic, dt2 = timed(generic_apery, p)
    assert closed == generic
    assert len(closed) == n * n + 2 * n
    assert dt + dt2 < 1.0


@AC1
@pytest.mark.parametrize("i,n,size", [(2, 8, 89), (3, 10, 131)])
def test_ac1_apery_e5(i, n, size):
    p = family(5, i)
    assert p.n == n
    closed, dt = timed(closed_apery_e5, p)
    generic, dt2 = timed(generic_apery, p)
    assert closed == generic
    assert len(closed) == n * n + 3 * n + 1 == size
    assert dt + dt2 < 1.0


# -- 2 -----------------------------------------------------------------------------

AC2 = pytest.mark.criterion(2, "pseudo-Frobenius sets and type, e=4 n=5..10 and e=5 n=8,10")


@AC2
@pytest.mark.parametrize("i,n", E4)
def test_ac2_pf_e4(i, n):
    p = family(4, i)
    start = time.perf_counter()
    closed = closed_pf_e4(p)
    generic = pseudo_frobenius(p.semigroup)
    assert closed == frozenset(generic.pseudo_frobenius)
    assert generic.type == 2 * n
    assert time.perf_counter() - start < 1.0


@AC2
def test_ac2_type_strictly_increasing_e4():
    types = [pseudo_frobenius(family(4, i).semigroup).type for i, _ in E4]
    assert types == [10, 12, 14, 16, 18, 20]
    assert all(a < b for a, b in zip(types, types[1:]))


@AC2
def test_ac2_pf_e5_n8_brute_force_first():
    p = family(5, 2)
    brute = brute_pf(p.generators)
    assert sorted(pseudo_frobenius(p.semigroup).pseudo_frobenius) == brute
    assert sorted(closed_pf_e5(p)) == brute
    assert len(brute) == 15


@AC2
@pytest.mark.parametrize("i,n,t", [(2, 8, 15), (3, 10, 18)])
def test_ac2_pf_e5(i, n, t):
    p = family(5, i)
    start = time.perf_counter()
    closed = closed_pf_e5(p)
    generic = pseudo_frobenius(p.semigroup)
    assert closed == frozenset(generic.pseudo_frobenius)
    assert generic.type == 3 * n // 2 + 3 == t
    assert time.perf_counter() - start < 1.0


# -- 3 -----------------------------------------------------------------------------

AC3 = pytest.mark.criterion(3, "Gastinger certification of the e=5 set, n=8 and n=10")


@AC3
@pytest.mark.parametrize("i,n,m0", [(2, 8, 89), (3, 10, 131)])
def test_ac3_gastinger(i, n, m0):
    p = family(5, i)
    q = list(q5_generator_set(p).values())
    result, dt = timed(gastinger_check, q, p.generators, 0, TermOrder.lex(5))
    assert result.certified
    assert result.count == m0 == p.m0
    g_set, h = expected_leading_set(n)
    assert set(result.basis.leading_monomials()) == g_set | {h}
    assert dt < 10.0


# -- 4 -----------------------------------------------------------------------------

AC4 = pytest.mark.criterion(4, "mu at e=5 via minimality check: 19 and 22")


@AC4
@pytest.mark.parametrize("i,n,mu", [(2, 8, 19), (3, 10, 22)])
def test_ac4_mu_e5(i, n, mu):
    p = family(5, i)
    start = time.perf_counter()
    q = list(q5_generator_set(p).values())
    assert minimality_check(p.generators, q)
    report = mu_and_betti_degrees(p.generators, q)
    assert report.mu == len(q) == mu
    assert mu >= n + 2
    assert time.perf_counter() - start < 60.0


# -- 5 -----------------------------------------------------------------------------

AC5 = pytest.mark.criterion(5, "mu at e=4 from scratch: 2(n+1) for n=5,6,7")


@AC5
def test_ac5_mu_e4_from_scratch():
    start = time.perf_counter()
    for i, n in ((2, 5), (3, 6), (4, 7)):
        gens = family(4, i).generators
        for strategy in ("saturation", "elimination"):
            raw = toric_ideal_generators(gens, strategy)
            assert mu_and_betti_degrees(gens, raw).mu == 2 * (n + 1)
    assert time.perf_counter() - start < 300.0


# -- 6 -----------------------------------------------------------------------------

AC6 = pytest.mark.criterion(6, "saturation and elimination give the same ideal")


@AC6
def test_ac6_strategies_agree():
    start = time.perf_counter()
    for gens in ((2, 3), (3, 4, 5), (4, 9, 11), family(4, 2).generators):
        a = toric_ideal_generators(gens, "saturation")
        b = toric_ideal_generators(gens, "elimination")
        assert ideals_equal(a, b, gens)
    assert time.perf_counter() - start < 60.0


# -- 7 -----------------------------------------------------------------------------

AC7 = pytest.mark.criterion(7, "randomized property suites, 1000 cases each")

small_gens = st.lists(st.integers(2, 30), min_size=1, max_size=4).filter(
    lambda g: math.gcd(*g) == 1
)


@AC7
@MANY
@given(small_gens, st.data())
def test_ac7_apery_cardinality(gens, data):
    sg = new_semigroup(gens)
    a = data.draw(st.integers(1, 40).filter(lambda x: contains(sg, x)))
    table = apery(sg, a)
    assert len(table) == a
    assert sorted(table.entries) == sorted(brute_apery(gens, a))
    assert len({w % a for w in table.entries}) == a


@AC7
@MANY
@given(small_gens, st.integers(0, 400))
def test_ac7_membership_matches_knapsack(gens, x):
    assert contains(new_semigroup(gens), x) == members_up_to(gens, x)[x]


@AC7
@MANY
@given(small_gens)
def test_ac7_pf_definition(gens):
    sg = new_semigroup(gens)
    pf = pseudo_frobenius(sg).pseudo_frobenius
    assert list(pf) == brute_pf(gens)
    for f in pf:
        assert not contains(sg, f)
        assert all(contains(sg, f + g) for g in sg.generators)


@AC7
@MANY
@given(small_gens)
def test_ac7_selmer_genus(gens):
    g, _ = brute_gaps(gens)
    assert genus(new_semigroup(gens)) == len(g)


exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
binomials = st.lists(st.tuples(exps, exps).filter(lambda t: t[0] != t[1]), min_size=1, max_size=4)
orders = st.sampled_from(["lex", "grevlex", "weighted"])


def _order(kind):
    if kind == "lex":
        return TermOrder.lex(3)
    if kind == "grevlex":
        return TermOrder.weighted((1, 1, 1), "revlex")
    return TermOrder.weighted((3, 1, 2), "lex")


@AC7
@MANY
@given(binomials, orders)
def test_ac7_buchberger_confluence(pairs, kind):
    order = _order(kind)
    fs = [Binomial.make(u, v, order) for u, v in pairs]
    gb = list(buchberger(fs, order))
    assert is_groebner(gb, order)
    for k, f in enumerate(gb):
        for g in gb[k + 1:]:
            assert normal_form(s_polynomial(f, g, order), gb, order) is None
    for f in fs:
        assert normal_form(f, gb, order) is None


@st.composite
def homogeneous_binomials(draw):
    gens = draw(st.lists(st.integers(2, 12), min_size=3, max_size=3, unique=True).filter(
        lambda g: math.gcd(*g) == 1))
    out = []
    for _ in range(draw(st.integers(1, 4))):
        s = draw(st.integers(1, 40))
        facts = brute_factorizations(gens, s)
        if len(facts) >= 2:
            u, v = draw(st.lists(st.sampled_from(facts), min_size=2, max_size=2, unique=True))
            out.append(Binomial(u, v))
    return gens, out


@AC7
@MANY
@given(homogeneous_binomials(), orders)
def test_ac7_homogeneity_preserved(case, kind):
    gens, fs = case
    if not fs:
        return
    order = _order(kind)
    gb = list(buchberger(fs, order))
    check_homogeneous(gb, gens)
    for f in gb:
        if f.tail is not None:
            assert len(set(f.weighted_degrees(gens))) == 1


# -- 8 -----------------------------------------------------------------------------

AC8 = pytest.mark.criterion(8, "classic fixtures: F<2,3>=1, PF<3,4,5>={1,2}, mu<3,4,5>=3")


@AC8
def test_ac8_fixtures():
    start = time.perf_counter()
    assert pseudo_frobenius(new_semigroup([2, 3])).frobenius == 1
    assert pseudo_frobenius(new_semigroup([3, 4, 5])).pseudo_frobenius == (1, 2)
    raw = toric_ideal_generators((3, 4, 5))
    assert mu_and_betti_degrees((3, 4, 5), raw).mu == 3
    assert time.perf_counter() - start < 1.0


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider", "-W", "ignore::pytest.PytestAssertRewriteWarning"]))
