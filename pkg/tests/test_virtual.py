from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import distinct_rationals, monic_polys, rationals
from vroots.checks import (
    check_interlacing,
    check_point_rule,
    check_pstar_membership,
    check_sign_property,
    check_thom_order,
)
from vroots.oracle import hyperbolic
from vroots.poly import Poly
from vroots.realalg import NEG_INF, POS_INF, Order, RealAlgebraic, compare_ext, from_rational, real_roots
from vroots.virtual import (
    RthTower,
    ThomTower,
    all_codes,
    all_rth_roots,
    f_nonempty,
    format_signs,
    g_interval,
    parse_signs,
    provenance,
    rth_root,
    thom_rho,
    thom_tau,
    u_nonempty,
)

X = Poly.x()
SQRT2 = RealAlgebraic(X ** 2 - 2, 1, 2)


def _eq(a, b):
    return compare_ext(a, b) == Order.EQ


def _q(v):
    return from_rational(v)


def test_sign_list_helpers():
    assert parse_signs("+--") == (1, -1, -1)
    assert parse_signs("--", implicit_head=True) == (1, -1, -1)
    assert parse_signs("[+,-]") == (1, -1)
    assert format_signs((1, 1, -1)) == "[+,+,-]"
    assert list(all_codes(2)) == [(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)]
    with pytest.raises(ValueError):
        parse_signs("-+")
    with pytest.raises(ValueError):
        parse_signs("+x")


def test_rth_examples():
    assert _eq(rth_root((X - 1) * (X - 2) * (X - 3), 2).value, _q(2))
    assert _eq(rth_root(X ** 2 + 1, 1).value, _q(0))
    assert _eq(rth_root(X ** 2 + 1, 2).value, _q(0))
    assert rth_root(X ** 2 + 1, 0).value is NEG_INF
    assert rth_root(X ** 2 + 1, 3).value is POS_INF
    for a in (Fraction(1, 4), 2, 9):
        assert _eq(rth_root(X ** 2 - a, 2).value, real_roots(X ** 2 - a)[1])


def test_all_rth_examples():
    assert [r.value for r in all_rth_roots(X - 5)] == [_q(5)]
    got = [r.value for r in all_rth_roots(X ** 2 * (X ** 2 - 4))]
    assert all(_eq(g, _q(e)) for g, e in zip(got, [-2, 0, 0, 2]))
    assert all(_eq(r.value, _q(0)) for r in all_rth_roots(X ** 2 + 1))


def test_tau_examples():
    a = Fraction(7, 3)
    assert _eq(thom_tau(X - a, (1, -1), 1), _q(a))
    assert thom_tau(X - a, (1, -1), -1) is NEG_INF
    assert thom_tau(X - a, (1, 1), 1) is POS_INF
    assert _eq(thom_tau(X ** 2 - 2, (1, 1, 1), -1), SQRT2)
    with pytest.raises(ValueError):
        thom_tau(X - a, (1, -1), 0)


def test_rho_examples():
    a = Fraction(-5, 2)
    assert _eq(thom_rho(X - a, (1,)).value, _q(a))
    for a in (Fraction(-3), Fraction(0), Fraction(2), Fraction(9, 4)):
        v = thom_rho(X ** 2 - a, (1, 1)).value
        if a <= 0:
            assert _eq(v, _q(0))
        else:
            assert _eq(v, real_roots(X ** 2 - a)[1])
    roots = [Fraction(3), Fraction(-1, 2), Fraction(7, 5)]
    assert _eq(thom_rho(hyperbolic(roots), (1, -1, 1)).value, _q(min(roots)))


def test_g_interval_examples():
    a = Fraction(4)
    left, right = g_interval(X - a, (1, 1))
    assert _eq(left, _q(a)) and right is POS_INF
    left, right = g_interval(X - a, (1, -1))
    assert left is NEG_INF and _eq(right, _q(a))


def test_membership_examples():
    # x <= 0 and P >= 0 on (-inf, 0]; with P <= 0 instead the set is empty
    assert f_nonempty(X ** 2 + 1, (1, -1, 1))
    assert not f_nonempty(X ** 2 + 1, (1, -1, -1))
    assert not u_nonempty(X ** 2 + 1, (1, 1, -1))
    cubic = (X - 1) * (X - 2) * (X - 3)
    # brute force: the sign patterns realized weakly on a fine grid
    tower = ThomTower(cubic).tower
    samples = [Fraction(k, 64) for k in range(-64 * 5, 64 * 8)]
    realized = set()
    for x in samples:
        s = [tower[i].sign_at(x) for i in (1, 2, 3)]
        for code in all_codes(3):
            if all(v == 0 or v == c for v, c in zip(s, code[1:])):
                realized.add(code)
    assert {c for c in all_codes(3) if f_nonempty(cubic, c)} == realized


def test_provenance_examples():
    p = (X - 1) * (X - 2) * (X - 4)
    assert all(r.level == 3 for r in all_rth_roots(p))
    # the middle root of (x-1)(x-2)(x-3) is also the zero of P^[1]
    assert [r.level for r in all_rth_roots((X - 1) * (X - 2) * (X - 3))] == [3, 1, 3]
    root = thom_rho(X ** 2 + 1, (1, 1))
    assert _eq(root.value, _q(0)) and root.level == 1
    assert provenance(X ** 2 + 1, root) == 1
    assert provenance(p, rth_root(p, 0)) is None


def test_cubic_thom_roots():
    p = (X - 1) * (X - 2) * (X - 3)
    want = {(1, 1, 1): (3, 3), (1, 1, -1): (2, 1), (1, -1, 1): (1, 3), (1, -1, -1): (2, 1)}
    th = ThomTower(p)
    for code, (value, level) in want.items():
        r = th.root(code)
        assert _eq(r.value, _q(value)) and r.level == level


def test_degree_one_thom():
    th = ThomTower(X + 3)
    assert _eq(th.root((1,)).value, _q(-3))
    with pytest.raises(ValueError):
        th.root((1, 1))


def test_non_monic_rejected():
    with pytest.raises(ValueError):
        RthTower(2 * X)
    with pytest.raises(ValueError):
        ThomTower(Poly((1,)))


@given(monic_polys(max_degree=6))
def test_interlacing(p):
    assert check_interlacing(p) == []


@given(monic_polys(max_degree=6))
def test_sign_property(p):
    assert check_sign_property(p) == []


@given(monic_polys(max_degree=5))
def test_roots_of_pstar(p):
    assert check_pstar_membership(p) == []


@given(distinct_rationals(1, 6))
def test_hyperbolic_specialization(roots):
    p = hyperbolic(roots)
    got = [r.value for r in all_rth_roots(p)]
    assert all(_eq(g, _q(e)) for g, e in zip(got, sorted(roots)))
    d = len(roots)
    th = ThomTower(p)
    assert _eq(th.rho((1,) * d), _q(max(roots)))
    assert _eq(th.rho(tuple((-1) ** i for i in range(d))), _q(min(roots)))


@given(monic_polys(max_degree=5))
def test_every_actual_root_is_some_rth_root(p):
    values = [r.value for r in all_rth_roots(p)]
    for z in real_roots(p):
        assert any(_eq(v, z) for v in values)


@given(monic_polys(max_degree=5))
def test_thom_order_rule(p):
    assert check_thom_order(p) == []


@given(monic_polys(max_degree=5), st.lists(rationals, min_size=1, max_size=5))
def test_thom_point_rule(p, points):
    assert check_point_rule(p, points) == []


@given(monic_polys(max_degree=5))
def test_recursion_consistency(p):
    th = ThomTower(p)
    rt = RthTower(p)
    d = p.degree
    for code in all_codes(d - 1):
        left, right = th.tau(code, -1), th.tau(code, 1)
        v = th.rho(code)
        assert compare_ext(left, v) <= 0 <= compare_ext(right, v)
    for j in range(1, d + 1):
        v = rt.value(j)
        assert compare_ext(rt.value(j - 1, d - 1), v) <= 0 <= compare_ext(rt.value(j, d - 1), v)


@given(monic_polys(max_degree=5))
def test_g_interval_splits(p):
    # G of P' coded by sigma is the union of the two G of P coded by its extensions
    th = ThomTower(p)
    d = p.degree
    for sigma in all_codes(d - 1):
        s = sigma[-1]
        left = sigma + (-s,)
        right = sigma + (s,)
        assert _eq(th.tau(left, -1), th.tau(sigma, -1))
        assert _eq(th.tau(left, 1), th.tau(right, -1))
        assert _eq(th.tau(right, 1), th.tau(sigma, 1))


@given(st.lists(st.integers(-6, 6), min_size=3, max_size=4))
def test_incompatible_actual_codes(roots):
    # two consecutive simple roots cannot give the derivative the same sign
    p = hyperbolic(roots)
    th = ThomTower(p)
    d = p.degree
    actual = {c for c in all_codes(d - 1) if th.root(c).level == d}
    pairs = {3: [((1, -1, -1), (1, 1, -1))], 4: [((1, -1, 1, 1), (1, -1, -1, 1)), ((1, 1, -1, -1), (1, 1, 1, -1))]}
    for a, b in pairs[d]:
        assert not (a in actual and b in actual)
