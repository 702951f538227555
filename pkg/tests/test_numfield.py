import random

import pytest
from hypothesis import given, settings, strategies as st

from symaut import _poly
from symaut.numfield import (
    InexactDivision,
    NotMonic,
    NotTotallyReal,
    OrderError,
    Reducible,
    charpoly,
    exact_div,
    fundamental_unit_quadratic,
    is_unit,
    make_order,
    make_suborder,
    mul,
    norm,
    power,
    power_into_suborder,
    quadratic_order,
    regular_representation,
    search_unit,
    suborder_contains,
)

import oracles

SQRT2 = [-2, 0, 1]
CUBIC = [-1, -2, 1, 1]


@pytest.fixture(scope="module")
def Z2():
    return make_order(SQRT2)


@pytest.fixture(scope="module")
def Z7():
    return make_order(CUBIC)


def elements(order, lo=-9, hi=9):
    return st.lists(st.integers(lo, hi), min_size=order.degree, max_size=order.degree).map(order.element)


ORDERS = [make_order(SQRT2), make_order(CUBIC), make_order([1, -4, 0, 1]), make_order([1, 0, -4, 0, 1])]


class TestMakeOrder:
    def test_sqrt2(self, Z2):
        assert Z2.degree == 2
        assert Z2.irreducibility_verified

    def test_cubic(self, Z7):
        assert Z7.degree == 3
        assert oracles.real_root_count(CUBIC) == 3
        assert oracles.is_irreducible(CUBIC)

    def test_not_totally_real(self):
        with pytest.raises(NotTotallyReal):
            make_order([1, 0, 1])

    def test_not_monic(self):
        with pytest.raises(NotMonic):
            make_order([-2, 0, 2])

    def test_degree_too_small(self):
        with pytest.raises(OrderError):
            make_order([-2, 1])

    @pytest.mark.parametrize("coeffs", [
        [6, 0, -5, 0, 1],          # (x^2-2)(x^2-3), no rational root
        [1, -2, 1],                # repeated root
        [-6, 11, -6, 1],           # (x-1)(x-2)(x-3)
        [-2, 0, 21, 0, -12, 0, 1],  # (x^2-2)(x^4-10x^2+1)
    ])
    def test_reducible(self, coeffs):
        assert not oracles.is_irreducible(coeffs)
        with pytest.raises(Reducible):
            make_order(coeffs)

    def test_degree_seven_is_flagged_unverified(self):
        # prod_{k=-3}^{3} (x - k) - 1: seven real roots, irreducible
        p = [0, 1]
        for k in range(-3, 4):
            if k:
                p = _poly.poly_mul(p, [-k, 1])
        p[0] -= 1
        assert oracles.is_irreducible(p)
        order = make_order(p)
        assert order.degree == 7
        assert not order.irreducibility_verified


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=5))
def test_kronecker_agrees_with_sympy(low):
    p = low + [1]
    factor = _poly.find_monic_factor(p)
    assert (factor is None) == oracles.is_irreducible(p)
    if factor is not None:
        assert _poly.divides_exactly(factor, p) is not None


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-8, 8), min_size=2, max_size=6))
def test_sturm_count_agrees_with_sympy(low):
    p = low + [1]
    assert _poly.count_real_roots(p) == oracles.real_root_count(p)


class TestMul:
    def test_square(self, Z2):
        a = Z2.element((1, 1))
        assert mul(a, a) == Z2.element((3, 2))

    def test_identity(self, Z2):
        a = Z2.element((5, -7))
        assert mul(a, Z2.one()) == a

    def test_unit_pair(self, Z2):
        assert mul(Z2.element((1, 1)), Z2.element((-1, 1))) == Z2.one()

    def test_mismatched_orders(self, Z2, Z7):
        with pytest.raises(ValueError):
            mul(Z2.one(), Z7.one())

    @pytest.mark.parametrize("order", ORDERS, ids=lambda o: str(list(o.minpoly)))
    def test_against_polynomial_remainder(self, order):
        rng = random.Random(11)
        for _ in range(50):
            a = [rng.randint(-20, 20) for _ in range(order.degree)]
            b = [rng.randint(-20, 20) for _ in range(order.degree)]
            got = mul(order.element(a), order.element(b)).coeffs
            assert got == oracles.mul(list(order.minpoly), a, b)


@pytest.mark.parametrize("order", ORDERS[:3], ids=lambda o: str(list(o.minpoly)))
class TestRingAxioms:
    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_associative_commutative_distributive(self, order, data):
        a, b, c = (data.draw(elements(order)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_norm_multiplicative(self, order, data):
        a, b = data.draw(elements(order)), data.draw(elements(order))
        assert norm(a * b) == norm(a) * norm(b)


class TestRegularRepresentation:
    def test_one_is_identity(self, Z2):
        assert regular_representation(Z2.one()) == [[1, 0], [0, 1]]

    def test_theta_is_companion(self, Z2):
        assert regular_representation(Z2.theta()) == [[0, 2], [1, 0]]

    @pytest.mark.parametrize("order", ORDERS[:2], ids=lambda o: str(list(o.minpoly)))
    def test_multiplicative(self, order):
        rng = random.Random(5)
        for _ in range(100):
            a = order.element([rng.randint(-9, 9) for _ in range(order.degree)])
            b = order.element([rng.randint(-9, 9) for _ in range(order.degree)])
            ra, rb = regular_representation(a), regular_representation(b)
            prod = [[sum(ra[i][k] * rb[k][j] for k in range(order.degree))
                     for j in range(order.degree)] for i in range(order.degree)]
            assert regular_representation(a * b) == prod


class TestNormCharpoly:
    def test_examples(self, Z2):
        assert norm(Z2.element((1, 1))) == -1
        assert norm(Z2.one()) == 1
        assert norm(Z2.theta()) == -2

    @pytest.mark.parametrize("order", ORDERS, ids=lambda o: str(list(o.minpoly)))
    def test_charpoly_of_theta_is_minpoly(self, order):
        assert tuple(charpoly(order.theta())) == order.minpoly

    @pytest.mark.parametrize("order", ORDERS, ids=lambda o: str(list(o.minpoly)))
    def test_norm_matches_resultant_and_charpoly(self, order):
        rng = random.Random(3)
        d = order.degree
        for _ in range(30):
            v = [rng.randint(-9, 9) for _ in range(d)]
            a = order.element(v)
            assert norm(a) == oracles.norm(list(order.minpoly), v)
            assert norm(a) == (-1) ** d * charpoly(a)[0]


class TestUnits:
    def test_golden_unit(self, Z2):
        cert = is_unit(Z2.element((1, 1)))
        assert cert.inverse == Z2.element((-1, 1))
        assert cert.charpoly_constant == -1
        assert cert.check()

    def test_non_unit(self, Z2):
        assert is_unit(Z2.theta()) is None
        assert is_unit(Z2.zero()) is None

    def test_minus_one(self, Z2):
        cert = is_unit(-Z2.one())
        assert cert.inverse == -Z2.one()

    @pytest.mark.parametrize("order", ORDERS, ids=lambda o: str(list(o.minpoly)))
    def test_certificates_iff_norm_pm1(self, order):
        rng = random.Random(8)
        for _ in range(200):
            a = order.element([rng.randint(-3, 3) for _ in range(order.degree)])
            cert = is_unit(a)
            assert (cert is not None) == (abs(norm(a)) == 1)
            if cert is not None:
                assert a * cert.inverse == order.one()
                assert cert.check()


class TestFundamentalUnit:
    @pytest.mark.parametrize("D,expected", [(2, (1, 1)), (3, (2, 1)), (5, (2, 1)), (7, (8, 3))])
    def test_examples(self, D, expected):
        assert fundamental_unit_quadratic(D).element.coeffs == expected

    def test_d5_has_norm_minus_one(self):
        assert norm(fundamental_unit_quadratic(5).element) == -1

    @pytest.mark.parametrize("D", [d for d in range(2, 51) if oracles.squarefree(d)])
    def test_matches_pell_scan(self, D):
        cert = fundamental_unit_quadratic(D)
        assert cert.element.coeffs == oracles.pell_scan(D)
        assert cert.element * cert.inverse == cert.element.order.one()

    @pytest.mark.parametrize("D", [0, 1, 4, 8, 12, -3])
    def test_rejects(self, D):
        with pytest.raises(ValueError):
            fundamental_unit_quadratic(D)


class TestSearchUnit:
    def test_sqrt2_first(self, Z2):
        assert search_unit(Z2, 1).element == Z2.element((1, 1))

    def test_cubic_theta(self, Z7):
        assert search_unit(Z7, 1).element == Z7.theta()

    def test_bound_zero(self, Z2):
        assert search_unit(Z2, 0) is None

    def test_deterministic(self, Z7):
        a, b = search_unit(Z7, 2), search_unit(Z7, 2)
        assert a == b

    def test_never_pm_one(self):
        order = make_order([1, -4, 0, 1])
        cert = search_unit(order, 2)
        assert cert.element not in (order.one(), -order.one())
        assert abs(norm(cert.element)) == 1


class TestPower:
    def test_cube(self, Z2):
        assert power(Z2.element((1, 1)), 3) == Z2.element((7, 5))

    def test_zeroth(self, Z2):
        assert power(Z2.element((4, 9)), 0) == Z2.one()

    def test_negative_via_certificate(self, Z2):
        cert = is_unit(Z2.element((1, 1)))
        assert power(cert, -1) == Z2.element((-1, 1))
        assert power(cert, -3) * power(cert, 3) == Z2.one()

    def test_negative_without_certificate(self, Z2):
        with pytest.raises(ValueError):
            power(Z2.element((1, 1)), -1)

    @pytest.mark.parametrize("k", range(0, 12))
    def test_matches_repeated_multiplication(self, Z7, k):
        a = (2, -1, 1)
        assert power(Z7.element(a), k).coeffs == oracles.power(CUBIC, a, k)


class TestSuborder:
    def test_full_order(self, Z2):
        S = make_suborder(Z2, [[1, 0], [0, 1]])
        u = is_unit(Z2.element((1, 1)))
        assert S.index == 1
        assert power_into_suborder(u, S, 10) == (1, Z2.element((1, 1)))

    def test_index_two(self, Z2):
        S = make_suborder(Z2, [[1, 0], [0, 2]])
        u = is_unit(Z2.element((1, 1)))
        assert S.index == 2
        assert power_into_suborder(u, S, 10) == (2, Z2.element((3, 2)))
        assert not suborder_contains(S, Z2.theta())
        assert suborder_contains(S, Z2.element((5, -4)))

    def test_bound_exhausted(self, Z2):
        S = make_suborder(Z2, [[1, 0], [0, 7]])
        u = is_unit(Z2.element((1, 1)))
        assert power_into_suborder(u, S, 2) is None
        k, elt = power_into_suborder(u, S, 100)
        assert k <= 100 and suborder_contains(S, elt)

    def test_missing_one(self, Z2):
        with pytest.raises(ValueError):
            make_suborder(Z2, [[1, 1], [0, 2]])

    def test_not_closed(self, Z7):
        with pytest.raises(ValueError):
            make_suborder(Z7, [[1, 0, 0], [0, 1, 0], [0, 0, 2]])

    def test_singular(self, Z2):
        with pytest.raises(ValueError):
            make_suborder(Z2, [[1, 0], [2, 0]])


class TestExactDiv:
    def test_roundtrip(self, Z7):
        rng = random.Random(2)
        for _ in range(50):
            a = Z7.element([rng.randint(-9, 9) for _ in range(3)])
            b = Z7.element([rng.randint(-9, 9) for _ in range(3)])
            if b.is_zero():
                continue
            assert exact_div(a * b, b) == a

    def test_inexact(self, Z2):
        with pytest.raises(InexactDivision):
            exact_div(Z2.one(), Z2.theta())

    def test_zero(self, Z2):
        with pytest.raises(ZeroDivisionError):
            exact_div(Z2.one(), Z2.zero())


def test_quadratic_order_is_power_basis():
    assert quadratic_order(5).minpoly == (-5, 0, 1)


def test_format_element(Z2, Z7):
    assert str(Z2.element((4, 3))) == "4 + 3√2"
    assert str(Z2.element((17, -12))) == "17 - 12√2"
    assert str(Z2.element((0, -1))) == "-√2"
    assert str(Z7.element((-2, 1, 1))) == "-2 + θ + θ^2"
    assert str(Z7.zero()) == "0"
