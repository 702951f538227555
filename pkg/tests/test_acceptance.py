"""Acceptance criteria 1-8, each logged as one PASS/FAIL line in the terminal summary."""
import random
from math import isqrt

from symaut import matforms
from symaut.construct import forge, quad_conjugate_construction
from symaut.finmodel import (
    check_big_diagonal,
    check_bijective,
    check_delta_prime,
    check_descent,
    make_model,
    naturality_probe,
)
from symaut.matforms import (
    OrderMatrix,
    apply_perm,
    circulant,
    det,
    det_closed_form,
    recognize_symmetric_form,
)
from symaut.numfield import fundamental_unit_quadratic, make_order, norm, quadratic_order

import oracles

Z2 = quadratic_order(2)
CUBIC = [-1, -2, 1, 1]
Z7 = make_order(CUBIC)


def squarefree(D):
    return all(D % (p * p) for p in range(2, isqrt(D) + 1))


def test_criterion_1_conjugate_pairs(criterion):
    with criterion(1, "conjugate-pair units in Z[√2], i = 1..6", limit=1):
        for i in range(1, 7):
            f, g = quad_conjugate_construction(2, i)
            assert (f - g).coeffs == oracles.power([-2, 0, 1], (1, -1), i)
            assert (f + g).coeffs == oracles.power([-2, 0, 1], (1, 1), i)
            assert norm(f - g) in (1, -1) and norm(f + g) in (1, -1)


def test_criterion_2_forge_sqrt2(criterion):
    with criterion(2, "forge d=2 n=2 golden values", limit=1):
        cert = forge(Z2, 2)
        assert cert.alpha.element == Z2.element((1, 1))
        assert (cert.i, cert.j) == (3, 1)
        assert cert.f == Z2.element((4, 3)) and cert.g == Z2.element((3, 2))
        assert cert.det_value == Z2.element((17, 12))
        assert norm(cert.det_value) == 1
        # independent recomputation
        assert oracles.first_repeat_mod([-2, 0, 1], (1, 1), 2) == (3, 1)
        assert oracles.power([-2, 0, 1], (1, 1), 3) == (cert.f + cert.g).coeffs
        assert oracles.norm([-2, 0, 1], cert.det_value.coeffs) == 1
        again = forge(Z2, 2)
        assert (again.f, again.g, again.det_value) == (cert.f, cert.g, cert.det_value)
        assert cert.passed


def test_criterion_3_forge_cubic(criterion):
    with criterion(3, "forge d=3, n = 2, 3", limit=10):
        for n in (2, 3):
            cert = forge(Z7, n)
            assert not cert.g.is_zero()
            for key in ("divisibility_exact", "f_plus_g_relation", "f_minus_g_relation",
                        "det_elimination", "det_closed_form", "det_inverse"):
                assert cert.checks[key], key
            assert oracles.norm(CUBIC, cert.det_value.coeffs) in (1, -1)
            assert cert.det_value * cert.det_inverse == Z7.one()
            assert cert.i <= n ** 3 + 1
            assert cert.passed


def test_criterion_4_det_identity(criterion):
    with criterion(4, "circulant determinant closed form, 1000 pairs per order", limit=30):
        rng = random.Random(20241017)
        for order in (Z2, Z7):
            for _ in range(1000):
                f = order.element([rng.randint(-9, 9) for _ in range(order.degree)])
                g = order.element([rng.randint(-9, 9) for _ in range(order.degree)])
                for n in (2, 3, 4, 5):
                    assert det(circulant(f, g, n), "bareiss") == det_closed_form(f, g, n)


def test_criterion_5_descent_exhaustive(criterion):
    with criterion(5, "exhaustive descent on forged certificates", limit=60):
        cert = forge(Z2, 2)
        for m in (2, 3, 5):
            model = make_model(Z2, m)
            assert check_bijective(model, cert.matrix)
            for check in (check_descent, check_big_diagonal):
                rep = check(model, cert.matrix, "exhaustive")
                assert rep.passed and rep.mode == "exhaustive", rep.to_text()
        assert check_descent(make_model(Z2, 5), cert.matrix).checked == 625 * 2
        rep = check_delta_prime(make_model(Z2, 2), forge(Z2, 3).matrix, "exhaustive")
        assert rep.passed and rep.mode == "exhaustive", rep.to_text()


def test_criterion_6_negative_controls(criterion):
    with criterion(6, "negative controls and naturality probe"):
        one, alpha = Z2.one(), Z2.element((1, 1))
        rep = check_descent(make_model(Z2, 5), matforms.diagonal([one, alpha]))
        assert not rep.passed
        assert rep.counterexample == {"x": [[1, 0], [0, 0]], "tau": [2, 1],
                                      "F(x)": [[1, 0], [0, 0]], "F(tau.x)": [[0, 0], [1, 1]]}
        upper = OrderMatrix([[one, Z2.theta()], [Z2.zero(), one]])
        assert not check_big_diagonal(make_model(Z2, 5), upper).passed

        # every certificate forged in this suite
        forged = {"d=2 n=2": forge(Z2, 2), "d=2 n=3": forge(Z2, 3),
                  "d=3 n=2": forge(Z7, 2), "d=3 n=3": forge(Z7, 3)}
        positives = []
        for name, cert in forged.items():
            for m in (2, 5):
                probe = naturality_probe(make_model(cert.order, m), cert.matrix)
                if probe.natural:
                    g_mod = [c % m for c in cert.g.coeffs]
                    positives.append(f"{name} m={m} (g mod m = {g_mod}, witness {probe.witness})")
        assert not positives, "naturality probe positive for " + "; ".join(positives)


def test_criterion_7_recognizer(criterion):
    with criterion(7, "recognizer round trip and perturbations", limit=10):
        rng = random.Random(7)
        recovered = rejected = 0
        while recovered < 500:
            order = rng.choice((Z2, Z7))
            n = rng.randint(2, 5)
            f = order.element([rng.randint(-9, 9) for _ in range(order.degree)])
            g = order.element([rng.randint(-9, 9) for _ in range(order.degree)])
            if f == g:
                continue
            sigma = tuple(rng.sample(range(n), n))
            M = apply_perm(sigma, circulant(f, g, n))
            form = recognize_symmetric_form(M)
            if n == 2 and sigma == (1, 0):
                # diagonal read as f, so the swap is absorbed into (f, g)
                assert (form.sigma, form.f, form.g) == ((0, 1), g, f)
            else:
                assert (form.sigma, form.f, form.g) == (sigma, f, g)
            assert form.matrix() == M
            recovered += 1

            r, c = rng.randrange(n), rng.randrange(n)
            e = order.zero()
            while e.is_zero():
                e = order.element([rng.randint(-3, 3) for _ in range(order.degree)])
            rows = [list(row) for row in M.rows]
            rows[r][c] = rows[r][c] + e
            assert recognize_symmetric_form(OrderMatrix(rows)) is None
            rejected += 1
        assert rejected == 500


def test_criterion_8_pell(criterion):
    with criterion(8, "fundamental units for squarefree 2 <= D <= 50", limit=10):
        for D in filter(squarefree, range(2, 51)):
            cert = fundamental_unit_quadratic(D)
            assert cert.element.coeffs == oracles.pell_scan(D), D
            assert cert.element * cert.inverse == cert.element.order.one()
