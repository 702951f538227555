"""Constructing nonnatural symmetric-condition automorphisms of X^n.

The pipeline: pick a unit alpha of the order (moved into a suborder by a
power if asked), find exponents i > j >= 1 whose powers agree coordinatewise
mod n, solve

    f + (n-1) g = alpha^i,     f - g = alpha^j

for f, g (the divisions by n are exact by the congruence), and assemble
F = P_sigma @ circulant(f, g, n).  Its determinant
(f - g)^(n-1) (f + (n-1) g) is a product of units, so F is invertible over
the order, and g != 0 keeps F out of the natural form.
"""

from dataclasses import dataclass, field

from . import matforms
from .numfield import (
    InexactDivision,
    OrderElement,
    is_unit,
    mul,
    power,
    power_into_suborder,
    search_unit,
    suborder_contains,
    fundamental_unit_quadratic,
)


class ConstructionError(RuntimeError):
    pass


class UnitNotFound(ConstructionError):
    pass


class SuborderPowerNotFound(ConstructionError):
    pass


class ZeroG(ConstructionError):
    pass


class ParityFailure(ConstructionError):
    pass


class CheckFailed(ConstructionError):
    pass


@dataclass
class AutomorphismCertificate:
    order: object
    n: int
    alpha: object
    i: int
    j: int
    f: OrderElement
    g: OrderElement
    sigma: tuple
    matrix: object
    det_value: OrderElement
    det_inverse: OrderElement
    checks: dict = field(default_factory=dict)
    unverified_assumptions: list = field(default_factory=list)
    suborder: object = None

    @property
    def passed(self):
        return bool(self.checks) and all(self.checks.values())


def pigeonhole_exponents(alpha, n, order=None, coordinates=None):
    """Least (i, j), 1 <= j < i, with alpha^i == alpha^j coordinatewise mod n.

    ``coordinates`` maps an element to the integer vector compared mod n
    (power-basis coordinates by default, suborder coordinates when forging
    into a suborder).  Termination within n^d + 1 powers is asserted.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    base = alpha.element if hasattr(alpha, "element") else alpha
    order = order or base.order
    if coordinates is None:
        coordinates = lambda e: e.coeffs  # noqa: E731
    cap = n ** order.degree + 1
    seen = {}
    acc = base
    for k in range(1, cap + 1):
        key = tuple(c % n for c in coordinates(acc))
        if key in seen:
            return k, seen[key]
        seen[key] = k
        acc = mul(acc, base)
    raise AssertionError(f"no repeated residue within {cap} powers")


def build_fg(alpha, i, j, n):
    """f = (alpha^i + (n-1) alpha^j) / n and g = (alpha^i - alpha^j) / n, exactly."""
    if not i > j >= 1:
        raise ValueError(f"need i > j >= 1, got i={i}, j={j}")
    ai = power(alpha, i)
    aj = power(alpha, j)
    f_num = ai + (n - 1) * aj
    g_num = ai - aj
    for num in (f_num, g_num):
        if any(c % n for c in num.coeffs):
            raise InexactDivision(f"{num!r} is not divisible by {n}")
    f = OrderElement(ai.order, tuple(c // n for c in f_num.coeffs))
    g = OrderElement(ai.order, tuple(c // n for c in g_num.coeffs))
    if g.is_zero():
        raise ZeroG("g = 0: alpha has finite order")
    assert f - g == aj and f + (n - 1) * g == ai
    return f, g


def quad_conjugate_construction(D, i):
    """n = 2 construction from a unit u of Z[√D] and its conjugate ū.

    f = (u^i + ū^i) / 2 and g = (u^i - ū^i) / 2, so that f + g = u^i and
    f - g = ū^i.  Raises ParityFailure when the halving is not exact.
    """
    if i < 1:
        raise ValueError(f"i must be positive, got {i}")
    u = fundamental_unit_quadratic(D).element
    ubar = OrderElement(u.order, (u.coeffs[0], -u.coeffs[1]))
    ui, ubi = power(u, i), power(ubar, i)
    s, t = ui + ubi, ui - ubi
    if any(c % 2 for c in s.coeffs + t.coeffs):
        raise ParityFailure(f"u^{i} ± ū^{i} not both even for D={D}")
    f = OrderElement(u.order, tuple(c // 2 for c in s.coeffs))
    g = OrderElement(u.order, tuple(c // 2 for c in t.coeffs))
    if g.is_zero():
        raise ZeroG("g = 0")
    return f, g


def _choose_unit(order, unit, height_bound):
    if unit is not None:
        cert = is_unit(unit)
        if cert is None:
            raise UnitNotFound(f"supplied element {unit!r} is not a unit")
        if unit == order.one() or unit == -order.one():
            raise UnitNotFound("supplied unit is ±1, which has finite order")
        return cert
    D = order.quadratic_radicand()
    if D is not None:
        return fundamental_unit_quadratic(D)
    cert = search_unit(order, height_bound)
    if cert is None:
        raise UnitNotFound(f"no unit other than ±1 with height <= {height_bound}")
    return cert


def forge(order, n, unit=None, height_bound=2, sigma=None, suborder=None, max_exp=1000):
    """Build and check an automorphism certificate for the given order and n."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    sigma = matforms.check_perm(sigma if sigma is not None else range(n), n)
    alpha = _choose_unit(order, unit, height_bound)
    coordinates = None
    if suborder is not None:
        found = power_into_suborder(alpha, suborder, max_exp)
        if found is None:
            raise SuborderPowerNotFound(f"no power <= {max_exp} of the unit lies in the suborder")
        alpha = is_unit(found[1])
        coordinates = suborder.coordinates
    i, j = pigeonhole_exponents(alpha, n, order, coordinates)
    f, g = build_fg(alpha, i, j, n)
    matrix = matforms.apply_perm(sigma, matforms.circulant(f, g, n))
    det_value = matforms.det(matrix)
    det_unit = is_unit(det_value)
    if det_unit is None:
        raise CheckFailed("determinant is not a unit")
    assumptions = []
    if not order.irreducibility_verified:
        assumptions.append(
            f"unverified-irreducibility: minimal polynomial of degree {order.degree} "
            "was not checked for irreducibility")
    cert = AutomorphismCertificate(
        order=order, n=n, alpha=alpha, i=i, j=j, f=f, g=g, sigma=sigma,
        matrix=matrix, det_value=det_value, det_inverse=det_unit.inverse,
        unverified_assumptions=assumptions, suborder=suborder)
    cert.checks = run_checks(cert)
    failed = [name for name, ok in cert.checks.items() if not ok]
    if failed:
        raise CheckFailed(f"forged certificate fails: {', '.join(failed)}")
    return cert


def run_checks(cert):
    """Recompute every claim of a certificate from its inputs.  Returns name -> bool."""
    order, n = cert.order, cert.n
    one = order.one()
    alpha = cert.alpha.element
    checks = {}

    checks["alpha_unit"] = (
        mul(alpha, cert.alpha.inverse) == one
        and cert.alpha.charpoly_constant in (1, -1)
        and cert.alpha.check())
    checks["alpha_infinite_order"] = alpha != one and alpha != -one
    checks["exponents_ordered"] = cert.i > cert.j >= 1

    if checks["exponents_ordered"]:
        ai, aj = power(alpha, cert.i), power(alpha, cert.j)
    else:
        ai = aj = None
    f, g = cert.f, cert.g
    if cert.suborder is None:
        checks["congruent_mod_n"] = ai is not None and all(
            (x - y) % n == 0 for x, y in zip(ai.coeffs, aj.coeffs))
    else:
        S = cert.suborder
        ci = S.coordinates(ai) if ai is not None else None
        cj = S.coordinates(aj) if aj is not None else None
        checks["congruent_mod_n"] = (
            ci is not None and cj is not None
            and all((x - y) % n == 0 for x, y in zip(ci, cj)))
        checks["in_suborder"] = (
            suborder_contains(S, alpha) and suborder_contains(S, f) and suborder_contains(S, g))
    checks["divisibility_exact"] = ai is not None and (
        n * f == ai + (n - 1) * aj and n * g == ai - aj)
    checks["f_plus_g_relation"] = ai is not None and f + (n - 1) * g == ai
    checks["f_minus_g_relation"] = aj is not None and f - g == aj
    checks["f_minus_g_unit"] = is_unit(f - g) is not None
    checks["f_plus_g_unit"] = is_unit(f + (n - 1) * g) is not None
    checks["g_nonzero"] = not g.is_zero()

    try:
        sigma = matforms.check_perm(cert.sigma, n)
        expected = matforms.apply_perm(sigma, matforms.circulant(f, g, n))
    except ValueError:
        sigma, expected = None, None
    checks["matrix_form"] = expected is not None and cert.matrix == expected

    elim = matforms.det(cert.matrix, method="bareiss")
    checks["det_elimination"] = elim == cert.det_value
    checks["det_closed_form"] = sigma is not None and (
        matforms.perm_sign(sigma) * matforms.det_closed_form(f, g, n) == cert.det_value)
    checks["det_inverse"] = mul(cert.det_value, cert.det_inverse) == one
    inv = matforms.invert(cert.matrix)
    checks["matrix_invertible"] = inv is not None and (
        matforms.mat_mul(inv, cert.matrix) == matforms.identity(order, n))

    checks["nonnatural"] = (
        not matforms.is_natural_form(cert.matrix)
        and expected is not None
        and not matforms.is_natural_form(expected))
    form = matforms.recognize_symmetric_form(cert.matrix)
    checks["symmetric_form_recognized"] = form is not None and form.matrix() == cert.matrix
    return checks


def verify_certificate(cert):
    """Re-run every check on a certificate; never trusts the stored check values."""
    return run_checks(cert)
