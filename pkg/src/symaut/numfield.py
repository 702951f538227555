"""Exact arithmetic in the order Z[theta] of a totally real number field.

An order is described by the monic minimal polynomial of theta; elements are
integer coordinate vectors in the power basis 1, theta, ..., theta^(d-1).
Everything is exact: Python integers throughout, rationals only inside the
Sturm and linear-solve helpers.
"""

from dataclasses import dataclass, field
from itertools import product
from math import isqrt

from . import _intmat, _poly

IRREDUCIBILITY_CHECK_MAX_DEGREE = 6


class OrderError(ValueError):
    pass


class NotMonic(OrderError):
    pass


class NotTotallyReal(OrderError):
    pass


class Reducible(OrderError):
    pass


class InexactDivision(ArithmeticError):
    pass


@dataclass(frozen=True)
class OrderDescriptor:
    """The order Z[theta] with theta a root of ``minpoly`` (constant term first)."""

    minpoly: tuple
    irreducibility_verified: bool = field(default=True, compare=False)

    @property
    def degree(self):
        return len(self.minpoly) - 1

    def element(self, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.degree:
            raise ValueError(
                f"expected {self.degree} coordinates, got {len(coeffs)}")
        return OrderElement(self, coeffs)

    def from_int(self, k):
        return OrderElement(self, (int(k),) + (0,) * (self.degree - 1))

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def theta(self):
        return OrderElement(self, (0, 1) + (0,) * (self.degree - 2))

    def quadratic_radicand(self):
        """D if this order is Z[sqrt(D)] (minpoly x^2 - D), else None."""
        if self.degree == 2 and self.minpoly[1] == 0:
            return -self.minpoly[0]
        return None

    def __repr__(self):
        return f"OrderDescriptor(minpoly={list(self.minpoly)})"


class OrderElement:
    """Element of Z[theta] as power-basis coordinates.  Immutable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("OrderElement is immutable")

    def _coerce(self, other):
        if isinstance(other, OrderElement):
            if other.order != self.order:
                raise ValueError("elements belong to different orders")
            return other
        if isinstance(other, int):
            return self.order.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return OrderElement(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return OrderElement(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return OrderElement(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return OrderElement(self.order, tuple(other * a for a in self.coeffs))
        if not isinstance(other, OrderElement):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        return power(self, k)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.order.from_int(other)
        if not isinstance(other, OrderElement):
            return NotImplemented
        return self.coeffs == other.coeffs and self.order == other.order

    def __hash__(self):
        return hash((self.order.minpoly, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"OrderElement({list(self.coeffs)})"

    def __str__(self):
        return format_element(self)

    def is_zero(self):
        return not any(self.coeffs)

    def reduce_mod(self, m):
        return tuple(c % m for c in self.coeffs)


def format_element(a):
    """Human rendering: ``a + b√D`` for Z[sqrt(D)], a polynomial in θ otherwise."""
    D = a.order.quadratic_radicand()
    symbol = f"√{D}" if D is not None else "θ"
    terms = []
    for k, c in enumerate(a.coeffs):
        if c == 0:
            continue
        if k == 0:
            mono = str(abs(c))
        else:
            base = symbol if k == 1 else f"{symbol}^{k}"
            mono = base if abs(c) == 1 else f"{abs(c)}{base}"
        if not terms:
            terms.append(mono if c > 0 else f"-{mono}")
        else:
            terms.append(("+ " if c > 0 else "- ") + mono)
    return " ".join(terms) if terms else "0"


def _squarefree_int(D):
    k = 2
    while k * k <= D:
        if D % (k * k) == 0:
            return False
        k += 1
    return True


def make_order(minpoly):
    """Validate a monic integer polynomial (constant term first) and return its order.

    Raises NotMonic, Reducible or NotTotallyReal; degree below 2 is a plain
    OrderError.  Irreducibility is proven for degree <= 6 and otherwise
    recorded as unverified on the descriptor.
    """
    coeffs = [int(c) for c in minpoly]
    if not coeffs or coeffs[-1] != 1:
        raise NotMonic(f"minimal polynomial must be monic: {coeffs}")
    d = len(coeffs) - 1
    if d < 2:
        raise OrderError(f"degree must be at least 2, got {d}")
    if not _poly.is_squarefree(coeffs):
        raise Reducible(f"{coeffs} has a repeated factor")
    verified = d <= IRREDUCIBILITY_CHECK_MAX_DEGREE
    if verified:
        factor = _poly.find_monic_factor(coeffs)
        if factor is not None:
            raise Reducible(f"{coeffs} has the factor {factor}")
    roots = _poly.count_real_roots(coeffs)
    if roots < d:
        raise NotTotallyReal(f"{coeffs} has only {roots} of {d} roots real")
    return OrderDescriptor(tuple(coeffs), irreducibility_verified=verified)


def quadratic_order(D):
    """Z[sqrt(D)] for a squarefree D >= 2 (the power-basis order, maximal or not)."""
    D = int(D)
    if D < 2:
        raise ValueError(f"D must be at least 2, got {D}")
    if not _squarefree_int(D):
        raise ValueError(f"D must be squarefree, got {D}")
    return make_order([-D, 0, 1])


def _check_same(a, b):
    if a.order != b.order:
        raise ValueError("elements belong to different orders")
    d = a.order.degree
    if len(a.coeffs) != d or len(b.coeffs) != d:
        raise ValueError("coordinate vector length does not match the order degree")


def mul(a, b):
    _check_same(a, b)
    d = a.order.degree
    mp = a.order.minpoly
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                prod[i + j] += x * y
    # theta^d = -(mp[0] + mp[1] theta + ... + mp[d-1] theta^(d-1))
    for k in range(2 * d - 2, d - 1, -1):
        c = prod[k]
        if c:
            for t in range(d):
                prod[k - d + t] -= c * mp[t]
    return OrderElement(a.order, tuple(prod[:d]))


def regular_representation(a):
    """Matrix of x -> a*x; column k holds the coordinates of a*theta^k."""
    order = a.order
    d = order.degree
    cols = []
    basis_elt = order.one()
    theta = order.theta()
    for _ in range(d):
        cols.append(mul(a, basis_elt).coeffs)
        basis_elt = mul(basis_elt, theta)
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def charpoly(a):
    """Characteristic polynomial of multiplication by a, constant term first."""
    return _intmat.charpoly(regular_representation(a))


def norm(a):
    return _intmat.det_bareiss(regular_representation(a))


def _poly_in(a, coeffs):
    """Evaluate an integer polynomial (constant first) at the element a."""
    acc = a.order.zero()
    for c in reversed(coeffs):
        acc = mul(acc, a) + c
    return acc


def _cofactor(a):
    """(q, c) with a * q == c, c a nonzero integer when a != 0 (Cayley-Hamilton)."""
    cp = charpoly(a)
    # a^d + ... + cp[1] a + cp[0] = 0  =>  a * (a^(d-1) + ... + cp[1]) = -cp[0]
    return _poly_in(a, cp[1:]), -cp[0]


def exact_div(a, b):
    """The element q of the order with b * q == a; InexactDivision if none exists."""
    _check_same(a, b)
    if b.is_zero():
        raise ZeroDivisionError("division by zero element")
    q, c = _cofactor(b)
    num = mul(a, q).coeffs
    if any(x % c for x in num):
        raise InexactDivision(f"{a!r} is not divisible by {b!r} in the order")
    return OrderElement(a.order, tuple(x // c for x in num))


@dataclass(frozen=True)
class UnitCertificate:
    element: OrderElement
    inverse: OrderElement
    charpoly_constant: int

    def check(self):
        """True iff every invariant holds, recomputed from the element alone."""
        e = self.element
        return (
            mul(e, self.inverse) == e.order.one()
            and self.charpoly_constant in (1, -1)
            and charpoly(e)[0] == self.charpoly_constant
            and abs(norm(e)) == 1
        )


def is_unit(a):
    """UnitCertificate for a if a is a unit of its order, else None."""
    if a.is_zero():
        return None
    cp = charpoly(a)
    c0 = cp[0]
    if c0 not in (1, -1):
        return None
    # a * (a^(d-1) + ... + cp[1]) = -c0, and 1/(-c0) = -c0
    inverse = _poly_in(a, cp[1:]) * (-c0)
    cert = UnitCertificate(a, inverse, c0)
    assert mul(a, inverse) == a.order.one()
    return cert


def fundamental_unit_quadratic(D):
    """Smallest x + y√D (y >= 1) with x^2 - D y^2 = ±1, as a certified unit of Z[√D].

    Walks the convergents of the continued fraction of √D; the first
    convergent p/q with p^2 - D q^2 = ±1 is the fundamental solution.
    """
    order = quadratic_order(D)
    a0 = isqrt(D)
    m, den, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    while p * p - D * q * q not in (1, -1):
        m = den * a - m
        den = (D - m * m) // den
        a = (a0 + m) // den
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    cert = is_unit(order.element((p, q)))
    assert cert is not None
    return cert


def _scan_key(v):
    # graded by l1 weight, then by |coords| read from the top coordinate down,
    # then sign pattern with the leading (highest nonzero) coordinate positive first
    absv = tuple(abs(c) for c in v)
    signs = tuple(int(c < 0) for c in reversed(v) if c != 0)
    return (sum(absv), tuple(reversed(absv)), signs)


def scan_vectors(d, height_bound):
    """All integer vectors of length d with max-abs-coordinate <= bound, in scan order."""
    box = product(range(-height_bound, height_bound + 1), repeat=d)
    return sorted(box, key=_scan_key)


def search_unit(order, height_bound):
    """First unit other than ±1 in the coefficient box of the given height, or None."""
    one, minus_one = order.one(), -order.one()
    for v in scan_vectors(order.degree, height_bound):
        e = OrderElement(order, tuple(v))
        if e.is_zero() or e == one or e == minus_one:
            continue
        cert = is_unit(e)
        if cert is not None:
            return cert
    return None


def power(a, k):
    """a**k by square-and-multiply; negative k only for a UnitCertificate."""
    if isinstance(a, UnitCertificate):
        base = a.element if k >= 0 else a.inverse
        k = abs(k)
    else:
        if k < 0:
            raise ValueError("negative power of an element without a unit certificate")
        base = a
    result = base.order.one()
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


@dataclass(frozen=True)
class Suborder:
    """A finite-index subring of Z[theta], given by a Z-basis in power-basis rows."""

    order: OrderDescriptor
    basis: tuple
    index: int

    def coordinates(self, a):
        """Integer coordinates of a in the suborder basis, or None if a is outside."""
        xs = _intmat.solve_left(self.basis, a.coeffs)
        if any(x.denominator != 1 for x in xs):
            return None
        return tuple(int(x) for x in xs)

    def element(self, coords):
        d = self.order.degree
        return OrderElement(self.order, tuple(
            sum(c * self.basis[r][k] for r, c in enumerate(coords)) for k in range(d)))


def make_suborder(order, basis):
    basis = tuple(tuple(int(x) for x in row) for row in basis)
    d = order.degree
    if len(basis) != d or any(len(row) != d for row in basis):
        raise ValueError(f"suborder basis must be {d}x{d}")
    index = abs(_intmat.det_bareiss([list(r) for r in basis]))
    if index == 0:
        raise ValueError("suborder basis is singular")
    S = Suborder(order, basis, index)
    if S.coordinates(order.one()) is None:
        raise ValueError("suborder does not contain 1")
    elts = [OrderElement(order, row) for row in basis]
    for i in range(d):
        for j in range(i, d):
            if S.coordinates(mul(elts[i], elts[j])) is None:
                raise ValueError("suborder basis span is not closed under multiplication")
    return S


def suborder_contains(S, a):
    return S.coordinates(a) is not None


def power_into_suborder(u, S, max_exp):
    """Least k in 1..max_exp with u^k in S, as (k, u^k); None if the bound runs out."""
    base = u.element if isinstance(u, UnitCertificate) else u
    acc = base
    for k in range(1, max_exp + 1):
        if suborder_contains(S, acc):
            return k, acc
        acc = mul(acc, base)
    return None
