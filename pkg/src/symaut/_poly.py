"""Dense univariate polynomials over Z and Q.

Polynomials are plain lists of coefficients, constant term first.  Only what
the order machinery needs lives here: trimming, evaluation, exact division,
gcd over Q, Sturm counting and a Kronecker-style factor search.
"""

from fractions import Fraction
from itertools import product
from math import isqrt


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(trim(p)) - 1


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return [k * p[k] for k in range(1, len(p))]


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def divmod_poly(p, q):
    """Long division over Q.  Returns (quotient, remainder) as Fraction lists."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(p)]
    dq = len(q) - 1
    lead = Fraction(q[-1])
    if len(r) - 1 < dq:
        return [], r
    quot = [Fraction(0)] * (len(r) - dq)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq] / lead
        quot[k] = c
        if c:
            for t in range(dq + 1):
                r[k + t] -= c * q[t]
    return trim(quot), trim(r[:dq])


def divides_exactly(q, p):
    """Quotient p / q if q is monic in Z[x] and divides p, else None."""
    quot, rem = divmod_poly(p, q)
    if rem:
        return None
    if any(c.denominator != 1 for c in quot):
        return None
    return [int(c) for c in quot]


def gcd_poly(p, q):
    """Monic gcd over Q."""
    a, b = trim([Fraction(c) for c in p]), trim([Fraction(c) for c in q])
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    if not a:
        return []
    return [c / a[-1] for c in a]


def is_squarefree(p):
    return degree(gcd_poly(p, derivative(p))) == 0


def sturm_sequence(p):
    seq = [trim([Fraction(c) for c in p])]
    seq.append(trim([Fraction(c) for c in derivative(p)]))
    while seq[-1]:
        _, r = divmod_poly(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _sign_changes(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign(x):
    return (x > 0) - (x < 0)


def count_real_roots(p):
    """Number of distinct real roots, via sign changes of the Sturm chain at +-inf."""
    seq = sturm_sequence(p)
    at_pos = [_sign(s[-1]) for s in seq]
    at_neg = [_sign(s[-1]) * (-1) ** (len(s) - 1) for s in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def _divisors(v):
    v = abs(v)
    small = [k for k in range(1, isqrt(v) + 1) if v % k == 0]
    large = [v // k for k in reversed(small) if k * k != v]
    return small + large


def _interpolate(xs, ys):
    """Lagrange interpolation over Q, coefficients constant first."""
    n = len(xs)
    out = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = 1
        for j in range(n):
            if j != i:
                basis = poly_mul(basis, [-xs[j], 1])
                denom *= xs[i] - xs[j]
        scale = Fraction(ys[i], denom)
        for k, c in enumerate(basis):
            out[k] += scale * c
    return out


def _sample_points(p, count):
    """`count` integer points with the fewest divisors of p(x); None if p has an integer root."""
    pool = []
    for x in range(-3 * count - 3, 3 * count + 4):
        v = evaluate(p, x)
        if v == 0:
            return None, x
        pool.append((len(_divisors(v)), abs(x), x, v))
    pool.sort()
    chosen = pool[:count]
    return [c[2] for c in chosen], [c[3] for c in chosen]


def find_monic_factor(p):
    """Search for a monic integer factor of the monic polynomial p.

    Kronecker's method: a monic factor q of degree k is pinned down by its
    values at k points, and each q(x_i) must divide p(x_i).  Returns a factor
    of degree 1 <= k <= deg(p) // 2, or None when p is irreducible over Q.
    """
    p = trim(p)
    d = len(p) - 1
    if p[-1] != 1:
        raise ValueError("find_monic_factor expects a monic polynomial")
    for k in range(1, d // 2 + 1):
        xs, vals = _sample_points(p, k)
        if xs is None:
            return [-vals, 1]
        choices = []
        for v in vals:
            divs = _divisors(v)
            choices.append(divs + [-t for t in divs])
        for picked in product(*choices):
            ys = [y - x ** k for x, y in zip(xs, picked)]
            low = _interpolate(xs, ys) if k > 1 else [Fraction(ys[0])]
            if any(c.denominator != 1 for c in low):
                continue
            q = [int(c) for c in low] + [1]
            if divides_exactly(q, p) is not None:
                return q
    return None
