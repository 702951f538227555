"""Square matrices over an order, modelling endomorphisms of X^n.

Permutations are tuples of 0-based images: ``sigma[i]`` is where index i
goes.  The permutation matrix P_sigma has a 1 in position (sigma[i], i), so
left multiplication by it sends row i to row sigma[i].
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .numfield import exact_div, is_unit, mul, power


class OrderMatrix:
    """An n x n matrix of OrderElement sharing one order.  Immutable."""

    __slots__ = ("order", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        order = rows[0][0].order
        if any(e.order != order for r in rows for e in r):
            raise ValueError("all entries must share one order")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("OrderMatrix is immutable")

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, OrderMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"OrderMatrix({[[list(e.coeffs) for e in r] for r in self.rows]})"

    def __matmul__(self, other):
        return mat_mul(self, other)

    @classmethod
    def from_coeffs(cls, order, nested):
        return cls([[order.element(c) for c in row] for row in nested])


def identity(order, n):
    one, zero = order.one(), order.zero()
    return OrderMatrix([[one if i == j else zero for j in range(n)] for i in range(n)])


def diagonal(entries):
    zero = entries[0].order.zero()
    n = len(entries)
    return OrderMatrix([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])


def check_perm(sigma, n=None):
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(len(sigma))):
        raise ValueError(f"not a permutation of 0..{len(sigma) - 1}: {sigma}")
    if n is not None and len(sigma) != n:
        raise ValueError(f"permutation has size {len(sigma)}, expected {n}")
    return sigma


def perm_sign(sigma):
    sign = 1
    seen = [False] * len(sigma)
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = sigma[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def permutation_matrix(order, sigma):
    sigma = check_perm(sigma)
    n = len(sigma)
    one, zero = order.one(), order.zero()
    rows = [[zero] * n for _ in range(n)]
    for i, s in enumerate(sigma):
        rows[s][i] = one
    return OrderMatrix(rows)


def circulant(f, g, n):
    """f on the diagonal, g everywhere else."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if f.order != g.order:
        raise ValueError("f and g belong to different orders")
    return OrderMatrix([[f if i == j else g for j in range(n)] for i in range(n)])


def apply_perm(sigma, M):
    """P_sigma @ M, i.e. row i of M becomes row sigma[i]."""
    sigma = check_perm(sigma, M.n)
    rows = [None] * M.n
    for i, s in enumerate(sigma):
        rows[s] = M.rows[i]
    return OrderMatrix(rows)


def mat_mul(A, B):
    if A.n != B.n:
        raise ValueError(f"size mismatch: {A.n} vs {B.n}")
    if A.order != B.order:
        raise ValueError("matrices over different orders")
    n = A.n
    zero = A.order.zero()
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                a, b = A.rows[i][k], B.rows[k][j]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + mul(a, b)
            row.append(acc)
        out.append(row)
    return OrderMatrix(out)


def _det_cofactor(rows):
    n = len(rows)
    zero = rows[0][0].order.zero()

    @lru_cache(maxsize=None)
    def minor(r, cols):
        # Laplace expansion along row r over the remaining column set
        if r == n:
            return rows[0][0].order.one()
        acc = zero
        sign = 1
        for pos, c in enumerate(cols):
            e = rows[r][c]
            if not e.is_zero():
                sub = minor(r + 1, cols[:pos] + cols[pos + 1:])
                term = mul(e, sub)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc

    return minor(0, tuple(range(n)))


def _det_bareiss(rows):
    m = [list(r) for r in rows]
    n = len(m)
    order = m[0][0].order
    sign = 1
    prev = order.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return order.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mul(m[i][j], pivot) - mul(m[i][k], m[k][j])
                m[i][j] = num if k == 0 else exact_div(num, prev)
        prev = pivot
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def det(M, method="auto"):
    """Exact determinant: cofactor expansion for n <= 6, Bareiss elimination above.

    ``method`` may force ``"cofactor"`` or ``"bareiss"``.
    """
    if method == "auto":
        method = "cofactor" if M.n <= 6 else "bareiss"
    if method == "cofactor":
        return _det_cofactor(M.rows)
    if method == "bareiss":
        return _det_bareiss(M.rows)
    raise ValueError(f"unknown determinant method {method!r}")


def det_closed_form(f, g, n):
    """(f - g)^(n-1) * (f + (n-1) g)."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return mul(power(f - g, n - 1), f + (n - 1) * g)


def _minor(M, i, j):
    return [[M.rows[r][c] for c in range(M.n) if c != j] for r in range(M.n) if r != i]


def invert(M):
    """Inverse over the order when det(M) is a unit, else None."""
    n = M.n
    d = det(M)
    unit = is_unit(d)
    if unit is None:
        return None
    if n == 1:
        return OrderMatrix([[unit.inverse]])
    method = _det_cofactor if n <= 6 else _det_bareiss
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = method(_minor(M, i, j))
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    inv = OrderMatrix([[mul(e, unit.inverse) for e in row] for row in adj])
    if mat_mul(M, inv) != identity(M.order, n):
        raise ArithmeticError("adjugate inverse failed verification")
    return inv


@dataclass(frozen=True)
class SymmetricForm:
    """M = P_sigma @ circulant(f, g, n) with f != g."""

    sigma: tuple
    f: object
    g: object
    convention: str = ""

    def __post_init__(self):
        if self.f == self.g:
            raise ValueError("symmetric form needs f != g")

    def matrix(self):
        return apply_perm(self.sigma, circulant(self.f, self.g, len(self.sigma)))


N2_CONVENTION = "n=2: sigma fixed to identity, f read off the (constant) diagonal"


def recognize_symmetric_form(M):
    """Decompose M as P_sigma @ circulant(f, g, n), or return None."""
    n = M.n
    if n < 2:
        return None
    if n == 2:
        (a, b), (c, e) = M.rows
        if a == e and b == c and a != b:
            return SymmetricForm((0, 1), a, b, N2_CONVENTION)
        return None
    first = M.rows[0]
    counts = {}
    for e in first:
        counts[e] = counts.get(e, 0) + 1
    if len(counts) != 2:
        return None
    (x, cx), (y, cy) = counts.items()
    if cx == 1 and cy == n - 1:
        f, g = x, y
    elif cy == 1 and cx == n - 1:
        f, g = y, x
    else:
        return None
    # column c carries f in row sigma[c]
    sigma = [None] * n
    for r, row in enumerate(M.rows):
        fcols = [c for c, e in enumerate(row) if e == f]
        if len(fcols) != 1 or sum(1 for e in row if e == g) != n - 1:
            return None
        c = fcols[0]
        if sigma[c] is not None:
            return None
        sigma[c] = r
    form = SymmetricForm(tuple(sigma), f, g)
    if form.matrix() != M:
        return None
    return form


def is_natural_form(M):
    """True iff M = P_sigma @ diag(h, ..., h) for some permutation sigma and one h."""
    h = None
    used = set()
    for row in M.rows:
        nz = [c for c, e in enumerate(row) if not e.is_zero()]
        if not nz:
            if h is not None and not h.is_zero():
                return False
            h = M.order.zero()
            continue
        if len(nz) != 1 or nz[0] in used:
            return False
        used.add(nz[0])
        e = row[nz[0]]
        if h is None:
            h = e
        elif h != e:
            return False
    return True


def all_permutations(n):
    return list(permutations(range(n)))
