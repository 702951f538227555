"""Small exact helpers for integer matrices stored as lists of rows."""

from fractions import Fraction


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def trace(a):
    return sum(a[i][i] for i in range(len(a)))


def det_bareiss(a):
    """Fraction-free Gaussian elimination; every division below is exact."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def charpoly(a):
    """Characteristic polynomial det(xI - a), constant term first (Faddeev-LeVerrier).

    For an integer matrix the division by k at step k is exact.
    """
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = matmul(a, m)
        for i in range(n):
            m[i][i] += coeffs[n - k + 1]
        am = matmul(a, m)
        tr = trace(am)
        assert tr % k == 0
        coeffs[n - k] = -tr // k
    return coeffs


def solve_left(basis, v):
    """Rational x with x @ basis == v, for a square nonsingular basis (rows)."""
    n = len(basis)
    # transpose so that we solve basis^T x = v
    aug = [[Fraction(basis[j][i]) for j in range(n)] + [Fraction(v[i])] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular basis")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [aug[i][n] for i in range(n)]
