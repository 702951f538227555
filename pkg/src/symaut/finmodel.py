"""Brute-force checks of matrices over the order on finite module models.

A model is (Z/m)^d with theta acting through its companion matrix mod m, a
faithful module for Z[theta]/m that stands in for torsion points of X.  It
is NOT the true m-torsion X[m], which has rank 2d; the properties checked
here (descent to the symmetric product, diagonal preservation, the natural
form) depend only on the matrix acting on a faithful module.

Tuples x = (x_1, ..., x_n) are enumerated with the first coordinate of x_1
varying fastest; permutations tau act by (tau.x)_k = x_{tau[k]} and are
enumerated in lexicographic order.  The counterexample reported is the first
one met in that order.
"""

import json
from dataclasses import asdict, dataclass, field
from itertools import permutations, product
from math import factorial, gcd

import numpy as np

from . import _intmat
from .numfield import regular_representation

DEFAULT_BUDGET = 10 ** 7


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class FiniteModel:
    order: object
    m: int
    theta_action: tuple

    @property
    def d(self):
        return self.order.degree

    def matrix_of(self, e):
        """Regular representation of e reduced mod m, as a tuple of rows."""
        return tuple(tuple(x % self.m for x in row) for row in regular_representation(e))

    def points(self):
        """All points of (Z/m)^d, first coordinate fastest."""
        for rev in product(range(self.m), repeat=self.d):
            yield tuple(reversed(rev))


def make_model(order, m):
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    theta = regular_representation(order.theta())
    model = FiniteModel(order, m, tuple(tuple(x % m for x in row) for row in theta))
    # minpoly(theta_action) == 0 mod m
    d = order.degree
    acc = [[0] * d for _ in range(d)]
    for c in reversed(order.minpoly):
        acc = _intmat.matmul(acc, [list(r) for r in model.theta_action])
        for k in range(d):
            acc[k][k] += c
    assert all(x % m == 0 for row in acc for x in row)
    return model


def _apply(mat, p, m):
    return tuple(sum(a * b for a, b in zip(row, p)) % m for row in mat)


def act(model, e, p):
    if e.order != model.order:
        raise ValueError("element and model use different orders")
    return _apply(model.matrix_of(e), p, model.m)


class _Compiled:
    """Entries of an OrderMatrix reduced to integer matrices mod m."""

    def __init__(self, model, M):
        if M.order != model.order:
            raise ValueError("matrix and model use different orders")
        self.m = model.m
        self.d = model.d
        self.n = M.n
        self.blocks = [[model.matrix_of(e) for e in row] for row in M.rows]
        self.zero_block = [[all(x == 0 for r in b for x in r) for b in row] for row in self.blocks]

    def __call__(self, x):
        m, d = self.m, self.d
        out = []
        for i in range(self.n):
            acc = [0] * d
            for j in range(self.n):
                if self.zero_block[i][j]:
                    continue
                b = self.blocks[i][j]
                xj = x[j]
                for r in range(d):
                    acc[r] += sum(a * c for a, c in zip(b[r], xj))
            out.append(tuple(v % m for v in acc))
        return tuple(out)


def act_tuple(model, M, x):
    if len(x) != M.n:
        raise ValueError(f"expected {M.n} points, got {len(x)}")
    return _Compiled(model, M)(tuple(tuple(p) for p in x))


def block_integer_matrix(M):
    """The (dn) x (dn) integer matrix with each entry replaced by its regular representation."""
    d = M.order.degree
    n = M.n
    big = [[0] * (d * n) for _ in range(d * n)]
    for i in range(n):
        for j in range(n):
            block = regular_representation(M.rows[i][j])
            for r in range(d):
                for c in range(d):
                    big[i * d + r][j * d + c] = block[r][c]
    return big


def check_bijective(model, M):
    return gcd(_intmat.det_bareiss(block_integer_matrix(M)), model.m) == 1


@dataclass
class CheckReport:
    check: str
    passed: bool
    m: int
    n: int
    d: int
    mode: str
    seed: object = None
    checked: int = 0
    counterexample: object = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self):
        verdict = "PASS" if self.passed else "FAIL"
        line = f"{self.check} [m={self.m}, n={self.n}, d={self.d}, {self.mode}"
        if self.seed is not None:
            line += f", seed={self.seed}"
        line += f"]: {verdict} ({self.checked} cases)"
        if self.counterexample is not None:
            line += f"; counterexample {json.dumps(self.counterexample)}"
        return line


def _parse_mode(mode):
    """``"exhaustive"`` or ``("sample", count, seed)``."""
    if mode == "exhaustive":
        return "exhaustive", None, None
    kind, count, seed = mode
    if kind != "sample":
        raise ValueError(f"unknown mode {mode!r}")
    return "sample", int(count), seed


CHUNK = 1 << 16


class _Vectorized:
    """F as a (dn) x (dn) matrix mod m acting on rows of flattened tuples."""

    def __init__(self, model, M):
        if M.order != model.order:
            raise ValueError("matrix and model use different orders")
        self.m, self.d, self.n = model.m, model.d, M.n
        self.B = np.array(block_integer_matrix(M), dtype=np.int64) % self.m
        self.weights = self.m ** np.arange(self.d, dtype=np.int64)

    def __call__(self, X):
        return (X @ self.B.T) % self.m

    def codes(self, X):
        """One integer per point: (N, n)."""
        return X.reshape(len(X), self.n, self.d) @ self.weights

    def permuted(self, X, tau):
        return X.reshape(len(X), self.n, self.d)[:, list(tau), :].reshape(len(X), -1)


def _chunks(F, kind, count, seed, per_tuple, budget):
    """Yield (offset, X) blocks of flattened tuples in enumeration order."""
    dn = F.d * F.n
    if kind == "exhaustive":
        total = F.m ** dn
        if total * per_tuple > budget:
            raise BudgetExceeded(f"{total * per_tuple} cases exceed the budget of {budget}")
        powers = F.m ** np.arange(dn, dtype=np.int64)
        for start in range(0, total, CHUNK):
            k = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
            yield start, (k[:, None] // powers) % F.m
    else:
        rng = np.random.default_rng(seed)
        for start in range(0, count, CHUNK):
            size = min(CHUNK, count - start)
            yield start, rng.integers(0, F.m, size=(size, dn), dtype=np.int64)


def _tuple_of(X_row, n, d):
    return [[int(v) for v in X_row[k * d:(k + 1) * d]] for k in range(n)]


def check_descent(model, M, mode="exhaustive", budget=DEFAULT_BUDGET):
    """F(tau.x) and F(x) must have the same coordinate multiset for every x, tau."""
    kind, count, seed = _parse_mode(mode)
    F = _Vectorized(model, M)
    n, d = F.n, F.d
    perms = list(permutations(range(n)))
    report = CheckReport("descent", True, model.m, n, model.d, kind, seed)
    for offset, X in _chunks(F, kind, count, seed, len(perms), budget):
        base = np.sort(F.codes(F(X)), axis=1)
        fails = np.stack([
            np.any(np.sort(F.codes(F(F.permuted(X, tau))), axis=1) != base, axis=1)
            for tau in perms])
        bad_rows = np.flatnonzero(fails.any(axis=0))
        if len(bad_rows):
            r = int(bad_rows[0])
            t = int(np.flatnonzero(fails[:, r])[0])
            tau = perms[t]
            report.passed = False
            report.checked += r * len(perms) + t + 1
            x = X[r:r + 1]
            report.counterexample = {
                "x": _tuple_of(x[0], n, d), "tau": [k + 1 for k in tau],
                "F(x)": _tuple_of(F(x)[0], n, d),
                "F(tau.x)": _tuple_of(F(F.permuted(x, tau))[0], n, d)}
            return report
        report.checked += len(X) * len(perms)
    return report


def in_big_diagonal(x):
    return len(set(x)) < len(x)


def in_delta_prime(x):
    """All coordinates but (at most) one coincide."""
    n = len(x)
    for k in range(n):
        rest = x[:k] + x[k + 1:]
        if all(p == rest[0] for p in rest):
            return True
    return False


def _big_diagonal_mask(codes):
    s = np.sort(codes, axis=1)
    return np.any(s[:, 1:] == s[:, :-1], axis=1)


def _delta_prime_mask(codes):
    n = codes.shape[1]
    out = np.zeros(len(codes), dtype=bool)
    for k in range(n):
        rest = np.delete(codes, k, axis=1)
        out |= rest.max(axis=1) == rest.min(axis=1)
    return out


def _force_members(F, X, kind, rng):
    """Overwrite sampled tuples so that every row lies in the target set."""
    n, d = F.n, F.d
    Y = X.reshape(len(X), n, d).copy()
    rows = np.arange(len(X))
    if kind == "big_diagonal":
        a = rng.integers(0, n, size=len(X))
        b = (a + rng.integers(1, n, size=len(X))) % n
        Y[rows, b] = Y[rows, a]
    else:
        k = rng.integers(0, n, size=len(X))
        common = Y[rows, (k + 1) % n].copy()
        for slot in range(n):
            keep = k == slot
            Y[~keep, slot] = common[~keep]
    return Y.reshape(len(X), -1)


def _check_subset(name, mask_fn, model, M, mode, budget):
    kind, count, seed = _parse_mode(mode)
    F = _Vectorized(model, M)
    n, d = F.n, F.d
    report = CheckReport(name, True, model.m, n, model.d, kind, seed)
    rng = np.random.default_rng(None if seed is None else [seed, 1])
    for _, X in _chunks(F, kind, count, seed, 1, budget):
        if kind == "exhaustive":
            X = X[mask_fn(F.codes(X))]
        else:
            X = _force_members(F, X, name, rng)
        Y = F(X)
        bad = np.flatnonzero(~mask_fn(F.codes(Y)))
        if len(bad):
            r = int(bad[0])
            report.passed = False
            report.checked += r + 1
            report.counterexample = {"x": _tuple_of(X[r], n, d), "F(x)": _tuple_of(Y[r], n, d)}
            return report
        report.checked += len(X)
    return report


def check_big_diagonal(model, M, mode="exhaustive", budget=DEFAULT_BUDGET):
    """F maps tuples with two equal coordinates to such tuples."""
    return _check_subset("big_diagonal", _big_diagonal_mask, model, M, mode, budget)


def check_delta_prime(model, M, mode="exhaustive", budget=DEFAULT_BUDGET):
    """F maps tuples whose coordinates agree except in at most one slot to such tuples."""
    if M.n < 3:
        raise ValueError("the all-but-one diagonal is only considered for n >= 3")
    return _check_subset("delta_prime", _delta_prime_mask, model, M, mode, budget)


@dataclass
class ProbeReport:
    natural: bool
    m: int
    n: int
    d: int
    checked: int = 0
    witness: object = None

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self):
        verdict = "positive" if self.natural else "negative"
        line = f"naturality_probe [m={self.m}, n={self.n}, d={self.d}]: {verdict} ({self.checked} candidates)"
        if self.witness is not None:
            line += f"; witness {json.dumps(self.witness)}"
        return line


def naturality_probe(model, M, budget=DEFAULT_BUDGET):
    """Search for (tau, h) with M == P_tau @ diag(h, ..., h) as maps on the model."""
    n, d, m = M.n, model.d, model.m
    total = m ** d * factorial(n)
    if total > budget:
        raise BudgetExceeded(f"{total} candidates exceed the budget of {budget}")
    blocks = [[model.matrix_of(e) for e in row] for row in M.rows]
    zero = tuple(tuple(0 for _ in range(d)) for _ in range(d))
    order = model.order
    report = ProbeReport(False, m, n, d)
    for tau in permutations(range(n)):
        # P_tau @ diag(h) has h at (tau[j], j) and zero elsewhere
        if any(blocks[i][j] != zero for j in range(n) for i in range(n) if i != tau[j]):
            report.checked += m ** d
            continue
        for rev in product(range(m), repeat=d):
            report.checked += 1
            coords = tuple(reversed(rev))
            h = model.matrix_of(order.element(coords))
            if all(blocks[tau[j]][j] == h for j in range(n)):
                report.natural = True
                report.witness = {"tau": [t + 1 for t in tau], "h": list(coords)}
                return report
    return report
