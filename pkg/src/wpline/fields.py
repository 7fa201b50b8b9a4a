"""Exact dense linear algebra over prime fields and the rationals.

Only what the rest of the library needs: construction, products, rank,
kernel dimension and inverses, all exact.  Prime-field matrices are
int64 numpy arrays with entries reduced mod q; rational matrices hold
Fraction entries in object arrays.  Every rank computed downstream is
field independent, so F_101 is the fast default and the rationals are
kept as a cross-check option.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

__all__ = ["PrimeField", "RationalField", "field_from_descriptor", "DEFAULT_FIELD"]


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """Arithmetic and dense matrices over F_q, q prime."""

    def __init__(self, q: int = 101):
        if not _is_prime(q):
            raise ValueError(f"modulus {q} is not prime")
        self.q = q

    def __repr__(self):
        return f"F{self.q}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("prime", self.q))

    def element(self, x) -> int:
        return int(x) % self.q

    def mat(self, rows, shape=None) -> np.ndarray:
        if shape is not None and (shape[0] == 0 or shape[1] == 0):
            return np.zeros(shape, dtype=np.int64)
        a = np.array(rows, dtype=np.int64)
        if a.ndim != 2:
            a = a.reshape(shape if shape is not None else (0, 0))
        return a % self.q

    def zeros(self, m: int, n: int) -> np.ndarray:
        return np.zeros((m, n), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def matmul(self, a, b) -> np.ndarray:
        return (a @ b) % self.q

    def add(self, a, b) -> np.ndarray:
        return (a + b) % self.q

    def sub(self, a, b) -> np.ndarray:
        return (a - b) % self.q

    def scale(self, c, a) -> np.ndarray:
        return (self.element(c) * a) % self.q

    def kron(self, a, b) -> np.ndarray:
        return np.kron(a, b) % self.q

    def equal(self, a, b) -> bool:
        return a.shape == b.shape and bool(np.array_equal(a % self.q, b % self.q))

    def is_zero(self, a) -> bool:
        return bool(np.all(a % self.q == 0))

    def rank(self, a) -> int:
        m = (np.asarray(a, dtype=np.int64) % self.q).copy()
        rows, cols = m.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(m[r:, c])[0]
            if nz.size == 0:
                continue
            piv = r + int(nz[0])
            if piv != r:
                m[[r, piv]] = m[[piv, r]]
            inv = pow(int(m[r, c]), self.q - 2, self.q)
            m[r] = (m[r] * inv) % self.q
            below = m[r + 1 :, c]
            if below.size:
                m[r + 1 :] = (m[r + 1 :] - np.outer(below, m[r])) % self.q
            r += 1
        return r

    def nullity(self, a) -> int:
        return a.shape[1] - self.rank(a)

    def is_invertible(self, a) -> bool:
        return a.shape[0] == a.shape[1] and self.rank(a) == a.shape[0]

    def inverse(self, a) -> np.ndarray:
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("inverse of a non-square matrix")
        aug = np.hstack([np.asarray(a, dtype=np.int64) % self.q, self.eye(n)])
        r = 0
        for c in range(n):
            nz = np.nonzero(aug[r:, c])[0]
            if nz.size == 0:
                raise ValueError("matrix is singular")
            piv = r + int(nz[0])
            if piv != r:
                aug[[r, piv]] = aug[[piv, r]]
            inv = pow(int(aug[r, c]), self.q - 2, self.q)
            aug[r] = (aug[r] * inv) % self.q
            others = np.nonzero(aug[:, c])[0]
            for i in others:
                if i != r:
                    aug[i] = (aug[i] - aug[i, c] * aug[r]) % self.q
            r += 1
        return aug[:, n:]

    def random_matrix(self, m: int, n: int, rng) -> np.ndarray:
        return rng.integers(0, self.q, size=(m, n), dtype=np.int64)

    def random_invertible(self, n: int, rng) -> np.ndarray:
        if n == 0:
            return self.zeros(0, 0)
        while True:
            a = self.random_matrix(n, n, rng)
            if self.is_invertible(a):
                return a

    def to_lists(self, a) -> list:
        return [[int(x) for x in row] for row in np.asarray(a) % self.q]

    def from_lists(self, rows, shape) -> np.ndarray:
        return self.mat(rows, shape=shape)


class RationalField:
    """Exact rational arithmetic on object-dtype numpy matrices."""

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def element(self, x) -> Fraction:
        return Fraction(x)

    def mat(self, rows, shape=None) -> np.ndarray:
        if shape is not None and (shape[0] == 0 or shape[1] == 0):
            return np.empty(shape, dtype=object)
        a = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                a[i, j] = Fraction(x)
        return a

    def zeros(self, m: int, n: int) -> np.ndarray:
        a = np.empty((m, n), dtype=object)
        a[...] = Fraction(0)
        return a

    def eye(self, n: int) -> np.ndarray:
        a = self.zeros(n, n)
        for i in range(n):
            a[i, i] = Fraction(1)
        return a

    def matmul(self, a, b) -> np.ndarray:
        if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
            return self.zeros(a.shape[0], b.shape[1])
        return a.dot(b)

    def add(self, a, b) -> np.ndarray:
        return a + b

    def sub(self, a, b) -> np.ndarray:
        return a - b

    def scale(self, c, a) -> np.ndarray:
        return Fraction(c) * a

    def kron(self, a, b) -> np.ndarray:
        if 0 in a.shape or 0 in b.shape:
            return self.zeros(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])
        return np.kron(a, b)

    def equal(self, a, b) -> bool:
        if a.shape != b.shape:
            return False
        if 0 in a.shape:
            return True
        return bool(np.all(a == b))

    def is_zero(self, a) -> bool:
        if 0 in a.shape:
            return True
        return bool(np.all(a == Fraction(0)))

    def rank(self, a) -> int:
        m = [[Fraction(x) for x in row] for row in a]
        rows = len(m)
        cols = a.shape[1]
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(r + 1, rows):
                f = m[i][c]
                if f:
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            r += 1
        return r

    def nullity(self, a) -> int:
        return a.shape[1] - self.rank(a)

    def is_invertible(self, a) -> bool:
        return a.shape[0] == a.shape[1] and self.rank(a) == a.shape[0]

    def inverse(self, a) -> np.ndarray:
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("inverse of a non-square matrix")
        m = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
             for i, row in enumerate(a)]
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            m[c], m[piv] = m[piv], m[c]
            inv = 1 / m[c][c]
            m[c] = [x * inv for x in m[c]]
            for i in range(n):
                if i != c and m[i][c]:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return self.mat([row[n:] for row in m])

    def to_lists(self, a) -> list:
        return [[str(x) for x in row] for row in a]

    def from_lists(self, rows, shape) -> np.ndarray:
        if shape[0] == 0 or shape[1] == 0:
            return self.zeros(*shape)
        return self.mat([[Fraction(x) for x in row] for row in rows])


def field_from_descriptor(desc: str):
    """Parse a field descriptor: "F<q>" for a prime field, "Q" for rationals."""
    if desc == "Q":
        return RationalField()
    if desc.startswith("F"):
        try:
            q = int(desc[1:])
        except ValueError:
            raise ValueError(f"malformed field descriptor {desc!r}") from None
        return PrimeField(q)
    raise ValueError(f"malformed field descriptor {desc!r}")


DEFAULT_FIELD = PrimeField(101)
