"""Exact linear algebra over small fields.

Two interchangeable drivers: a vectorized mod-q driver on numpy int64
arrays (q a small prime) and a generic driver for any exact field whose
elements support +, -, *, / and truthiness (used for rational-function
coefficients).  Both produce reduced row echelon bases, so span bases are
canonical and coordinate extraction reads off pivot columns.
"""

from __future__ import annotations

import numpy as np


class ModQ:
    """Arithmetic driver for matrices over Z/q, q prime."""

    def __init__(self, q: int):
        self.q = q

    def mat(self, rows) -> np.ndarray:
        m = np.array(rows, dtype=np.int64)
        if m.ndim == 1:
            m = m.reshape(1, -1)
        return m % self.q

    def zeros(self, r: int, c: int) -> np.ndarray:
        return np.zeros((r, c), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        return (A @ B) % self.q

    def add(self, A, B):
        return (A + B) % self.q

    def sub(self, A, B):
        return (A - B) % self.q

    def smul(self, s: int, A):
        return (s * A) % self.q

    def eq(self, A, B) -> bool:
        return bool(np.array_equal(A % self.q, B % self.q))

    def is_zero(self, A) -> bool:
        return not (A % self.q).any()

    def rref(self, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
        A = A.copy() % self.q
        rows, cols = A.shape
        piv: list[int] = []
        r = 0
        for c in range(cols):
            if r >= rows:
                break
            nz = np.nonzero(A[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                A[[r, i]] = A[[i, r]]
            A[r] = (A[r] * pow(int(A[r, c]), -1, self.q)) % self.q
            col = A[:, c].copy()
            col[r] = 0
            A = (A - np.outer(col, A[r])) % self.q
            piv.append(c)
            r += 1
        return A[:r], piv

    def rank(self, A: np.ndarray) -> int:
        if A.size == 0:
            return 0
        return len(self.rref(A)[1])

    def nullspace(self, A: np.ndarray) -> np.ndarray:
        """Rows span {x : A x = 0}."""
        rows, cols = A.shape
        R, piv = self.rref(A)
        pivset = set(piv)
        free = [c for c in range(cols) if c not in pivset]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for k, fc in enumerate(free):
            basis[k, fc] = 1
            for i, pc in enumerate(piv):
                basis[k, pc] = (-int(R[i, fc])) % self.q
        return basis

    def reduce(self, R: np.ndarray, piv: list[int], v) -> np.ndarray:
        v = np.array(v, dtype=np.int64) % self.q
        for i, pc in enumerate(piv):
            if v[pc]:
                v = (v - v[pc] * R[i]) % self.q
        return v

    def in_span(self, R: np.ndarray, piv: list[int], v: np.ndarray) -> bool:
        return not self.reduce(R, piv, v).any()

    def coords(self, R: np.ndarray, piv: list[int], v: np.ndarray) -> np.ndarray:
        """Coefficients of v in the rref basis R; raises if v is outside the span."""
        if not self.in_span(R, piv, v):
            raise ValueError("vector outside span")
        return np.array([v[pc] for pc in piv], dtype=np.int64) % self.q


class GenericField:
    """Same driver API over an arbitrary exact field (list-of-list matrices)."""

    def __init__(self, zero, one, convert=None):
        self.zero = zero
        self.one = one
        self.convert = convert or (lambda x: x)

    def mat(self, rows):
        if rows and not isinstance(rows[0], (list, tuple)):
            rows = [rows]
        return [[self.convert(x) for x in row] for row in rows]

    def zeros(self, r, c):
        return [[self.zero for _ in range(c)] for _ in range(r)]

    def eye(self, n):
        return [[self.one if i == j else self.zero for j in range(n)] for i in range(n)]

    def matmul(self, A, B):
        rb = len(B)
        cb = len(B[0]) if rb else 0
        out = []
        for row in A:
            acc = [self.zero] * cb
            for k, x in enumerate(row):
                if not x:
                    continue
                Bk = B[k]
                for j in range(cb):
                    if Bk[j]:
                        acc[j] = acc[j] + x * Bk[j]
            out.append(acc)
        return out

    def add(self, A, B):
        return [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(A, B)]

    def sub(self, A, B):
        return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(A, B)]

    def smul(self, s, A):
        s = self.convert(s)
        return [[s * x for x in row] for row in A]

    def eq(self, A, B) -> bool:
        return all(x == y for r1, r2 in zip(A, B) for x, y in zip(r1, r2))

    def is_zero(self, A) -> bool:
        return all(not x for row in A for x in row)

    def rref(self, A):
        A = [list(row) for row in A]
        rows = len(A)
        cols = len(A[0]) if rows else 0
        piv: list[int] = []
        r = 0
        for c in range(cols):
            if r >= rows:
                break
            sel = next((i for i in range(r, rows) if A[i][c]), None)
            if sel is None:
                continue
            A[r], A[sel] = A[sel], A[r]
            inv = self.one / A[r][c]
            A[r] = [x * inv for x in A[r]]
            for i in range(rows):
                if i != r and A[i][c]:
                    f = A[i][c]
                    A[i] = [x - f * y for x, y in zip(A[i], A[r])]
            piv.append(c)
            r += 1
        return A[:r], piv

    def rank(self, A) -> int:
        if not A:
            return 0
        return len(self.rref(A)[1])

    def nullspace(self, A):
        rows = len(A)
        cols = len(A[0]) if rows else 0
        R, piv = self.rref(A)
        pivset = set(piv)
        free = [c for c in range(cols) if c not in pivset]
        basis = []
        for fc in free:
            vec = [self.zero] * cols
            vec[fc] = self.one
            for i, pc in enumerate(piv):
                vec[pc] = self.zero - R[i][fc]
            basis.append(vec)
        return basis

    def reduce(self, R, piv, v):
        v = list(v)
        for i, pc in enumerate(piv):
            if v[pc]:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, R[i])]
        return v

    def in_span(self, R, piv, v) -> bool:
        return all(not x for x in self.reduce(R, piv, v))

    def coords(self, R, piv, v):
        if not self.in_span(R, piv, v):
            raise ValueError("vector outside span")
        return [v[pc] for pc in piv]
