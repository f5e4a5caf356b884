"""Degree-p field extensions G = F[xi]/(xi^p - c) with a distinguished operator.

Cyclic mode: F = F_q (q prime, p | q - 1), c a non-p-th power, and the
operator is the automorphism sigma(xi) = omega*xi for the smallest primitive
p-th root of unity omega.  Inseparable mode: F = F_p(t), c = t, and the
operator is the derivation delta(xi^i) = i*xi^(i-1).

G-elements are coefficient vectors of length p in the basis 1, xi, ...,
xi^(p-1); operators on G are p x p matrices over F acting on columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import GenericField, ModQ
from .poset import _is_prime


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class TowerSpec:
    p: int
    mode: str = "cyclic"
    q: int | None = None
    c: int | None = None


DEFAULT_TOWERS = {2: (3, -1), 3: (7, 3), 5: (11, 2)}


class Tower:
    def __init__(self, spec: TowerSpec):
        if not _is_prime(spec.p):
            raise ParameterError(f"p = {spec.p} is not prime")
        self.spec = spec
        self.p = spec.p

        if spec.mode == "cyclic":
            if spec.q is None or spec.c is None:
                raise ParameterError("cyclic tower needs q and c")
            q, p = spec.q, spec.p
            if not _is_prime(q):
                raise ParameterError(f"q = {q} is not prime")
            if (q - 1) % p:
                raise ParameterError(f"p = {p} does not divide q - 1 = {q - 1}")
            c = spec.c % q
            if c == 0 or pow(c, (q - 1) // p, q) == 1:
                raise ParameterError(f"c = {spec.c} is a p-th power in F_{q}")
            self.q = q
            self.c = c
            self.lin = ModQ(q)
            self.omega = next(a for a in range(2, q) if pow(a, p, q) == 1)
        elif spec.mode == "inseparable":
            from sympy.polys.domains import FF
            K = FF(spec.p).frac_field("t")
            (t,) = K.gens
            self.K = K
            self.c = t
            self.lin = GenericField(K.zero, K.one, convert=lambda x: x if hasattr(x, "ring") or hasattr(x, "field") else K.convert(x))
            self.omega = None
        else:
            raise ParameterError(f"unknown tower mode {spec.mode!r}")

        self.theta = self._theta_mat()
        a1 = self.a_ell_basis(1)
        if self.lin.rank(self.flatten_all(a1)) != self.p:
            raise ParameterError("operator basis is degenerate")

    # -- G arithmetic -------------------------------------------------------

    def g_one(self):
        vec = [0] * self.p
        vec[0] = 1
        return self.lin.mat([vec])[0]

    def xi_pow(self, j: int):
        vec = [0] * self.p
        vec[j % self.p] = 1  # callers keep j < p
        return self.lin.mat([vec])[0]

    def g_mul(self, a, b):
        """Product of two G-elements (coefficient vectors)."""
        p = self.p
        lin = self.lin
        if isinstance(lin, ModQ):
            conv = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
            out = conv[:p].copy()
            out[: p - 1] += self.c * conv[p:]
            return out % lin.q
        out = [lin.zero] * p
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                k = i + j
                term = x * y
                if k >= p:
                    k -= p
                    term = term * self.c
                out[k] = out[k] + term
        return out

    def mu_mat(self, g):
        """Multiplication-by-g as a matrix (columns are g * xi^j)."""
        cols = [self.g_mul(g, self.xi_pow(j)) for j in range(self.p)]
        if isinstance(self.lin, ModQ):
            return np.stack(cols, axis=1) % self.lin.q
        return [[cols[j][i] for j in range(self.p)] for i in range(self.p)]

    def _theta_mat(self):
        p = self.p
        if self.spec.mode == "cyclic":
            m = np.zeros((p, p), dtype=np.int64)
            for i in range(p):
                m[i, i] = pow(self.omega, i, self.q)
            return m
        m = self.lin.zeros(p, p)
        for i in range(1, p):
            m[i - 1][i] = self.lin.convert(i)
        return m

    # -- operator algebra ---------------------------------------------------

    def eps(self, strong: bool):
        """Idempotent attached to a point: corner projection when strong,
        the identity operator when weak."""
        if not strong:
            return self.lin.eye(self.p)
        e = self.lin.zeros(self.p, self.p)
        if isinstance(self.lin, ModQ):
            e[0, 0] = 1
        else:
            e[0][0] = self.lin.one
        return e

    def a_ell_basis(self, ell: int) -> list:
        """Spanning operators mu_(xi^j) . theta^i for j < p, i < ell."""
        lin = self.lin
        out = []
        theta_pow = lin.eye(self.p)
        for _ in range(ell):
            for j in range(self.p):
                out.append(lin.matmul(self.mu_mat(self.xi_pow(j)), theta_pow))
            theta_pow = lin.matmul(self.theta, theta_pow)
        return out

    def flatten(self, m):
        if isinstance(self.lin, ModQ):
            return np.asarray(m, dtype=np.int64).reshape(-1) % self.lin.q
        return [x for row in m for x in row]

    def unflatten(self, v):
        p = self.p
        if isinstance(self.lin, ModQ):
            return np.asarray(v, dtype=np.int64).reshape(p, p) % self.lin.q
        return [list(v[i * p:(i + 1) * p]) for i in range(p)]

    def flatten_all(self, mats: list):
        rows = [self.flatten(m) for m in mats]
        if isinstance(self.lin, ModQ):
            return np.stack(rows) if rows else np.zeros((0, self.p * self.p), dtype=np.int64)
        return rows


def build_tower(spec: TowerSpec) -> Tower:
    return Tower(spec)


def default_tower(p: int, mode: str = "cyclic") -> Tower:
    if mode == "inseparable":
        return Tower(TowerSpec(p, "inseparable"))
    if p not in DEFAULT_TOWERS:
        raise ParameterError(f"no default tower for p = {p}; pass q and c explicitly")
    q, c = DEFAULT_TOWERS[p]
    return Tower(TowerSpec(p, "cyclic", q, c))
