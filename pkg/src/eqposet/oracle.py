"""Exact realization of a model's algebra over a field tower.

Each comparable pair (x, y) gets a concrete F-subspace R_{x,y} (operators on
G for flavor r, elements of G for flavor c) whose product is honest algebra
multiplication.  Everything a model claims — hom table entries, the three
axioms of an admissible family, radical shapes, hom dimensions between
projectives — is then re-derived here by linear algebra alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .fields import ParameterError, Tower
from .model import AlgebraModel, Flavor
from .poset import EquippedPoset


class OracleError(RuntimeError):
    pass


@dataclass
class RFamily:
    tower: Tower
    poset: EquippedPoset
    flavor: Flavor
    basis: dict[tuple[str, str], list] = field(default_factory=dict)
    piv: dict[tuple[str, str], list[int]] = field(default_factory=dict)
    unit: dict[str, object] = field(default_factory=dict)

    def dim(self, x: str, y: str) -> int:
        b = self.basis.get((x, y))
        return 0 if b is None else len(b)

    def compose(self, u, v):
        """Product u * v for u in R_{x,y}, v in R_{y,z} (apply u, then v)."""
        t = self.tower
        if self.flavor is Flavor.R:
            return t.flatten(t.lin.matmul(t.unflatten(v), t.unflatten(u)))
        return t.g_mul(u, v)

    def in_span(self, x: str, y: str, vec) -> bool:
        b = self.basis.get((x, y))
        if b is None or len(b) == 0:
            return self.tower.lin.is_zero(self.tower.lin.mat([list(vec)]))
        return self.tower.lin.in_span(b, self.piv[(x, y)], vec)

    def coords(self, x: str, y: str, vec):
        return self.tower.lin.coords(self.basis[(x, y)], self.piv[(x, y)], vec)


def build_family(tower: Tower, P: EquippedPoset, flavor: Flavor | str) -> RFamily:
    flavor = Flavor(flavor)
    lin = tower.lin
    fam = RFamily(tower, P, flavor)
    for x in P.points:
        for y in P.points:
            if not P.leq(x, y):
                continue
            ell = P.ell(x, y)
            if flavor is Flavor.R:
                ex = tower.eps(P.is_strong(x))
                ey = tower.eps(P.is_strong(y))
                gens = [tower.flatten(lin.matmul(lin.matmul(ey, a), ex))
                        for a in tower.a_ell_basis(ell)]
            else:
                gens = [list(tower.xi_pow(j)) for j in range(ell)]
            B, piv = lin.rref(lin.mat(gens))
            fam.basis[(x, y)] = B
            fam.piv[(x, y)] = piv
    for x in P.points:
        if flavor is Flavor.R:
            fam.unit[x] = tower.flatten(tower.eps(P.is_strong(x)))
        else:
            fam.unit[x] = list(tower.g_one())
    return fam


def verify_dims(fam: RFamily, M: AlgebraModel) -> list[str]:
    bad = []
    P = fam.poset
    for x in P.points:
        for y in P.points:
            if P.leq(x, y) and fam.dim(x, y) != M.hom_dim(x, y):
                bad.append(f"dim R_({x},{y}) = {fam.dim(x, y)}, table says {M.hom_dim(x, y)}")
    return bad


def _row(lin, vec):
    return lin.mat([list(vec)])[0]


def _solve(lin, cols: list, rhs):
    """One solution c of sum c_k cols[k] = rhs, or None."""
    if not cols:
        return None if not lin.is_zero(lin.mat([list(rhs)])) else []
    rows = [list(v) for v in cols] + [list(rhs)]
    # kernel vectors of the stacked matrix with a nonzero last coefficient
    # encode solutions of the inhomogeneous system
    ker = lin.nullspace(_transpose(lin, lin.mat(rows)))
    for k in _iter_rows(ker):
        last = k[len(cols)]
        if last:
            return [_neg_div(lin, k[i], last) for i in range(len(cols))]
    return None


def _transpose(lin, A):
    import numpy as np
    if isinstance(A, np.ndarray):
        return A.T.copy()
    return [list(col) for col in zip(*A)] if A else A


def _iter_rows(M):
    import numpy as np
    if isinstance(M, np.ndarray):
        return [M[i] for i in range(M.shape[0])]
    return M


def _neg_div(lin, a, b):
    import numpy as np
    if hasattr(lin, "q"):
        return (-int(a) * pow(int(b), -1, lin.q)) % lin.q
    return (lin.zero - a) / b


MAX_DIVISION_ENUM = 5000


@dataclass
class AdmReport:
    a1_failures: list[str] = field(default_factory=list)
    a2_failures: list[str] = field(default_factory=list)
    a3_failures: list[str] = field(default_factory=list)
    division_exhaustive: bool = True

    @property
    def ok(self) -> bool:
        return not (self.a1_failures or self.a2_failures or self.a3_failures)

    def __str__(self) -> str:
        if self.ok:
            mode = "exhaustive" if self.division_exhaustive else "structural"
            return f"admissible (division check {mode})"
        out = []
        for tag, fails in (("A.1", self.a1_failures), ("A.2", self.a2_failures),
                           ("A.3", self.a3_failures)):
            for f in fails:
                out.append(f"{tag}: {f}")
        return "\n".join(out)


def verify_admissible(fam: RFamily) -> AdmReport:
    P = fam.poset
    lin = fam.tower.lin
    rep = AdmReport()

    comp = [(x, y) for x in P.points for y in P.points if P.leq(x, y)]

    # A.1 — products land in the right member, including the reflexive cases
    for (x, y) in comp:
        for z in P.points:
            if not P.leq(y, z):
                continue
            for u in _iter_rows(fam.basis[(x, y)]):
                for v in _iter_rows(fam.basis[(y, z)]):
                    w = fam.compose(u, v)
                    if not fam.in_span(x, z, w):
                        rep.a1_failures.append(f"R_({x},{y}) * R_({y},{z}) leaves R_({x},{z})")
                        break
                else:
                    continue
                break

    # A.2 — units act as identities and every nonzero local element divides
    for x in P.points:
        ux = fam.unit[x]
        if not fam.in_span(x, x, ux):
            rep.a2_failures.append(f"unit of R_{x} is not in the member")
            continue
        for (a, y) in comp:
            if a != x:
                continue
            for u in _iter_rows(fam.basis[(x, y)]):
                if not lin.eq(lin.mat([list(fam.compose(ux, u))]), lin.mat([list(u)])):
                    rep.a2_failures.append(f"unit of R_{x} does not fix R_({x},{y}) on the left")
                uy = fam.unit[y]
                if not lin.eq(lin.mat([list(fam.compose(u, uy))]), lin.mat([list(u)])):
                    rep.a2_failures.append(f"unit of R_{y} does not fix R_({x},{y}) on the right")
        basis = _iter_rows(fam.basis[(x, x)])
        d = len(basis)
        if d == 0:
            rep.a2_failures.append(f"R_{x} is zero")
            continue
        if hasattr(lin, "q") and lin.q ** d <= MAX_DIVISION_ENUM:
            coeff_sets = itertools.product(range(lin.q), repeat=d)
        else:
            rep.division_exhaustive = False
            coeff_sets = (tuple(1 if i == k else 0 for i in range(d)) for k in range(d))
        for coeffs in coeff_sets:
            if not any(coeffs):
                continue
            e = None
            for ck, bk in zip(coeffs, basis):
                if not ck:
                    continue
                term = lin.smul(ck, lin.mat([list(bk)]))[0]
                e = term if e is None else lin.add(lin.mat([list(e)]), lin.mat([list(term)]))[0]
            cols = [fam.compose(e, bk) for bk in basis]
            sol = _solve(lin, cols, ux)
            if sol is None:
                rep.a2_failures.append(f"element of R_{x} has no right inverse")
                break
            inv = None
            for ck, bk in zip(sol, basis):
                term = lin.smul(ck, lin.mat([list(bk)]))[0]
                inv = term if inv is None else lin.add(lin.mat([list(inv)]), lin.mat([list(term)]))[0]
            if not lin.eq(lin.mat([list(fam.compose(inv, e))]), lin.mat([list(ux)])):
                rep.a2_failures.append(f"right inverse in R_{x} is not two-sided")
                break

    # A.3 — below the maximum, nothing multiplies everything above to zero
    for (x, y) in comp:
        if y == P.max:
            continue
        uppers = [l for l in P.points if P.leq(y, l) and l != y]
        d = fam.dim(x, y)
        if d == 0:
            continue
        rows = []
        for u in _iter_rows(fam.basis[(x, y)]):
            img: list = []
            for l in uppers:
                for v in _iter_rows(fam.basis[(y, l)]):
                    img.extend(list(fam.compose(u, v)))
            rows.append(img)
        if not rows[0]:
            rep.a3_failures.append(f"R_({x},{y}) has nothing above to hit")
            continue
        kernel = lin.nullspace(_transpose(lin, lin.mat(rows)))
        if len(_iter_rows(kernel)) > 0:
            rep.a3_failures.append(f"nonzero element of R_({x},{y}) kills everything above {y}")
    return rep


def _action_matrix(fam: RFamily, base: str, l: str, lp: str, s):
    """Right multiplication by s in R_{l,lp} from the (base,l) block to (base,lp)."""
    P = fam.poset
    if not P.leq(base, l):
        return []
    cols = []
    for b in _iter_rows(fam.basis[(base, l)]):
        w = fam.compose(b, s)
        if not fam.in_span(base, lp, w):
            raise OracleError(f"product from R_({base},{l}) by R_({l},{lp}) leaves the family")
        cols.append(list(fam.coords(base, lp, w)))
    # transpose: entry [r][c] maps basis c of block l to coefficient r in block lp
    return [list(col) for col in zip(*cols)] if cols and cols[0] else [[] for _ in range(0)]


def _grade_preserving_hom_dim(fam: RFamily, i: str, j: str, blocks: list[str]) -> int:
    """dim of {phi : e_i A -> e_j A, A-linear and block-graded}, blocks given."""
    P = fam.poset
    lin = fam.tower.lin
    d = {l: fam.dim(i, l) for l in blocks}
    e = {l: fam.dim(j, l) for l in blocks}
    offset: dict[str, int] = {}
    N = 0
    for l in blocks:
        offset[l] = N
        N += e[l] * d[l]
    if N == 0:
        return 0

    zero, one = 0, 1
    generic = not hasattr(lin, "q")
    if generic:
        zero, one = lin.zero, lin.one

    rows = []
    for l in blocks:
        if d[l] == 0:
            continue
        for lp in blocks:
            if not P.leq(l, lp):
                continue
            for s in _iter_rows(fam.basis[(l, lp)]):
                Si = _action_matrix(fam, i, l, lp, s)       # d[lp] x d[l]
                Sj = _action_matrix(fam, j, l, lp, s) if e[l] else []  # e[lp] x e[l]
                for rp in range(e[lp]):
                    for c in range(d[l]):
                        row = [zero] * N
                        for k in range(d[lp]):
                            row[offset[lp] + rp * d[lp] + k] = Si[k][c] if Si else zero
                        for k in range(e[l]):
                            val = Sj[rp][k]
                            cur = row[offset[l] + k * d[l] + c]
                            row[offset[l] + k * d[l] + c] = cur - val if generic else cur - int(val)
                        rows.append(row)
    if not rows:
        return N
    kernel = lin.nullspace(lin.mat(rows))
    return len(_iter_rows(kernel))


def oracle_hom_dim(fam: RFamily, i: str, j: str) -> int:
    """dim Hom(e_i A, e_j A) recomputed from the realization alone."""
    P = fam.poset
    blocks = [l for l in P.points if P.leq(i, l)]
    return _grade_preserving_hom_dim(fam, i, j, blocks)


@dataclass(frozen=True)
class OracleRadical:
    point: str
    end_dim: int
    block_dims: dict[str, int]
    multiplicity: int | None
    end_kind: str | None  # "F" | "G" | None when the shape is not recognized


def oracle_radical(fam: RFamily, i: str) -> OracleRadical:
    P = fam.poset
    p = fam.tower.p
    if i == P.max:
        raise OracleError("the radical at the maximal point is zero")
    blocks = [l for l in P.points if P.leq(i, l) and l != i]
    end_dim = _grade_preserving_hom_dim(fam, i, i, blocks)
    dims = {l: fam.dim(i, l) for l in blocks}
    if end_dim == p * p:
        mult, kind = p, "F"
    elif end_dim == p:
        mult, kind = 1, "G"
    elif end_dim == 1:
        mult, kind = 1, "F"
    else:
        mult, kind = None, None
    return OracleRadical(i, end_dim, dims, mult, kind)


@dataclass
class OracleReport:
    flavor: str
    dim_mismatches: list[str] = field(default_factory=list)
    adm: AdmReport = field(default_factory=AdmReport)
    radical_mismatches: list[str] = field(default_factory=list)
    hom_mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.dim_mismatches or self.radical_mismatches
                    or self.hom_mismatches) and self.adm.ok

    def __str__(self) -> str:
        lines = [f"flavor {self.flavor}:"]
        lines.append(f"  member dimensions: {'ok' if not self.dim_mismatches else 'FAIL'}")
        lines += [f"    {m}" for m in self.dim_mismatches]
        lines.append(f"  admissibility: {'ok' if self.adm.ok else 'FAIL'}"
                     + ("" if self.adm.division_exhaustive else " (structural division check)"))
        if not self.adm.ok:
            lines += [f"    {l}" for l in str(self.adm).splitlines()]
        lines.append(f"  radicals: {'ok' if not self.radical_mismatches else 'FAIL'}")
        lines += [f"    {m}" for m in self.radical_mismatches]
        lines.append(f"  hom dimensions: {'ok' if not self.hom_mismatches else 'FAIL'}")
        lines += [f"    {m}" for m in self.hom_mismatches]
        return "\n".join(lines)


def run_verification(M: AlgebraModel, tower: Tower) -> OracleReport:
    from .model import radical_info

    P = M.poset
    if tower.p != P.p:
        raise ParameterError(f"tower is for p = {tower.p}, poset has p = {P.p}")
    fam = build_family(tower, P, M.flavor)
    rep = OracleReport(flavor=M.flavor.value)
    rep.dim_mismatches = verify_dims(fam, M)
    rep.adm = verify_admissible(fam)

    for x in P.points:
        if x == P.max:
            continue
        orad = oracle_radical(fam, x)
        info = radical_info(M, x)
        for l, dim in orad.block_dims.items():
            want = info.multiplicity * info.udimF[P.index[l]]
            if dim != want:
                rep.radical_mismatches.append(
                    f"rad(e_{x} A) has dim {dim} at {l}, table says {want}")
        expected_end = info.multiplicity ** 2 * M.kdim(info.label)
        if orad.end_dim != expected_end:
            rep.radical_mismatches.append(
                f"End rad(e_{x} A) has dim {orad.end_dim}, table says {expected_end}")
        elif orad.multiplicity is not None:
            if orad.multiplicity != info.multiplicity or \
                    M.label_of_end(orad.end_kind) != info.label:
                rep.radical_mismatches.append(
                    f"rad(e_{x} A) decided as {orad.multiplicity} x {orad.end_kind}, "
                    f"table says {info.multiplicity} x {info.label.value}")

    for i in P.points:
        for j in P.points:
            got = oracle_hom_dim(fam, i, j)
            want = M.hom_dim(j, i)
            if got != want:
                rep.hom_mismatches.append(
                    f"dim Hom(e_{i} A, e_{j} A) = {got}, table says {want}")
    return rep
