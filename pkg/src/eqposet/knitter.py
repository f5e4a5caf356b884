"""Knitting the translation-quiver component over the simple projective.

Vertices are identified inside a component by the pair (udimF, label); a
collision when adding a vertex is a loud error, never a silent merge.  The
first section is the fixpoint of attaching projectives whose radical is a
power of an already-placed projective; later sections alternate mesh
completion (in id order) with attachment of projectives whose radical
summand just appeared.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .forms import RatVec
from .model import AlgebraModel, Label, injective_profiles, projective_cd, projective_udimF, radical_info

DEFAULT_MAX_SECTIONS = 12

FINITE = "Finite"
TRUNCATED = "TruncatedAtMaxSections"


class KnitError(RuntimeError):
    pass


@dataclass
class ArVertex:
    id: int
    section: int
    label: Label
    udimF: RatVec
    udim: RatVec
    cd: RatVec | None = None
    proj_point: str | None = None
    inj_point: str | None = None
    vdim: RatVec | None = None

    @property
    def kind(self) -> str:
        if self.proj_point is not None and self.inj_point is not None:
            return f"ProjectiveInjective({self.proj_point},{self.inj_point})"
        if self.proj_point is not None:
            return f"Projective({self.proj_point})"
        if self.inj_point is not None:
            return f"Injective({self.inj_point})"
        return "Regular"


@dataclass(frozen=True)
class ArArrow:
    src: int
    dst: int
    a: int
    b: int


@dataclass
class ComponentGraph:
    flavor: str
    status: str
    vertices: list[ArVertex] = field(default_factory=list)
    arrows: list[ArArrow] = field(default_factory=list)
    sections: list[list[int]] = field(default_factory=list)
    tau_inv: dict[int, int] = field(default_factory=dict)

    def vertex(self, vid: int) -> ArVertex:
        return self.vertices[vid]

    def out_arrows(self, vid: int) -> list[ArArrow]:
        return [a for a in self.arrows if a.src == vid]

    def in_arrows(self, vid: int) -> list[ArArrow]:
        return [a for a in self.arrows if a.dst == vid]


def max_sections_default() -> int:
    env = os.environ.get("EQPOSET_MAX_SECTIONS")
    if env is None:
        return DEFAULT_MAX_SECTIONS
    try:
        v = int(env)
    except ValueError:
        raise KnitError(f"EQPOSET_MAX_SECTIONS must be an integer, got {env!r}")
    if v < 1:
        raise KnitError("EQPOSET_MAX_SECTIONS must be >= 1")
    return v


def _valuation(M: AlgebraModel, src: Label, dst: Label) -> tuple[int, int]:
    p = M.p
    a = p if (M.kdim(dst) == p and M.kdim(src) == 1) else 1
    b = p if (M.kdim(src) == p and M.kdim(dst) == 1) else 1
    return a, b


def knit(M: AlgebraModel, max_sections: int | None = None) -> ComponentGraph:
    if max_sections is None:
        max_sections = max_sections_default()
    if max_sections < 1:
        raise KnitError("max_sections must be >= 1")
    P = M.poset
    profiles = injective_profiles(M)
    prof_key = {(pr.udimF, pr.label): x for x, pr in profiles.items()}
    homdiag = [M.hom[i][i] for i in range(P.n)]
    max_idx = P.index[P.max]

    G = ComponentGraph(flavor=M.flavor.value, status=FINITE)
    seen: dict[tuple[RatVec, Label], int] = {}

    def add_vertex(section: int, label: Label, udimF: RatVec,
                   cd: RatVec | None = None, proj_point: str | None = None) -> ArVertex:
        if not (udimF.is_integral and udimF.is_nonnegative):
            raise KnitError(f"mesh produced a bad dimension vector {udimF}")
        if udimF[max_idx] < 1:
            raise KnitError(f"dimension vector {udimF} misses the socle")
        udim_entries = []
        for k, v in enumerate(udimF):
            q = v / homdiag[k]
            if q.denominator != 1:
                raise KnitError(f"dimension vector {udimF} is not divisible by the local dimensions")
            udim_entries.append(q)
        key = (udimF, label)
        if key in seen:
            raise KnitError(f"vertex identity collision at {udimF} {label.value}")
        v = ArVertex(id=len(G.vertices), section=section, label=label, udimF=udimF,
                     udim=RatVec(tuple(udim_entries)), cd=cd, proj_point=proj_point,
                     inj_point=prof_key.get(key))
        seen[key] = v.id
        G.vertices.append(v)
        G.sections[section].append(v.id)
        return v

    def add_arrow(src: ArVertex, dst: ArVertex) -> ArArrow:
        if src.id >= dst.id:
            raise KnitError("arrow against creation order")
        a, b = _valuation(M, src.label, dst.label)
        ar = ArArrow(src.id, dst.id, a, b)
        G.arrows.append(ar)
        return ar

    placed: set[str] = set()
    inner = [x for x in P.points if x not in (P.zero,)]

    def attach_projectives(section: int) -> None:
        # fixpoint: place e_j A as soon as its radical summand shows up in
        # the section under construction
        changed = True
        while changed:
            changed = False
            for j in inner:
                if j in placed or j == P.max:
                    continue
                info = radical_info(M, j)
                target = seen.get((info.udimF, info.label))
                if target is None:
                    continue
                Z = G.vertices[target]
                if Z.section != section:
                    continue
                if Z.proj_point is not None and info.is_projective != Z.proj_point:
                    raise KnitError(
                        f"radical of {j} matches projective {Z.proj_point} by dimensions "
                        f"but not by equipment")
                label = Label.STRONG if P.is_strong(j) else Label.WEAK
                pj = add_vertex(section, label, projective_udimF(M, j),
                                cd=projective_cd(M, j), proj_point=j)
                ar = add_arrow(Z, pj)
                if ar.a != info.multiplicity:
                    raise KnitError(
                        f"arrow valuation {ar.a} disagrees with radical multiplicity "
                        f"{info.multiplicity} at {j}")
                if Z.cd is None:
                    Z.cd = info.cd
                elif Z.cd != info.cd:
                    raise KnitError(f"coordinate vector mismatch at vertex {Z.id}: "
                                    f"{Z.cd} vs {info.cd}")
                placed.add(j)
                changed = True

    G.sections.append([])
    root = add_vertex(0, Label.STRONG, projective_udimF(M, P.max),
                      cd=projective_cd(M, P.max), proj_point=P.max)
    placed.add(P.max)
    assert root is not None
    attach_projectives(0)

    cur = 0
    while True:
        section_vertices = [G.vertices[i] for i in G.sections[cur]]
        if all(v.inj_point is not None for v in section_vertices):
            G.status = FINITE
            break
        if cur + 1 >= max_sections:
            G.status = TRUNCATED
            break
        G.sections.append([])
        for X in sorted(section_vertices, key=lambda v: v.id):
            if X.inj_point is not None:
                continue
            middles = [G.vertices[a.dst] for a in G.out_arrows(X.id)]
            total = RatVec.zeros(P.n)
            for V in middles:
                mult = M.p if (M.kdim(X.label) == M.p and M.kdim(V.label) == 1) else 1
                total = total + mult * V.udimF
            new_udimF = total - X.udimF
            try:
                Y = add_vertex(cur + 1, X.label, new_udimF)
            except KnitError as e:
                raise KnitError(f"mesh at vertex {X.id} failed: {e}") from None
            G.tau_inv[X.id] = Y.id
            for V in middles:
                add_arrow(V, Y)
        attach_projectives(cur + 1)
        cur += 1
    return G


def derive_v_level(G: ComponentGraph, M: AlgebraModel) -> ComponentGraph:
    """Copy of the component with the complementary-level dimension vector set.

    vdim(X) = c * udimF(e_0 A) - udimF(X) with c = udimF(X)(max)/hom(max, max).
    """
    P = M.poset
    max_idx = P.index[P.max]
    row0 = projective_udimF(M, P.zero)
    out = ComponentGraph(flavor=G.flavor, status=G.status,
                         arrows=list(G.arrows),
                         sections=[list(s) for s in G.sections],
                         tau_inv=dict(G.tau_inv))
    for v in G.vertices:
        c = v.udimF[max_idx] / M.hom_dim(P.max, P.max)
        if c.denominator != 1 or c < 1:
            raise KnitError(f"socle multiplicity {c} at vertex {v.id} is not a positive integer")
        vdim = c * row0 - v.udimF
        if not vdim.is_nonnegative:
            raise KnitError(f"negative complementary dimensions at vertex {v.id}")
        out.vertices.append(replace(v, vdim=vdim))
    return out
