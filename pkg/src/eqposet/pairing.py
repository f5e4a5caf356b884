"""The coordinate bijection between the two flavor components.

The scaling maps act coordinatewise by strength: s multiplies weak
coordinates by p, w divides strong coordinates by p (so s = p * w).  A pair
of knitted components matches when projective anchors, tau-orbits, kinds,
labels, both dimension-vector laws and arrow valuations all correspond.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .forms import RatVec
from .knitter import ComponentGraph
from .model import AlgebraModel, Label
from .poset import EquippedPoset


def strengths_of(P: EquippedPoset) -> tuple[bool, ...]:
    return tuple(P.is_strong(x) for x in P.points)


def _scale(strengths: Sequence[bool], v: RatVec, on_strong: bool, factor: Fraction) -> RatVec:
    return RatVec(tuple(x * factor if s == on_strong else x
                        for s, x in zip(strengths, v, strict=True)))


def map_s(p: int, strengths: Sequence[bool], v: RatVec) -> RatVec:
    return _scale(strengths, v, on_strong=False, factor=Fraction(p))


def map_s_inv(p: int, strengths: Sequence[bool], v: RatVec) -> RatVec:
    return _scale(strengths, v, on_strong=False, factor=Fraction(1, p))


def map_w(p: int, strengths: Sequence[bool], v: RatVec) -> RatVec:
    return _scale(strengths, v, on_strong=True, factor=Fraction(1, p))


def map_w_inv(p: int, strengths: Sequence[bool], v: RatVec) -> RatVec:
    return _scale(strengths, v, on_strong=True, factor=Fraction(p))


@dataclass
class PairCheck:
    r_id: int
    c_id: int
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


@dataclass
class PairingReport:
    pairs: list[PairCheck] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems and all(pc.ok for pc in self.pairs)

    def __str__(self) -> str:
        lines = []
        for msg in self.problems:
            lines.append(f"component mismatch: {msg}")
        for pc in self.pairs:
            verdict = "ok" if pc.ok else "FAIL"
            lines.append(f"pair r#{pc.r_id} <-> c#{pc.c_id}: {verdict}")
            lines += [f"    {m}" for m in pc.problems]
        lines.append("correspondence " + ("holds" if self.ok else "FAILS"))
        return "\n".join(lines)


def pair_components(Gr: ComponentGraph, Gc: ComponentGraph,
                    Mr: AlgebraModel, Mc: AlgebraModel) -> PairingReport:
    report = PairingReport()
    P = Mr.poset
    p = P.p
    strengths = strengths_of(P)
    if Mr.poset.points != Mc.poset.points:
        report.problems.append("models live on different posets")
        return report

    if Gr.status != Gc.status:
        report.problems.append(f"statuses differ: {Gr.status} vs {Gc.status}")
    if len(Gr.sections) != len(Gc.sections):
        report.problems.append(f"section counts differ: {len(Gr.sections)} vs {len(Gc.sections)}")
        return report

    proj_c = {v.proj_point: v.id for v in Gc.vertices if v.proj_point is not None}
    matched: dict[int, int] = {}
    queue: list[tuple[int, int]] = []
    for v in Gr.vertices:
        if v.proj_point is None:
            continue
        cid = proj_c.pop(v.proj_point, None)
        if cid is None:
            report.problems.append(f"projective at {v.proj_point} has no counterpart")
            continue
        matched[v.id] = cid
        queue.append((v.id, cid))
    for pt in proj_c:
        report.problems.append(f"projective at {pt} appears only in flavor c")

    while queue:
        x, y = queue.pop()
        tx, ty = Gr.tau_inv.get(x), Gc.tau_inv.get(y)
        if (tx is None) != (ty is None):
            report.problems.append(f"tau-orbit of pair ({x}, {y}) breaks off on one side")
            continue
        if tx is None:
            continue
        if tx in matched:
            if matched[tx] != ty:
                report.problems.append(f"tau-orbits disagree at ({tx}, {ty})")
            continue
        matched[tx] = ty
        queue.append((tx, ty))

    if len(matched) != len(Gr.vertices) or len(set(matched.values())) != len(Gc.vertices):
        report.problems.append(
            f"pairing covers {len(matched)}/{len(Gr.vertices)} flavor-r vertices and "
            f"{len(set(matched.values()))}/{len(Gc.vertices)} flavor-c vertices")

    arrows_c = {(a.src, a.dst): a for a in Gc.arrows}
    for x in sorted(matched):
        y = matched[x]
        vx, vy = Gr.vertex(x), Gc.vertex(y)
        pc = PairCheck(x, y)
        report.pairs.append(pc)
        if vx.kind != vy.kind:
            pc.problems.append(f"kinds differ: {vx.kind} vs {vy.kind}")
        if vx.label != vy.label:
            pc.problems.append(f"labels differ: {vx.label.value} vs {vy.label.value}")
            continue
        want_udimF = (map_w_inv if vx.label is Label.STRONG else map_s_inv)(p, strengths, vx.udimF)
        if vy.udimF != want_udimF:
            pc.problems.append(f"udimF law fails: expected {want_udimF}, got {vy.udimF}")
        want_udim = (map_s if vx.label is Label.STRONG else map_w)(p, strengths, vx.udim)
        if vy.udim != want_udim:
            pc.problems.append(f"udim law fails: expected {want_udim}, got {vy.udim}")
        if vx.section != vy.section:
            pc.problems.append(f"sections differ: {vx.section} vs {vy.section}")
        for ar in Gr.out_arrows(x):
            if ar.dst not in matched:
                continue
            br = arrows_c.get((y, matched[ar.dst]))
            if br is None:
                pc.problems.append(f"arrow {x}->{ar.dst} has no counterpart")
            elif (br.a, br.b) != (ar.b, ar.a):
                pc.problems.append(
                    f"arrow valuations do not swap: ({ar.a},{ar.b}) vs ({br.a},{br.b})")
        out_r = {matched[a.dst] for a in Gr.out_arrows(x) if a.dst in matched}
        out_c = {a.dst for a in Gc.arrows if a.src == y}
        if out_c - out_r:
            pc.problems.append(f"extra flavor-c arrows to {sorted(out_c - out_r)}")
    return report


@dataclass
class TableReport:
    name: str
    n_pairs: int
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __str__(self) -> str:
        if self.ok:
            return f"{self.name}: {self.n_pairs} pairs ok"
        return f"{self.name}: " + "; ".join(self.mismatches)


def check_table_correspondence(table: dict) -> TableReport:
    """Verify a stored grid of (flavor r, flavor c) dimension-vector pairs.

    Table schema: {"name", "p", "strengths": ["weak"|"strong", ...],
    "pairs": [{"pos", "label": "Strong"|"Weak", "r": [...], "c": [...]}]}.
    """
    p = table["p"]
    strengths = tuple(s == "strong" for s in table["strengths"])
    rep = TableReport(table["name"], len(table["pairs"]))
    for pair in table["pairs"]:
        rv = RatVec.from_seq(pair["r"])
        cv = RatVec.from_seq(pair["c"])
        label = Label(pair["label"])
        want = (map_w_inv if label is Label.STRONG else map_s_inv)(p, strengths, rv)
        if want != cv:
            rep.mismatches.append(f"{pair['pos']}: expected {want}, got {cv}")
        if not want.is_integral:
            rep.mismatches.append(f"{pair['pos']}: non-integral image {want}")
    return rep
