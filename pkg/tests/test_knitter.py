"""Knitted components: golden graphs, truncation, grid reproduction."""

import pytest

from conftest import ALL_FIXTURES, load_table, model
from eqposet import (FINITE, TRUNCATED, KnitError, derive_v_level, knit)
from eqposet.knitter import max_sections_default


def snap(G):
    return {
        "status": G.status,
        "sections": [list(s) for s in G.sections],
        "vertices": [
            (v.id, v.kind, v.label.letter, v.udimF.as_ints(), v.udim.as_ints(),
             v.cd.as_ints() if v.cd is not None else None)
            for v in sorted(G.vertices, key=lambda v: v.id)
        ],
        "arrows": sorted((a.src, a.dst, a.a, a.b) for a in G.arrows),
    }


def test_star2_flavor_r():
    G = knit(model("star2", "r"))
    assert snap(G) == {
        "status": FINITE,
        "sections": [[0, 1], [2]],
        "vertices": [
            (0, "Projective(m)", "S", (0, 0, 1), (0, 0, 1), (1, 0, 1)),
            (1, "ProjectiveInjective(w,w)", "W", (0, 2, 2), (0, 1, 2), (2, 1, 0)),
            (2, "Injective(0)", "S", (0, 2, 1), (0, 1, 1), None),
        ],
        "arrows": [(0, 1, 2, 1), (1, 2, 1, 2)],
    }


def test_star2_flavor_c():
    G = knit(model("star2", "c"))
    assert snap(G) == {
        "status": FINITE,
        "sections": [[0, 1], [2]],
        "vertices": [
            (0, "Projective(m)", "S", (0, 0, 2), (0, 0, 1), (1, 0, 1)),
            (1, "ProjectiveInjective(w,w)", "W", (0, 1, 2), (0, 1, 1), (1, 1, 0)),
            (2, "Injective(0)", "S", (0, 2, 2), (0, 2, 1), None),
        ],
        "arrows": [(0, 1, 1, 2), (1, 2, 2, 1)],
    }


def test_star3_flavor_r():
    G = knit(model("star3", "r"))
    assert snap(G) == {
        "status": FINITE,
        "sections": [[0, 1], [2, 3], [4]],
        "vertices": [
            (0, "Projective(m)", "S", (0, 0, 1), (0, 0, 1), (1, 0, 1)),
            (1, "Projective(w)", "W", (0, 3, 3), (0, 1, 3), (3, 1, 0)),
            (2, "Regular", "S", (0, 3, 2), (0, 1, 2), None),
            (3, "Injective(w)", "W", (0, 6, 3), (0, 2, 3), None),
            (4, "Injective(0)", "S", (0, 3, 1), (0, 1, 1), None),
        ],
        "arrows": [(0, 1, 3, 1), (1, 2, 1, 3), (2, 3, 3, 1), (3, 4, 1, 3)],
    }


def test_twochain2_flavor_r():
    G = knit(model("twochain2", "r"))
    assert snap(G) == {
        "status": FINITE,
        "sections": [[0, 1, 2], [3, 4], [5]],
        "vertices": [
            (0, "Projective(m)", "S", (0, 0, 0, 1), (0, 0, 0, 1), (1, 0, 0, 1)),
            (1, "Projective(b)", "W", (0, 0, 2, 2), (0, 0, 1, 2), (2, 0, 1, 0)),
            (2, "ProjectiveInjective(a,b)", "W", (0, 2, 2, 2), (0, 1, 1, 2), (2, 1, 0, 0)),
            (3, "Regular", "S", (0, 0, 2, 1), (0, 0, 1, 1), None),
            (4, "Injective(a)", "W", (0, 2, 4, 2), (0, 1, 2, 2), None),
            (5, "Injective(0)", "S", (0, 2, 2, 1), (0, 1, 1, 1), None),
        ],
        "arrows": [(0, 1, 2, 1), (1, 2, 1, 1), (1, 3, 1, 2), (2, 4, 1, 1),
                   (3, 4, 2, 1), (4, 5, 1, 2)],
    }


def test_twochain2_flavor_c():
    G = knit(model("twochain2", "c"))
    assert snap(G) == {
        "status": FINITE,
        "sections": [[0, 1, 2], [3, 4], [5]],
        "vertices": [
            (0, "Projective(m)", "S", (0, 0, 0, 2), (0, 0, 0, 1), (1, 0, 0, 1)),
            (1, "Projective(b)", "W", (0, 0, 1, 2), (0, 0, 1, 1), (1, 0, 1, 0)),
            (2, "ProjectiveInjective(a,b)", "W", (0, 1, 1, 2), (0, 1, 1, 1), (1, 1, 0, 0)),
            (3, "Regular", "S", (0, 0, 2, 2), (0, 0, 2, 1), None),
            (4, "Injective(a)", "W", (0, 1, 2, 2), (0, 1, 2, 1), None),
            (5, "Injective(0)", "S", (0, 2, 2, 2), (0, 2, 2, 1), None),
        ],
        "arrows": [(0, 1, 1, 2), (1, 2, 1, 1), (1, 3, 2, 1), (2, 4, 1, 1),
                   (3, 4, 1, 2), (4, 5, 2, 1)],
    }


def test_chain3_ell2_flavor_r():
    G = knit(model("chain3_ell2", "r"))
    assert snap(G) == {
        "status": FINITE,
        "sections": [[0, 1], [2, 3, 4], [5, 6], [7, 8], [9]],
        "vertices": [
            (0, "Projective(m)", "S", (0, 0, 0, 1), (0, 0, 0, 1), (1, 0, 0, 1)),
            (1, "Projective(b)", "W", (0, 0, 3, 3), (0, 0, 1, 3), (3, 0, 1, 0)),
            (2, "Regular", "S", (0, 0, 3, 2), (0, 0, 1, 2), None),
            (3, "Regular", "W", (0, 0, 6, 3), (0, 0, 2, 3), (3, 0, 2, 0)),
            (4, "ProjectiveInjective(a,b)", "W", (0, 3, 6, 3), (0, 1, 2, 3), (3, 1, 0, 0)),
            (5, "Regular", "S", (0, 0, 3, 1), (0, 0, 1, 1), None),
            (6, "Regular", "W", (0, 3, 9, 3), (0, 1, 3, 3), None),
            (7, "Regular", "S", (0, 3, 6, 2), (0, 1, 2, 2), None),
            (8, "Injective(a)", "W", (0, 6, 9, 3), (0, 2, 3, 3), None),
            (9, "Injective(0)", "S", (0, 3, 3, 1), (0, 1, 1, 1), None),
        ],
        "arrows": [(0, 1, 3, 1), (1, 2, 1, 3), (2, 3, 3, 1), (3, 4, 1, 1),
                   (3, 5, 1, 3), (4, 6, 1, 1), (5, 6, 3, 1), (6, 7, 1, 3),
                   (7, 8, 3, 1), (8, 9, 1, 3)],
    }


def test_mixed3_flavor_r():
    G = knit(model("mixed3", "r"))
    assert snap(G) == {
        "status": FINITE,
        "sections": [[0, 1, 2], [3, 4], [5]],
        "vertices": [
            (0, "ProjectiveInjective(t,s)", "S", (0, 0, 0, 1), (0, 0, 0, 1), (1, 0, 0, 1)),
            (1, "Projective(s)", "S", (0, 0, 1, 1), (0, 0, 1, 1), (1, 0, 1, 0)),
            (2, "Projective(a)", "W", (0, 3, 3, 3), (0, 1, 3, 3), (3, 1, 0, 0)),
            (3, "Regular", "S", (0, 3, 2, 2), (0, 1, 2, 2), None),
            (4, "Injective(a)", "W", (0, 6, 3, 3), (0, 2, 3, 3), None),
            (5, "Injective(0)", "S", (0, 3, 1, 1), (0, 1, 1, 1), None),
        ],
        "arrows": [(0, 1, 1, 1), (1, 2, 3, 1), (2, 3, 1, 3), (3, 4, 3, 1),
                   (4, 5, 1, 3)],
    }


def test_twochain2_mixed_flavor_r():
    G = knit(model("twochain2_mixed", "r"))
    assert snap(G) == {
        "status": FINITE,
        "sections": [[0, 1, 2], [3]],
        "vertices": [
            (0, "ProjectiveInjective(t,s)", "S", (0, 0, 0, 1), (0, 0, 0, 1), (1, 0, 0, 1)),
            (1, "Projective(s)", "S", (0, 0, 1, 1), (0, 0, 1, 1), (1, 0, 1, 0)),
            (2, "ProjectiveInjective(a,a)", "W", (0, 2, 2, 2), (0, 1, 2, 2), (2, 1, 0, 0)),
            (3, "Injective(0)", "S", (0, 2, 1, 1), (0, 1, 1, 1), None),
        ],
        "arrows": [(0, 1, 1, 1), (1, 2, 2, 1), (2, 3, 1, 2)],
    }


def test_chain2_strong_both_flavors():
    Gr = knit(model("chain2_strong", "r"))
    assert snap(Gr) == {
        "status": FINITE,
        "sections": [[0, 1]],
        "vertices": [
            (0, "ProjectiveInjective(m,s)", "S", (0, 0, 1), (0, 0, 1), (1, 0, 1)),
            (1, "ProjectiveInjective(s,0)", "S", (0, 1, 1), (0, 1, 1), (1, 1, 0)),
        ],
        "arrows": [(0, 1, 1, 1)],
    }
    Gc = knit(model("chain2_strong", "c"))
    assert [v.udimF.as_ints() for v in Gc.vertices] == [(0, 0, 2), (0, 2, 2)]
    assert [(a.a, a.b) for a in Gc.arrows] == [(1, 1)]


def test_trivial_both_flavors():
    for fl, vec in (("r", (0, 1)), ("c", (0, 2))):
        G = knit(model("trivial", fl))
        assert G.status == FINITE
        assert len(G.vertices) == 1 and not G.arrows
        v = G.vertices[0]
        assert v.kind == "ProjectiveInjective(m,0)"
        assert v.udimF.as_ints() == vec


# ---------------------------------------------------------------- truncation

def test_truncation_status_and_depth():
    for name in ("vee2", "wide2", "chain3_ell1", "diamond3", "four3"):
        for fl in ("r", "c"):
            G = knit(model(name, fl))
            assert G.status == TRUNCATED, name
            assert len(G.sections) == 12


def test_truncation_prefix_property():
    M = model("chain3_ell1", "r")
    small = knit(M, max_sections=3)
    big = knit(M, max_sections=6)
    assert small.status == TRUNCATED
    assert [list(s) for s in big.sections][:3] == [list(s) for s in small.sections]
    small_ids = {v.id for v in small.vertices}
    big_by_id = {v.id: v for v in big.vertices}
    for v in small.vertices:
        assert big_by_id[v.id].udimF == v.udimF
        assert big_by_id[v.id].label == v.label
    for a in small.arrows:
        if a.src in small_ids and a.dst in small_ids:
            assert a in big.arrows


def test_finite_component_ignores_max_sections():
    M = model("star2", "r")
    assert knit(M, max_sections=50).status == FINITE


def test_max_sections_env_override(monkeypatch):
    monkeypatch.setenv("EQPOSET_MAX_SECTIONS", "4")
    assert max_sections_default() == 4
    G = knit(model("vee2", "r"))
    assert len(G.sections) == 4 and G.status == TRUNCATED
    monkeypatch.setenv("EQPOSET_MAX_SECTIONS", "zero")
    with pytest.raises(KnitError):
        max_sections_default()
    monkeypatch.setenv("EQPOSET_MAX_SECTIONS", "0")
    with pytest.raises(KnitError):
        max_sections_default()


def test_max_sections_argument_must_be_positive():
    with pytest.raises(KnitError):
        knit(model("star2", "r"), max_sections=0)


# ---------------------------------------------------------------- grids

def test_chain3_ell1_reproduces_published_grids():
    """The knitted components carry the shipped correspondence grids in the
    coordinates above the adjoined minimum, section by section."""
    table = load_table("chain3")
    for fl, col in (("r", "r"), ("c", "c")):
        G = knit(model("chain3_ell1", fl), max_sections=4)
        got = []
        for sec in G.sections:
            for i in sec:
                v = G.vertex(i)
                got.append((list(v.udimF.as_ints()[1:]), v.label.value))
        want = [(pair[col], pair["label"]) for pair in table["pairs"]]
        assert got == want


# ---------------------------------------------------------------- structure

def test_ids_and_sections_are_well_formed():
    for name in ALL_FIXTURES:
        for fl in ("r", "c"):
            G = knit(model(name, fl))
            ids = [v.id for v in G.vertices]
            assert ids == sorted(ids) == list(range(len(ids)))
            flat = [i for sec in G.sections for i in sec]
            assert sorted(flat) == list(range(len(ids)))
            for a in G.arrows:
                assert a.src < a.dst
            for k, sec in enumerate(G.sections):
                for i in sec:
                    assert G.vertex(i).section == k


def test_knit_is_deterministic():
    M = model("twochain2", "r")
    assert snap(knit(M)) == snap(knit(M))


def test_tau_inverse_preserves_labels():
    for name in ALL_FIXTURES:
        G = knit(model(name, "r"))
        for src, dst in G.tau_inv.items():
            assert G.vertex(src).label == G.vertex(dst).label


# ---------------------------------------------------------------- v-level

def test_derive_v_level_star2():
    M = model("star2", "r")
    G = derive_v_level(knit(M), M)
    vd = {v.id: v.vdim.as_ints() for v in G.vertices}
    assert vd == {0: (1, 2, 0), 1: (2, 2, 0), 2: (1, 0, 0)}


def test_derive_v_level_properties():
    for name in ("star3", "twochain2", "mixed3", "chain3_ell2"):
        for fl in ("r", "c"):
            M = model(name, fl)
            G0 = knit(M)
            G = derive_v_level(G0, M)
            assert snap(G) == snap(G0)  # graph itself unchanged
            row0 = [M.hom_dim(M.poset.zero, y) for y in M.poset.points]
            hmax = M.hom_dim(M.poset.max, M.poset.max)
            for v in G.vertices:
                assert v.vdim is not None and v.vdim.is_nonnegative
                c = v.udimF[-1] / hmax
                for j in range(len(row0)):
                    assert v.vdim[j] == c * row0[j] - v.udimF[j]
