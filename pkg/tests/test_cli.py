"""Command-line driver: exit codes, JSON/DOT output, option handling."""

import json

import pytest

from conftest import fixture_path, model
from eqposet import knit
from eqposet.cli import component_to_dict, emit_dot, emit_json, main

BAD_POSET = """\
p 3
point x weak
point y weak
point z weak
rel x y 2
rel y z 2
rel x z 1
"""


@pytest.fixture
def bad_file(tmp_path):
    f = tmp_path / "bad.eqp"
    f.write_text(BAD_POSET)
    return str(f)


def test_validate_ok(capsys):
    assert main(["validate", fixture_path("star2")]) == 0
    assert capsys.readouterr().out.strip() == "valid"


def test_validate_reports_violation(capsys, bad_file):
    assert main(["validate", bad_file]) == 1
    out = capsys.readouterr().out
    assert "violation" in out
    assert "x, y, z" in out  # the witness triple


def test_validate_missing_file(capsys):
    assert main(["validate", "/no/such/file.eqp"]) == 2
    assert "error" in capsys.readouterr().err


def test_knit_rejects_invalid_poset(capsys, bad_file):
    assert main(["knit", bad_file]) == 2
    assert "error" in capsys.readouterr().err


def test_knit_missing_file(capsys):
    assert main(["knit", "/no/such/file.eqp"]) == 2
    assert "error" in capsys.readouterr().err


def test_knit_json_matches_library(capsys):
    assert main(["knit", fixture_path("star2"), "--flavor", "r"]) == 0
    got = json.loads(capsys.readouterr().out)
    want = component_to_dict(knit(model("star2", "r")))
    assert got == want
    assert got["status"] == "Finite"
    assert got["vertices"][0]["udimF"] == ["0", "0", "1"]


def test_emit_json_is_deterministic():
    G1 = knit(model("twochain2", "c"))
    G2 = knit(model("twochain2", "c"))
    assert emit_json(G1) == emit_json(G2)


def test_knit_dot_output(capsys):
    assert main(["knit", fixture_path("star2"), "--flavor", "r",
                 "--format", "dot"]) == 0
    out = capsys.readouterr().out
    G = knit(model("star2", "r"))
    assert out.count("rank=same") == len(G.sections)
    assert out.count(" -> ") == len(G.arrows)
    assert '[label="(2,1)"]' in out
    assert 'v0 [label="0: (0, 0, 1) S"]' in out
    assert out == emit_dot(G)


def test_knit_max_sections_flag(capsys):
    assert main(["knit", fixture_path("vee2"), "--max-sections", "3"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert got["status"] == "TruncatedAtMaxSections"
    assert len(got["sections"]) == 3


def test_knit_max_sections_env(capsys, monkeypatch):
    monkeypatch.setenv("EQPOSET_MAX_SECTIONS", "3")
    assert main(["knit", fixture_path("vee2")]) == 0
    assert len(json.loads(capsys.readouterr().out)["sections"]) == 3
    monkeypatch.setenv("EQPOSET_MAX_SECTIONS", "junk")
    assert main(["knit", fixture_path("vee2")]) == 1
    assert "EQPOSET_MAX_SECTIONS" in capsys.readouterr().err


def test_info_with_forms(capsys):
    assert main(["info", fixture_path("star2"), "--forms"]) == 0
    out = capsys.readouterr().out
    assert "hom table" in out
    assert "w: (0, 2, 2)" in out
    assert "q(cd P_m) = 1" in out
    assert "gram matrix" in out


def test_compare_ok(capsys):
    assert main(["compare", fixture_path("mixed3")]) == 0
    assert "correspondence holds" in capsys.readouterr().out


def test_oracle_default_tower(capsys):
    assert main(["oracle", fixture_path("star2")]) == 0
    out = capsys.readouterr().out
    assert "flavor r:" in out and "flavor c:" in out
    assert out.count("admissibility: ok") == 2


def test_oracle_rejects_bad_parameters(capsys):
    code = main(["oracle", fixture_path("mixed3"), "--q", "5", "--c", "2"])
    assert code == 2
    assert "does not divide" in capsys.readouterr().err


def test_oracle_needs_both_q_and_c(capsys):
    assert main(["oracle", fixture_path("star2"), "--q", "3"]) == 2
    assert "--q and --c" in capsys.readouterr().err


def test_oracle_inseparable(capsys):
    code = main(["oracle", fixture_path("mixed3"), "--flavor", "r",
                 "--mode", "inseparable"])
    assert code == 0
    assert "(structural division check)" in capsys.readouterr().out


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
