import json
from importlib import resources

import pytest

from eqposet import Flavor, build_model, load_poset

FIXTURES = resources.files("eqposet") / "fixtures"
TABLES = resources.files("eqposet") / "tables"

ALL_FIXTURES = [
    "trivial", "star2", "star3", "chain2_strong", "twochain2",
    "twochain2_mixed", "vee2", "wide2", "chain3_ell1", "chain3_ell2",
    "mixed3", "diamond3", "four3",
]
FINITE_FIXTURES = ["trivial", "star2", "star3", "chain2_strong", "twochain2",
                   "twochain2_mixed", "chain3_ell2", "mixed3"]
TABLE_NAMES = ["twopoint2", "twopoint3", "chain3", "reorient3", "wild3"]


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.eqp")


def load_fixture(name: str):
    return load_poset(fixture_path(name))


def load_table(name: str) -> dict:
    return json.loads((TABLES / f"{name}.json").read_text())


def model(name: str, flavor):
    return build_model(load_fixture(name), Flavor(flavor))


@pytest.fixture
def star2():
    return load_fixture("star2")
