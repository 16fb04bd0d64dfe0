import json

import pytest

from modrep.basicsets import DecompMatrixModel
from modrep.scenarios import DATA, SCENARIOS, run_scenario


@pytest.mark.parametrize("path", sorted(DATA.glob("*.json")), ids=lambda p: p.name)
def test_data_files_carry_provenance(path):
    data = json.loads(path.read_text())
    assert "[PAPER]" in data["provenance"] or "[DERIVED]" in data["provenance"]
    if "entries" in data:
        DecompMatrixModel.load(path)


@pytest.mark.parametrize("name", sorted(SCENARIOS))
def test_scenario_passes(name):
    report = run_scenario(name)
    failed = [s["name"] for s in report["steps"] if not s["ok"]]
    assert report["ok"], failed
    assert report["steps"] and report["verdict"] != "FAIL"
    json.dumps(report, default=str)


def test_verdicts():
    assert run_scenario("a18-counterexample")["verdict"] == \
        "no unitriangular 3-basic set for 𝔄_18 principal block"
    assert run_scenario("a19-counterexample")["verdict"] == \
        "no unitriangular 3-basic set for 𝔄_19 block of core (1)"


def test_unknown_scenario():
    with pytest.raises(ValueError):
        run_scenario("s7")
