import json
import shutil
import subprocess
import sys

import pytest

from hopfrb import fixtures as F
from hopfrb.cli import main
from hopfrb.formats import (
    FormatError,
    action_from_dict,
    action_to_dict,
    algebra_from_dict,
    algebra_to_dict,
    coaction_from_dict,
    coaction_to_dict,
    dumps,
    load_algebra,
    map_from_dict,
    map_to_dict,
    read_json,
)
from hopfrb.hopf import tensor_product_hopf
from hopfrb.scalars import PrimeField

CANONICAL_ALGEBRAS = [
    "kC1.alg.json", "kC2.alg.json", "kC3.alg.json", "kS3.alg.json", "kdualC1.alg.json",
    "kdualC2.alg.json", "kdualC3.alg.json", "kdualS3.alg.json", "c3-bad-antipode.alg.json",
]


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


# -- schema -----------------------------------------------------------------------

@pytest.mark.parametrize("name", CANONICAL_ALGEBRAS)
def test_algebra_round_trip_is_byte_identical(name):
    path = F.fixture_path(name)
    assert dumps(algebra_to_dict(load_algebra(path))) == path.read_text(encoding="utf-8")


@pytest.mark.parametrize("stem", ["c3-c2-right", "c3-c2-left", "s3-grading"])
def test_inline_action_round_trip(stem):
    d = action_to_dict(F.action(f"{stem}.action.json"))
    assert dumps(action_to_dict(action_from_dict(json.loads(dumps(d))))) == dumps(d)


@pytest.mark.parametrize("stem", ["c3-c2-dual", "c3-c2-dual-left", "s3-diagonal"])
def test_inline_coaction_round_trip(stem):
    d = coaction_to_dict(F.coaction(f"{stem}.coaction.json"))
    assert dumps(coaction_to_dict(coaction_from_dict(json.loads(dumps(d))))) == dumps(d)


def test_map_round_trip(kC3):
    op, kind, alg = F.linear_map("R-swap-c3.map.json")
    d = map_to_dict(op, kind, alg.field, algebra=alg, name="R-swap-c3")
    op2, kind2, alg2 = map_from_dict(json.loads(dumps(d)))
    assert op2 == op and kind2 == kind and alg2.same_structure(kC3)
    assert dumps(map_to_dict(op2, kind2, alg2.field, algebra=alg2, name="R-swap-c3")) == dumps(d)


def test_coefficients_are_exact_strings(kC3):
    d = algebra_to_dict(kC3)
    assert all(isinstance(e["c"], str) for e in d["mult"])


def test_images_shorthand(kC3):
    op, _, _ = map_from_dict({"images": [0, 2, 1], "kind": "operator"})
    assert op == F.linear_map("R-swap-c3.map.json")[0]


def _corrupt(d, key, value):
    d = json.loads(json.dumps(d))
    d["mult"][0][key] = value
    return d


def test_zero_denominator_names_field(kC2):
    with pytest.raises(FormatError, match=r"mult\[0\]"):
        algebra_from_dict(_corrupt(algebra_to_dict(kC2), "c", "1/0"))


def test_float_coefficient_rejected(kC2):
    with pytest.raises(FormatError):
        algebra_from_dict(_corrupt(algebra_to_dict(kC2), "c", 0.5))


def test_index_out_of_range(kC2):
    with pytest.raises(FormatError, match="out of range"):
        algebra_from_dict(_corrupt(algebra_to_dict(kC2), "k", 7))


def test_shorthand_and_explicit_are_exclusive(kC2):
    d = algebra_to_dict(kC2)
    d["group"] = "C2"
    d["build"] = "group_algebra"
    with pytest.raises(FormatError):
        algebra_from_dict(d)


def test_field_override_on_load():
    H = F.algebra("kS3.alg.json", field=PrimeField(5))
    assert H.field == PrimeField(5)


def test_missing_and_invalid_files(tmp_path):
    with pytest.raises(FormatError):
        read_json(tmp_path / "nope.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    with pytest.raises(FormatError):
        read_json(bad)


# -- fixture directory ------------------------------------------------------------------

def test_fixture_directory_override(tmp_path, monkeypatch, capsys):
    shutil.copy(F.fixture_path("kC2.alg.json"), tmp_path / "only.alg.json")
    monkeypatch.setenv(F.ENV_VAR, str(tmp_path))
    assert F.list_fixtures() == ["only.alg.json"]
    code, rep = run_json(capsys, "check-hopf", "only.alg.json")
    assert code == 0 and rep["passed"]
    code, rep = run_json(capsys, "check-hopf", "kS3.alg.json")
    assert code == 2 and rep["error"] == "input"


# -- command line --------------------------------------------------------------------------

def test_check_hopf_exit_codes(capsys, tmp_path):
    code, rep = run_json(capsys, "check-hopf", "kS3.alg.json")
    assert code == 0 and rep["passed"]

    code, rep = run_json(capsys, "check-hopf", "c3-bad-antipode.alg.json")
    assert code == 1
    assert rep["failed"] == ["antipode"]
    check = next(c for c in rep["checks"] if c["label"] == "antipode")
    assert "witness" in check

    bad = tmp_path / "bad.alg.json"
    bad.write_text(dumps(_corrupt(read_json(F.fixture_path("kC2.alg.json")), "c", "1/0")), encoding="utf-8")
    code, rep = run_json(capsys, "check-hopf", bad)
    assert code == 2 and rep["error"] == "input"
    assert "mult[0]" in rep["message"]


def test_check_hopf_over_prime_field(capsys):
    code, rep = run_json(capsys, "check-hopf", "--field", "gf:7", "kS3.alg.json")
    assert code == 0


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["check-conditions", "c3-c2-right.action.json"])
    assert err.value.code == 2


def test_smash_output_verifies(capsys, tmp_path):
    out = tmp_path / "smash.alg.json"
    code, alg = run_json(capsys, "smash", "--out", out, "c3-c2-right.action.json")
    assert code == 0 and len(alg["basis"]) == 6
    assert alg["provenance"]["construction"] == "lr_smash_product"
    code, rep = run_json(capsys, "check-hopf", out)
    assert code == 0 and rep["passed"]


def test_smash_three_path_form(capsys):
    code, alg = run_json(capsys, "smash", "kC3.alg.json", "kC2.alg.json", "c3-c2-right.action.json")
    assert code == 0 and len(alg["basis"]) == 6


def test_smash_of_trivial_action_is_tensor_product(capsys, trivial_act):
    code, alg = run_json(capsys, "smash", "c3-c2-trivial.action.json")
    assert code == 0
    assert algebra_from_dict(alg).same_structure(tensor_product_hopf(trivial_act.A, trivial_act.H))


def test_smash_of_bad_action_is_precondition(capsys):
    code, rep = run_json(capsys, "smash", "s3-grading.action.json")
    assert code == 3 and rep["error"] == "precondition"
    assert "left-comult" in rep["report"]["failed"]


def test_cosmash_output(capsys, tmp_path):
    out = tmp_path / "cosmash.alg.json"
    code, alg = run_json(capsys, "cosmash", "--out", out, "c3-c2-dual.coaction.json")
    assert code == 0 and len(alg["basis"]) == 6
    assert load_algebra(out).is_commutative
    code, rep = run_json(capsys, "check-hopf", out)
    assert code == 0


def test_check_action_and_coaction(capsys):
    assert run_json(capsys, "check-action", "c3-c2-right.action.json")[0] == 0
    assert run_json(capsys, "check-coaction", "c3-c2-dual.coaction.json")[0] == 0
    code, rep = run_json(capsys, "check-coaction", "s3-diagonal.coaction.json")
    assert code == 1 and "1c" in rep["failed"]
    code, rep = run_json(capsys, "check-action", "c3-c2-dual.coaction.json")
    assert code == 2


def test_lift_then_check_rb(capsys, tmp_path):
    out = tmp_path / "lift.map.json"
    code, _ = run_json(capsys, "lift", "--out", out, "R-counit-c3.map.json", "B-antipode-c2.map.json",
                       "c3-c2-right.action.json")
    assert code == 0
    code, rep = run_json(capsys, "check-rb", out)
    assert code == 0 and rep["passed"]


def test_colift_then_check_corb(capsys, tmp_path):
    out = tmp_path / "colift.map.json"
    code, _ = run_json(capsys, "colift", "--out", out, "R-swap-dualc3.map.json", "B-antipode-dualc2.map.json",
                       "c3-c2-dual.coaction.json")
    assert code == 0
    assert run_json(capsys, "check-corb", out)[0] == 0
    run(capsys, "colift", "--out", out, "R-identity-dualc3.map.json", "B-antipode-dualc2.map.json",
        "c3-c2-dual.coaction.json")
    code, rep = run_json(capsys, "check-corb", out)
    assert code == 1 and rep["failed"] == ["rota-baxter-co"]


def test_check_rb_kind_mismatch_is_precondition(capsys):
    assert run_json(capsys, "check-rb", "B-identity-s3.map.json")[0] == 1
    code, rep = run_json(capsys, "check-corb", "B-identity-s3.map.json")
    assert code == 3 and rep["error"] == "precondition"


def test_check_conditions_cor25(capsys):
    code, rep = run_json(capsys, "check-conditions", "--which", "cor25", "--b", "B-counit-c2.map.json",
                         "c3-c2-left.action.json")
    assert code == 1
    assert "COR25-B" in rep["failed"]
    check = next(c for c in rep["checks"] if c["label"] == "COR25-B")
    assert check["witness"]["inputs"] == [1, 1]
    code, _ = run_json(capsys, "check-conditions", "--which", "cor25", "--b", "B-counit-c2.map.json",
                       "c3-c2-right.action.json")
    assert code == 0


@pytest.mark.parametrize("which,r,b,structure,expected", [
    ("2a2b", "R-swap-c3", "B-antipode-c2", "c3-c2-right.action", 0),
    ("2a2b", "R-identity-c3", "B-antipode-c2", "c3-c2-right.action", 1),
    ("cor24", "R-swap-c3", None, "c3-c2-right.action", 0),
    ("internal", "R-swap-c3", "B-antipode-c2", "c3-c2-right.action", 0),
    ("3c3d", "R-swap-dualc3", "B-antipode-dualc2", "c3-c2-dual.coaction", 0),
    ("internal", "R-identity-dualc3", "B-antipode-dualc2", "c3-c2-dual.coaction", 1),
    ("cor34", "R-identity-dualc3", "B-antipode-dualc2", "c3-c2-dual-left.coaction", 1),
    ("cor34", "R-identity-dualc3", "B-antipode-dualc2", "c3-c2-dual.coaction", 3),
    ("cor35", None, "B-antipode-dualc2", "c3-c2-dual.coaction", 0),
    ("cor36", "R-swap-dualc3", None, "c3-c2-dual.coaction", 0),
    ("cor36", "R-identity-dualc3", None, "c3-c2-dual.coaction", 1),
])
def test_check_conditions_matrix(capsys, which, r, b, structure, expected):
    argv = ["check-conditions", "--which", which]
    if r:
        argv += ["--r", f"{r}.map.json"]
    if b:
        argv += ["--b", f"{b}.map.json"]
    code, rep = run_json(capsys, *argv, f"{structure}.json")
    assert code == expected
    if expected == 1:
        assert rep["failed"]


def test_check_conditions_non_cocommutative_carrier(capsys, tmp_path):
    bmap = tmp_path / "b.map.json"
    bmap.write_text(dumps({"images": [0, 1, 2, 3, 4, 5], "kind": "operator"}), encoding="utf-8")
    rmap = tmp_path / "r.map.json"
    rmap.write_text(dumps({"images": [0, 1, 2, 3, 4, 5], "kind": "operator"}), encoding="utf-8")
    code, rep = run_json(capsys, "check-conditions", "--which", "2a2b", "--r", rmap, "--b", bmap,
                         "s3-grading.action.json")
    assert code == 3 and rep["error"] == "precondition"


def test_check_conditions_input_errors(capsys):
    assert run_json(capsys, "check-conditions", "--which", "cor24", "c3-c2-right.action.json")[0] == 2
    assert run_json(capsys, "check-conditions", "--which", "3c3d", "--r", "R-swap-c3.map.json",
                    "--b", "B-antipode-c2.map.json", "c3-c2-right.action.json")[0] == 2


def test_enumerate_lines(capsys):
    code, out = run(capsys, "enumerate", "--group", "C3")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 3
    assert [x["images"] for x in lines] == [[0, 0, 0], [0, 1, 2], [0, 2, 1]]


def test_enumerate_with_duality(capsys):
    code, out = run(capsys, "enumerate", "--group", "C2", "--duality")
    assert code == 0
    assert all(json.loads(x)["transpose-co-operator"] for x in out.splitlines())


def test_enumerate_errors(capsys):
    assert run_json(capsys, "enumerate", "--group", "Q8x")[0] == 2
    assert run_json(capsys, "enumerate", "--group", "S3", "--bound", "4")[0] == 2


def test_dualize_round_trip(capsys, tmp_path):
    out = tmp_path / "dual.coaction.json"
    code, _ = run_json(capsys, "dualize", "--out", out, "c3-c2-right.action.json")
    assert code == 0
    assert run_json(capsys, "check-coaction", out)[0] == 0
    back = tmp_path / "back.action.json"
    run(capsys, "dualize", "--out", back, out)
    act = F.action("c3-c2-right.action.json")
    again = action_from_dict(read_json(back))
    assert again.left == act.left and again.right == act.right


def test_harness_command(capsys):
    code, out = run(capsys, "harness", "--which", "thm22", "--b", "B-antipode-c2.map.json", "c3-c2-right.action.json")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 28
    summary = lines[-1]["summary"]
    assert summary["equivalent"] and summary["exceptions"] == 0 and summary["candidates"] == 27


def test_harness_command_coaction(capsys):
    code, out = run(capsys, "harness", "--which", "thm33", "--b", "B-antipode-dualc2.map.json",
                    "c3-c2-dual.coaction.json")
    assert code == 0
    assert json.loads(out.splitlines()[-1])["summary"]["equivalent"]


def test_claims_and_fixtures_commands(capsys):
    code, rep = run_json(capsys, "claims")
    assert code == 0 and rep["claims"] == len(rep["agreements"]) + len(rep["discrepancies"])
    code, out = run(capsys, "fixtures")
    assert code == 0 and "kS3.alg.json" in out.split()


@pytest.mark.parametrize("argv", [
    ["smash", "c3-c2-right.action.json"],
    ["lift", "R-swap-c3.map.json", "B-antipode-c2.map.json", "c3-c2-right.action.json"],
    ["check-conditions", "--which", "2a2b", "--r", "R-identity-c3.map.json", "--b", "B-antipode-c2.map.json",
     "c3-c2-right.action.json"],
])
def test_output_is_deterministic(capsys, argv):
    assert run(capsys, *argv) == run(capsys, *argv)


def test_console_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "hopfrb.cli", "enumerate", "--group", "C2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 2
