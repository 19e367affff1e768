"""Command-line interface: output contracts and exit codes."""

import json

import pytest

from permfunc.cli import main
from permfunc.gaussian import GaussianRational
from permfunc.matrices import BlockSpec


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


REF = ["--theta", "(1 5 3)(2 6)", "--tau", "(2 4 6)", "--n", "6"]


def test_det_reference(capsys):
    code, out, _ = run(capsys, "det", "--a", "2", "--b", "-1i", *REF)
    assert code == 0
    assert out.strip() == "-85+30i"


@pytest.mark.parametrize("method", ["closed", "formula", "cauchy-binet", "naive"])
def test_det_all_methods_agree(capsys, method):
    code, out, _ = run(capsys, "det", "--a", "2", "--b", "-1i", "--method", method, *REF)
    assert code == 0
    assert out.strip() == "-85+30i"


def test_xset_reference(capsys):
    code, out, _ = run(capsys, "xset", *REF)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert set(lines) == {"(1 5 3)(2 6)", "(2 4 6)", "(2 6)", "(1 5 3)(2 4 6)"}
    assert lines[0] == "(1 5 3)(2 6)"  # no cycles chosen
    assert lines[-1] == "(2 4 6)"  # all cycles chosen


def test_gmf_subgroup(capsys):
    code, out, _ = run(
        capsys, "gmf", "--a", "1", "--b", "2", *REF,
        "--group", "stab:1,3,5@6", "--character", "trivial",
    )
    assert code == 0
    assert out.strip() == "120"


def test_gmf_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "gmf", "--a", "2", "--b", "-1i", *REF,
        "--group", "S6", "--character", "sign", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "formula"
    assert payload["terms"] == 4
    assert GaussianRational.from_json(payload["value"]) == GaussianRational.parse("-85+30i")


def test_per_command(capsys):
    code, out, _ = run(capsys, "per", "--a", "1", "--b", "1", "--theta", "id",
                       "--tau", "(1 2 3)", "--n", "3")
    assert code == 0
    assert out.strip() == "2"


def test_block_gmf(tmp_path, capsys):
    spec = {
        "m": 4,
        "n": 2,
        "theta": "id",
        "tau": "(1 2)",
        "inner_thetas": ["(1 4 3)", "(1 4)(2 3)"],
        "inner_taus": ["(1 3 2)", "id"],
        "a": ["-1i", "2"],
        "b": ["-2", "3"],
    }
    path = tmp_path / "block.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "block-gmf", "--spec", str(path), "--character", "trivial")
    assert code == 0
    assert out.strip() == "448+1536i"
    code, out, _ = run(capsys, "block-gmf", "--spec", str(path), "--character", "sign")
    assert out.strip() == "448-1536i"
    # spec JSON mirrors its fields and round-trips through the library type
    assert BlockSpec.from_json(spec).to_json()["tau"] == "(1 2)"


def test_s_det(capsys):
    code, out, _ = run(capsys, "s-det", "--theta", "(1 2 3 4 5 6)", "--n", "6")
    assert code == 0
    assert out.strip() == "-4"


def test_psd_output(capsys):
    code, out, _ = run(capsys, "psd", "--a", "1", "--b", "1", "--theta", "id",
                       "--tau", "(1 2)", "--n", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"psd": True, "k": "1", "m": "1", "pi": "(1 2)", "condition": 2}
    code, out, _ = run(capsys, "psd", "--a", "1", "--b", "2", "--theta", "id",
                       "--tau", "(1 2)", "--n", "2")
    assert code == 0
    assert out.strip() == "not PSD"


def test_singvals(capsys):
    code, out, _ = run(capsys, "singvals", "--a", "1", "--b", "1", "--theta", "id",
                       "--tau", "(1 2)", "--n", "2", "--json")
    assert code == 0
    assert json.loads(out)["values"] == [2.0, 0.0]


def test_dominance(capsys):
    code, out, _ = run(capsys, "dominance", "--k", "1", "--m", "1", "--pi", "(1 2)",
                       "--n", "2", "--character", "sign", "--json")
    assert code == 0
    assert json.loads(out) == {"lhs": "0", "rhs": "2", "holds": True}


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--a", "2", "--b", "-1i", *REF,
                       "--group", "S6", "--character", "sign", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] is True
    assert payload["lhs"] == pytest.approx(8125.0)


def test_tensor_check_match(capsys):
    code, out, _ = run(capsys, "tensor-check", "--a", "1", "--b", "1", "--theta", "id",
                       "--tau", "(1 2 3)", "--n", "3", "--group", "S3",
                       "--character", "trivial")
    assert code == 0
    assert "match=True" in out


def test_tensor_check_mismatch_exit_code(capsys):
    # degree-2 irreducible: the raw pairing overcounts, reported as a failure
    code, out, _ = run(capsys, "tensor-check", "--a", "1", "--b", "1", "--theta", "id",
                       "--tau", "(1 2 3)", "--n", "3", "--group", "S3",
                       "--character", "irr:[2,1]")
    assert code == 4
    assert "match=False" in out


def test_bench_smoke(capsys):
    code, out, _ = run(capsys, "bench", "--a", "1", "--b", "2", "--theta", "(1 2)",
                       "--tau", "(2 3)", "--n", "4", "--reps", "1", "--json")
    assert code == 0
    rows = json.loads(out)
    methods = {row["method"] for row in rows}
    assert methods == {"formula", "cauchy-binet", "naive"}
    for row in rows:
        assert row["median_seconds"] >= 0.0
        if row["method"] == "naive":
            assert row["terms"] == 24


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "det", "--a", "oops", "--b", "1", *REF)
    assert code == 2
    assert "parse error" in err


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "gmf", "--a", "1", "--b", "1", *REF,
                       "--group", "S5", "--character", "sign")
    assert code == 3
    assert "degree" in err


def test_unknown_command_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_threads_validation(capsys):
    code, _, err = run(capsys, "--threads", "0", "s-det", "--theta", "id", "--n", "2")
    assert code == 3
