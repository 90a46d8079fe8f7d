import json

import pytest

from cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run

@pytest.mark.parametrize(
    "argv, expected",
    [
        (["qsym", "mul", "M(1)", "M(1)"], "2*M(1,1) + M(2)"),
        (["qsym", "antipode", "M(1,1)"], "M(1,1) + M(2)"),
        (["qsym", "coprod", "M(1,2)"], "M()⊗M(1,2) + M(1)⊗M(2) + M(1,2)⊗M()"),
        (["qsym", "expand", "M(1)", "--vars", "2", "--deg", "2"], "t1 + t2"),
        (["nsym", "antipode", "S(2)"], "S(1,1) - S(2)"),
        (["nsym", "mul", "S(1)", "S(2)"], "S(1,2)"),
        (["word", "shuffle", "xy", "xy"], "4*W(xxyy) + 2*W(xyxy)"),
        (["word", "tau", "W(xxy)"], "W(xyy)"),
        (["word", "ohno", "xyy", "--i", "1"], "W(xxyy) + W(xyxy)"),
        (["tree", "mult", "[[][[]]]"], "3"),
        (["tree", "symm", "[[][][]]"], "6"),
        (["tree", "kappa", "2"], "1/2*T[[[][]]] + T[[[[]]]]"),
        (["tree", "glmul", "[[]]", "[[]]"], "T[[[][]]] + T[[[[]]]]"),
        (["tree", "phistar", "T[[[]]]"], "e(1)"),
        (["tree", "coprod", "K[[[]]]"], "K[]⊗K[[[]]] + K[[]]⊗K[[]] + K[[[]]]⊗K[]"),
        (["tree", "antipode", "K[[[]]]"], "K[[][]] - K[[[]]]"),
    ],
)
def test_commands(argv, expected, capsys) -> None:
    assert run(argv) == EXIT_OK
    assert capsys.readouterr().out.strip() == expected

def test_tree_enum(capsys) -> None:
    assert run(["tree", "enum", "4"]) == EXIT_OK
    assert capsys.readouterr().out.split() == ["[[][][]]", "[[][[]]]", "[[[][]]]", "[[[[]]]]"]

def test_json_output(capsys) -> None:
    assert run(["qsym", "mul", "M(1)", "M(1)", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["family"] == "qsym"
    assert payload["element"] == "2*M(1,1) + M(2)"
    assert payload["terms"][0] == {"basis": "M(1,1)", "coefficient": "2"}

def test_parse_error_exit_code(capsys) -> None:
    assert run(["qsym", "mul", "M(1,x)", "M(1)"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "parse error" in err
    assert "    ^" in err

def test_divergent_zeta_is_an_error(capsys) -> None:
    assert run(["mzv", "eval", "M(2,1)"]) == EXIT_USAGE
    assert "diverges" in capsys.readouterr().err

def test_mzv_verify(capsys) -> None:
    assert run(["mzv", "verify", "M(1,2) - M(3)", "--N", "100000"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("pass")
    assert run(["mzv", "verify", "M(2)", "--N", "1000"]) == EXIT_FAILED

def test_mzv_verify_json_uses_pass_key(capsys) -> None:
    assert run(["mzv", "verify", "M(2) - M(2)", "--N", "100", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["pass"] is True
    assert payload["N"] == 100

def test_ohno_needs_weight(capsys) -> None:
    assert run(["mzv", "verify", "--ohno"]) == EXIT_USAGE

def test_verify_single_suite(capsys) -> None:
    assert run(["verify", "all", "--suite", "words", "--max-degree", "3"]) == EXIT_OK
    assert capsys.readouterr().out.strip().splitlines()[-1] == "overall: PASS (max degree 3)"

def test_usage_errors() -> None:
    assert run([]) == EXIT_USAGE
    assert run(["verify", "all", "--max-degree", "0"]) == EXIT_USAGE
    assert run(["verify", "all", "--suite", "nope"]) == EXIT_USAGE
