"""Smoke tests for the python bindings against the built extension."""

import pytest

import ccbox

IDENTITY = "fun (x : {} Top) => x"
SELFAPP = "let f = fun (x : {} Top) => x in f f"


def test_version():
    assert ccbox.__version__


def test_identity_type():
    assert ccbox.infer_type(IDENTITY) == "{} (x0 : {} Top) -> {x0} Top"


def test_selfapp_eval_rules():
    result = ccbox.eval_program(SELFAPP, trace=True)
    assert result["status"] == "answer"
    assert result["rules"] == ["LET", "LIFT", "APP"]
    assert len(result["trace"]) == 3
    assert result["trace"][0].startswith("step 1 [LET] ")


def test_escaping_variable_rejected():
    result = ccbox.check(SELFAPP)
    assert not result["ok"]
    assert result["exit_code"] == 1
    assert result["diagnostics"][0]["code"] == "E_ESCAPING_VARIABLE"


def test_pretty_roundtrip():
    printed = ccbox.pretty(SELFAPP)
    assert printed == "let x0 = fun (x0 : {} Top) => x0 in x0 x0"
    assert ccbox.pretty(printed) == printed


def test_subtype_universal_top():
    assert ccbox.subtype("{} Top", "{*} Top")
    assert not ccbox.subtype("{*} Top", "{} Top")
    assert ccbox.subtype("(x : {*} Top) -> {} Top", "(x : {} Top) -> {} Top")


def test_pure_judgment():
    assert ccbox.check_pure("box {*} Top")
    assert not ccbox.check_pure("{*} Top")
    assert ccbox.check_type("{*} Top")


def test_parse_error_raises():
    with pytest.raises(ValueError):
        ccbox.infer_type("let = in")


def test_stuck_program():
    src = "let a = fun (x : {} Top) => x in let b = box a in b a"
    result = ccbox.eval_program(src)
    assert result["status"] == "stuck"
    assert "reason" in result


def test_fuzz_smoke():
    result = ccbox.fuzz(seed=1, count=5)
    assert result["passed"]
    assert any(e["property"] == "preservation" for e in result["entries"])
