import pytest
from pydantic import ValidationError

from app.core.config import Settings
from app.core.exceptions import InvalidArgumentError
from app.services.formatting import render_summary
from app.services.verification import SUITES, SuiteTally, run_all, run_suite

EXACT_SUITES = [name for name in SUITES if name not in ("mzv-basic", "mzv-relations", "ohno")]

@pytest.fixture
def small_settings() -> Settings:
    return Settings(MAX_DEGREE=3, TRUNCATION_N=10_000, ORACLE_NUM_VARS=4, ORACLE_MAX_DEG=6)

def test_settings_validation() -> None:
    with pytest.raises(ValidationError):
        Settings(MAX_DEGREE=0)
    with pytest.raises(ValidationError):
        Settings(TRUNCATION_N=1)
    with pytest.raises(ValidationError):
        Settings(TOLERANCE=0)
    with pytest.raises(ValidationError):
        Settings(OUTPUT_FORMAT="xml")

def test_suite_tally_caps_failures() -> None:
    tally = SuiteTally("demo")
    for index in range(15):
        tally.check(index % 2 == 0, f"case {index}")
    result = tally.result()
    assert result.checked == 15
    assert not result.passed
    assert len(result.failures) == 7
    assert result.failures[0] == "case 1"

@pytest.mark.parametrize("name", EXACT_SUITES)
def test_exact_suites_pass_at_small_degree(name, small_settings) -> None:
    result = run_suite(name, small_settings)
    assert result.passed, result.failures
    assert result.checked > 0

def test_zeta_suites_pass_at_moderate_truncation(small_settings) -> None:
    summary = run_all(small_settings, ["mzv-basic", "mzv-relations", "ohno"])
    assert summary.passed, [suite.failures for suite in summary.suites]

def test_unknown_suite() -> None:
    with pytest.raises(InvalidArgumentError):
        run_suite("no-such-suite", Settings())

def test_summary_rendering(small_settings) -> None:
    summary = run_all(small_settings, ["words", "gl-algebra"])
    text = render_summary(summary)
    lines = text.splitlines()
    assert lines[0].split() == ["suite", "result", "checks"]
    assert lines[2].startswith("words")
    assert lines[-1] == "overall: PASS (max degree 3)"

def test_runs_are_deterministic(small_settings) -> None:
    first = run_all(small_settings, EXACT_SUITES)
    second = run_all(small_settings, EXACT_SUITES)
    assert first.model_dump() == second.model_dump()

@pytest.mark.slow
def test_full_verification_at_default_settings() -> None:
    summary = run_all(Settings())
    assert [suite.name for suite in summary.suites] == list(SUITES)
    assert summary.passed, [(suite.name, suite.failures) for suite in summary.suites if not suite.passed]

def test_word_suite_reaches_length_eight_round_trips() -> None:
    full = run_suite("words", Settings())
    assert full.passed, full.failures
    shorter = run_suite("words", Settings(MAX_WORD_LENGTH=5))
    assert full.checked > shorter.checked
