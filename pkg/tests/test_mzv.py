from math import pi

import pytest

from app.algebra.core import Composition, LinComb
from app.algebra.mzv import (
    _nested_sum,
    double_shuffle_relation,
    duality_relation,
    ohno_family,
    verify_relation,
    zeta_of_lincomb,
    zeta_truncated,
)
from app.algebra.qsym import M, qsym_mul
from app.algebra.words import Word
from app.core.exceptions import DivergentSeriesError, InvalidArgumentError

def test_small_truncations_are_exact() -> None:
    value = zeta_truncated(Composition.of(2), 2)
    assert value.value == pytest.approx(1.25)
    assert value.error_estimate == pytest.approx(0.25)
    assert value.truncation_N == 2
    assert zeta_truncated(Composition.of(1, 2), 3).value == pytest.approx(5 / 12)

def test_divergent_index_is_refused() -> None:
    with pytest.raises(DivergentSeriesError) as info:
        zeta_truncated(Composition.of(2, 1), 100)
    assert info.value.term == "M(2,1)"
    with pytest.raises(DivergentSeriesError):
        zeta_of_lincomb(M(3) + M(1), 100)
    with pytest.raises(DivergentSeriesError):
        zeta_of_lincomb(LinComb({Word("yx"): 1}), 100)

def test_truncation_must_be_at_least_two() -> None:
    with pytest.raises(InvalidArgumentError):
        zeta_truncated(Composition.of(2), 1)

def test_words_and_compositions_agree() -> None:
    by_comp = zeta_of_lincomb(M(1, 2), 1000)
    by_word = zeta_of_lincomb(LinComb({Word("xyy"): 1}), 1000)
    assert by_comp.value == by_word.value

def test_empty_index_is_one() -> None:
    assert zeta_of_lincomb(M(), 10).value == 1.0
    assert zeta_of_lincomb(M(2) - M(2), 10).value == 0.0

def test_truncated_zeta_respects_stuffle() -> None:
    N = 10 ** 4
    for a, b in [(M(2), M(3)), (M(2), M(1, 2)), (M(3), M(3))]:
        product = zeta_of_lincomb(qsym_mul(a, b), N).value
        separate = zeta_of_lincomb(a, N).value * zeta_of_lincomb(b, N).value
        assert product == pytest.approx(separate, rel=1e-9)

def test_stuffle_with_weight_four_factors() -> None:
    N = 10 ** 5
    a, b = M(1, 3), M(2, 2)
    product = zeta_of_lincomb(qsym_mul(a, b), N).value
    separate = zeta_of_lincomb(a, N).value * zeta_of_lincomb(b, N).value
    assert abs(product - separate) < 1e-3
    assert product == pytest.approx(separate, rel=1e-9)

def test_sweep_is_bit_reproducible() -> None:
    first = zeta_truncated(Composition.of(1, 1, 3), 5000).value
    _nested_sum.cache_clear()
    assert zeta_truncated(Composition.of(1, 1, 3), 5000).value == first

def test_verify_relation_report() -> None:
    report = verify_relation(M(2) - M(2), 100, 1e-4)
    assert report.passed
    assert report.model_dump(by_alias=True)["pass"] is True
    assert not verify_relation(M(2), 100, 1e-4).passed

def test_duality_relation_shape() -> None:
    assert duality_relation(Word("xyy")) == LinComb({Word("xyy"): 1, Word("xxy"): -1})
    assert duality_relation(Word("xy")).is_zero()

def test_ohno_family() -> None:
    family = ohno_family(4, 1)
    assert [word for word, _ in family] == [Word("xxy"), Word("xyy")]
    assert ohno_family(3, 2) == []
    for _, relation in ohno_family(4, 0):
        assert verify_relation(relation, 10 ** 5, 1e-3).passed

@pytest.mark.slow
def test_zeta_two() -> None:
    value = zeta_truncated(Composition.of(2), 10 ** 6)
    assert abs(value.value - pi ** 2 / 6) <= 2e-6

@pytest.mark.slow
def test_euler_relation() -> None:
    assert verify_relation(M(1, 2) - M(3), 10 ** 6, 1e-4).passed

@pytest.mark.slow
def test_zeta_two_squared() -> None:
    # stuffle and shuffle expansions of zeta(2)^2
    square = zeta_truncated(Composition.of(2), 10 ** 6).value ** 2
    assert zeta_of_lincomb(2 * M(2, 2) + M(4), 10 ** 6).value == pytest.approx(square, rel=1e-9)
    assert zeta_of_lincomb(4 * M(1, 3) + 2 * M(2, 2), 10 ** 6).value == pytest.approx(square, abs=1e-4)
    assert verify_relation(double_shuffle_relation(Word("xy"), Word("xy")), 10 ** 6, 1e-4).passed

@pytest.mark.slow
@pytest.mark.parametrize("i", [0, 1, 2])
def test_ohno_relations_weight_five(i) -> None:
    for _, relation in ohno_family(5, i):
        assert verify_relation(relation, 10 ** 6, 1e-3).passed
