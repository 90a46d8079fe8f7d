import itertools
from math import comb

import pytest

from app.algebra.core import Composition, LinComb, compositions
from app.algebra.words import (
    Word,
    comp_to_word,
    concat,
    double_shuffle_delta,
    is_admissible_word,
    ohno_action,
    shuffle,
    shuffle_lincomb,
    stuffle_words,
    tau,
    tau_lincomb,
    word_to_comp,
    words_of_weight,
)
from app.core.exceptions import InvalidArgumentError, ParseError

def W(letters: str) -> LinComb:
    return LinComb({Word(letters): 1})

def all_words(max_length: int):
    return [Word("".join(p)) for n in range(max_length + 1) for p in itertools.product("xy", repeat=n)]

def test_word_validation() -> None:
    with pytest.raises(InvalidArgumentError):
        Word("xz")
    with pytest.raises(ParseError) as info:
        Word.parse(" xz")
    assert info.value.position == 2
    assert Word("xxy").weight == 3
    assert Word("xyy").depth == 2

def test_shuffle_example() -> None:
    assert shuffle(Word("xy"), Word("xy")) == LinComb({Word("xxyy"): 4, Word("xyxy"): 2})
    assert shuffle(Word(), Word("xy")) == W("xy")

def test_shuffle_is_commutative_with_binomial_term_count() -> None:
    words = all_words(3)
    for u in words:
        for v in words:
            product = shuffle(u, v)
            assert product == shuffle(v, u)
            assert sum(product.coefficient(w) for w in product.support()) == comb(len(u) + len(v), len(u))

def test_shuffle_is_associative() -> None:
    words = all_words(2)
    for u in words:
        for v in words:
            for w in words:
                left = shuffle_lincomb(shuffle(u, v), LinComb({w: 1}))
                right = shuffle_lincomb(LinComb({u: 1}), shuffle(v, w))
                assert left == right

def test_tau() -> None:
    assert tau(Word("xxy")) == Word("xyy")
    assert tau(Word()) == Word()
    for word in all_words(5):
        assert tau(tau(word)) == word
        assert is_admissible_word(tau(word)) == is_admissible_word(word)

def test_tau_is_antiautomorphism() -> None:
    for u in all_words(2):
        for v in all_words(2):
            assert tau_lincomb(concat(LinComb({u: 1}), LinComb({v: 1}))) == LinComb({tau(v) + tau(u): 1})
            assert tau_lincomb(shuffle(u, v)) == shuffle(tau(u), tau(v))

@pytest.mark.parametrize(
    "parts, letters",
    [((), ""), ((2,), "xy"), ((3,), "xxy"), ((1, 2), "xyy"), ((1, 1, 3), "xxyyy")],
)
def test_comp_word_correspondence(parts, letters) -> None:
    assert comp_to_word(Composition(parts)) == Word(letters)
    assert word_to_comp(Word(letters)) == Composition(parts)

def test_comp_word_bijection() -> None:
    for n in range(2, 7):
        admissible = [comp for comp in compositions(n) if comp.parts[-1] > 1]
        words = {comp_to_word(comp) for comp in admissible}
        assert words == set(words_of_weight(n))
        assert all(word_to_comp(comp_to_word(comp)) == comp for comp in admissible)

def test_comp_to_word_rejects_divergent_index() -> None:
    with pytest.raises(InvalidArgumentError):
        comp_to_word(Composition.of(2, 1))
    with pytest.raises(InvalidArgumentError):
        word_to_comp(Word("yx"))

def test_words_of_weight() -> None:
    assert words_of_weight(0) == [Word()]
    assert words_of_weight(1) == []
    assert words_of_weight(3) == [Word("xxy"), Word("xyy")]
    assert len(words_of_weight(6)) == 2 ** 4

def test_ohno_action() -> None:
    assert ohno_action(0, Word("xyy")) == W("xyy")
    assert ohno_action(1, Word("xy")) == W("xxy")
    assert ohno_action(1, Word("xyy")) == W("xxyy") + W("xyxy")
    assert ohno_action(2, Word("xyy")) == W("xxxyy") + W("xxyxy") + W("xyxxy")

def test_ohno_action_preconditions() -> None:
    with pytest.raises(InvalidArgumentError):
        ohno_action(-1, Word("xy"))
    with pytest.raises(InvalidArgumentError):
        ohno_action(1, Word())
    with pytest.raises(InvalidArgumentError):
        ohno_action(1, Word("yx"))

def test_stuffle_words() -> None:
    assert stuffle_words(Word("xy"), Word("xy")) == 2 * W("xyxy") + W("xxxy")

def test_double_shuffle_delta() -> None:
    assert double_shuffle_delta(Word("xy"), Word("xy")) == 4 * W("xxyy") - W("xxxy")
    with pytest.raises(InvalidArgumentError):
        double_shuffle_delta(Word("xy"), Word("yy"))
