import json
from fractions import Fraction

import pytest

from app.algebra.core import Composition
from app.algebra.hopf_trees import TElement, kappa
from app.algebra.qsym import M, QSymElement, S, nsym_e_word, qsym_coproduct, sym
from app.core.exceptions import ParseError
from app.services.formatting import (
    dump_json,
    element_payload,
    format_element,
    format_tensor,
    render_table,
)
from app.services.parser import parse_element

def test_parse_qsym() -> None:
    parsed = parse_element("2*M(1,1) + M(2)")
    assert parsed.family == "qsym"
    assert parsed.value == 2 * M(1, 1) + M(2)

def test_parse_leading_sign_and_fractions() -> None:
    value = parse_element("-1/2*M(1) - M()").value
    assert value.coefficient(Composition.of(1)) == Fraction(-1, 2)
    assert value.coefficient(Composition()) == -1

def test_unicode_minus_sign() -> None:
    assert parse_element("M(1,1) − M(2)").value == M(1, 1) - M(2)
    assert parse_element("−1/2*S(1)").value == S(1).scale(Fraction(-1, 2))
    assert parse_element("e(1,1) − e(2)").value == parse_element("e(1,1) - e(2)").value

def test_parse_zero() -> None:
    parsed = parse_element("0")
    assert parsed.family == "qsym"
    assert isinstance(parsed.value, QSymElement)
    assert parsed.value.is_zero()
    assert parse_element(" 0 ", family="t").value == TElement()

def test_e_means_sym_or_nsym() -> None:
    assert parse_element("e(1,1) - e(2)").family == "sym"
    assert parse_element("e(1,1) - e(2)").value == sym("h", 2)
    mixed = parse_element("e(2,1) + S(1)")
    assert mixed.family == "nsym"
    assert mixed.value == nsym_e_word(Composition.of(2, 1)) + S(1)
    assert parse_element("e(2)", family="nsym").family == "nsym"

def test_parse_trees_and_words() -> None:
    assert parse_element("T[[[]]]").value == kappa(1)
    assert parse_element("W(xy) - W(xy)").value.is_zero()
    assert parse_element("K[[][[]]]").family == "hk"
    assert parse_element("F[[[]][]]").family == "hf"

@pytest.mark.parametrize(
    "text, position",
    [
        ("M(1,x)", 4),
        ("T[[]x]", 4),
        ("1/0*M(1)", 2),
        ("M(1) M(2)", 5),
        ("Q(1)", 0),
        ("M(1) + S(1)", 0),
        ("", 0),
    ],
)
def test_parse_errors_carry_position(text, position) -> None:
    with pytest.raises(ParseError) as info:
        parse_element(text)
    assert info.value.position == position
    assert info.value.text == text

def test_forced_family_mismatch() -> None:
    with pytest.raises(ParseError):
        parse_element("M(1)", family="nsym")

def test_parse_tensor() -> None:
    parsed = parse_element("M(1)⊗M(2) - 2*M()#M(1)")
    assert parsed.family == "qsym2"
    assert parsed.value.coefficient((Composition.of(1), Composition.of(2))) == 1
    assert parsed.value.coefficient((Composition(), Composition.of(1))) == -2
    with pytest.raises(ParseError):
        parse_element("h(1)⊗h(1)")
    with pytest.raises(ParseError):
        parse_element("M(1)⊗S(1)")

@pytest.mark.parametrize(
    "text",
    [
        "2*M(1,1) + M(2)",
        "-1/2*S(1) + S(2,1)",
        "W(xxy) - W(xyy)",
        "1/2*T[[[][]]] + T[[[[]]]]",
        "K[[][[]]]",
        "F[[[]][]]",
        "e(1,1) - e(2)",
    ],
)
def test_printed_elements_parse_back(text) -> None:
    parsed = parse_element(text)
    assert format_element(parsed.value, parsed.family) == text

def test_kappa_prints_canonically() -> None:
    assert format_element(kappa(2)) == "1/2*T[[[][]]] + T[[[[]]]]"

def test_tensor_format_round_trip() -> None:
    coproduct = qsym_coproduct(M(1, 2))
    text = format_tensor(coproduct, "qsym")
    assert text == "M()⊗M(1,2) + M(1)⊗M(2) + M(1,2)⊗M()"
    assert parse_element(text).value == coproduct

def test_element_payload() -> None:
    payload = element_payload(2 * M(1))
    assert payload == {
        "family": "qsym",
        "element": "2*M(1)",
        "terms": [{"basis": "M(1)", "coefficient": "2"}],
    }

def test_dump_json_is_stable() -> None:
    text = dump_json({"b": 1, "a": "⊗"})
    assert text.index('"a"') < text.index('"b"')
    assert "⊗" in text
    assert json.loads(text) == {"a": "⊗", "b": 1}

def test_render_table() -> None:
    table = render_table(["suite", "result"], [["words", "PASS"]])
    assert table.splitlines() == ["suite  result", "-----  ------", "words  PASS"]
