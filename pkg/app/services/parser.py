# File: app/services/parser.py
# Path: hopfbench/app/services/parser.py

"""
Element grammar shared by the CLI and the HTTP API.

    element  := [minus] term (('+' | minus) term)*  |  '0'
    minus    := '-' | '\u2212'
    term     := [rational '*'] basis [('⊗' | '#') basis]
    rational := int | int '/' posint
    basis    := M(comp) | S(comp) | e(comp) | h(part) | m(part) | p(part)
              | W(word) | T[tree] | K[forest] | F[planar forest]

Whitespace is insignificant. e(...) is an elementary symmetric function
unless the element also uses S(...), in which case it is the e-word of NSym.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from app.algebra.core import Composition, LinComb, Partition
from app.algebra.hopf_trees import HFElement, HKElement, TElement
from app.algebra.qsym import NSymElement, QSymElement, SymElement, nsym_e_word
from app.algebra.trees import parse_forest, parse_tree
from app.algebra.words import Word
from app.core.exceptions import AlgebraError, ParseError

FAMILY_OF_TAG = {
    "M": "qsym",
    "S": "nsym",
    "e": "e",
    "h": "sym",
    "m": "sym",
    "p": "sym",
    "W": "word",
    "T": "t",
    "K": "hk",
    "F": "hf",
}

TENSOR_SIGNS = ("⊗", "#")
MINUS_SIGNS = ("-", "\u2212")

@dataclass(frozen=True)
class ParsedElement:
    family: str
    value: LinComb

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, position: Optional[int] = None) -> ParseError:
        return ParseError(message, self.text, self.pos if position is None else position)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, expected: str) -> None:
        if self.peek() != expected:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {expected!r}, found {found}")
        self.pos += 1

    def digits(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        numerator = self.digits()
        if self.peek() == "/":
            self.pos += 1
            position = self.pos
            denominator = self.digits()
            if denominator == 0:
                raise self.error("zero denominator", position)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def int_list(self) -> Tuple[int, ...]:
        self.take("(")
        parts: List[int] = []
        if self.peek() == ")":
            self.pos += 1
            return ()
        while True:
            position = self.pos
            value = self.digits()
            if value < 1:
                raise self.error("parts must be positive", position)
            parts.append(value)
            if self.peek() == ",":
                self.pos += 1
                continue
            self.take(")")
            return tuple(parts)

    def word(self) -> Word:
        self.take("(")
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "xy":
            self.pos += 1
        letters = self.text[start:self.pos]
        self.take(")")
        return Word(letters)

    def bracketed(self) -> Tuple[str, int]:
        """Contents of a balanced [...] group and the offset where they start"""
        self.take("[")
        start = self.pos
        depth = 1
        while self.pos < len(self.text):
            char = self.text[self.pos]
            if char == "[":
                depth += 1
            elif char == "]":
                depth -= 1
                if depth == 0:
                    self.pos += 1
                    return self.text[start:self.pos - 1], start
            self.pos += 1
        raise self.error("unclosed '['")

    def basis(self) -> Tuple[str, Any]:
        position = self.pos
        tag = self.peek()
        if tag not in FAMILY_OF_TAG:
            found = repr(tag) if tag else "end of input"
            raise self.error(f"expected a basis token (M, S, e, h, m, p, W, T, K, F), found {found}")
        self.pos += 1
        if tag in "MSe":
            return tag, Composition(self.int_list())
        if tag in "hmp":
            return tag, Partition(self.int_list())
        if tag == "W":
            return tag, self.word()
        body, offset = self.bracketed()
        try:
            if tag == "T":
                return tag, parse_tree(body)
            return tag, parse_forest(body, planar=(tag == "F"))
        except ParseError as exc:
            raise ParseError(exc.reason, self.text, offset + exc.position) from exc
        except AlgebraError as exc:
            raise ParseError(str(exc), self.text, position) from exc

def _tokenize(text: str) -> List[Tuple[Fraction, List[Tuple[str, Any]], int]]:
    scanner = _Scanner(text)
    terms = []
    if text.strip() == "0":
        return []
    if scanner.peek() == "":
        raise scanner.error("empty element")
    sign = 1
    if scanner.peek() in MINUS_SIGNS:
        sign = -1
        scanner.pos += 1
    while True:
        position = scanner.pos
        coeff = Fraction(1)
        if scanner.peek().isdigit():
            coeff = scanner.rational()
            scanner.take("*")
        factors = [scanner.basis()]
        if scanner.peek() in TENSOR_SIGNS and scanner.peek():
            scanner.pos += 1
            factors.append(scanner.basis())
        terms.append((sign * coeff, factors, position))
        nxt = scanner.peek()
        if nxt == "":
            return terms
        if nxt != "+" and nxt not in MINUS_SIGNS:
            raise scanner.error(f"expected '+' or '-', found {nxt!r}")
        sign = 1 if nxt == "+" else -1
        scanner.pos += 1

def _resolve_family(text: str, tags: List[Tuple[str, int]], expected: Optional[str]) -> str:
    families = {FAMILY_OF_TAG[tag] for tag, _ in tags}
    if "e" in families:
        families.discard("e")
        families.add("nsym" if "nsym" in families or expected == "nsym" else "sym")
    if expected is not None:
        families.add(expected)
    if len(families) > 1:
        position = next((pos for tag, pos in tags if FAMILY_OF_TAG[tag] not in (expected, "e")), 0)
        raise ParseError(f"mixes bases from different algebras: {sorted(families)}", text, position)
    return families.pop() if families else (expected or "qsym")

def _single_value(family: str, tag: str, key: Any) -> LinComb:
    if family == "qsym":
        return QSymElement.from_basis(key)
    if family == "nsym":
        return nsym_e_word(key) if tag == "e" else NSymElement.from_basis(key)
    if family == "sym":
        return SymElement.from_basis(Partition(key.parts), basis=tag)
    if family == "word":
        return LinComb.from_basis(key)
    if family == "t":
        return TElement.from_basis(key)
    if family == "hk":
        return HKElement.from_basis(key)
    return HFElement.from_basis(key)

def parse_element(text: str, family: Optional[str] = None) -> ParsedElement:
    """Parse one element; `family` forces the algebra (qsym, nsym, sym, word, t, hk, hf)"""
    terms = _tokenize(text)
    if any(len(factors) == 2 for _, factors, _ in terms):
        return _parse_tensor(text, terms)
    tags = [(factors[0][0], position) for _, factors, position in terms]
    resolved = _resolve_family(text, tags, family)
    value: Optional[LinComb] = None
    for coeff, factors, _ in terms:
        tag, key = factors[0]
        piece = _single_value(resolved, tag, key).scale(coeff)
        value = piece if value is None else value + piece
    if value is None:
        value = SymElement.zero() if resolved == "sym" else _empty(resolved)
    return ParsedElement(resolved, value)

def _empty(family: str) -> LinComb:
    return {
        "qsym": QSymElement,
        "nsym": NSymElement,
        "word": LinComb,
        "t": TElement,
        "hk": HKElement,
        "hf": HFElement,
    }[family]()

def _parse_tensor(text: str, terms) -> ParsedElement:
    data: Dict[Tuple[Any, Any], Fraction] = {}
    left_tags, right_tags = set(), set()
    for coeff, factors, position in terms:
        if len(factors) != 2:
            raise ParseError("every term of a tensor element needs two factors", text, position)
        (ltag, lkey), (rtag, rkey) = factors
        left_tags.add(ltag)
        right_tags.add(rtag)
        if ltag in "hmp" or rtag in "hmp":
            raise ParseError("symmetric-function tensors are written in the e basis", text, position)
        if ltag == "e":
            lkey, rkey = Partition(lkey.parts), Partition(rkey.parts)
        data[(lkey, rkey)] = data.get((lkey, rkey), 0) + coeff
    if len(left_tags | right_tags) > 1:
        raise ParseError("tensor factors must use a single basis", text, 0)
    family = FAMILY_OF_TAG[left_tags.pop()]
    if family == "e":
        family = "sym"
    return ParsedElement(f"{family}2", LinComb(data))

def parse_word(text: str) -> Word:
    return Word.parse(text)
