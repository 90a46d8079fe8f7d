# File: app/algebra/words.py
# Path: hopfbench/app/algebra/words.py

"""
The word algebra Q<x,y>: the dictionary between compositions and words,
the shuffle product, the antiautomorphism tau, and the h_i action used
to state Ohno's relations.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List

from app.algebra.core import Composition, LinComb, is_admissible
from app.algebra.qsym import quasi_shuffle
from app.core.exceptions import InvalidArgumentError, ParseError

logger = logging.getLogger(__name__)

ALPHABET = frozenset("xy")

@dataclass(frozen=True)
class Word:
    letters: str = ""

    def __post_init__(self):
        if not set(self.letters) <= ALPHABET:
            raise InvalidArgumentError(f"words use only the letters x and y, got {self.letters!r}")

    @property
    def weight(self) -> int:
        return len(self.letters)

    @property
    def depth(self) -> int:
        return self.letters.count("y")

    @property
    def sort_key(self) -> tuple:
        return (self.weight, self.letters)

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters

    def __repr__(self) -> str:
        return f"Word({self.letters!r})"

    @classmethod
    def parse(cls, text: str) -> "Word":
        body = text.strip()
        for index, letter in enumerate(body):
            if letter not in ALPHABET:
                raise ParseError(f"unexpected letter {letter!r} in word", text, index + len(text) - len(text.lstrip()))
        return cls(body)

def word_label(word: Word) -> str:
    return f"W({word.letters})"

def is_admissible_word(word: Word) -> bool:
    """Membership in H^0 = Q1 + x Q<x,y> y"""
    return not word.letters or (word.letters[0] == "x" and word.letters[-1] == "y")

def comp_to_word(comp: Composition) -> Word:
    """M_(p1..pk) -> x^(pk-1) y ... x^(p1-1) y (parts read right to left)"""
    if not is_admissible(comp):
        raise InvalidArgumentError(f"composition {comp} is not admissible (last part must exceed 1)")
    return Word("".join("x" * (part - 1) + "y" for part in reversed(comp.parts)))

def _blocks(word: Word) -> List[int]:
    """x-exponents a_j of w = x^a1 y ... x^ak y"""
    if word.letters and word.letters[-1] != "y":
        raise InvalidArgumentError(f"word {word} does not end in y")
    return [len(block) for block in word.letters.split("y")[:-1]]

def word_to_comp(word: Word) -> Composition:
    if not is_admissible_word(word):
        raise InvalidArgumentError(f"word {word} is not in H^0")
    return Composition(tuple(a + 1 for a in reversed(_blocks(word))))

def concat(u: LinComb, v: LinComb) -> LinComb:
    """The (noncommutative) concatenation product of Q<x,y>"""
    data: Dict[Word, object] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            data[a + b] = data.get(a + b, 0) + ca * cb
    return LinComb(data)

@lru_cache(maxsize=None)
def _shuffle(u: str, v: str) -> Dict[str, int]:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    counts: Dict[str, int] = {}
    for head, (left, right) in ((u[0], (u[1:], v)), (v[0], (u, v[1:]))):
        for word, mult in _shuffle(left, right).items():
            counts[head + word] = counts.get(head + word, 0) + mult
    return counts

def shuffle(u: Word, v: Word) -> LinComb:
    """Sum over the order-preserving interleavings of u and v, with multiplicity"""
    return LinComb({Word(word): mult for word, mult in _shuffle(u.letters, v.letters).items()})

def shuffle_lincomb(a: LinComb, b: LinComb) -> LinComb:
    data: Dict[Word, object] = {}
    for u, cu in a.items():
        for v, cv in b.items():
            for word, mult in shuffle(u, v).items():
                data[word] = data.get(word, 0) + cu * cv * mult
    return LinComb(data)

def tau(word: Word) -> Word:
    """Reverse, then exchange x and y"""
    return Word(word.letters[::-1].translate(str.maketrans("xy", "yx")))

def tau_lincomb(a: LinComb) -> LinComb:
    return LinComb({tau(word): coeff for word, coeff in a.items()})

def stuffle_words(u: Word, v: Word) -> LinComb:
    """The quasi-shuffle of QSym carried over to H^0 through comp_to_word"""
    product = quasi_shuffle(word_to_comp(u), word_to_comp(v))
    return LinComb({comp_to_word(comp): coeff for comp, coeff in product.items()})

def ohno_action(i: int, word: Word) -> LinComb:
    """h_i . x^a1 y ... x^ak y = sum over e1+..+ek = i of x^(a1+e1) y ... x^(ak+ek) y"""
    if i < 0:
        raise InvalidArgumentError(f"h_i needs i >= 0, got {i}")
    if not word.letters:
        raise InvalidArgumentError("h_i acts on nonempty words only")
    if not is_admissible_word(word):
        raise InvalidArgumentError(f"word {word} is not in H^0")
    blocks = _blocks(word)
    data: Dict[Word, int] = {}
    for slots in itertools.combinations_with_replacement(range(len(blocks)), i):
        raised = list(blocks)
        for slot in slots:
            raised[slot] += 1
        image = Word("".join("x" * a + "y" for a in raised))
        data[image] = data.get(image, 0) + 1
    return LinComb(data)

def double_shuffle_delta(u: Word, v: Word) -> LinComb:
    """shuffle(u, v) minus the stuffle of u and v; its zeta image vanishes"""
    for word in (u, v):
        if not word.letters or not is_admissible_word(word):
            raise InvalidArgumentError(f"double shuffle needs nonempty words of H^0, got {word!r}")
    return shuffle(u, v) - stuffle_words(u, v)

def words_of_weight(weight: int) -> List[Word]:
    """All words of H^0 with the given number of letters"""
    if weight == 0:
        return [Word()]
    if weight < 2:
        return []
    middles = ("".join(letters) for letters in itertools.product("xy", repeat=weight - 2))
    return [Word("x" + middle + "y") for middle in sorted(middles)]
