# File: app/algebra/core.py
# Path: hopfbench/app/algebra/core.py

"""
Scalars, compositions, partitions and sparse linear combinations.

Every algebra element in the package is a LinComb: a finite map from a
canonical, hashable basis key to a nonzero Fraction. Keys canonicalize
themselves in their constructors, so LinComb never re-normalizes them.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import (
    Any,
    Callable,
    Dict,
    Generic,
    Hashable,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
    TypeVar,
)

from sympy.utilities.iterables import partitions as _sympy_partitions

from app.core.exceptions import InvalidArgumentError, ParseError

Rational = Fraction

B = TypeVar("B", bound=Hashable)
C = TypeVar("C", bound=Hashable)

def as_rational(value: Any) -> Fraction:
    """Coerce int / Fraction / 'p/q' text to an exact Fraction; floats are refused"""
    if isinstance(value, float):
        raise InvalidArgumentError(f"floating point coefficient {value!r} is not exact")
    if isinstance(value, (int, _RationalABC, str)):
        return Fraction(value)
    raise InvalidArgumentError(f"cannot use {value!r} as a rational coefficient")

def sort_key(basis: Any) -> tuple:
    """Deterministic print / iteration key: weight first, then the basis' own key"""
    key = getattr(basis, "sort_key", None)
    if key is not None:
        return key
    if isinstance(basis, tuple):
        keys = tuple(sort_key(item) for item in basis)
        return (sum(k[0] for k in keys), keys)
    return (0, basis)

@dataclass(frozen=True)
class Composition:
    """Finite sequence of positive integers; indexes M_I and S_I"""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for part in parts:
            if isinstance(part, bool) or not isinstance(part, int) or part < 1:
                raise InvalidArgumentError(f"composition parts must be positive integers, got {parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def sort_key(self) -> tuple:
        return (self.weight, self.parts)

    def reversed(self) -> "Composition":
        return Composition(self.parts[::-1])

    def __add__(self, other: "Composition") -> "Composition":
        if not isinstance(other, Composition):
            return NotImplemented
        return Composition(self.parts + other.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Composition{self}"

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Grammar: '()' or comma-separated positive integers, optionally parenthesized"""
        return cls(_parse_int_list(text))

@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers; the constructor sorts"""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for part in parts:
            if isinstance(part, bool) or not isinstance(part, int) or part < 1:
                raise InvalidArgumentError(f"partition parts must be positive integers, got {parts!r}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def sort_key(self) -> tuple:
        return (self.weight, self.parts)

    def multiplicities(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for part in self.parts:
            counts[part] = counts.get(part, 0) + 1
        return counts

    def __add__(self, other: "Partition") -> "Partition":
        if not isinstance(other, Partition):
            return NotImplemented
        return Partition(self.parts + other.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Partition{self}"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls(_parse_int_list(text))

def _parse_int_list(text: str) -> Tuple[int, ...]:
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body.startswith("("):
        if not body.endswith(")"):
            raise ParseError("missing ')'", text, offset + len(body))
        body = body[1:-1]
        offset += 1
    if not body.strip():
        return ()
    parts: List[int] = []
    position = offset
    for chunk in body.split(","):
        token = chunk.strip()
        if not token.isdigit() or int(token) < 1:
            raise ParseError(f"expected a positive integer, got {token!r}", text, position)
        parts.append(int(token))
        position += len(chunk) + 1
    return tuple(parts)

class LinComb(Generic[B]):
    """
    Finite formal sum of basis keys with nonzero Fraction coefficients.

    Immutable: every operation returns a new object of the same class, so
    subclasses (QSymElement, TElement, ...) keep their type through + - and
    scaling. `a * b` is scalar multiplication when `b` is a number and the
    subclass' algebra product otherwise.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[B, Any]] = None):
        data: Dict[B, Fraction] = {}
        if terms:
            for basis, coeff in terms.items():
                value = as_rational(coeff)
                if value:
                    data[basis] = value
        self._terms = data

    def _like(self, data: Dict[B, Fraction]) -> "LinComb[B]":
        """Build a sibling of the same class from already-clean data"""
        obj = object.__new__(type(self))
        obj._terms = data
        return obj

    @classmethod
    def from_basis(cls, basis: B, coeff: Any = 1) -> "LinComb[B]":
        return cls({basis: coeff})

    @classmethod
    def zero(cls) -> "LinComb[B]":
        return cls()

    def items(self):
        return self._terms.items()

    def support(self) -> List[B]:
        return [basis for basis, _ in self.sorted_items()]

    def sorted_items(self) -> List[Tuple[B, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: sort_key(item[0]))

    def coefficient(self, basis: B) -> Fraction:
        return self._terms.get(basis, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, basis: B) -> bool:
        return basis in self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LinComb[B]") -> "LinComb[B]":
        if not isinstance(other, LinComb):
            return NotImplemented
        data = dict(self._terms)
        for basis, coeff in other._terms.items():
            total = data.get(basis, 0) + coeff
            if total:
                data[basis] = total
            else:
                data.pop(basis, None)
        return self._like(data)

    def __neg__(self) -> "LinComb[B]":
        return self._like({basis: -coeff for basis, coeff in self._terms.items()})

    def __sub__(self, other: "LinComb[B]") -> "LinComb[B]":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar: Any) -> "LinComb[B]":
        factor = as_rational(scalar)
        if not factor:
            return self._like({})
        return self._like({basis: coeff * factor for basis, coeff in self._terms.items()})

    def __rmul__(self, scalar: Any) -> "LinComb[B]":
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    def __mul__(self, other: Any) -> "LinComb[B]":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, LinComb):
            return self.product(other)
        return NotImplemented

    def product(self, other: "LinComb[B]") -> "LinComb[B]":
        raise TypeError(f"{type(self).__name__} has no algebra product")

    def filter(self, predicate: Callable[[B], bool]) -> "LinComb[B]":
        return self._like({b: c for b, c in self._terms.items() if predicate(b)})

    def map_basis(self, image: Callable[[B], "LinComb[C]"], into: Optional[type] = None) -> "LinComb[C]":
        """Linear extension of a basis map; `into` fixes the result class when self is zero"""
        return accumulate(((coeff, image(basis)) for basis, coeff in self._terms.items()), into=into)

    def format(self, label: Callable[[B], str]) -> str:
        """Render as 'c*B + B - ...' in weight-then-lexicographic order"""
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for basis, coeff in self.sorted_items():
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            body = label(basis)
            text = body if magnitude == 1 else f"{magnitude}*{body}"
            if not pieces:
                pieces.append(text if sign == "+" else f"-{text}")
            else:
                pieces.append(f"{sign} {text}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.format(str)})"

def accumulate(pieces: Iterable[Tuple[Any, LinComb]], into: Optional[type] = None) -> LinComb:
    """Sum of coeff * element over the pieces, dropping cancelled keys"""
    data: Dict[Any, Fraction] = {}
    cls = into
    for coeff, element in pieces:
        if cls is None:
            cls = type(element)
        factor = as_rational(coeff)
        if not factor:
            continue
        for basis, value in element.items():
            data[basis] = data.get(basis, 0) + factor * value
    result = object.__new__(cls or LinComb)
    result._terms = {basis: value for basis, value in data.items() if value}
    return result

def tensor(a: LinComb[B], b: LinComb[C]) -> LinComb[Tuple[B, C]]:
    """a (x) b as a LinComb over ordered pairs"""
    data: Dict[Tuple[B, C], Fraction] = {}
    for left, ca in a.items():
        for right, cb in b.items():
            data[(left, right)] = ca * cb
    return LinComb(data)

def compositions(n: int) -> List[Composition]:
    """All compositions of n, lexicographically sorted; [()] for n = 0"""
    if n < 0:
        raise InvalidArgumentError(f"weight must be >= 0, got {n}")
    if n == 0:
        return [Composition()]
    result = []
    for cuts in itertools.product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        result.append(Composition(tuple(parts)))
    return sorted(result, key=lambda comp: comp.parts)

def compositions_up_to(max_weight: int) -> List[Composition]:
    return [comp for n in range(max_weight + 1) for comp in compositions(n)]

def partitions(n: int) -> List[Partition]:
    """All partitions of n in lexicographic order of their parts"""
    if n < 0:
        raise InvalidArgumentError(f"weight must be >= 0, got {n}")
    if n == 0:
        return [Partition()]
    result = []
    for counts in _sympy_partitions(n):
        parts = [part for part, mult in counts.items() for _ in range(mult)]
        result.append(Partition(tuple(parts)))
    return sorted(result, key=lambda part: part.parts)

def is_lyndon(parts: Iterable[int]) -> bool:
    """Strictly smaller than each proper cyclic rotation (integers by value)"""
    seq = tuple(parts)
    if not seq:
        return False
    return all(seq < seq[i:] + seq[:i] for i in range(1, len(seq)))

def lyndon_words(max_weight: int) -> List[Composition]:
    if max_weight < 1:
        raise InvalidArgumentError(f"max_weight must be >= 1, got {max_weight}")
    words = [comp for n in range(1, max_weight + 1) for comp in compositions(n) if is_lyndon(comp.parts)]
    return sorted(words, key=lambda comp: comp.sort_key)

def is_admissible(composition: Composition) -> bool:
    """Empty, or last part > 1: the basis condition of QSym^0"""
    return not composition.parts or composition.parts[-1] > 1
