# File: app/algebra/qsym.py
# Path: hopfbench/app/algebra/qsym.py

"""
QSym in the monomial basis, its graded dual NSym in the complete basis S,
and the symmetric functions Sym with the m, e, h and p bases.

The truncated power series in t_1..t_v is the ground truth: products and
the Sym transition matrices are derived from, or checked against, the
expansion of M_I as a sum over increasing index tuples.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple

import sympy
from sympy.utilities.iterables import multiset_permutations

from app.algebra.core import (
    Composition,
    LinComb,
    Partition,
    compositions,
    is_admissible,
    lyndon_words,
    partitions,
)
from app.algebra.hopf import HopfOps, convolution_antipode
from app.core.exceptions import InvalidArgumentError

logger = logging.getLogger(__name__)

SYM_BASES = ("m", "e", "h", "p")

# --- QSym -------------------------------------------------------------------

class QSymElement(LinComb[Composition]):
    """Element of QSym written in the monomial basis M_I"""

    __slots__ = ()

    def product(self, other: "QSymElement") -> "QSymElement":
        return qsym_mul(self, other)

    def homogeneous(self, degree: int) -> "QSymElement":
        return self.filter(lambda comp: comp.weight == degree)

def M(*parts: int) -> QSymElement:
    return QSymElement.from_basis(Composition(parts))

@lru_cache(maxsize=None)
def _quasi_shuffle(left: Tuple[int, ...], right: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
    if not left:
        return {right: 1}
    if not right:
        return {left: 1}
    a, rest_a = left[0], left[1:]
    b, rest_b = right[0], right[1:]
    counts: Dict[Tuple[int, ...], int] = {}
    for head, (x, y) in ((a, (rest_a, right)), (b, (left, rest_b)), (a + b, (rest_a, rest_b))):
        for word, mult in _quasi_shuffle(x, y).items():
            key = (head,) + word
            counts[key] = counts.get(key, 0) + mult
    return counts

def quasi_shuffle(left: Composition, right: Composition) -> QSymElement:
    """M_I * M_J on basis elements: interleave or add parts, keeping each order"""
    return QSymElement({Composition(word): mult for word, mult in _quasi_shuffle(left.parts, right.parts).items()})

def _deconcatenate(comp: Composition) -> LinComb:
    return LinComb({(Composition(comp.parts[:i]), Composition(comp.parts[i:])): 1 for i in range(comp.length + 1)})

QSYM = HopfOps(name="QSym", unit=Composition(), multiply=quasi_shuffle, coproduct=_deconcatenate, element=QSymElement)

def qsym_mul(a: QSymElement, b: QSymElement) -> QSymElement:
    return QSYM.mul(a, b)

def qsym_coproduct(a: QSymElement) -> LinComb:
    """Deconcatenation: Delta(M_I) = sum over splits I = J K of M_J (x) M_K"""
    return QSYM.delta(a)

def qsym_counit(a: QSymElement) -> Fraction:
    return QSYM.counit(a)

def qsym_antipode(a: QSymElement) -> QSymElement:
    return a.map_basis(lambda comp: convolution_antipode(QSYM, comp), into=QSymElement)

def coarsenings(comp: Composition) -> List[Composition]:
    """All compositions obtained by adding together runs of adjacent parts"""
    if not comp.parts:
        return [comp]
    result = []
    for joins in itertools.product((False, True), repeat=comp.length - 1):
        parts = [comp.parts[0]]
        for join, part in zip(joins, comp.parts[1:]):
            if join:
                parts[-1] += part
            else:
                parts.append(part)
        result.append(Composition(tuple(parts)))
    return result

def qsym_antipode_closed(a: QSymElement) -> QSymElement:
    """S(M_I) = (-1)^l(I) * sum of M_J over the coarsenings J of reversed I"""
    def image(comp: Composition) -> QSymElement:
        sign = -1 if comp.length % 2 else 1
        return QSymElement({coarse: sign for coarse in coarsenings(comp.reversed())})
    return a.map_basis(image, into=QSymElement)

def is_in_qsym0(a: QSymElement) -> bool:
    return all(is_admissible(comp) for comp, _ in a.items())

def lyndon_product_rank(weight: int) -> Tuple[int, int]:
    """
    Rank of the products M_L1 ... M_Lr over multisets of Lyndon compositions of
    total weight `weight`, against the number of such products. Freeness on
    Lyndon generators means both equal the number of compositions of `weight`.
    """
    generators = [comp for comp in lyndon_words(weight)] if weight >= 1 else []
    products: List[QSymElement] = []

    def extend(start: int, remaining: int, current: QSymElement) -> None:
        if remaining == 0:
            products.append(current)
            return
        for index in range(start, len(generators)):
            gen = generators[index]
            if gen.weight <= remaining:
                extend(index, remaining - gen.weight, qsym_mul(current, QSymElement.from_basis(gen)))

    extend(0, weight, M())
    basis = compositions(weight)
    matrix = sympy.Matrix([[sympy.Rational(p.coefficient(comp).numerator, p.coefficient(comp).denominator)
                            for comp in basis] for p in products])
    rank = matrix.rank() if products else 0
    return rank, len(products)

# --- truncated power series ------------------------------------------------

@dataclass(frozen=True)
class TruncatedPoly:
    """Exact polynomial in t_1..t_v with every term of total degree <= d"""

    num_vars: int
    max_deg: int
    terms: Mapping[Tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.num_vars < 1 or self.max_deg < 0:
            raise InvalidArgumentError(f"need num_vars >= 1 and max_deg >= 0, got {self.num_vars}, {self.max_deg}")
        clean = {}
        for exps, coeff in self.terms.items():
            if len(exps) != self.num_vars:
                raise InvalidArgumentError(f"exponent vector {exps} does not have {self.num_vars} entries")
            if coeff and sum(exps) <= self.max_deg:
                clean[tuple(exps)] = Fraction(coeff)
        object.__setattr__(self, "terms", clean)

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def _check_window(self, other: "TruncatedPoly") -> None:
        if (self.num_vars, self.max_deg) != (other.num_vars, other.max_deg):
            raise InvalidArgumentError("truncation windows differ")

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check_window(other)
        data = dict(self.terms)
        for exps, coeff in other.terms.items():
            data[exps] = data.get(exps, 0) + coeff
        return TruncatedPoly(self.num_vars, self.max_deg, data)

    def __mul__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check_window(other)
        data: Dict[Tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > self.max_deg:
                    continue
                key = tuple(x + y for x, y in zip(e1, e2))
                data[key] = data.get(key, 0) + c1 * c2
        return TruncatedPoly(self.num_vars, self.max_deg, data)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms.items(), key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))
        pieces = []
        for exps, coeff in ordered:
            factors = [f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}" for i, e in enumerate(exps) if e]
            monomial = "*".join(factors) or "1"
            text = monomial if abs(coeff) == 1 else f"{abs(coeff)}*{monomial}"
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + text)
        return " ".join(pieces)

def expand_truncated(f: QSymElement, num_vars: int, max_deg: int) -> TruncatedPoly:
    """M_(p1..pk) -> sum over i1 < ... < ik <= num_vars of t_i1^p1 ... t_ik^pk, cut at max_deg"""
    if num_vars < 1 or max_deg < 0:
        raise InvalidArgumentError(f"need num_vars >= 1 and max_deg >= 0, got {num_vars}, {max_deg}")
    data: Dict[Tuple[int, ...], Fraction] = {}
    for comp, coeff in f.items():
        if comp.weight > max_deg or comp.length > num_vars:
            continue
        for indices in itertools.combinations(range(num_vars), comp.length):
            exps = [0] * num_vars
            for index, part in zip(indices, comp.parts):
                exps[index] = part
            key = tuple(exps)
            data[key] = data.get(key, 0) + coeff
    return TruncatedPoly(num_vars, max_deg, data)

def _pattern(exps: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(e for e in exps if e)

def is_quasi_symmetric(p: TruncatedPoly) -> bool:
    """Every placement of an exponent pattern on increasing variables has the front-packed coefficient"""
    for pattern in {_pattern(exps) for exps in p.terms}:
        front = pattern + (0,) * (p.num_vars - len(pattern))
        reference = p.coefficient(front)
        for indices in itertools.combinations(range(p.num_vars), len(pattern)):
            exps = [0] * p.num_vars
            for index, part in zip(indices, pattern):
                exps[index] = part
            if p.coefficient(exps) != reference:
                return False
    return True

def is_symmetric_series(p: TruncatedPoly) -> bool:
    """Coefficients are invariant under every permutation of the variables"""
    for exps, coeff in p.terms.items():
        for perm in multiset_permutations(list(exps)):
            if p.coefficient(perm) != coeff:
                return False
    return True

def is_symmetric(a: QSymElement) -> bool:
    """Coefficients constant on rearrangement classes of compositions"""
    for comp, coeff in a.items():
        for perm in multiset_permutations(list(comp.parts)):
            if a.coefficient(Composition(tuple(perm))) != coeff:
                return False
    return True

# --- Sym ----------------------------------------------------------------------

class SymElement(LinComb[Partition]):
    """Symmetric function in one of the bases m, e, h, p (the `basis` tag)"""

    __slots__ = ("basis",)

    def __init__(self, terms: Mapping[Partition, object] = None, basis: str = "m"):
        if basis not in SYM_BASES:
            raise InvalidArgumentError(f"unknown symmetric-function basis {basis!r}")
        super().__init__(terms)
        self.basis = basis

    def _like(self, data):
        obj = super()._like(data)
        obj.basis = self.basis
        return obj

    @classmethod
    def from_basis(cls, partition: Partition, coeff=1, basis: str = "m") -> "SymElement":
        return cls({partition: coeff}, basis=basis)

    @classmethod
    def zero(cls, basis: str = "m") -> "SymElement":
        return cls({}, basis=basis)

    def to(self, target: str) -> "SymElement":
        return sym_basis_convert(self, target)

    def __add__(self, other):
        if isinstance(other, SymElement) and other.basis != self.basis:
            other = other.to(self.basis)
        return super().__add__(other)

    def __eq__(self, other):
        if isinstance(other, SymElement) and other.basis != self.basis:
            return self._terms == other.to(self.basis)._terms
        return super().__eq__(other)

    def __hash__(self):
        return hash(frozenset(self.to("m").items()))

    def product(self, other: "SymElement") -> "SymElement":
        return sym_mul(self, other)

    def homogeneous(self, degree: int) -> "SymElement":
        return self.filter(lambda part: part.weight == degree)

    def label(self, partition: Partition) -> str:
        return f"{self.basis}{partition}"

    def __repr__(self) -> str:
        return f"SymElement({self.format(self.label)})"

def sym(basis: str, *parts: int) -> SymElement:
    return SymElement.from_basis(Partition(parts), basis=basis)

def _generator_series(basis: str, n: int, num_vars: int) -> TruncatedPoly:
    """The degree-n generator of a multiplicative basis as a truncated series"""
    if basis == "e":
        element = M(*([1] * n))
    elif basis == "h":
        element = QSymElement({comp: 1 for comp in compositions(n)})
    else:
        element = M(n)
    return expand_truncated(element, num_vars, num_vars)

@lru_cache(maxsize=None)
def _to_monomial_matrix(basis: str, degree: int) -> Dict[Partition, Dict[Partition, Fraction]]:
    """Coefficients of m_mu in b_lambda for every partition pair of `degree`"""
    shapes = partitions(degree)
    if basis == "m" or degree == 0:
        return {lam: {lam: Fraction(1)} for lam in shapes}
    num_vars = degree
    unit = TruncatedPoly(num_vars, degree, {(0,) * num_vars: 1})
    generators = {i: _generator_series(basis, i, num_vars) for i in range(1, degree + 1)}
    matrix: Dict[Partition, Dict[Partition, Fraction]] = {}
    for lam in shapes:
        series = unit
        for part in lam.parts:
            series = series * generators[part]
        row = {}
        for mu in shapes:
            coeff = series.coefficient(mu.parts + (0,) * (num_vars - mu.length))
            if coeff:
                row[mu] = coeff
        matrix[lam] = row
    logger.debug(f"Sym transition matrix {basis}->m computed for degree {degree}")
    return matrix

@lru_cache(maxsize=None)
def _from_monomial_matrix(basis: str, degree: int) -> Dict[Partition, Dict[Partition, Fraction]]:
    """Coefficients of b_lambda in m_mu, by exact inversion of the forward matrix"""
    shapes = partitions(degree)
    forward = _to_monomial_matrix(basis, degree)
    if basis == "m" or degree == 0:
        return forward
    size = len(shapes)
    matrix = sympy.zeros(size, size)
    for i, lam in enumerate(shapes):
        for j, mu in enumerate(shapes):
            coeff = forward[lam].get(mu, Fraction(0))
            matrix[i, j] = sympy.Rational(coeff.numerator, coeff.denominator)
    inverse = matrix.inv()
    result: Dict[Partition, Dict[Partition, Fraction]] = {}
    for j, mu in enumerate(shapes):
        row = {}
        for i, lam in enumerate(shapes):
            value = inverse[j, i]
            if value != 0:
                row[lam] = Fraction(int(value.p), int(value.q))
        result[mu] = row
    return result

def sym_basis_convert(s: SymElement, target: str) -> SymElement:
    """Exact change of basis through the monomial basis"""
    if target not in SYM_BASES:
        raise InvalidArgumentError(f"unknown symmetric-function basis {target!r}")
    if s.basis == target:
        return s
    monomial: Dict[Partition, Fraction] = {}
    for lam, coeff in s.items():
        for mu, value in _to_monomial_matrix(s.basis, lam.weight)[lam].items():
            monomial[mu] = monomial.get(mu, 0) + coeff * value
    data: Dict[Partition, Fraction] = {}
    for mu, coeff in monomial.items():
        if not coeff:
            continue
        for lam, value in _from_monomial_matrix(target, mu.weight)[mu].items():
            data[lam] = data.get(lam, 0) + coeff * value
    return SymElement(data, basis=target)

def sym_to_qsym(s: SymElement) -> QSymElement:
    """m_lambda -> sum of M_I over the distinct rearrangements I of lambda"""
    data: Dict[Composition, Fraction] = {}
    for lam, coeff in s.to("m").items():
        for perm in multiset_permutations(list(lam.parts)):
            comp = Composition(tuple(perm))
            data[comp] = data.get(comp, 0) + coeff
    return QSymElement(data)

def qsym_to_sym(a: QSymElement, basis: str = "m") -> SymElement:
    if not is_symmetric(a):
        raise InvalidArgumentError("element is not symmetric")
    data = {Partition(comp.parts): coeff for comp, coeff in a.items() if list(comp.parts) == sorted(comp.parts, reverse=True)}
    return SymElement(data, basis="m").to(basis)

def sym_mul(s: SymElement, t: SymElement) -> SymElement:
    """Union of partitions in a multiplicative basis; the m basis goes through QSym"""
    if s.basis == "m":
        return qsym_to_sym(qsym_mul(sym_to_qsym(s), sym_to_qsym(t)), "m")
    t = t.to(s.basis)
    data: Dict[Partition, Fraction] = {}
    for lam, c1 in s.items():
        for mu, c2 in t.items():
            key = lam + mu
            data[key] = data.get(key, 0) + c1 * c2
    return SymElement(data, basis=s.basis)

def sym_coproduct(s: SymElement) -> LinComb:
    """Delta in the e basis, e_n -> sum e_i (x) e_(n-i); keys are pairs of e-partitions"""
    data: Dict[Tuple[Partition, Partition], Fraction] = {}
    for lam, coeff in s.to("e").items():
        for split in itertools.product(*(range(part + 1) for part in lam.parts)):
            left = Partition(tuple(i for i in split if i))
            right = Partition(tuple(part - i for part, i in zip(lam.parts, split) if part - i))
            data[(left, right)] = data.get((left, right), 0) + coeff
    return LinComb(data)

# --- NSym ---------------------------------------------------------------------

class NSymElement(LinComb[Composition]):
    """Element of NSym in the complete basis S_I, dual to M_I"""

    __slots__ = ()

    def product(self, other: "NSymElement") -> "NSymElement":
        return nsym_mul(self, other)

def S(*parts: int) -> NSymElement:
    return NSymElement.from_basis(Composition(parts))

def _concatenate(left: Composition, right: Composition) -> NSymElement:
    return NSymElement.from_basis(left + right)

def _nsym_basis_coproduct(comp: Composition) -> LinComb:
    data: Dict[Tuple[Composition, Composition], Fraction] = {}
    for split in itertools.product(*(range(part + 1) for part in comp.parts)):
        left = Composition(tuple(i for i in split if i))
        right = Composition(tuple(part - i for part, i in zip(comp.parts, split) if part - i))
        data[(left, right)] = data.get((left, right), 0) + 1
    return LinComb(data)

NSYM = HopfOps(name="NSym", unit=Composition(), multiply=_concatenate, coproduct=_nsym_basis_coproduct, element=NSymElement)

def nsym_mul(a: NSymElement, b: NSymElement) -> NSymElement:
    return NSYM.mul(a, b)

def nsym_coproduct(a: NSymElement) -> LinComb:
    """Multiplicative extension of Delta(S_n) = sum S_i (x) S_(n-i)"""
    return NSYM.delta(a)

def nsym_antipode(a: NSymElement) -> NSymElement:
    return a.map_basis(lambda comp: convolution_antipode(NSYM, comp), into=NSymElement)

def _signed_compositions(n: int) -> Dict[Composition, int]:
    return {comp: (-1) ** (n - comp.length) for comp in compositions(n)}

def nsym_e(n: int) -> NSymElement:
    """e_n = sum over I |= n of (-1)^(n - l(I)) S_I; e_0 = 1"""
    if n < 0:
        raise InvalidArgumentError(f"degree must be >= 0, got {n}")
    return NSymElement(_signed_compositions(n))

def nsym_e_word(word: Composition) -> NSymElement:
    """The noncommutative product e_j1 e_j2 ... e_jr"""
    result = S()
    for part in word.parts:
        result = nsym_mul(result, nsym_e(part))
    return result

def nsym_to_e_words(a: NSymElement) -> LinComb:
    """Rewrite in the e-word basis; S_n has the same signed expansion in the e_j"""
    def image(comp: Composition) -> LinComb:
        result = LinComb({Composition(): 1})
        for part in comp.parts:
            result = _concat_lincomb(result, _signed_compositions(part))
        return result
    return a.map_basis(image, into=LinComb)

def _concat_lincomb(words: LinComb, factor: Dict[Composition, int]) -> LinComb:
    data: Dict[Composition, Fraction] = {}
    for prefix, coeff in words.items():
        for word, sign in factor.items():
            key = prefix + word
            data[key] = data.get(key, 0) + coeff * sign
    return LinComb(data)

def pair_qsym_nsym(a: QSymElement, b: NSymElement) -> Fraction:
    """<M_I, S_J> = delta_IJ, extended bilinearly"""
    return sum((coeff * b.coefficient(comp) for comp, coeff in a.items()), Fraction(0))

def pair_tensors(a: LinComb, b: LinComb) -> Fraction:
    """The same pairing applied factorwise to two LinCombs over pairs"""
    return sum((coeff * b.coefficient(key) for key, coeff in a.items()), Fraction(0))

def abelianize(a: NSymElement) -> SymElement:
    """Algebra map NSym -> Sym, S_I -> h_sort(I), reported in the e basis"""
    data: Dict[Partition, Fraction] = {}
    for comp, coeff in a.items():
        key = Partition(comp.parts)
        data[key] = data.get(key, 0) + coeff
    return SymElement(data, basis="h").to("e")
