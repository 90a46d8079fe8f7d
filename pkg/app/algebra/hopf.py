# File: app/algebra/hopf.py
# Path: hopfbench/app/algebra/hopf.py

"""
Shared machinery for the graded connected Hopf algebras of the package.

An algebra plugs in through HopfOps (its unit key and its product and
coproduct on basis keys); the antipode and the axiom checks are then
computed the same way for QSym, NSym, H_K, H_F and T.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Generic, Hashable, Tuple, TypeVar

from app.algebra.core import LinComb, accumulate

logger = logging.getLogger(__name__)

B = TypeVar("B", bound=Hashable)

@dataclass(frozen=True)
class HopfOps(Generic[B]):
    name: str
    unit: B
    multiply: Callable[[B, B], LinComb]
    coproduct: Callable[[B], LinComb]
    element: type = LinComb

    def one(self) -> LinComb:
        return self.element.from_basis(self.unit)

    def counit(self, x: LinComb) -> Fraction:
        return x.coefficient(self.unit)

    def mul(self, a: LinComb, b: LinComb) -> LinComb:
        return accumulate(
            ((ca * cb, self.multiply(x, y)) for x, ca in a.items() for y, cb in b.items()),
            into=self.element,
        )

    def delta(self, x: LinComb) -> LinComb:
        return accumulate(((c, self.coproduct(b)) for b, c in x.items()), into=LinComb)

    def antipode(self, x: LinComb) -> LinComb:
        return x.map_basis(lambda b: convolution_antipode(self, b), into=self.element)

@lru_cache(maxsize=None)
def convolution_antipode(ops: HopfOps, basis: Hashable) -> LinComb:
    """
    S(b) = eps(b) 1 - sum S(b') b'' over the coproduct terms other than b (x) 1.
    Terminates because every other left factor has lower degree.
    """
    if basis == ops.unit:
        return ops.one()
    pieces = []
    for (left, right), coeff in ops.coproduct(basis).items():
        if left == basis and right == ops.unit:
            continue
        pieces.append((-coeff, ops.mul(convolution_antipode(ops, left), ops.element.from_basis(right))))
    result = accumulate(pieces, into=ops.element)
    logger.debug(f"{ops.name}: antipode of {basis} has {len(result)} terms")
    return result

def _flatten_left(pairs: Dict) -> LinComb:
    return LinComb({(a, b, c): coeff for ((a, b), c), coeff in pairs.items()})

def _flatten_right(pairs: Dict) -> LinComb:
    return LinComb({(a, b, c): coeff for (a, (b, c)), coeff in pairs.items()})

def coassociativity_defect(ops: HopfOps, basis: Hashable) -> LinComb:
    """(Delta (x) id) Delta(b) - (id (x) Delta) Delta(b), over triples"""
    left: Dict[Tuple, Fraction] = {}
    right: Dict[Tuple, Fraction] = {}
    for (x, y), coeff in ops.coproduct(basis).items():
        for (x1, x2), c1 in ops.coproduct(x).items():
            key = ((x1, x2), y)
            left[key] = left.get(key, 0) + coeff * c1
        for (y1, y2), c2 in ops.coproduct(y).items():
            key = (x, (y1, y2))
            right[key] = right.get(key, 0) + coeff * c2
    return _flatten_left(left) - _flatten_right(right)

def check_coassociativity(ops: HopfOps, basis: Hashable) -> bool:
    return coassociativity_defect(ops, basis).is_zero()

def check_counit(ops: HopfOps, basis: Hashable) -> bool:
    """(eps (x) id) Delta = id = (id (x) eps) Delta on one basis element"""
    target = ops.element.from_basis(basis)
    left, right = [], []
    for (x, y), coeff in ops.coproduct(basis).items():
        if x == ops.unit:
            left.append((coeff, ops.element.from_basis(y)))
        if y == ops.unit:
            right.append((coeff, ops.element.from_basis(x)))
    return accumulate(left, into=ops.element) == target and accumulate(right, into=ops.element) == target

def antipode_defect(ops: HopfOps, basis: Hashable) -> Tuple[LinComb, LinComb]:
    """(S * id)(b) - eps(b) 1 and (id * S)(b) - eps(b) 1"""
    unit_part = ops.one().scale(1 if basis == ops.unit else 0)
    left, right = [], []
    for (x, y), coeff in ops.coproduct(basis).items():
        left.append((coeff, ops.mul(convolution_antipode(ops, x), ops.element.from_basis(y))))
        right.append((coeff, ops.mul(ops.element.from_basis(x), convolution_antipode(ops, y))))
    return (
        accumulate(left, into=ops.element) - unit_part,
        accumulate(right, into=ops.element) - unit_part,
    )

def check_antipode(ops: HopfOps, basis: Hashable) -> bool:
    left, right = antipode_defect(ops, basis)
    return left.is_zero() and right.is_zero()
