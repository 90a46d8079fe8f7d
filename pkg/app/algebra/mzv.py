# File: app/algebra/mzv.py
# Path: hopfbench/app/algebra/mzv.py

"""
Truncated multiple zeta values.

M_(p1..pk) is sent to zeta(pk, ..., p1) = sum over i1 > ... > ik >= 1 of
1 / (i1^pk ... ik^p1), so p1 sits on the innermost (smallest) index. One
cumulative-sum sweep per part gives the whole prefix table, so the value at
N and at N // 2 (the error estimate) come from the same pass.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from app.algebra.core import Composition, LinComb, is_admissible
from app.algebra.words import (
    Word,
    double_shuffle_delta,
    is_admissible_word,
    ohno_action,
    tau,
    word_to_comp,
    words_of_weight,
)
from app.core.exceptions import DivergentSeriesError, InvalidArgumentError

logger = logging.getLogger(__name__)

class ZetaValue(BaseModel):
    value: float
    error_estimate: float = Field(ge=0)
    truncation_N: int = Field(ge=2)

class VerificationReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    passed: bool = Field(serialization_alias="pass")
    value: float
    error_estimate: float
    N: int
    tolerance: float

@lru_cache(maxsize=4)
def _indices(N: int) -> np.ndarray:
    return np.arange(1, N + 1, dtype=np.float64)

@lru_cache(maxsize=4096)
def _nested_sum(parts: Tuple[int, ...], N: int) -> Tuple[float, float]:
    """
    (value at N, value at N // 2) for an admissible composition.

    The accumulation order is fixed: the innermost index runs first, each
    level is a prefix sum over ascending indices, and the outermost sum is
    read off the last prefix. Equal inputs give bit-identical floats.
    """
    if not parts:
        return 1.0, 1.0
    n = _indices(N)
    running = None
    for part in parts:
        terms = np.power(n, -float(part))
        if running is not None:
            # strictly smaller inner index
            terms[1:] *= running[:-1]
            terms[0] = 0.0
        running = np.cumsum(terms)
    logger.debug(f"zeta sweep for {parts} at N={N}")
    return float(running[N - 1]), float(running[N // 2 - 1])

def _check_N(N: int) -> None:
    if N < 2:
        raise InvalidArgumentError(f"truncation N must be >= 2, got {N}")

def zeta_truncated(comp: Composition, N: int) -> ZetaValue:
    _check_N(N)
    if not is_admissible(comp):
        raise DivergentSeriesError(f"zeta of M{comp} diverges: last part must exceed 1", term=f"M{comp}")
    value, half = _nested_sum(comp.parts, N)
    return ZetaValue(value=value, error_estimate=abs(value - half), truncation_N=N)

def _as_composition(basis: Union[Composition, Word]) -> Composition:
    if isinstance(basis, Word):
        if not basis.letters or is_admissible_word(basis):
            return word_to_comp(basis)
        raise DivergentSeriesError(f"zeta of W({basis}) diverges: word is not in H^0", term=f"W({basis})")
    if not is_admissible(basis):
        raise DivergentSeriesError(f"zeta of M{basis} diverges: last part must exceed 1", term=f"M{basis}")
    return basis

def zeta_of_lincomb(a: LinComb, N: int) -> ZetaValue:
    """Linear extension of zeta_truncated; words go through word_to_comp"""
    _check_N(N)
    terms: List[Tuple[Fraction, Composition]] = [(coeff, _as_composition(basis)) for basis, coeff in a.sorted_items()]
    value = half = 0.0
    for coeff, comp in terms:
        full, halved = _nested_sum(comp.parts, N)
        value += float(coeff) * full
        half += float(coeff) * halved
    return ZetaValue(value=value, error_estimate=abs(value - half), truncation_N=N)

def verify_relation(a: LinComb, N: int, tol: float) -> VerificationReport:
    """Pass iff |zeta_N(a)| <= max(tol, 3 * error estimate)"""
    zeta = zeta_of_lincomb(a, N)
    passed = abs(zeta.value) <= max(tol, 3 * zeta.error_estimate)
    return VerificationReport(passed=passed, value=zeta.value, error_estimate=zeta.error_estimate, N=N, tolerance=tol)

def ohno_relation(i: int, word: Word) -> LinComb:
    """h_i . w - h_i . tau(w), whose zeta image vanishes"""
    return ohno_action(i, word) - ohno_action(i, tau(word))

def duality_relation(word: Word) -> LinComb:
    return LinComb({word: 1}) - LinComb({tau(word): 1})

def double_shuffle_relation(u: Word, v: Word) -> LinComb:
    return double_shuffle_delta(u, v)

def ohno_family(weight: int, i: int) -> List[Tuple[Word, LinComb]]:
    """Ohno relations of total weight `weight` for the given i, one per word of weight - i"""
    if i < 0 or weight - i < 2:
        return []
    return [(word, ohno_relation(i, word)) for word in words_of_weight(weight - i)]
