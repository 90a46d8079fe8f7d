# File: app/algebra/hopf_trees.py
# Path: hopfbench/app/algebra/hopf_trees.py

"""
Kreimer's H_K (forests), Foissy's H_F (planar forests) and the
Grossman-Larson algebra T (rooted trees), with the maps between them and
the symmetric functions.

Conventions:
- H_K and H_F are graded by total vertices; T by non-root vertices |t|.
- Coproducts of H_K and H_F are written pruned part (x) trunk.
- <B_+(g), f> = |Symm(f)| if g = f and 0 otherwise, extended bilinearly,
  pairs T with H_K; with it <t1 o t2, f> = <t1 (x) t2, Delta f>.
"""

import itertools
import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Tuple, Union

from app.algebra.core import LinComb, Partition, partitions
from app.algebra.hopf import HopfOps
from app.algebra.qsym import NSymElement, SymElement, nsym_to_e_words, sym
from app.algebra.trees import (
    SINGLE_VERTEX,
    Forest,
    PlanarForest,
    PlanarTree,
    RootedTree,
    enumerate_trees,
    forest_symm_order,
    graft,
    ladder,
    planar_ladder,
    planar_to_rooted,
    symm_order,
    tree_factorial,
    vertex_paths,
)
from app.core.config import settings
from app.core.exceptions import InvalidArgumentError

logger = logging.getLogger(__name__)

class HKElement(LinComb[Forest]):
    """Element of Kreimer's commutative H_K; product is disjoint union"""

    __slots__ = ()

    def product(self, other: "HKElement") -> "HKElement":
        return HK.mul(self, other)

class HFElement(LinComb[PlanarForest]):
    """Element of Foissy's H_F; product is concatenation of planar forests"""

    __slots__ = ()

    def product(self, other: "HFElement") -> "HFElement":
        return HF.mul(self, other)

class TElement(LinComb[RootedTree]):
    """Element of the Grossman-Larson algebra T; the single vertex is the unit"""

    __slots__ = ()

    def product(self, other: "TElement") -> "TElement":
        return gl_mul(self, other)

def forest_label(forest: Forest) -> str:
    return f"K[{forest}]"

def planar_forest_label(forest: PlanarForest) -> str:
    return f"F[{forest}]"

def tree_label(tree: RootedTree) -> str:
    return f"T[{tree}]"

# --- H_K ----------------------------------------------------------------------------

def _multiply_pairs(left: Dict, right: Dict, join) -> Dict:
    data: Dict = {}
    for (a, b), c1 in left.items():
        for (c, d), c2 in right.items():
            key = (join(a, c), join(b, d))
            data[key] = data.get(key, 0) + c1 * c2
    return data

@lru_cache(maxsize=None)
def _hk_tree_coproduct(tree: RootedTree) -> Dict[Tuple[Forest, Forest], Fraction]:
    """Delta(B_+(f)) = B_+(f) (x) 1 + sum f' (x) B_+(f'') over Delta(f) = sum f' (x) f''"""
    data: Dict[Tuple[Forest, Forest], Fraction] = {(Forest((tree,)), Forest()): Fraction(1)}
    for (pruned, trunk), coeff in _hk_forest_coproduct(tree.branches()).items():
        key = (pruned, Forest((RootedTree(trunk.trees),)))
        data[key] = data.get(key, 0) + coeff
    return data

@lru_cache(maxsize=None)
def _hk_forest_coproduct(forest: Forest) -> Dict[Tuple[Forest, Forest], Fraction]:
    data: Dict[Tuple[Forest, Forest], Fraction] = {(Forest(), Forest()): Fraction(1)}
    for tree in forest.trees:
        data = _multiply_pairs(data, _hk_tree_coproduct(tree), lambda x, y: x + y)
    return data

def _hk_basis_coproduct(forest: Forest) -> LinComb:
    return LinComb(_hk_forest_coproduct(forest))

HK = HopfOps(
    name="H_K",
    unit=Forest(),
    multiply=lambda f, g: HKElement.from_basis(f + g),
    coproduct=_hk_basis_coproduct,
    element=HKElement,
)

def _as_hk(item: Union[Forest, RootedTree, HKElement]) -> HKElement:
    if isinstance(item, RootedTree):
        return HKElement.from_basis(Forest((item,)))
    if isinstance(item, Forest):
        return HKElement.from_basis(item)
    return item

def hk_coproduct(item: Union[Forest, RootedTree, HKElement]) -> LinComb:
    """Admissible cuts, pruned forest (x) trunk, extended multiplicatively to forests"""
    return HK.delta(_as_hk(item))

def hk_antipode(item: Union[Forest, RootedTree, HKElement]) -> HKElement:
    return HK.antipode(_as_hk(item))

# --- H_F ----------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _hf_tree_coproduct(tree: PlanarTree) -> Dict[Tuple[PlanarForest, PlanarForest], Fraction]:
    data: Dict = {(PlanarForest((tree,)), PlanarForest()): Fraction(1)}
    for (pruned, trunk), coeff in _hf_forest_coproduct(PlanarForest(tree.children)).items():
        key = (pruned, PlanarForest((PlanarTree(trunk.trees),)))
        data[key] = data.get(key, 0) + coeff
    return data

@lru_cache(maxsize=None)
def _hf_forest_coproduct(forest: PlanarForest) -> Dict[Tuple[PlanarForest, PlanarForest], Fraction]:
    data: Dict = {(PlanarForest(), PlanarForest()): Fraction(1)}
    for tree in forest.trees:
        data = _multiply_pairs(data, _hf_tree_coproduct(tree), lambda x, y: x + y)
    return data

HF = HopfOps(
    name="H_F",
    unit=PlanarForest(),
    multiply=lambda f, g: HFElement.from_basis(f + g),
    coproduct=lambda forest: LinComb(_hf_forest_coproduct(forest)),
    element=HFElement,
)

def _as_hf(item: Union[PlanarForest, PlanarTree, HFElement]) -> HFElement:
    if isinstance(item, PlanarTree):
        return HFElement.from_basis(PlanarForest((item,)))
    if isinstance(item, PlanarForest):
        return HFElement.from_basis(item)
    return item

def hf_product(a: Union[PlanarForest, HFElement], b: Union[PlanarForest, HFElement]) -> HFElement:
    return HF.mul(_as_hf(a), _as_hf(b))

def hf_coproduct(item: Union[PlanarForest, PlanarTree, HFElement]) -> LinComb:
    """Planar admissible cuts; the pruned forest keeps its left-to-right order"""
    return HF.delta(_as_hf(item))

def hf_antipode(item: Union[PlanarForest, PlanarTree, HFElement]) -> HFElement:
    return HF.antipode(_as_hf(item))

# --- T (Grossman-Larson) ------------------------------------------------------------

@lru_cache(maxsize=None)
def _gl_product(left: RootedTree, right: RootedTree) -> Dict[RootedTree, int]:
    paths = vertex_paths(right)
    counts: Dict[RootedTree, int] = {}
    for targets in itertools.product(paths, repeat=len(left.children)):
        attachments: Dict[Tuple[int, ...], list] = {}
        for branch, target in zip(left.children, targets):
            attachments.setdefault(target, []).append(branch)
        tree = graft(right, attachments)
        counts[tree] = counts.get(tree, 0) + 1
    return counts

def gl_product(left: RootedTree, right: RootedTree) -> TElement:
    """Detach the root branches of `left` and attach them to vertices of `right` in all ways"""
    return TElement(_gl_product(left, right))

@lru_cache(maxsize=None)
def _gl_coproduct(tree: RootedTree) -> Dict[Tuple[RootedTree, RootedTree], int]:
    branches = tree.children
    counts: Dict[Tuple[RootedTree, RootedTree], int] = {}
    for mask in itertools.product((False, True), repeat=len(branches)):
        left = RootedTree(tuple(b for b, keep in zip(branches, mask) if keep))
        right = RootedTree(tuple(b for b, keep in zip(branches, mask) if not keep))
        counts[(left, right)] = counts.get((left, right), 0) + 1
    return counts

def _gl_basis_coproduct(tree: RootedTree) -> LinComb:
    return LinComb(_gl_coproduct(tree))

T = HopfOps(name="T", unit=SINGLE_VERTEX, multiply=gl_product, coproduct=_gl_basis_coproduct, element=TElement)

def _as_t(item: Union[RootedTree, TElement]) -> TElement:
    if isinstance(item, RootedTree):
        return TElement.from_basis(item)
    return item

def gl_mul(a: Union[RootedTree, TElement], b: Union[RootedTree, TElement]) -> TElement:
    return T.mul(_as_t(a), _as_t(b))

def gl_coproduct(item: Union[RootedTree, TElement]) -> LinComb:
    """Delta(B_+(f)) = sum over splittings f = f1 + f2 of B_+(f1) (x) B_+(f2)"""
    return T.delta(_as_t(item))

def gl_antipode(item: Union[RootedTree, TElement]) -> TElement:
    return T.antipode(_as_t(item))

def _check_degree(n: int, cap: int) -> None:
    if not 0 <= n <= cap:
        raise InvalidArgumentError(f"degree must be in 0..{cap}, got {n}")

@lru_cache(maxsize=None)
def _kappa(n: int) -> TElement:
    if n == 0:
        return TElement.from_basis(SINGLE_VERTEX)
    return TElement({tree: Fraction(1, symm_order(tree)) for tree in enumerate_trees(n + 1)})

def kappa(n: int) -> TElement:
    """kappa_n = sum over |t| = n of t / |Symm(t)|; kappa_0 is the unit"""
    _check_degree(n, settings.MAX_KAPPA_DEGREE)
    return _kappa(n)

def epsilon(n: int) -> TElement:
    """epsilon_n = (-1)^n S(kappa_n); n! epsilon_n is the n-corolla"""
    _check_degree(n, settings.MAX_KAPPA_DEGREE)
    return gl_antipode(_kappa(n)).scale((-1) ** n)

LADDER_2 = ladder(2)

@lru_cache(maxsize=None)
def _n_power(tree: RootedTree, k: int) -> TElement:
    if k == 0:
        return TElement.from_basis(tree)
    return gl_mul(LADDER_2, _n_power(tree, k - 1))

def n_operator(tree: RootedTree, k: int) -> TElement:
    """N^k(t), where N(t) = l_2 o t grows one leaf at every vertex"""
    if k < 0:
        raise InvalidArgumentError(f"k must be >= 0, got {k}")
    return _n_power(tree, k)

def n_coefficient(tree: RootedTree, target: RootedTree) -> Fraction:
    """n(t; t'), the coefficient of t' in N^(|t'| - |t|)(t); zero when |t'| < |t|"""
    steps = target.degree - tree.degree
    if steps < 0:
        return Fraction(0)
    return _n_power(tree, steps).coefficient(target)

def tree_multiplicity(tree: RootedTree) -> int:
    value = n_coefficient(SINGLE_VERTEX, tree)
    return int(value)

def multiplicity_formula(*sizes: int) -> Fraction:
    """n(.; B_+(l_n1 ... l_nk)) = multinomial(n1 + ... + nk; n1, ..., nk) / prod m_i!"""
    if not sizes or any(size < 1 for size in sizes):
        raise InvalidArgumentError(f"need k >= 1 ladder sizes, each >= 1, got {sizes}")
    value = Fraction(factorial(sum(sizes)))
    for size in sizes:
        value /= factorial(size)
    for mult in Counter(sizes).values():
        value /= factorial(mult)
    return value

def multiplicity_by_tree_factorial(tree: RootedTree) -> Fraction:
    """|V|! / (t! |Symm(t)|), which specializes to multiplicity_formula on ladder bouquets"""
    return Fraction(factorial(tree.num_vertices), tree_factorial(tree) * symm_order(tree))

def ladder_bouquet(*sizes: int) -> RootedTree:
    return RootedTree(tuple(ladder(size) for size in sizes))

# --- maps between the algebras ------------------------------------------------------

def _ladder_forest(parts: Iterable[int]) -> Forest:
    return Forest(tuple(ladder(part) for part in parts))

def phi(s: SymElement) -> HKElement:
    """Sym -> H_K, e_i -> l_i, extended multiplicatively"""
    data: Dict[Forest, Fraction] = {}
    for lam, coeff in s.to("e").items():
        key = _ladder_forest(lam.parts)
        data[key] = data.get(key, 0) + coeff
    return HKElement(data)

def Phi(a: NSymElement) -> HFElement:
    """NSym -> H_F, e_i -> planar ladder with i vertices, order of the e-word kept"""
    data: Dict[PlanarForest, Fraction] = {}
    for word, coeff in nsym_to_e_words(a).items():
        key = PlanarForest(tuple(planar_ladder(part) for part in word.parts))
        data[key] = data.get(key, 0) + coeff
    return HFElement(data)

def pi(a: HFElement) -> HKElement:
    """H_F -> H_K, forget the planar order"""
    data: Dict[Forest, Fraction] = {}
    for forest, coeff in a.items():
        key = planar_to_rooted(forest)
        data[key] = data.get(key, 0) + coeff
    return HKElement(data)

# --- duality ------------------------------------------------------------------------

def pair_T_HK(tree: RootedTree, forest: Forest) -> Fraction:
    """<B_+(g), f> = |Symm(f)| when g = f, else 0"""
    if tree.branches() != forest:
        return Fraction(0)
    return Fraction(forest_symm_order(forest))

def pair_t_hk(a: TElement, b: HKElement) -> Fraction:
    return sum((ca * cb * pair_T_HK(tree, forest) for tree, ca in a.items() for forest, cb in b.items()), Fraction(0))

def pair_t_hk_tensors(a: LinComb, b: LinComb) -> Fraction:
    """<t1 (x) t2, f1 (x) f2> = <t1, f1> <t2, f2>, extended bilinearly"""
    total = Fraction(0)
    for (t1, t2), ca in a.items():
        for (f1, f2), cb in b.items():
            total += ca * cb * pair_T_HK(t1, f1) * pair_T_HK(t2, f2)
    return total

def phi_star(a: TElement) -> SymElement:
    """phi*(a) = sum over lambda |- n of <a, phi(m_lambda)> e_lambda, for a homogeneous of degree n"""
    degrees = {tree.degree for tree, _ in a.items()}
    if len(degrees) > 1:
        raise InvalidArgumentError(f"phi* needs a homogeneous element, got degrees {sorted(degrees)}")
    if not degrees:
        return SymElement.zero("e")
    n = degrees.pop()
    if n > settings.MAX_PHI_STAR_DEGREE:
        raise InvalidArgumentError(f"phi* degree must be <= {settings.MAX_PHI_STAR_DEGREE}, got {n}")
    data: Dict[Partition, Fraction] = {}
    for lam in partitions(n):
        value = pair_t_hk(a, phi(sym("m", *lam.parts)))
        if value:
            data[lam] = value
    return SymElement(data, basis="e")

def phi_on_pairs(pairs: LinComb) -> LinComb:
    """phi (x) phi on a LinComb over pairs of e-basis partitions"""
    data: Dict[Tuple[Forest, Forest], Fraction] = {}
    for (left, right), coeff in pairs.items():
        key = (_ladder_forest(left.parts), _ladder_forest(right.parts))
        data[key] = data.get(key, 0) + coeff
    return LinComb(data)

def Phi_on_pairs(pairs: LinComb) -> LinComb:
    """Phi (x) Phi on a LinComb over pairs of S-basis compositions"""
    data: Dict[Tuple[PlanarForest, PlanarForest], Fraction] = {}
    for (left, right), coeff in pairs.items():
        for f1, c1 in Phi(NSymElement.from_basis(left)).items():
            for f2, c2 in Phi(NSymElement.from_basis(right)).items():
                data[(f1, f2)] = data.get((f1, f2), 0) + coeff * c1 * c2
    return LinComb(data)
