# File: app/services/verification.py
# Path: hopfbench/app/services/verification.py

"""
Identity suites run by `verify all` and POST /api/verify.

Every suite takes its degree caps from the Settings it is handed, checks
each case exactly (or numerically, for the zeta suites) and reports the
number of cases checked together with the first few failures.
"""

import itertools
import logging
from math import comb, factorial, pi
from typing import Callable, Dict, Iterable, List, Optional

from app.algebra.core import Composition, LinComb, accumulate, compositions, compositions_up_to, is_admissible, partitions, tensor
from app.algebra.hopf import HopfOps, check_antipode, check_coassociativity, check_counit
from app.algebra.hopf_trees import (
    HF,
    HK,
    T,
    HKElement,
    Phi,
    Phi_on_pairs,
    TElement,
    epsilon,
    gl_coproduct,
    gl_mul,
    hf_coproduct,
    hf_product,
    hk_coproduct,
    kappa,
    ladder_bouquet,
    multiplicity_by_tree_factorial,
    multiplicity_formula,
    pair_t_hk,
    pair_t_hk_tensors,
    phi,
    phi_on_pairs,
    phi_star,
    pi as forget_planar,
    tree_multiplicity,
)
from app.algebra.mzv import double_shuffle_relation, ohno_relation, verify_relation, zeta_of_lincomb, zeta_truncated
from app.algebra.qsym import (
    NSYM,
    QSYM,
    M,
    S,
    abelianize,
    expand_truncated,
    is_in_qsym0,
    is_quasi_symmetric,
    is_symmetric,
    lyndon_product_rank,
    nsym_coproduct,
    nsym_e,
    nsym_e_word,
    nsym_mul,
    pair_qsym_nsym,
    pair_tensors,
    qsym_antipode,
    qsym_antipode_closed,
    qsym_coproduct,
    qsym_mul,
    qsym_to_sym,
    sym,
    sym_coproduct,
    sym_mul,
    sym_to_qsym,
)
from app.algebra.trees import (
    SINGLE_VERTEX,
    Forest,
    corolla,
    enumerate_forests,
    enumerate_planar_forests,
    enumerate_trees,
    ladder,
)
from app.algebra.words import (
    Word,
    comp_to_word,
    concat,
    is_admissible_word,
    shuffle,
    shuffle_lincomb,
    tau,
    word_to_comp,
    words_of_weight,
)
from app.core.config import Settings
from app.core.exceptions import InvalidArgumentError
from app.models.verification import SuiteResult, VerificationSummary

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 10
HOMOMORPHISM_N = 100_000

class SuiteTally:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures: List[str] = []

    def check(self, ok: bool, label: str) -> None:
        self.checked += 1
        if not ok:
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(label)
            else:
                self.failures[-1] = "..."

    def result(self) -> SuiteResult:
        return SuiteResult(name=self.name, passed=not self.failures, checked=self.checked, failures=self.failures)

def _check_hopf_axioms(tally: SuiteTally, ops: HopfOps, basis: Iterable) -> None:
    for key in basis:
        tally.check(check_coassociativity(ops, key), f"{ops.name} coassociativity at {key}")
        tally.check(check_counit(ops, key), f"{ops.name} counit at {key}")
        tally.check(check_antipode(ops, key), f"{ops.name} antipode at {key}")

def _composition_pairs(max_weight: int, admissible_only: bool = False):
    pool = [comp for comp in compositions_up_to(max_weight) if not admissible_only or (comp.parts and is_admissible(comp))]
    return [(a, b) for a in pool for b in pool if a.weight + b.weight <= max_weight]

def _all_words(max_length: int) -> List[Word]:
    return [Word("".join(letters)) for n in range(max_length + 1) for letters in itertools.product("xy", repeat=n)]

def _trees_of_degree(k: int):
    return enumerate_trees(k + 1)

# --- QSym / NSym / Sym ---------------------------------------------------------------

def suite_qsym_oracle(cfg: Settings) -> SuiteResult:
    """quasi_shuffle against the product of truncated power series"""
    tally = SuiteTally("qsym-oracle")
    v, d = cfg.ORACLE_NUM_VARS, cfg.ORACLE_MAX_DEG
    for a, b in _composition_pairs(cfg.MAX_DEGREE):
        product = qsym_mul(M(*a.parts), M(*b.parts))
        series = expand_truncated(product, v, d)
        expected = expand_truncated(M(*a.parts), v, d) * expand_truncated(M(*b.parts), v, d)
        tally.check(series == expected, f"M{a} * M{b} disagrees with the series product")
        tally.check(is_quasi_symmetric(series), f"M{a} * M{b} is not quasi-symmetric")
    return tally.result()

def suite_qsym_hopf(cfg: Settings) -> SuiteResult:
    tally = SuiteTally("qsym-hopf")
    basis = compositions_up_to(cfg.MAX_DEGREE + 1)
    _check_hopf_axioms(tally, QSYM, basis)
    for comp in basis:
        element = M(*comp.parts)
        tally.check(qsym_antipode(element) == qsym_antipode_closed(element), f"closed antipode formula at M{comp}")
    return tally.result()

def suite_qsym_structure(cfg: Settings) -> SuiteResult:
    """Freeness on Lyndon generators, QSym^0 closure, and the embedding of Sym"""
    tally = SuiteTally("qsym-structure")
    for weight in range(1, cfg.MAX_DEGREE):
        rank, count = lyndon_product_rank(weight)
        expected = len(compositions(weight))
        tally.check(rank == count == expected, f"Lyndon products of weight {weight}: rank {rank}, count {count}, expected {expected}")
    for a, b in _composition_pairs(cfg.MAX_DEGREE, admissible_only=True):
        tally.check(is_in_qsym0(qsym_mul(M(*a.parts), M(*b.parts))), f"M{a} * M{b} leaves QSym^0")
    for n in range(1, cfg.MAX_DEGREE + 1):
        image = sym_to_qsym(sym("p", n))
        tally.check(image == M(n), f"p_{n} maps to {image!r}")
        primitive = tensor(M(), M(n)) + tensor(M(n), M())
        tally.check(qsym_coproduct(image) == primitive, f"p_{n} is not primitive")
    shapes = [lam for n in range(1, cfg.MAX_DEGREE + 1) for lam in partitions(n)]
    for lam, mu in itertools.product(shapes, repeat=2):
        if lam.weight + mu.weight > cfg.MAX_DEGREE:
            continue
        for basis in ("e", "h"):
            left, right = sym(basis, *lam.parts), sym(basis, *mu.parts)
            embedded = qsym_mul(sym_to_qsym(left), sym_to_qsym(right))
            product = sym_mul(left, right)
            tally.check(sym_to_qsym(product) == embedded, f"Sym -> QSym is not multiplicative at {basis}{lam} {basis}{mu}")
            tally.check(is_symmetric(embedded) and qsym_to_sym(embedded) == product, f"QSym -> Sym round trip at {basis}{lam} {basis}{mu}")
    return tally.result()

def suite_nsym_hopf(cfg: Settings) -> SuiteResult:
    tally = SuiteTally("nsym-hopf")
    _check_hopf_axioms(tally, NSYM, compositions_up_to(cfg.MAX_DEGREE))
    for n in range(cfg.MAX_DEGREE + 1):
        expected = accumulate(((1, tensor(nsym_e(i), nsym_e(n - i))) for i in range(n + 1)), into=LinComb)
        tally.check(nsym_coproduct(nsym_e(n)) == expected, f"e_{n} is not a divided power in NSym")
    for a, b in _composition_pairs(cfg.MAX_DEGREE):
        left = abelianize(nsym_mul(S(*a.parts), S(*b.parts)))
        right = sym_mul(abelianize(S(*a.parts)), abelianize(S(*b.parts)))
        tally.check(left == right, f"abelianization is not multiplicative at S{a} S{b}")
    return tally.result()

def suite_qsym_nsym_duality(cfg: Settings) -> SuiteResult:
    """<ab, c> = <a (x) b, Delta c> and <Delta a, b (x) c> = <a, bc> on basis triples"""
    tally = SuiteTally("qsym-nsym-duality")
    for a, b in _composition_pairs(cfg.MAX_DEGREE):
        product = qsym_mul(M(*a.parts), M(*b.parts))
        pair = tensor(M(*a.parts), M(*b.parts))
        nproduct = nsym_mul(S(*a.parts), S(*b.parts))
        npair = tensor(S(*a.parts), S(*b.parts))
        for c in compositions(a.weight + b.weight):
            lhs = pair_qsym_nsym(product, S(*c.parts))
            rhs = pair_tensors(pair, nsym_coproduct(S(*c.parts)))
            tally.check(lhs == rhs, f"<M{a} M{b}, S{c}>: {lhs} != {rhs}")
            lhs = pair_tensors(qsym_coproduct(M(*c.parts)), npair)
            rhs = pair_qsym_nsym(M(*c.parts), nproduct)
            tally.check(lhs == rhs, f"<Delta M{c}, S{a} (x) S{b}>: {lhs} != {rhs}")
    return tally.result()

# --- words and zeta values ------------------------------------------------------------

def suite_words(cfg: Settings) -> SuiteResult:
    tally = SuiteTally("words")
    d = cfg.MAX_DEGREE + 1
    words = _all_words(d)
    for u, v in itertools.product(words, repeat=2):
        if len(u) + len(v) > d:
            continue
        product = shuffle(u, v)
        tally.check(product == shuffle(v, u), f"shuffle of {u!r}, {v!r} is not commutative")
        total = sum(coeff for _, coeff in product.items())
        tally.check(total == comb(len(u) + len(v), len(u)), f"shuffle of {u!r}, {v!r} has {total} terms")
        reversed_product = concat(LinComb({tau(v): 1}), LinComb({tau(u): 1}))
        tally.check(LinComb({tau(u + v): 1}) == reversed_product, f"tau is not an antiautomorphism at {u!r}, {v!r}")
    for u, v, w in itertools.product(words, repeat=3):
        if len(u) + len(v) + len(w) > d:
            continue
        left = shuffle_lincomb(shuffle(u, v), LinComb({w: 1}))
        right = shuffle_lincomb(LinComb({u: 1}), shuffle(v, w))
        tally.check(left == right, f"shuffle is not associative at {u!r}, {v!r}, {w!r}")
    for word in words:
        tally.check(tau(tau(word)) == word, f"tau is not an involution at {word!r}")
        tally.check(is_admissible_word(tau(word)) == is_admissible_word(word), f"tau does not preserve H^0 at {word!r}")
    for comp in compositions_up_to(cfg.MAX_WORD_LENGTH):
        if comp.parts and is_admissible(comp):
            word = comp_to_word(comp)
            tally.check(word.weight == comp.weight and word.depth == comp.length, f"weight or depth lost at M{comp}")
            tally.check(word_to_comp(word) == comp, f"composition/word round trip at M{comp}")
    return tally.result()

def suite_mzv_basic(cfg: Settings) -> SuiteResult:
    """zeta(2) = pi^2/6, Euler's zeta(2,1) = zeta(3), and zeta(2)^2 both ways"""
    tally = SuiteTally("mzv-basic")
    N, tol = cfg.TRUNCATION_N, cfg.TOLERANCE
    zeta2 = zeta_truncated(Composition.of(2), N)
    gap = abs(zeta2.value - pi ** 2 / 6)
    tally.check(gap < max(2e-6, 2.0 / N), f"|zeta_N(2) - pi^2/6| = {gap:.3e}")
    report = verify_relation(M(1, 2) - M(3), N, tol)
    tally.check(report.passed, f"zeta(2,1) - zeta(3) = {report.value:.3e}")
    square = zeta2.value ** 2
    for name, relation in (("stuffle", M(2, 2).scale(2) + M(4)), ("shuffle", M(1, 3).scale(4) + M(2, 2).scale(2))):
        value = zeta_of_lincomb(relation, N)
        gap = abs(square - value.value)
        tally.check(gap <= max(tol, 3 * (value.error_estimate + 2 * zeta2.error_estimate)), f"zeta(2)^2 via {name}: gap {gap:.3e}")
    return tally.result()

def suite_mzv_relations(cfg: Settings) -> SuiteResult:
    """Truncated zeta is multiplicative for the stuffle; double shuffle defects vanish"""
    tally = SuiteTally("mzv-relations")
    N = min(cfg.TRUNCATION_N, HOMOMORPHISM_N)
    # each factor of weight <= MAX_DEGREE - 1
    factors = [comp for comp in compositions_up_to(cfg.MAX_DEGREE - 1) if comp.parts and is_admissible(comp)]
    for a, b in itertools.product(factors, repeat=2):
        left = zeta_of_lincomb(qsym_mul(M(*a.parts), M(*b.parts)), N).value
        right = zeta_truncated(a, N).value * zeta_truncated(b, N).value
        tally.check(abs(left - right) <= 1e-9 * max(1.0, abs(right)), f"zeta_N(M{a} * M{b}) = {left} vs {right}")
    admissible = [word for weight in range(2, cfg.MAX_DEGREE + 1) for word in words_of_weight(weight)]
    for u, v in itertools.product(admissible, repeat=2):
        if u.weight + v.weight > cfg.MAX_DEGREE:
            continue
        report = verify_relation(double_shuffle_relation(u, v), cfg.TRUNCATION_N, cfg.TOLERANCE)
        tally.check(report.passed, f"double shuffle {u} / {v}: {report.value:.3e}")
    return tally.result()

def suite_ohno(cfg: Settings) -> SuiteResult:
    tally = SuiteTally("ohno")
    for weight in range(2, cfg.MAX_DEGREE + 1):
        for word in words_of_weight(weight):
            for i in range(cfg.OHNO_MAX_I + 1):
                report = verify_relation(ohno_relation(i, word), cfg.TRUNCATION_N, cfg.OHNO_TOLERANCE)
                tally.check(report.passed, f"h_{i} on {word}: defect {report.value:.3e}")
    return tally.result()

# --- rooted trees ----------------------------------------------------------------------

def suite_tree_hopf(cfg: Settings) -> SuiteResult:
    tally = SuiteTally("tree-hopf")
    top = cfg.MAX_DEGREE + 1
    _check_hopf_axioms(tally, HK, (forest for n in range(top + 1) for forest in enumerate_forests(n)))
    _check_hopf_axioms(tally, HF, (forest for n in range(top + 1) for forest in enumerate_planar_forests(n)))
    _check_hopf_axioms(tally, T, (tree for n in range(1, top + 1) for tree in enumerate_trees(n)))
    return tally.result()

def suite_gl_algebra(cfg: Settings) -> SuiteResult:
    tally = SuiteTally("gl-algebra")
    limit = cfg.MAX_DEGREE - 1
    pool = [tree for k in range(limit + 1) for tree in _trees_of_degree(k)]
    for t1, t2, t3 in itertools.product(pool, repeat=3):
        if t1.degree + t2.degree + t3.degree > limit:
            continue
        left = gl_mul(gl_mul(t1, t2), t3)
        right = gl_mul(t1, gl_mul(t2, t3))
        tally.check(left == right, f"GL product is not associative at {t1}, {t2}, {t3}")
    for tree in (tree for n in range(1, cfg.MAX_DEGREE + 2) for tree in enumerate_trees(n)):
        element = TElement.from_basis(tree)
        tally.check(gl_mul(SINGLE_VERTEX, tree) == element == gl_mul(tree, SINGLE_VERTEX), f"single vertex is not a unit at {tree}")
    return tally.result()

def _ladder_element(n: int) -> HKElement:
    return HKElement.from_basis(Forest((ladder(n),)) if n else Forest())

def suite_divided_powers(cfg: Settings) -> SuiteResult:
    """Ladders in H_K, kappa_n in T, corollas, and phi* on kappa_n and epsilon_n"""
    tally = SuiteTally("divided-powers")
    for n in range(1, cfg.MAX_DEGREE + 2):
        expected = accumulate(((1, tensor(_ladder_element(i), _ladder_element(n - i))) for i in range(n + 1)), into=LinComb)
        tally.check(hk_coproduct(ladder(n)) == expected, f"ladder l_{n} is not a divided power")
    top = min(cfg.MAX_DEGREE, cfg.MAX_KAPPA_DEGREE)
    for n in range(top + 1):
        expected = accumulate(((1, tensor(kappa(i), kappa(n - i))) for i in range(n + 1)), into=LinComb)
        tally.check(gl_coproduct(kappa(n)) == expected, f"kappa_{n} is not a divided power")
        tally.check(epsilon(n).scale(factorial(n)) == TElement.from_basis(corolla(n)), f"{n}! epsilon_{n} is not the corolla")
    for n in range(1, min(cfg.MAX_DEGREE - 1, cfg.MAX_PHI_STAR_DEGREE) + 1):
        tally.check(phi_star(kappa(n)) == sym("h", n), f"phi*(kappa_{n}) != h_{n}")
        tally.check(phi_star(epsilon(n)) == sym("e", n), f"phi*(epsilon_{n}) != e_{n}")
    return tally.result()

def suite_tree_maps(cfg: Settings) -> SuiteResult:
    """phi, Phi and pi: algebra and coalgebra maps, and pi o Phi = phi o abelianization"""
    tally = SuiteTally("tree-maps")
    d = cfg.MAX_DEGREE
    for word in (comp for comp in compositions_up_to(d) if comp.parts):
        element = nsym_e_word(word)
        tally.check(forget_planar(Phi(element)) == phi(abelianize(element)), f"diagram fails on the e-word {word}")
    for n in range(1, d + 1):
        tally.check(hk_coproduct(phi(sym("e", n))) == phi_on_pairs(sym_coproduct(sym("e", n))), f"phi is not a coalgebra map at e_{n}")
        tally.check(hf_coproduct(Phi(nsym_e(n))) == Phi_on_pairs(nsym_coproduct(nsym_e(n))), f"Phi is not a coalgebra map at e_{n}")
    for a, b in _composition_pairs(d):
        if not a.parts or not b.parts:
            continue
        left = Phi(nsym_mul(S(*a.parts), S(*b.parts)))
        tally.check(left == hf_product(Phi(S(*a.parts)), Phi(S(*b.parts))), f"Phi is not multiplicative at S{a} S{b}")
        h_a, h_b = sym("h", *a.parts), sym("h", *b.parts)
        tally.check(phi(sym_mul(h_a, h_b)) == HK.mul(phi(h_a), phi(h_b)), f"phi is not multiplicative at h{a} h{b}")
    return tally.result()

def suite_tree_duality(cfg: Settings) -> SuiteResult:
    """<t1 o t2, f> = <t1 (x) t2, Delta_K f> and <Delta_T t, f1 (x) f2> = <t, f1 f2>"""
    tally = SuiteTally("tree-duality")
    for n in range(cfg.MAX_DEGREE):
        forests = enumerate_forests(n)
        for k in range(n + 1):
            for t1, t2 in itertools.product(_trees_of_degree(k), _trees_of_degree(n - k)):
                product = gl_mul(t1, t2)
                pair = tensor(TElement.from_basis(t1), TElement.from_basis(t2))
                for forest in forests:
                    lhs = pair_t_hk(product, HKElement.from_basis(forest))
                    rhs = pair_t_hk_tensors(pair, hk_coproduct(forest))
                    tally.check(lhs == rhs, f"<{t1} o {t2}, {forest}>: {lhs} != {rhs}")
        for tree in _trees_of_degree(n):
            delta = gl_coproduct(tree)
            for k in range(n + 1):
                for f1, f2 in itertools.product(enumerate_forests(k), enumerate_forests(n - k)):
                    lhs = pair_t_hk_tensors(delta, tensor(HKElement.from_basis(f1), HKElement.from_basis(f2)))
                    rhs = pair_t_hk(TElement.from_basis(tree), HKElement.from_basis(f1 + f2))
                    tally.check(lhs == rhs, f"<Delta {tree}, {f1} (x) {f2}>: {lhs} != {rhs}")
    return tally.result()

def suite_multiplicity(cfg: Settings) -> SuiteResult:
    tally = SuiteTally("multiplicity")
    top = cfg.MAX_DEGREE + 1
    for m in range(1, top + 1):
        for lam in partitions(m):
            tree = ladder_bouquet(*lam.parts)
            brute, closed = tree_multiplicity(tree), multiplicity_formula(*lam.parts)
            tally.check(brute == closed, f"n(.; {tree}) = {brute}, closed formula gives {closed}")
    for n in range(1, top + 2):
        for tree in enumerate_trees(n):
            value = tree_multiplicity(tree)
            tally.check(value >= 1, f"n(.; {tree}) = {value}")
            tally.check(value == multiplicity_by_tree_factorial(tree), f"tree factorial formula fails at {tree}")
    return tally.result()

SUITES: Dict[str, Callable[[Settings], SuiteResult]] = {
    "qsym-oracle": suite_qsym_oracle,
    "qsym-hopf": suite_qsym_hopf,
    "qsym-structure": suite_qsym_structure,
    "nsym-hopf": suite_nsym_hopf,
    "qsym-nsym-duality": suite_qsym_nsym_duality,
    "words": suite_words,
    "mzv-basic": suite_mzv_basic,
    "mzv-relations": suite_mzv_relations,
    "ohno": suite_ohno,
    "tree-hopf": suite_tree_hopf,
    "gl-algebra": suite_gl_algebra,
    "divided-powers": suite_divided_powers,
    "tree-maps": suite_tree_maps,
    "tree-duality": suite_tree_duality,
    "multiplicity": suite_multiplicity,
}

def run_suite(name: str, cfg: Settings) -> SuiteResult:
    if name not in SUITES:
        raise InvalidArgumentError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    logger.info(f"running suite {name} (max degree {cfg.MAX_DEGREE})")
    result = SUITES[name](cfg)
    if result.passed:
        logger.info(f"suite {name}: {result.checked} checks passed")
    else:
        logger.warning(f"suite {name}: {len(result.failures)} failing cases, first: {result.failures[0]}")
    return result

def run_all(cfg: Settings, names: Optional[List[str]] = None) -> VerificationSummary:
    """Run the named suites (all of them by default) in their fixed order"""
    selected = list(SUITES) if names is None else names
    results = [run_suite(name, cfg) for name in selected]
    return VerificationSummary(passed=all(r.passed for r in results), max_degree=cfg.MAX_DEGREE, suites=results)
