import itertools
from fractions import Fraction

import pytest

from app.algebra.core import LinComb, tensor
from app.algebra.hopf import check_antipode, check_coassociativity, check_counit
from app.algebra.hopf_trees import (
    HF,
    HK,
    T as GL,
    HKElement,
    TElement,
    epsilon,
    gl_coproduct,
    gl_mul,
    hk_antipode,
    hk_coproduct,
    kappa,
    ladder_bouquet,
    multiplicity_by_tree_factorial,
    multiplicity_formula,
    n_coefficient,
    n_operator,
    pair_T_HK,
    pair_t_hk,
    pair_t_hk_tensors,
    phi,
    phi_on_pairs,
    phi_star,
    pi,
    Phi,
    tree_label,
    tree_multiplicity,
)
from app.algebra.qsym import S, abelianize, nsym_e, sym, sym_coproduct
from app.algebra.trees import (
    SINGLE_VERTEX,
    Forest,
    RootedTree,
    corolla,
    enumerate_forests,
    enumerate_planar_forests,
    enumerate_trees,
    ladder,
    parse_tree,
)
from app.core.exceptions import InvalidArgumentError

DOT = SINGLE_VERTEX

def K(*trees: RootedTree) -> HKElement:
    return HKElement.from_basis(Forest(trees))

def pair(left, right) -> LinComb:
    return LinComb({(left, right): 1})

def admissible_cuts(tree: RootedTree) -> LinComb:
    """Coproduct of one tree by brute force over edge subsets"""
    children = []

    def index(node: RootedTree) -> int:
        me = len(children)
        children.append([])
        for kid in node.children:
            children[me].append(index(kid))
        return me

    index(tree)
    parent = {kid: v for v, kids in enumerate(children) for kid in kids}

    def ancestors(v: int):
        while v in parent:
            v = parent[v]
            yield v

    def build(v: int, removed) -> RootedTree:
        return RootedTree(tuple(build(kid, removed) for kid in children[v] if kid not in removed))

    result = pair(Forest((tree,)), Forest())
    edges = sorted(parent)
    for size in range(len(edges) + 1):
        for cut in itertools.combinations(edges, size):
            if any(a in cut for v in cut for a in ancestors(v)):
                continue
            pruned = Forest(tuple(build(v, ()) for v in cut))
            trunk = Forest((build(0, set(cut)),))
            result = result + pair(pruned, trunk)
    return result

def test_ladder_coproduct() -> None:
    l2 = Forest((ladder(2),))
    expected = pair(l2, Forest()) + pair(Forest((DOT,)), Forest((DOT,))) + pair(Forest(), l2)
    assert hk_coproduct(ladder(2)) == expected

def test_cherry_coproduct() -> None:
    cherry = corolla(2)
    expected = (
        pair(Forest((cherry,)), Forest())
        + pair(Forest(), Forest((cherry,)))
        + pair(Forest((DOT,)), Forest((ladder(2),))).scale(2)
        + pair(Forest((DOT, DOT)), Forest((DOT,)))
    )
    assert hk_coproduct(cherry) == expected

def test_coproduct_matches_admissible_cuts() -> None:
    for n in range(1, 6):
        for tree in enumerate_trees(n):
            assert hk_coproduct(tree) == admissible_cuts(tree)

def test_coproduct_is_multiplicative_on_forests() -> None:
    forest = K(DOT, ladder(2))
    product = LinComb()
    for (a, b), ca in hk_coproduct(DOT).items():
        for (c, d), cb in hk_coproduct(ladder(2)).items():
            product = product + pair(a + c, b + d).scale(ca * cb)
    assert hk_coproduct(forest) == product

def test_hk_antipode() -> None:
    assert hk_antipode(DOT) == -K(DOT)
    assert hk_antipode(ladder(2)) == -K(ladder(2)) + K(DOT, DOT)

@pytest.mark.parametrize("n", range(0, 5))
def test_hk_hopf_axioms(n) -> None:
    for forest in enumerate_forests(n):
        assert check_coassociativity(HK, forest)
        assert check_counit(HK, forest)
        assert check_antipode(HK, forest)

@pytest.mark.parametrize("n", range(0, 5))
def test_hf_hopf_axioms(n) -> None:
    for forest in enumerate_planar_forests(n):
        assert check_coassociativity(HF, forest)
        assert check_counit(HF, forest)
        assert check_antipode(HF, forest)

@pytest.mark.parametrize("n", range(1, 6))
def test_t_hopf_axioms(n) -> None:
    for tree in enumerate_trees(n):
        assert check_coassociativity(GL, tree)
        assert check_counit(GL, tree)
        assert check_antipode(GL, tree)

def test_grossman_larson_product() -> None:
    l2 = ladder(2)
    assert gl_mul(l2, l2) == TElement.from_basis(corolla(2)) + TElement.from_basis(ladder(3))
    for tree in enumerate_trees(4):
        assert gl_mul(DOT, tree) == TElement.from_basis(tree)
        assert gl_mul(tree, DOT) == TElement.from_basis(tree)

def test_grossman_larson_product_is_associative() -> None:
    small = [tree for n in range(1, 4) for tree in enumerate_trees(n)]
    for a, b, c in itertools.product(small, repeat=3):
        assert gl_mul(gl_mul(a, b), c) == gl_mul(a, gl_mul(b, c))

def test_t_coproduct() -> None:
    cherry = corolla(2)
    expected = pair(cherry, DOT) + pair(ladder(2), ladder(2)).scale(2) + pair(DOT, cherry)
    assert gl_coproduct(cherry) == expected

def test_kappa_and_epsilon() -> None:
    assert kappa(0) == TElement.from_basis(DOT)
    assert kappa(1) == TElement.from_basis(ladder(2))
    assert kappa(2) == TElement({ladder(3): 1, corolla(2): Fraction(1, 2)})
    assert epsilon(1) == TElement.from_basis(ladder(2))
    assert epsilon(2).scale(2) == TElement.from_basis(corolla(2))
    with pytest.raises(InvalidArgumentError):
        kappa(-1)

@pytest.mark.parametrize("n", [1, 2, 3])
def test_kappa_is_divided_power(n) -> None:
    expected = sum((tensor(kappa(i), kappa(n - i)) for i in range(n + 1)), LinComb())
    assert gl_coproduct(kappa(n)) == expected

def test_n_operator() -> None:
    assert n_operator(DOT, 1) == TElement.from_basis(ladder(2))
    assert n_operator(DOT, 2) == TElement.from_basis(corolla(2)) + TElement.from_basis(ladder(3))
    assert n_coefficient(ladder(3), DOT) == 0
    with pytest.raises(InvalidArgumentError):
        n_operator(DOT, -1)

def test_tree_multiplicity_example() -> None:
    tree = parse_tree("[[][[]]]")
    assert tree_multiplicity(tree) == 3
    assert multiplicity_by_tree_factorial(tree) == 3
    assert ladder_bouquet(1, 2) == tree

@pytest.mark.parametrize("sizes", [(1,), (1, 1), (1, 2), (2, 2), (1, 1, 2), (1, 3)])
def test_multiplicity_formula_on_ladder_bouquets(sizes) -> None:
    tree = ladder_bouquet(*sizes)
    assert tree_multiplicity(tree) == multiplicity_formula(*sizes)

def test_multiplicity_formula_rejects_empty_bouquet() -> None:
    with pytest.raises(InvalidArgumentError):
        multiplicity_formula()

def test_multiplicities_are_positive_and_match_tree_factorial() -> None:
    for n in range(1, 7):
        for tree in enumerate_trees(n):
            value = tree_multiplicity(tree)
            assert value > 0
            assert value == multiplicity_by_tree_factorial(tree)

def test_pairing() -> None:
    assert pair_T_HK(corolla(2), Forest((DOT, DOT))) == 2
    assert pair_T_HK(ladder(3), Forest((DOT, DOT))) == 0
    assert pair_t_hk(kappa(2), K(DOT, DOT)) == 1

def test_product_is_adjoint_to_coproduct() -> None:
    small = [tree for n in range(1, 5) for tree in enumerate_trees(n)]
    for t1, t2 in itertools.product(small, repeat=2):
        degree = t1.degree + t2.degree
        if degree > 3:
            continue
        for forest in enumerate_forests(degree):
            lhs = pair_t_hk(gl_mul(t1, t2), HKElement.from_basis(forest))
            rhs = pair_t_hk_tensors(tensor(TElement.from_basis(t1), TElement.from_basis(t2)), hk_coproduct(forest))
            assert lhs == rhs

@pytest.mark.parametrize("n", range(1, 5))
def test_coproduct_is_adjoint_to_product(n) -> None:
    degree = n - 1
    for tree in enumerate_trees(n):
        delta = gl_coproduct(tree)
        for k in range(degree + 1):
            for f1, f2 in itertools.product(enumerate_forests(k), enumerate_forests(degree - k)):
                lhs = pair_t_hk_tensors(delta, tensor(HKElement.from_basis(f1), HKElement.from_basis(f2)))
                rhs = pair_t_hk(TElement.from_basis(tree), HKElement.from_basis(f1 + f2))
                assert lhs == rhs

def test_phi_sends_e_to_ladders() -> None:
    assert phi(sym("e", 2)) == K(ladder(2))
    assert phi(sym("h", 2)) == K(DOT, DOT) - K(ladder(2))

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_phi_is_a_coalgebra_map(n) -> None:
    assert hk_coproduct(phi(sym("e", n))) == phi_on_pairs(sym_coproduct(sym("e", n)))

def test_forgetting_planarity_commutes_with_abelianization() -> None:
    for element in (S(1, 2), S(2, 1), nsym_e(3), S(1, 1, 1) - S(3)):
        assert pi(Phi(element)) == phi(abelianize(element))

def test_phi_star_of_divided_powers() -> None:
    assert phi_star(kappa(1)) == sym("h", 1)
    assert phi_star(kappa(2)) == sym("h", 2)
    assert phi_star(epsilon(2)) == sym("e", 2)
    with pytest.raises(InvalidArgumentError):
        phi_star(kappa(1) + kappa(2))

def test_tree_label() -> None:
    assert tree_label(DOT) == "T[[]]"
    assert tree_label(ladder(2)) == "T[[[]]]"
