# File: app/api/trees.py
# Path: hopfbench/app/api/trees.py

from typing import Any

from fastapi import APIRouter, HTTPException, status

from app.algebra.hopf_trees import (
    TElement,
    epsilon,
    gl_antipode,
    gl_coproduct,
    gl_mul,
    hf_antipode,
    hf_coproduct,
    hk_antipode,
    hk_coproduct,
    kappa,
    multiplicity_by_tree_factorial,
    phi_star,
    tree_multiplicity,
)
from app.algebra.trees import enumerate_trees, parse_tree, symm_order, tree_factorial
from app.api.dependencies import parse_in_family
from app.models.algebra import (
    ElementRequest,
    ElementResponse,
    ProductRequest,
    TensorResponse,
    TreeInvariants,
    TreeListResponse,
    TreeRequest,
)
from app.services.formatting import element_payload, tensor_payload
from app.services.parser import parse_element

router = APIRouter(prefix="/trees", tags=["trees"])

OPERATIONS = {
    "t": (gl_coproduct, gl_antipode),
    "hk": (hk_coproduct, hk_antipode),
    "hf": (hf_coproduct, hf_antipode),
}

def _tree_algebra_element(text: str):
    parsed = parse_element(text)
    if parsed.family not in OPERATIONS:
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=f"expected a T[...], K[...] or F[...] element, got {parsed.family}",
        )
    return parsed

@router.get("/enum/{n}", response_model=TreeListResponse)
def enumerate_endpoint(n: int) -> Any:
    """
    All rooted trees with n vertices, canonical and sorted
    """
    trees = enumerate_trees(n)
    return {"n": n, "count": len(trees), "trees": [str(tree) for tree in trees]}

@router.post("/invariants", response_model=TreeInvariants)
def invariants(request: TreeRequest) -> Any:
    tree = parse_tree(request.tree)
    return {
        "tree": str(tree),
        "vertices": tree.num_vertices,
        "symm": symm_order(tree),
        "tree_factorial": tree_factorial(tree),
        "multiplicity": tree_multiplicity(tree),
        "by_tree_factorial": str(multiplicity_by_tree_factorial(tree)),
    }

@router.post("/glmul", response_model=ElementResponse)
def grossman_larson_product(request: ProductRequest) -> Any:
    left = parse_in_family(request.left, "t").value
    right = parse_in_family(request.right, "t").value
    return element_payload(gl_mul(left, right), "t")

@router.get("/kappa/{n}", response_model=ElementResponse)
def kappa_element(n: int) -> Any:
    return element_payload(kappa(n), "t")

@router.get("/epsilon/{n}", response_model=ElementResponse)
def epsilon_element(n: int) -> Any:
    return element_payload(epsilon(n), "t")

@router.post("/coprod", response_model=TensorResponse)
def coproduct(request: ElementRequest) -> Any:
    """
    Coproduct of a T, H_K or H_F element
    """
    parsed = _tree_algebra_element(request.element)
    return tensor_payload(OPERATIONS[parsed.family][0](parsed.value), parsed.family)

@router.post("/antipode", response_model=ElementResponse)
def antipode(request: ElementRequest) -> Any:
    parsed = _tree_algebra_element(request.element)
    return element_payload(OPERATIONS[parsed.family][1](parsed.value), parsed.family)

@router.post("/phistar", response_model=ElementResponse)
def phi_star_endpoint(request: ElementRequest) -> Any:
    """
    phi* of a homogeneous T element, in the e basis of Sym
    """
    value: TElement = parse_in_family(request.element, "t").value
    return element_payload(phi_star(value), "sym")
