# File: app/api/qsym.py
# Path: hopfbench/app/api/qsym.py

from typing import Any

from fastapi import APIRouter

from app.algebra.qsym import (
    expand_truncated,
    nsym_antipode,
    nsym_coproduct,
    nsym_mul,
    qsym_antipode,
    qsym_coproduct,
    qsym_mul,
)
from app.api.dependencies import parse_in_family
from app.core.config import settings
from app.models.algebra import (
    ElementRequest,
    ElementResponse,
    ExpandRequest,
    ProductRequest,
    SeriesResponse,
    TensorResponse,
)
from app.services.formatting import element_payload, tensor_payload

router = APIRouter(tags=["qsym"])

@router.post("/qsym/mul", response_model=ElementResponse)
def qsym_product(request: ProductRequest) -> Any:
    """
    Quasi-shuffle product of two QSym elements in the M basis
    """
    left = parse_in_family(request.left, "qsym").value
    right = parse_in_family(request.right, "qsym").value
    return element_payload(qsym_mul(left, right), "qsym")

@router.post("/qsym/coprod", response_model=TensorResponse)
def qsym_coproduct_endpoint(request: ElementRequest) -> Any:
    return tensor_payload(qsym_coproduct(parse_in_family(request.element, "qsym").value), "qsym")

@router.post("/qsym/antipode", response_model=ElementResponse)
def qsym_antipode_endpoint(request: ElementRequest) -> Any:
    return element_payload(qsym_antipode(parse_in_family(request.element, "qsym").value), "qsym")

@router.post("/qsym/expand", response_model=SeriesResponse)
def qsym_expand(request: ExpandRequest) -> Any:
    """
    Expand as a polynomial in t1..tv, dropping terms above max_deg
    """
    series = expand_truncated(
        parse_in_family(request.element, "qsym").value,
        request.num_vars or settings.ORACLE_NUM_VARS,
        settings.ORACLE_MAX_DEG if request.max_deg is None else request.max_deg,
    )
    return {"series": str(series), "num_vars": series.num_vars, "max_deg": series.max_deg}

@router.post("/nsym/mul", response_model=ElementResponse)
def nsym_product(request: ProductRequest) -> Any:
    left = parse_in_family(request.left, "nsym").value
    right = parse_in_family(request.right, "nsym").value
    return element_payload(nsym_mul(left, right), "nsym")

@router.post("/nsym/coprod", response_model=TensorResponse)
def nsym_coproduct_endpoint(request: ElementRequest) -> Any:
    return tensor_payload(nsym_coproduct(parse_in_family(request.element, "nsym").value), "nsym")

@router.post("/nsym/antipode", response_model=ElementResponse)
def nsym_antipode_endpoint(request: ElementRequest) -> Any:
    return element_payload(nsym_antipode(parse_in_family(request.element, "nsym").value), "nsym")
