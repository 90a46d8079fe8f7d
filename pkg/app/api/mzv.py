# File: app/api/mzv.py
# Path: hopfbench/app/api/mzv.py

from typing import Any

from fastapi import APIRouter, HTTPException, status

from app.algebra.core import LinComb
from app.algebra.mzv import ZetaValue, ohno_family, verify_relation, zeta_of_lincomb
from app.core.config import settings
from app.models.algebra import OhnoCheckRequest, OhnoCheckResponse, ZetaRequest
from app.services.formatting import format_element
from app.services.parser import parse_element

router = APIRouter(prefix="/mzv", tags=["mzv"])

def _zeta_input(text: str) -> LinComb:
    parsed = parse_element(text)
    if parsed.family not in ("qsym", "word"):
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=f"zeta values are defined on M(...) and W(...) elements, got a {parsed.family} element",
        )
    return parsed.value

@router.post("/eval", response_model=ZetaValue)
def evaluate(request: ZetaRequest) -> Any:
    """
    Truncated zeta value of a QSym^0 or H^0 element, with its error estimate
    """
    return zeta_of_lincomb(_zeta_input(request.element), request.N or settings.TRUNCATION_N)

@router.post("/verify")
def verify(request: ZetaRequest) -> Any:
    """
    Report whether the element's zeta value vanishes within tolerance
    """
    report = verify_relation(
        _zeta_input(request.element),
        request.N or settings.TRUNCATION_N,
        request.tolerance or settings.TOLERANCE,
    )
    return report.model_dump(by_alias=True)

@router.post("/ohno", response_model=OhnoCheckResponse)
def verify_ohno(request: OhnoCheckRequest) -> Any:
    """
    Check every Ohno relation of the given total weight and i
    """
    N = request.N or settings.TRUNCATION_N
    tolerance = request.tolerance or settings.OHNO_TOLERANCE
    family = ohno_family(request.weight, request.i)
    if not family:
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=f"no Ohno relation of weight {request.weight} with i={request.i}",
        )
    checks = []
    for word, relation in family:
        report = verify_relation(relation, N, tolerance)
        checks.append({
            "word": str(word),
            "relation": format_element(relation, "word"),
            "passed": report.passed,
            "value": report.value,
            "error_estimate": report.error_estimate,
        })
    return {
        "weight": request.weight,
        "i": request.i,
        "N": N,
        "tolerance": tolerance,
        "passed": all(check["passed"] for check in checks),
        "checks": checks,
    }
