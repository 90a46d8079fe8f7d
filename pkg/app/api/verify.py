# File: app/api/verify.py
# Path: hopfbench/app/api/verify.py

from typing import Any, List

from fastapi import APIRouter

from app.api.dependencies import request_settings
from app.core.config import Settings
from app.models.verification import VerificationSummary, VerifyRequest
from app.services.verification import SUITES, run_all

router = APIRouter(prefix="/verify", tags=["verify"])

@router.get("/suites", response_model=List[str])
def list_suites() -> Any:
    return list(SUITES)

@router.post("", response_model=VerificationSummary)
def verify(request: VerifyRequest) -> Any:
    """
    Run identity suites; body fields override the service defaults.
    Runs in the threadpool since the suites are CPU bound.
    """
    cfg: Settings = request_settings(request.max_degree, request.truncation_N, request.tolerance)
    return run_all(cfg, request.suites)
