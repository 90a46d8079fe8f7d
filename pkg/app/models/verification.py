# File: app/models/verification.py
# Path: hopfbench/app/models/verification.py

from typing import List, Optional
from pydantic import BaseModel, Field

class SuiteResult(BaseModel):
    name: str
    passed: bool
    checked: int = 0
    failures: List[str] = []  # first few failing cases, labelled

class VerificationSummary(BaseModel):
    passed: bool
    max_degree: int
    suites: List[SuiteResult]

class VerifyRequest(BaseModel):
    suites: Optional[List[str]] = None  # None runs every suite
    max_degree: Optional[int] = Field(default=None, ge=1)
    truncation_N: Optional[int] = Field(default=None, ge=2)
    tolerance: Optional[float] = Field(default=None, gt=0)
