# File: app/api/dependencies.py
# Path: hopfbench/app/api/dependencies.py

from typing import Optional
from fastapi import HTTPException, status
from pydantic import ValidationError

from app.core.config import Settings, settings
from app.core.exceptions import ParseError
from app.services.parser import ParsedElement, parse_element

def request_settings(
    max_degree: Optional[int] = None,
    N: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> Settings:
    """
    Settings for one request: the service defaults, with the caps
    the caller overrides. Invalid values are rejected with 422.
    """
    overrides = {}
    if max_degree is not None:
        overrides["MAX_DEGREE"] = max_degree
    if N is not None:
        overrides["TRUNCATION_N"] = N
    if tolerance is not None:
        overrides["TOLERANCE"] = tolerance
    if not overrides:
        return settings
    try:
        return Settings(**overrides)
    except ValidationError as exc:
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=exc.errors()[0]["msg"],
        )

def parse_in_family(text: str, family: Optional[str]) -> ParsedElement:
    """Parse an element, insisting on the given algebra when one is named"""
    parsed = parse_element(text, family)
    if family is not None and parsed.family != family:
        raise ParseError(f"expected a {family} element, got {parsed.family}", text, 0)
    return parsed
