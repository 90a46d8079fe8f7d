# File: app/api/words.py
# Path: hopfbench/app/api/words.py

from typing import Any

from fastapi import APIRouter

from app.algebra.words import ohno_action, shuffle_lincomb, tau_lincomb
from app.api.dependencies import parse_in_family
from app.models.algebra import ElementRequest, ElementResponse, OhnoActionRequest, ProductRequest
from app.services.formatting import element_payload
from app.services.parser import parse_word

router = APIRouter(prefix="/words", tags=["words"])

@router.post("/shuffle", response_model=ElementResponse)
def shuffle_words(request: ProductRequest) -> Any:
    """
    Shuffle product of two elements of Q<x,y>, written with W(...) tokens
    """
    left = parse_in_family(request.left, "word").value
    right = parse_in_family(request.right, "word").value
    return element_payload(shuffle_lincomb(left, right), "word")

@router.post("/tau", response_model=ElementResponse)
def tau_words(request: ElementRequest) -> Any:
    return element_payload(tau_lincomb(parse_in_family(request.element, "word").value), "word")

@router.post("/ohno", response_model=ElementResponse)
def ohno_words(request: OhnoActionRequest) -> Any:
    """
    h_i acting on an admissible word
    """
    return element_payload(ohno_action(request.i, parse_word(request.word)), "word")
