# File: app/models/algebra.py
# Path: hopfbench/app/models/algebra.py

from typing import List, Optional
from pydantic import BaseModel, Field

class ElementRequest(BaseModel):
    element: str  # e.g. "2*M(1,1) + M(2)"

class ProductRequest(BaseModel):
    left: str
    right: str

class ExpandRequest(BaseModel):
    element: str
    num_vars: Optional[int] = Field(default=None, ge=1)
    max_deg: Optional[int] = Field(default=None, ge=0)

class Term(BaseModel):
    basis: str
    coefficient: str  # exact rational, "p/q" or "p"

class ElementResponse(BaseModel):
    family: str
    element: str
    terms: List[Term]

class TensorTerm(BaseModel):
    left: str
    right: str
    coefficient: str

class TensorResponse(BaseModel):
    family: str
    element: str
    terms: List[TensorTerm]

class SeriesResponse(BaseModel):
    series: str
    num_vars: int
    max_deg: int

class OhnoActionRequest(BaseModel):
    word: str  # letters only, e.g. "xyy"
    i: int = Field(ge=0)

class ZetaRequest(BaseModel):
    element: str
    N: Optional[int] = Field(default=None, ge=2)
    tolerance: Optional[float] = Field(default=None, gt=0)

class OhnoCheckRequest(BaseModel):
    weight: int = Field(ge=2)
    i: int = Field(default=0, ge=0)
    N: Optional[int] = Field(default=None, ge=2)
    tolerance: Optional[float] = Field(default=None, gt=0)

class OhnoCheck(BaseModel):
    word: str
    relation: str
    passed: bool
    value: float
    error_estimate: float

class OhnoCheckResponse(BaseModel):
    weight: int
    i: int
    N: int
    tolerance: float
    passed: bool
    checks: List[OhnoCheck]

class TreeRequest(BaseModel):
    tree: str  # nested brackets, "[]" is a single vertex

class TreeListResponse(BaseModel):
    n: int
    count: int
    trees: List[str]

class TreeInvariants(BaseModel):
    tree: str
    vertices: int
    symm: int
    tree_factorial: int
    multiplicity: int
    by_tree_factorial: str
