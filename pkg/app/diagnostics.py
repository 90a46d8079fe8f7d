# File: app/diagnostics.py
# Path: hopfbench/app/diagnostics.py

import logging
import sys
from fastapi import APIRouter, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from typing import Any, Dict, List

from app.core.config import settings

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/diagnostics", tags=["diagnostics"])

class CacheInfo(BaseModel):
    name: str
    hits: int
    misses: int
    size: int

class DiagnosticInfo(BaseModel):
    """Model for diagnostic information"""
    app_version: str
    python_version: str
    fastapi_version: str
    numpy_version: str
    sympy_version: str
    settings: Dict[str, Any]
    routes_count: int
    caches: List[CacheInfo]

def _cached_functions() -> Dict[str, Any]:
    from app.algebra import hopf, hopf_trees, mzv, qsym, trees, words

    return {
        "hopf.convolution_antipode": hopf.convolution_antipode,
        "qsym.quasi_shuffle": qsym._quasi_shuffle,
        "qsym.sym_to_monomial": qsym._to_monomial_matrix,
        "qsym.sym_from_monomial": qsym._from_monomial_matrix,
        "words.shuffle": words._shuffle,
        "mzv.nested_sum": mzv._nested_sum,
        "trees.trees": trees._trees,
        "trees.forests": trees._forests,
        "hopf_trees.hk_coproduct": hopf_trees._hk_tree_coproduct,
        "hopf_trees.gl_product": hopf_trees._gl_product,
        "hopf_trees.kappa": hopf_trees._kappa,
        "hopf_trees.n_power": hopf_trees._n_power,
    }

def cache_report() -> List[CacheInfo]:
    report = []
    for name, function in _cached_functions().items():
        info = function.cache_info()
        report.append(CacheInfo(name=name, hits=info.hits, misses=info.misses, size=info.currsize))
    return report

@router.get("/info", response_model=DiagnosticInfo)
async def get_diagnostic_info(request: Request) -> DiagnosticInfo:
    """
    Get diagnostic information about the API
    """
    import fastapi
    import numpy
    import sympy

    app = request.app
    return DiagnosticInfo(
        app_version=app.version,
        python_version=f"{sys.version_info.major}.{sys.version_info.minor}.{sys.version_info.micro}",
        fastapi_version=fastapi.__version__,
        numpy_version=numpy.__version__,
        sympy_version=sympy.__version__,
        settings=settings.model_dump(),
        routes_count=len(app.routes),
        caches=cache_report(),
    )

@router.post("/clear-caches")
async def clear_caches() -> JSONResponse:
    """
    Drop every memoized table (transition matrices, tree enumerations, zeta sweeps)
    """
    cleared = []
    for name, function in _cached_functions().items():
        function.cache_clear()
        cleared.append(name)
    logger.info(f"cleared {len(cleared)} caches")
    return JSONResponse({"status": "success", "cleared": cleared})

@router.get("/routes", response_class=JSONResponse)
async def get_routes(request: Request) -> JSONResponse:
    """
    Get a list of all routes registered in the app
    """
    routes = []
    for route in request.app.routes:
        routes.append({
            "path": getattr(route, "path", str(route)),
            "name": getattr(route, "name", None),
            "methods": sorted(getattr(route, "methods", None) or []),
        })
    return JSONResponse({"routes": routes})
