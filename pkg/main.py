# File: main.py
# Path: hopfbench/main.py

from contextlib import asynccontextmanager
from fastapi import FastAPI, Request, status
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, RedirectResponse
import logging

from app.core.config import settings
from app.core.exceptions import AlgebraError, ParseError
from app.api.qsym import router as qsym_router
from app.api.words import router as words_router
from app.api.mzv import router as mzv_router
from app.api.trees import router as trees_router
from app.api.verify import router as verify_router
from app.middlewares import setup_middlewares
from app.diagnostics import router as diagnostics_router

# Configure logging
logging.basicConfig(level=settings.LOG_LEVEL)
logger = logging.getLogger(__name__)

@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info(
        f"{settings.PROJECT_NAME} starting: max degree {settings.MAX_DEGREE}, "
        f"N={settings.TRUNCATION_N}, tolerance {settings.TOLERANCE}"
    )
    yield
    logger.info(f"{settings.PROJECT_NAME} stopped")

app = FastAPI(
    title="hopfbench API",
    description="Exact computations in QSym, NSym, the word algebra and the rooted-tree Hopf algebras",
    version="1.0.0",
    lifespan=lifespan,
    docs_url="/docs",
    redoc_url="/redoc",
    openapi_url="/openapi.json"
)

# CORS middleware configuration
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

setup_middlewares(app)

@app.exception_handler(ParseError)
async def parse_error_handler(request: Request, exc: ParseError):
    return JSONResponse(
        status_code=status.HTTP_400_BAD_REQUEST,
        content={"detail": exc.reason, "position": exc.position, "text": exc.text},
    )

@app.exception_handler(AlgebraError)
async def algebra_error_handler(request: Request, exc: AlgebraError):
    logger.info(f"{request.url.path}: {exc}")
    return JSONResponse(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        content={"detail": str(exc), "position": None},
    )

# Health check endpoint
@app.get("/health")
async def health_check():
    return {"status": "ok"}

app.include_router(qsym_router, prefix=settings.API_V1_STR)
app.include_router(words_router, prefix=settings.API_V1_STR)
app.include_router(mzv_router, prefix=settings.API_V1_STR)
app.include_router(trees_router, prefix=settings.API_V1_STR)
app.include_router(verify_router, prefix=settings.API_V1_STR)

# Diagnostics live outside the API prefix
app.include_router(diagnostics_router)

@app.get("/", include_in_schema=False)
async def redirect_to_docs():
    return RedirectResponse(url="/docs")

if __name__ == "__main__":
    import uvicorn
    uvicorn.run("main:app", host="0.0.0.0", port=8000, reload=True)
