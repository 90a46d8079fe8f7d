# File: app/core/config.py
# Path: hopfbench/app/core/config.py

import os
import json
import logging
from typing import List, Any, Literal
from pydantic import field_validator
from pydantic_settings import BaseSettings

logger = logging.getLogger(__name__)

def parse_json_env(env_name: str, default: Any = None) -> Any:
    """
    Parse a JSON-formatted environment variable.
    If the variable is not valid JSON or doesn't exist, return the default value.
    """
    env_value = os.environ.get(env_name)
    if not env_value:
        return default

    try:
        return json.loads(env_value)
    except json.JSONDecodeError:
        logger.warning(f"Environment variable {env_name} is not valid JSON. Using default value.")
        return default

class Settings(BaseSettings):
    PROJECT_NAME: str = "hopfbench"
    API_V1_STR: str = "/api"
    LOG_LEVEL: str = "INFO"

    # Default CORS origins if not set in environment
    CORS_ORIGINS: List[str] = ["http://localhost:3000"]

    # Suite and oracle caps
    MAX_DEGREE: int = 5
    MAX_WORD_LENGTH: int = 8
    TRUNCATION_N: int = 1_000_000
    TOLERANCE: float = 1e-4
    OUTPUT_FORMAT: Literal["text", "json"] = "text"

    # Tree algebra caps
    MAX_TREE_VERTICES: int = 12
    MAX_KAPPA_DEGREE: int = 8
    MAX_PHI_STAR_DEGREE: int = 6
    OHNO_MAX_I: int = 2
    OHNO_TOLERANCE: float = 1e-3

    # Truncated power-series oracle
    ORACLE_NUM_VARS: int = 8
    ORACLE_MAX_DEG: int = 10

    @field_validator("MAX_DEGREE", "MAX_WORD_LENGTH", "MAX_TREE_VERTICES", "MAX_KAPPA_DEGREE", "MAX_PHI_STAR_DEGREE", "ORACLE_NUM_VARS")
    @classmethod
    def check_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be >= 1")
        return value

    @field_validator("OHNO_MAX_I", "ORACLE_MAX_DEG")
    @classmethod
    def check_nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("must be >= 0")
        return value

    @field_validator("TRUNCATION_N")
    @classmethod
    def check_truncation(cls, value: int) -> int:
        if value < 2:
            raise ValueError("truncation N must be >= 2")
        return value

    @field_validator("TOLERANCE", "OHNO_TOLERANCE")
    @classmethod
    def check_tolerance(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("tolerance must be > 0")
        return value

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"

# Initialize settings
settings = Settings()

# Override CORS_ORIGINS from environment if present
cors_origins_from_env = parse_json_env("CORS_ORIGINS")
if cors_origins_from_env:
    settings.CORS_ORIGINS = cors_origins_from_env
