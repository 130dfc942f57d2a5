"""
Configuration for regext

Settings are read from the environment (optionally through a .env file) into
a pydantic model. Command-line flags override them; the effective snapshot
is embedded in every report document.
"""

import logging
import os
from typing import Optional

import sympy
from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from .utils.ring import DEFAULT_PRIME, MAX_PRIME

load_dotenv()

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class EngineSettings(BaseModel):
    """Effective engine configuration."""

    seed: int = Field(0, description="Seed for every random choice (linear forms, corpus)")
    prime: int = Field(DEFAULT_PRIME, description="Characteristic of the coefficient field")
    retries: int = Field(32, ge=1, description="Draws allowed per filter-regular linear form")
    window_low: int = Field(2, ge=0, description="Window margin below the initial degree")
    window_high: int = Field(5, ge=0, description="Window margin above the regularity")
    jobs: int = Field(1, ge=1, description="Worker processes for corpus verification")
    log_level: str = Field("WARNING", description="Logging level name")

    @field_validator("prime")
    @classmethod
    def _check_prime(cls, value: int) -> int:
        if value >= MAX_PRIME or not sympy.isprime(value):
            raise ValueError(f"REGEXT_PRIME must be a prime below 2^31, got {value}")
        return value

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level {value!r}")
        return level

    def snapshot(self) -> dict:
        """Settings that influence report contents."""
        return self.model_dump(exclude={"jobs", "log_level"})


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def load_settings(log_level: Optional[str] = None, **overrides) -> EngineSettings:
    """
    Build settings from REGEXT_* environment variables.

    Args:
        log_level: Default level when REGEXT_LOG_LEVEL is unset
        **overrides: Explicit values (None entries are ignored)

    Returns:
        EngineSettings

    Raises:
        ValueError: If a variable is malformed
    """
    values = {}
    for field, name in (
        ("seed", "REGEXT_SEED"),
        ("prime", "REGEXT_PRIME"),
        ("retries", "REGEXT_RETRIES"),
        ("window_low", "REGEXT_WINDOW_LOW"),
        ("window_high", "REGEXT_WINDOW_HIGH"),
        ("jobs", "REGEXT_JOBS"),
    ):
        value = _env_int(name)
        if value is not None:
            values[field] = value
    level = os.getenv("REGEXT_LOG_LEVEL") or log_level
    if level:
        values["log_level"] = level
    values.update({key: value for key, value in overrides.items() if value is not None})
    settings = EngineSettings(**values)
    logger.debug(f"Settings: {settings.model_dump()}")
    return settings
