"""
Runtime settings read from CORE_MOTZKIN_* environment variables.

init_application() loads .env first, so values there are picked up too.
"""

import logging
import os
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from src.models.errors import ConfigurationError

logger = logging.getLogger("InitUtil")

ENV_PREFIX = "CORE_MOTZKIN_"


class Settings(BaseModel):
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    workers: int = Field(default=1, ge=1)
    max_path_length: int = Field(default=24, ge=1)
    max_core_modulus: int = Field(default=16, ge=1)

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if not isinstance(logging.getLevelName(value), int):
            raise ValueError(f"unknown log level {value!r}")
        return value


def load_settings() -> Settings:
    """
    Build Settings from the environment, ignoring unset variables.

    Raises:
        ConfigurationError: A variable is present but cannot be parsed
    """
    raw = {}
    for name in Settings.model_fields:
        value = os.getenv(ENV_PREFIX + name.upper())
        if value is not None and value.strip():
            raw[name] = value.strip()
    try:
        settings = Settings(**raw)
    except ValidationError as e:
        logger.error(f"Invalid {ENV_PREFIX}* settings: {e}")
        raise ConfigurationError(str(e)) from e
    return settings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()
