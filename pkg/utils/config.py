# utils/config.py
import os
import logging
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from models.errors import ConfigError
from models.params import FieldSpec

logger = logging.getLogger(__name__)

ROOT_DIR = Path(__file__).resolve().parents[1]
ENV_PATH = ROOT_DIR / ".env"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    depth: int = Field(5, ge=0)
    dim_cap: int = Field(20000, ge=1)
    field_mode: str = "rational"
    log_level: str = "INFO"
    log_dir: Path = ROOT_DIR / "logs"

    @field_validator("field_mode")
    @classmethod
    def known_field(cls, v: str) -> str:
        FieldSpec.parse(v)
        return v

    @field_validator("log_level")
    @classmethod
    def known_level(cls, v: str) -> str:
        v = v.upper()
        if v not in LOG_LEVELS:
            raise ValueError(f"unknown log level {v!r}")
        return v

    @property
    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field_mode)


def load_settings(env_path: Optional[Path] = None) -> Settings:
    """
    Reads POINCARE_* variables (after loading .env) into validated Settings.
    """
    load_dotenv(dotenv_path=env_path or ENV_PATH)
    raw = {
        "depth": os.getenv("POINCARE_DEPTH"),
        "dim_cap": os.getenv("POINCARE_DIM_CAP"),
        "field_mode": os.getenv("POINCARE_FIELD"),
        "log_level": os.getenv("POINCARE_LOG_LEVEL"),
        "log_dir": os.getenv("POINCARE_LOG_DIR"),
    }
    try:
        return Settings(**{k: v for k, v in raw.items() if v not in (None, "")})
    except ValidationError as e:
        raise ConfigError(f"invalid POINCARE_* setting: {e.errors()[0]['msg']}") from e
