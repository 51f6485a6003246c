"""Solver configuration from environment"""

from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from ..models.modes import OracleKind

PROJECT_ROOT = Path(__file__).parent.parent.parent


class SolverSettings(BaseSettings):
    """Desk-scale guards and runtime switches, overridable via REGFLOW_* variables"""

    tu_size_limit: int = Field(default=8, ge=1)
    circuit_ground_limit: int = Field(default=20, ge=1)
    reference_ground_limit: int = Field(default=40, ge=1)
    cut_vertex_limit: int = Field(default=16, ge=2)
    check_invariants: bool = Field(default=True)
    default_oracle: OracleKind = Field(default=OracleKind.GENERIC)
    log_level: str = Field(default="WARNING")

    model_config = SettingsConfigDict(env_prefix="REGFLOW_", extra="ignore")

    @classmethod
    def get_env_file_path(cls) -> Path:
        """Get absolute path to .env file"""
        return PROJECT_ROOT / ".env"

    def __init__(self, **data):
        # Load .env file manually with absolute path
        env_file_path = type(self).get_env_file_path()
        if env_file_path.exists():
            load_dotenv(env_file_path)

        super().__init__(**data)

    @field_validator("log_level")
    @classmethod
    def check_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {v!r}")
        return level


@lru_cache(maxsize=1)
def get_settings() -> SolverSettings:
    """Process-wide settings instance"""
    return SolverSettings()


def reset_settings() -> None:
    """Forget the cached settings so the environment is read again"""
    get_settings.cache_clear()
