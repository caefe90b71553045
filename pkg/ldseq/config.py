"""
Application Configuration
Loads solver and tooling settings from environment variables (and .env)
"""
import logging
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        populate_by_name=True,
    )

    # Diagnostics
    debug: bool = Field(default=False, alias="LDSEQ_DEBUG")

    # Logging
    log_level: str = Field(default="WARNING", alias="LDSEQ_LOG_LEVEL")
    log_format: str = Field(default="json", alias="LDSEQ_LOG_FORMAT")

    # Oracle budgets
    oracle_max_n: int = Field(default=15, ge=1, alias="LDSEQ_ORACLE_MAX_N")
    oracle_max_weighted_n: int = Field(default=12, ge=1, alias="LDSEQ_ORACLE_MAX_WEIGHTED_N")
    oracle_max_vars: int = Field(default=20, ge=1, alias="LDSEQ_ORACLE_MAX_VARS")

    # LLDS+(3) approximation
    approx_depth: int = Field(default=3, ge=0, alias="LDSEQ_APPROX_DEPTH")
    approx_workers: int = Field(default=1, ge=1, alias="LDSEQ_APPROX_WORKERS")

    @field_validator("log_level")
    @classmethod
    def parse_log_level(cls, v: str) -> str:
        """Normalise and check the logging level name"""
        level = v.strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"unknown log level '{v}'")
        return level

    @field_validator("log_format")
    @classmethod
    def parse_log_format(cls, v: str) -> str:
        """Accept 'json' or 'text'"""
        fmt = v.strip().lower()
        if fmt not in ("json", "text"):
            raise ValueError(f"log format must be 'json' or 'text', got '{v}'")
        return fmt


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
