"""Configuration management using Pydantic Settings."""

from functools import lru_cache
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        populate_by_name=True,
        extra="ignore",
    )

    # Application Configuration
    app_env: str = Field(default="local", alias="APP_ENV")
    log_level: str = Field(default="INFO", alias="LOG_LEVEL")

    # Isometry Configuration
    max_isometry_order: int = Field(default=10000, alias="MAX_ISOMETRY_ORDER")
    max_group_elements: int = Field(default=4096, alias="MAX_GROUP_ELEMENTS")

    # Numeric Tolerances (only the averaging path for cyclic actions is numeric)
    eigen_split_tolerance: float = Field(default=1e-8, alias="EIGEN_SPLIT_TOLERANCE")
    root_match_tolerance: float = Field(default=1e-6, alias="ROOT_MATCH_TOLERANCE")
    multiplicity_tolerance: float = Field(default=1e-6, alias="MULTIPLICITY_TOLERANCE")
    auxiliary_form_seed: Optional[int] = Field(default=None, alias="AUXILIARY_FORM_SEED")

    # Search Configuration
    search_workers: int = Field(default=1, alias="SEARCH_WORKERS")
    search_result_limit: Optional[int] = Field(default=None, alias="SEARCH_RESULT_LIMIT")

    # Report Configuration
    default_output_format: str = Field(default="text", alias="DEFAULT_OUTPUT_FORMAT")

    @field_validator(
        "eigen_split_tolerance", "root_match_tolerance", "multiplicity_tolerance"
    )
    @classmethod
    def check_positive_tolerance(cls, v: float) -> float:
        """Tolerances must be strictly positive."""
        if v <= 0:
            raise ValueError(f"Tolerance must be positive, got {v}")
        return v

    @field_validator("max_isometry_order", "max_group_elements", "search_workers")
    @classmethod
    def check_positive_count(cls, v: int) -> int:
        """Bounds and pool sizes must be at least one."""
        if v < 1:
            raise ValueError(f"Value must be >= 1, got {v}")
        return v

    @field_validator("default_output_format")
    @classmethod
    def check_output_format(cls, v: str) -> str:
        """Only json and text reports exist."""
        v = v.lower()
        if v not in ("json", "text"):
            raise ValueError(f"Unknown output format: {v}")
        return v

    @property
    def is_production(self) -> bool:
        """Check if running in production environment."""
        return self.app_env.lower() == "production"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
