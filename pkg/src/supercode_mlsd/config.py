"""Configuration management for supercode-mlsd."""

from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

from .constants import (
    DEFAULT_BRUTE_FORCE_MAX_K,
    DEFAULT_EXHAUSTIVE_MAX_K,
    DEFAULT_EXPLICIT_STATE_LIMIT,
    DEFAULT_MAX_ENUMERATED_PATHS,
    DEFAULT_MAX_TRELLIS_STATES,
)
from .exceptions import ConfigurationError


class DecoderSettings(BaseSettings):
    """Configuration for supercode-mlsd.

    Every field has a default, so no environment is required. Values may be overridden
    with ``MLSD_``-prefixed environment variables or a ``.env`` file.
    """

    max_trellis_states: int = Field(
        default=DEFAULT_MAX_TRELLIS_STATES,
        description="Refuse explicit trellis builds whose forward-reachable state count exceeds this",
    )
    explicit_state_limit: int = Field(
        default=DEFAULT_EXPLICIT_STATE_LIMIT,
        description="In auto mode, build the code trellis explicitly only below this per-level state count",
    )
    brute_force_max_k: int = Field(default=DEFAULT_BRUTE_FORCE_MAX_K, description="Largest k for brute-force ML")
    exhaustive_max_k: int = Field(
        default=DEFAULT_EXHAUSTIVE_MAX_K, description="Largest supercode dimension for exhaustive cost tables"
    )
    max_enumerated_paths: int = Field(
        default=DEFAULT_MAX_ENUMERATED_PATHS, description="Largest path count enumerate_paths will produce"
    )
    workers: int = Field(default=4, description="Concurrent trial chunks during a sweep")
    trial_chunk_size: int = Field(default=64, description="Trials handed to one worker at a time")
    log_level: str = Field(default="WARNING", description="Logging level for the CLI")

    model_config = {
        "env_prefix": "MLSD_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "extra": "ignore",
    }

    @field_validator(
        "max_trellis_states",
        "explicit_state_limit",
        "brute_force_max_k",
        "exhaustive_max_k",
        "max_enumerated_paths",
        "workers",
        "trial_chunk_size",
    )
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Validate that limits and pool sizes are positive."""
        if v <= 0:
            raise ConfigurationError(f"Setting must be positive, got {v}")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Normalize and validate the logging level name."""
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ConfigurationError(f"Unknown log level: {v}")
        return level


@lru_cache
def get_config() -> DecoderSettings:
    """Get the application configuration (cached singleton).

    Returns
    -------
        DecoderSettings: The validated configuration object.

    Raises
    ------
        ConfigurationError: If configuration is invalid.

    """
    try:
        return DecoderSettings()
    except ConfigurationError:
        raise
    except Exception as e:
        raise ConfigurationError(f"Failed to load configuration: {e}") from e
