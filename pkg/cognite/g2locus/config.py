"""Construct g2locus settings from environment variables and .env files."""

from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

_LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


class G2LocusSettings(BaseSettings):
    """Runtime settings.

    Every field can be set through a ``G2LOCUS_``-prefixed environment variable or a ``.env`` file.

    Attributes:
        threads (int): Default number of worker processes for the branch-cycle search.
        seed (int): Default seed for randomized search and identity sampling.
        sample_size (int): Default number of random samples per identity suite.
        data_dir (str): fsspec URL of a directory overriding the packaged polynomial tables.
        checkpoint_retries (int): Attempts for checkpoint and data-file I/O.
        checkpoint_retry_wait (float): Seconds between those attempts.
        log_level (str): Level for the CLI's root logger.
    """

    model_config = SettingsConfigDict(
        env_prefix="G2LOCUS_", env_nested_delimiter="__", env_file=".env", env_file_encoding="utf-8"
    )

    threads: int = Field(default=1, ge=1)
    seed: int = 20240417
    sample_size: int = Field(default=50, ge=0)
    data_dir: Optional[str] = None
    checkpoint_retries: int = Field(default=5, ge=1)
    checkpoint_retry_wait: float = Field(default=0.5, ge=0)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, value: str) -> str:
        """Normalize the log level name and reject unknown levels."""
        level = value.upper()
        if level not in _LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return level


def get_settings(env_file: Optional[str] = None) -> G2LocusSettings:
    """Load settings, optionally from an alternative dotenv file.

    Args:
        env_file (str): Path of the dotenv file to read instead of ``.env``.

    Returns:
        G2LocusSettings: The parsed settings.
    """
    if env_file is None:
        return G2LocusSettings()
    return G2LocusSettings(_env_file=env_file)  # type:ignore
