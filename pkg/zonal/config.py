"""Settings loader using python-dotenv and environment variables.

Every knob of the verification harness can be set from the environment (or a
``.env`` file in the working directory); command-line flags take precedence.
Values are validated once at import. A malformed value leaves the defaults in
place and is reported through ``SETTINGS_ERROR``, which the command line turns
into a usage error.
"""

from dotenv import load_dotenv
import os

from pydantic import BaseModel, Field, ValidationError, model_validator

from .errors import ConfigError


# Load .env file if present
load_dotenv()


ENV_NAMES = {
    "CACHE_DIR": "ZONAL_CACHE_DIR",
    "DATABASE_URL": "ZONAL_DATABASE_URL",
    "N_SAMPLES": "ZONAL_N_SAMPLES",
    "SEED": "ZONAL_SEED",
    "JOBS": "ZONAL_JOBS",
    "QUAD_ORDER": "ZONAL_QUAD_ORDER",
    "BLOCK_SIZE": "ZONAL_BLOCK_SIZE",
    "Z_FAIL": "ZONAL_Z_FAIL",
    "Z_WARN": "ZONAL_Z_WARN",
    "RECORD_RUNS": "ZONAL_RECORD_RUNS",
    "DEBUG": "DEBUG",
}


class Settings(BaseModel):
    CACHE_DIR: str | None = None
    DATABASE_URL: str = "sqlite:///./zonal_runs.db"
    N_SAMPLES: int = Field(1_000_000, gt=0)
    SEED: int = Field(42, ge=0)
    JOBS: int = Field(1, gt=0)
    QUAD_ORDER: int = Field(80, gt=0)
    BLOCK_SIZE: int = Field(4096, gt=0)
    Z_FAIL: float = Field(4.0, gt=0)
    Z_WARN: float = Field(3.0, gt=0)
    RECORD_RUNS: bool = False
    DEBUG: bool = False

    @model_validator(mode="after")
    def _thresholds(self):
        if self.Z_WARN > self.Z_FAIL:
            raise ValueError(f"Z_WARN ({self.Z_WARN}) must not exceed Z_FAIL ({self.Z_FAIL})")
        return self


def load_settings(environ=None) -> Settings:
    """Settings from ``environ`` (default: the process environment); empty values mean unset."""
    environ = os.environ if environ is None else environ
    values = {field: environ[env] for field, env in ENV_NAMES.items() if environ.get(env, "").strip()}
    try:
        return Settings.model_validate(values)
    except ValidationError as e:
        problems = "; ".join(
            f"{ENV_NAMES.get(str(err['loc'][0]), err['loc'][0]) if err['loc'] else 'settings'}: {err['msg']}"
            for err in e.errors()
        )
        raise ConfigError(f"invalid settings: {problems}") from e


SETTINGS_ERROR: ConfigError | None = None
try:
    settings = load_settings()
except ConfigError as e:
    SETTINGS_ERROR = e
    settings = Settings()
