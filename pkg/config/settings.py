import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from logic.profiles import PROFILE_NAMES

load_dotenv()

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    profile: str = Field("base", description="Default logic profile")
    max_connectives: int = Field(8, ge=1, description="Largest sequent handed to proof search")
    node_cap: int = Field(200000, ge=1, description="Search nodes built before giving up")
    result_cap: int = Field(10000, ge=1, description="Derivations listed by one enumeration")
    oracle_max_connectives: int = Field(6, ge=1, description="Largest sequent handed to the equivalence oracle")
    oracle_class_cap: int = Field(50000, ge=1, description="Largest equivalence class the oracle explores")
    rewrite_step_cap: int = Field(10000, ge=1, description="Rewrite steps allowed in one normalization")
    max_exchanges: int = Field(2, ge=0, description="Exchange nodes allowed per unfocused derivation")
    log_level: str = Field("WARNING", description="Logging level name")

    @field_validator("profile")
    @classmethod
    def known_profile(cls, v: str) -> str:
        if v not in PROFILE_NAMES:
            raise ValueError(f"unknown profile {v!r}")
        return v

    @field_validator("log_level")
    @classmethod
    def known_level(cls, v: str) -> str:
        v = v.upper()
        if v not in LOG_LEVELS:
            raise ValueError(f"unknown log level {v!r}")
        return v


ENV_PREFIX = "SKEWMALL_"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    values = {}
    for name in Settings.model_fields:
        raw = os.getenv(ENV_PREFIX + name.upper())
        if raw is not None:
            values[name] = raw
    return Settings(**values)
