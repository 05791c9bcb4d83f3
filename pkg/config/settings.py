from enum import StrEnum

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LogFormat(StrEnum):
    JSON = "json"
    CONSOLE = "console"


class LogLevel(StrEnum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class ParserSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="PARSER_")

    max_exponent: int = Field(default=64, ge=1, le=4096)
    max_nvars: int = Field(default=32, ge=1, le=1024)


class SearchSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="SEARCH_")

    max_cases: int = Field(default=2_000_000, ge=1)
    snevily_node_cap: int = Field(default=5_000_000, ge=1)


class VerificationSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="VERIFY_")

    seed: int = 42
    cases: int = Field(default=1000, ge=1)
    max_vars: int = Field(default=3, ge=1, le=6)
    max_multiplicity: int = Field(default=3, ge=1, le=8)
    max_degree_sum: int = Field(default=6, ge=0, le=16)


class AppSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    parser: ParserSettings = Field(default_factory=ParserSettings)
    search: SearchSettings = Field(default_factory=SearchSettings)
    verification: VerificationSettings = Field(default_factory=VerificationSettings)

    log_level: LogLevel = LogLevel.WARNING
    log_format: LogFormat = LogFormat.CONSOLE


def get_settings() -> AppSettings:
    return AppSettings()
