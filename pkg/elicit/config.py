"""
Unified Settings Configuration
All runtime knobs of the elicitation toolkit live in one settings object.
"""

from typing import Dict, List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class ElicitSettings(BaseSettings):
    """
    Settings for the library, the command line and the HTTP surface:
    - project metadata
    - desk-scale caps (candidate count, exhaustive cover search)
    - acceptance suite defaults
    - logging
    """

    # ============================================================================
    # PROJECT CONFIGURATION
    # ============================================================================
    PROJECT_NAME: str = Field(default="Elicit - voting with incomplete votes")
    VERSION: str = Field(default="1.0.0")
    DESCRIPTION: str = Field(default="Exact profile algebra, size-limited query oracles and verified constructions")
    DEBUG: bool = Field(default=False)

    # ============================================================================
    # DESK-SCALE CAPS
    # ============================================================================
    MAX_CANDIDATES: int = Field(default=8, ge=1)  # m! = 40320 at the default cap
    EXHAUSTIVE_COVER_CAP: int = Field(default=20, ge=1)  # base t-sets, C(m, t)

    # ============================================================================
    # RANDOMNESS & ACCEPTANCE DEFAULTS
    # ============================================================================
    DEFAULT_SEED: int = Field(default=0)
    RANDOM_INSTANCES: int = Field(default=100, ge=1)
    VERIFY_MAX_M: int = Field(default=5, ge=2)
    VERIFY_WORKERS: int = Field(default=1, ge=1)
    FIBONACCI_N: int = Field(default=8, ge=5)

    # ============================================================================
    # SERVER CONFIGURATION
    # ============================================================================
    HOST: str = Field(default="127.0.0.1")
    PORT: int = Field(default=8005)
    API_V1_PREFIX: str = Field(default="/api/v1")

    # ============================================================================
    # LOGGING CONFIGURATION
    # ============================================================================
    LOG_LEVEL: str = Field(default="WARNING")
    LOG_FORMAT: str = Field(default="%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    model_config = SettingsConfigDict(
        env_prefix="ELICIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @property
    def app_name(self) -> str:
        return self.PROJECT_NAME

    @property
    def app_version(self) -> str:
        return self.VERSION

    @property
    def log_level(self) -> str:
        return self.LOG_LEVEL

    @property
    def log_format(self) -> str:
        return self.LOG_FORMAT


# ============================================================================
# GLOBAL SETTINGS INSTANCE
# ============================================================================
settings = ElicitSettings()


# Scoring vector presets (names accepted by rules.preset)
PRESET_NAMES: List[str] = ["plurality", "veto", "borda", "antiborda"]

# Acceptance suite, in report order
VERIFICATION_ORDER: List[str] = [
    "parity-pair",
    "score-computation",
    "characterization",
    "winner-family",
    "separation",
    "stv",
    "query-complexity",
    "fibonacci",
    "condorcet",
    "covering",
    "properties",
]

# Alternate names accepted by `verify` and the verification endpoint
VERIFICATION_ALIASES: Dict[str, str] = {
    "lemma1": "parity-pair",
}

# Report renderings understood by the command line
REPORT_FORMATS: Dict[str, str] = {
    "text": "line-oriented key=value records",
    "json": "one JSON document per line",
}
