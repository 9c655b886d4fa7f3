from pydantic_settings import BaseSettings
from typing import Literal, Optional
from functools import lru_cache


class Settings(BaseSettings):
    # Project
    PROJECT_NAME: str = "Basis Forge"
    VERSION: str = "1.0.0"

    # Logging
    BASIS_FORGE_LOG: Literal["error", "info", "debug"] = "info"

    # Construction window: c = WINDOW_BASE + [(delta + 1) / 2]
    WINDOW_BASE: int = 8
    WINDOW_CONSTANT: Optional[int] = None  # overrides c / c_h entirely

    # Candidate pool drawn by the seeded choice policy
    SEEDED_POOL: int = 8

    # Audits
    AUDIT_EVERY: int = 1  # full oracle audit every N steps, 0 = only after the last step
    CENSUS_AUDIT: bool = False

    # Growth report
    GROWTH_SAMPLES: int = 1000

    # Testing
    TESTING: bool = False

    @property
    def log_level(self) -> str:
        return self.BASIS_FORGE_LOG.upper()

    class Config:
        env_file = ".env"
        case_sensitive = True


@lru_cache()
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
