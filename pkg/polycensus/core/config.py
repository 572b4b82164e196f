"""
Application configuration
"""
from pydantic_settings import BaseSettings
from typing import Optional
from functools import lru_cache
import os


class Settings(BaseSettings):
    """Application settings - All values can be overridden via .env file"""

    # ========== Application Settings ==========
    APP_NAME: str = "polycensus"
    APP_VERSION: str = "1.0.0"

    # ========== Finite Fields ==========
    FIELD_SIZE_LIMIT: int = 2 ** 20  # Largest q = p^e accepted by field_make
    FIELD_TABLE_LIMIT: int = 256  # Build add/mul/inv tables for extension fields up to this size

    # ========== Polynomial Matrices ==========
    DET_COFACTOR_MAX_SIZE: int = 4  # Cofactor expansion up to this size, fraction-free elimination above
    ORACLE_MAX_EXTENSION_SIZE: int = 2 ** 16  # Largest p^k searched by the brute-force primeness oracle

    # ========== Census / Enumeration ==========
    ENUMERATION_BUDGET: int = 10 ** 9  # Max sample-space size for exact census
    ENUMERATION_CHUNK: int = 4096  # Indices per enumeration shard
    WORKERS: int = 0  # Worker processes (0 = logical cores)

    # ========== Monte Carlo ==========
    DEFAULT_SEED: int = 20170101
    MC_MIN_TRIALS: int = 100
    MC_CHUNK_TRIALS: int = 10000  # Trials per independent RNG stream
    CONFIDENCE_LEVEL: float = 0.95

    # ========== Asymptotic Fitting ==========
    ASYMPTOTIC_ABS_TOLERANCE: float = 0.5
    ASYMPTOTIC_REL_FACTOR: float = 5.0  # Tolerance grows as factor * c_pred / q_max
    MC_STDERR_FACTOR: float = 3.0  # Extra slack for sampled probabilities, in standard errors

    # ========== Reports ==========
    OUTPUT_FORMAT: str = "csv"  # csv, json

    # ========== Logging ==========
    LOG_LEVEL: str = "INFO"  # DEBUG, INFO, WARNING, ERROR, CRITICAL
    LOG_FILE: Optional[str] = None  # e.g. logs/polycensus.log
    LOG_ROTATION: str = "10 MB"
    LOG_RETENTION: str = "30 days"
    LOG_FORMAT: str = "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"

    class Config:
        env_file = ".env"
        env_file_encoding = 'utf-8'
        case_sensitive = True
        extra = "ignore"

    def worker_count(self) -> int:
        """Resolve WORKERS, mapping 0 to the number of logical cores"""
        if self.WORKERS > 0:
            return self.WORKERS
        return os.cpu_count() or 1


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance

    Returns:
        Settings: Application settings
    """
    return Settings()


# Global settings instance
settings = get_settings()


# Helper functions
def reload_settings() -> Settings:
    """Reload settings (clears cache)"""
    get_settings.cache_clear()
    return get_settings()
