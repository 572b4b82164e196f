"""
Logging configuration
"""
import sys
from pathlib import Path
from typing import Optional
from loguru import logger
from polycensus.core.config import settings


def setup_logging(level: Optional[str] = None):
    """Configure application logging"""
    level = level or settings.LOG_LEVEL

    # Remove default logger
    logger.remove()

    # Console logging goes to stderr; stdout carries reports
    logger.add(
        sys.stderr,
        format=settings.LOG_FORMAT,
        level=level,
        colorize=True,
    )

    # File logging
    if settings.LOG_FILE:
        log_path = Path(settings.LOG_FILE)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        logger.add(
            settings.LOG_FILE,
            rotation=settings.LOG_ROTATION,
            retention=settings.LOG_RETENTION,
            level=level,
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}",
        )

    return logger
