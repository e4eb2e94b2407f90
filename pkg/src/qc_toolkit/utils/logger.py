"""
Logging utilities for the q-congruence toolkit.
"""

import functools
import logging
import logging.handlers
import time
from pathlib import Path
from typing import Dict, Optional

from .config import config


class Logger:
    """Logger wrapper for consistent logging across the toolkit."""

    _loggers: Dict[str, logging.Logger] = {}

    @classmethod
    def get_logger(cls, name: str) -> logging.Logger:
        """
        Get or create a logger instance.

        Args:
            name: Logger name (usually __name__)

        Returns:
            Logger instance
        """
        if name not in cls._loggers:
            cls._loggers[name] = cls._create_logger(name)
        return cls._loggers[name]

    @classmethod
    def _create_logger(cls, name: str) -> logging.Logger:
        logger = logging.getLogger(name)
        if logger.handlers:
            return logger

        logger.setLevel(getattr(logging, str(config.get('logging.level', 'INFO')).upper(), logging.INFO))
        formatter = logging.Formatter(
            config.get('logging.format', '%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        )

        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        log_file = config.get('logging.file')
        if log_file:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                log_path,
                maxBytes=cls._parse_size(str(config.get('logging.max_size', '10MB'))),
                backupCount=config.get('logging.backup_count', 5),
                encoding='utf-8'
            )
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        # Handlers are attached per module logger.
        logger.propagate = False
        return logger

    @classmethod
    def _parse_size(cls, size_str: str) -> int:
        """Parse size string (e.g., '10MB') to bytes."""
        size_str = size_str.upper()
        for suffix, factor in (('KB', 1024), ('MB', 1024 ** 2), ('GB', 1024 ** 3)):
            if size_str.endswith(suffix):
                return int(size_str[:-2]) * factor
        return int(size_str)

    @classmethod
    def set_level(cls, level: str) -> None:
        """Change the level of every logger created so far."""
        numeric = getattr(logging, level.upper(), logging.INFO)
        config.set('logging.level', level.upper())
        for logger in cls._loggers.values():
            logger.setLevel(numeric)


def get_logger(name: str) -> logging.Logger:
    """Get logger instance."""
    return Logger.get_logger(name)


class LogTimer:
    """Context manager for timing operations and logging duration."""

    def __init__(self, logger: logging.Logger, operation: str, level: int = logging.DEBUG):
        self.logger = logger
        self.operation = operation
        self.level = level
        self.elapsed = 0.0

    def __enter__(self):
        self.start_time = time.perf_counter()
        self.logger.log(self.level, f"Starting: {self.operation}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.elapsed = time.perf_counter() - self.start_time
        if exc_type is None:
            self.logger.log(self.level, f"Completed: {self.operation} ({self.elapsed:.2f}s)")
        else:
            self.logger.log(self.level, f"Aborted: {self.operation} after {self.elapsed:.2f}s: {exc_val}")

    @property
    def millis(self) -> int:
        return int(self.elapsed * 1000)


def log_calls(logger: Optional[logging.Logger] = None, level: int = logging.DEBUG):
    """
    Decorator to log function calls.

    Args:
        logger: Logger instance (creates new one if not provided)
        level: Logging level for messages
    """
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            func_logger = logger or get_logger(func.__module__)
            func_name = f"{func.__module__}.{func.__qualname__}"
            func_logger.log(level, f"Calling {func_name} with args={args}, kwargs={kwargs}")
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                func_logger.error(f"Failed {func_name} after {time.perf_counter() - start_time:.2f}s: {e}")
                raise
            func_logger.log(level, f"Completed {func_name} in {time.perf_counter() - start_time:.2f}s")
            return result

        return wrapper
    return decorator
