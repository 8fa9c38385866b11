"""Logger setup - Console (stderr) and rotating file handlers."""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Dict


def _level(name: Any, fallback: int) -> int:
    value = getattr(logging, str(name).upper(), None)
    return value if isinstance(value, int) else fallback


def setup_logging(config: Dict[str, Any], verbose: bool = False) -> None:
    """
    Configure the root logger from the ``logging`` section of the configuration.

    The console handler writes to stderr because stdout carries the report.

    Args:
        config: Full configuration dictionary
        verbose: Force DEBUG on the console
    """
    log_config = config.get("logging", {})

    level_str = log_config.get("level", "WARNING")
    level = _level(level_str, logging.WARNING)
    if verbose:
        level = logging.DEBUG

    file_config = log_config.get("file", {})
    file_output = file_config.get("enabled", False)
    log_dir = Path(file_config.get("directory", "logs"))
    log_path = log_dir / file_config.get("filename", "face_ring.log")

    console_config = log_config.get("console", {})
    console_output = console_config.get("enabled", True)

    format_config = log_config.get("format", {})
    formatter = logging.Formatter(
        fmt=format_config.get("fmt", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"),
        datefmt=format_config.get("datefmt", "%Y-%m-%d %H:%M:%S"),
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG if verbose else level)
    root_logger.handlers.clear()

    if console_output:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(logging.DEBUG if verbose else _level(console_config.get("level", level_str), level))
        console_handler.setFormatter(formatter)
        root_logger.addHandler(console_handler)

    if file_output:
        log_dir.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_path,
            maxBytes=file_config.get("max_bytes", 10 * 1024 * 1024),
            backupCount=file_config.get("backup_count", 5),
            encoding="utf-8",
        )
        file_handler.setLevel(_level(file_config.get("level", level_str), level))
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)
        root_logger.setLevel(min(root_logger.level, file_handler.level))

    for name, module_level in (log_config.get("modules") or {}).items():
        logging.getLogger(name).setLevel(_level(module_level, level))

    root_logger.debug(
        f"Logging configured: level={logging.getLevelName(level)}, "
        f"console={'enabled' if console_output else 'disabled'}, "
        f"file={log_path if file_output else 'disabled'}"
    )
