"""Logging setup shared by the CLI and the tool server"""

import logging
import sys
from typing import Optional

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

_handler: Optional[logging.Handler] = None


def configure_logging(level: str = "WARNING") -> None:
    """Install a single stderr handler on the package logger"""
    global _handler

    package_logger = logging.getLogger("src")
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        _handler.setFormatter(logging.Formatter(LOG_FORMAT))
        package_logger.addHandler(_handler)
    package_logger.setLevel(level.upper())
