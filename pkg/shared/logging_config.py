"""
Centralized logging configuration for the fan tree tools.

Diagnostics always go to stderr so that listings written to stdout stay
byte-exact.
"""

import logging
import sys
from typing import Optional


# Default log format
DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
SIMPLE_FORMAT = "%(levelname)s - %(name)s - %(message)s"

# Top-level packages whose loggers the CLI configures
LIBRARY_LOGGERS = ("fan", "cli")


def setup_logger(
    name: str,
    level: int = logging.INFO,
    format_string: Optional[str] = None,
    add_console_handler: bool = True
) -> logging.Logger:
    """
    Set up a logger with consistent formatting.

    Args:
        name: Logger name (usually __name__ or a package name)
        level: Logging level (default: INFO)
        format_string: Custom format string (default: DEFAULT_FORMAT)
        add_console_handler: Whether to add a stderr handler (default: True)

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Avoid adding duplicate handlers
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(level)
        return logger

    if add_console_handler:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)

        formatter = logging.Formatter(format_string or DEFAULT_FORMAT)
        console_handler.setFormatter(formatter)

        logger.addHandler(console_handler)
        logger.propagate = False

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance with default configuration.

    Args:
        name: Logger name (usually __name__)

    Returns:
        Logger instance
    """
    return logging.getLogger(name)


def configure_cli_logging(debug: bool = False) -> None:
    """
    Configure every library logger for a command-line run.

    Args:
        debug: Log at DEBUG when True, otherwise only warnings and errors
    """
    level = logging.DEBUG if debug else logging.WARNING
    format_string = DEFAULT_FORMAT if debug else SIMPLE_FORMAT
    for name in LIBRARY_LOGGERS:
        setup_logger(name, level=level, format_string=format_string)
