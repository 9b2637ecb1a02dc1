#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Console Logging

Diagnostic stream setup shared by the CLI. Log records go to stderr so that
CSV output on stdout stays machine readable.
"""

import logging
import sys
from typing import Optional, TextIO

from colorama import Fore, Style, just_fix_windows_console

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

LEVEL_COLORS = {
    logging.DEBUG: Style.DIM,
    logging.INFO: Fore.GREEN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED + Style.BRIGHT,
}


class ColorFormatter(logging.Formatter):
    """Formatter that colours the level name when writing to a terminal"""

    def __init__(self, fmt: str = LOG_FORMAT, use_color: bool = True):
        super().__init__(fmt)
        self.use_color = use_color

    def format(self, record: logging.LogRecord) -> str:
        if not self.use_color:
            return super().format(record)
        original = record.levelname
        color = LEVEL_COLORS.get(record.levelno, '')
        record.levelname = f"{color}{original}{Style.RESET_ALL}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


def configure_logging(level: int = logging.INFO, stream: Optional[TextIO] = None) -> logging.Handler:
    """
    Install the colouring stderr handler on the root logger, replacing any
    earlier one.

    Args:
        level: Root logging level
        stream: Target stream (default: sys.stderr)

    Returns:
        The installed handler
    """
    just_fix_windows_console()
    stream = stream or sys.stderr
    handler = logging.StreamHandler(stream)
    handler.setFormatter(ColorFormatter(use_color=hasattr(stream, 'isatty') and stream.isatty()))

    root = logging.getLogger()
    for existing in list(root.handlers):
        if isinstance(existing.formatter, ColorFormatter):
            root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(level)
    return handler
