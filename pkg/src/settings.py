#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Run Configuration Files

Loads `key = value` run files (UTF-8, `#` comments) with ConfigObj and turns
them into command-line tokens, so that explicit flags given after them win.
"""

import logging
import os
from pathlib import Path
from typing import Dict, List

from configobj import ConfigObj, ConfigObjError

logger = logging.getLogger(__name__)

THREADS_ENV = 'RIS_COPULA_THREADS'

TRUE_WORDS = {'1', 'true', 'yes', 'on'}
FALSE_WORDS = {'0', 'false', 'no', 'off', ''}


def load_run_file(path: str) -> Dict[str, str]:
    """
    Read a run configuration file.

    Args:
        path: Path to the file

    Returns:
        Mapping of normalised keys (dashes) to raw string values
    """
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")

    try:
        config = ConfigObj(str(file_path), encoding='utf-8', file_error=True)
    except ConfigObjError as e:
        raise ValueError(f"Malformed config file {path}: {e}") from e

    values = {}
    for key, value in config.items():
        if isinstance(value, dict):
            raise ValueError(f"Sections are not supported in run files: [{key}]")
        if isinstance(value, list):
            value = ' '.join(str(part) for part in value)
        values[key.strip().replace('_', '-')] = str(value).strip()
    logger.debug(f"Loaded {len(values)} settings from {file_path}")
    return values


def to_cli_tokens(values: Dict[str, str], flag_kinds: Dict[str, str]) -> List[str]:
    """
    Convert run-file values into argv tokens.

    Args:
        values: Output of load_run_file
        flag_kinds: Flag name -> 'switch' (store_true), 'list' (nargs) or 'value'

    Returns:
        Tokens to place before the user's own flags
    """
    tokens = []
    for key, raw in values.items():
        kind = flag_kinds.get(key)
        if kind is None:
            raise ValueError(f"Unknown setting in config file: {key}")
        flag = f"--{key}"
        if kind == 'switch':
            word = raw.lower()
            if word in TRUE_WORDS:
                tokens.append(flag)
            elif word not in FALSE_WORDS:
                raise ValueError(f"Setting {key} expects true/false, got {raw!r}")
        elif kind == 'list':
            tokens.append(flag)
            tokens.extend(part for part in raw.replace(',', ' ').split() if part)
        else:
            tokens.append(f"{flag}={raw}")
    return tokens


def worker_count() -> int:
    """Thread cap from RIS_COPULA_THREADS, defaulting to the CPU count"""
    default = max(1, os.cpu_count() or 1)
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {THREADS_ENV}={raw!r}: not an integer")
        return default
    if value < 1:
        logger.warning(f"Ignoring {THREADS_ENV}={raw!r}: must be >= 1")
        return default
    return value
