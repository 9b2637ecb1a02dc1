#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
CSV Result Writer

Writes result tables as versioned CSV: a `# schema=N` comment line, then a
header row and one row per record. Floats use `%.12g`, missing values
(numerical failures) are empty cells, line endings are `\\n`, and nothing
depends on the locale, so identical inputs give identical bytes.
"""

import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence

import pandas as pd

from .integrity import ResultIntegrity

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
FLOAT_FORMAT = '%.12g'


class CsvReporter:
    """
    Writes deterministic CSV tables and plain-text summaries.
    """

    def __init__(self, output_dir: str = "output"):
        """
        Initialize reporter.

        Args:
            output_dir: Directory for files given without a directory part
        """
        self.output_dir = Path(output_dir)

    def _resolve(self, output_file: str) -> Path:
        path = Path(output_file)
        if not path.parent.parts:
            path = self.output_dir / path
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def write_table(self, rows: Iterable[Dict], columns: Sequence[str], output_file: str,
                    sort_by: Optional[str] = None) -> str:
        """
        Write records as a schema-tagged CSV table.

        Args:
            rows: Records keyed by column name; None marks a failed cell
            columns: Column order (extra keys in a record are ignored)
            output_file: Target path
            sort_by: Optional column to sort rows by

        Returns:
            Path of the written file
        """
        frame = pd.DataFrame(list(rows), columns=list(columns))
        if sort_by is not None:
            frame = frame.sort_values(sort_by, kind='mergesort').reset_index(drop=True)
        path = self._resolve(output_file)
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(f"# schema={SCHEMA_VERSION}\n")
            frame.to_csv(f, index=False, float_format=FLOAT_FORMAT, na_rep='', lineterminator='\n')
        logger.info(f"Wrote {len(frame)} rows to {path} (sha256 {ResultIntegrity.sha256(str(path))})")
        return str(path)

    def write_summary(self, entries: Dict[str, object], output_file: str) -> str:
        """Write `key: value` lines"""
        path = self._resolve(output_file)
        lines: List[str] = []
        for key, value in entries.items():
            text = FLOAT_FORMAT % value if isinstance(value, float) else str(value)
            lines.append(f"{key}: {text}")
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write("\n".join(lines) + "\n")
        logger.info(f"Wrote summary to {path}")
        return str(path)


def read_table(path: str) -> pd.DataFrame:
    """
    Load a table written by CsvReporter.

    Raises:
        ValueError: If the schema line is missing or names another version
    """
    with open(path, 'r', encoding='utf-8') as f:
        first = f.readline().strip()
    if first != f"# schema={SCHEMA_VERSION}":
        raise ValueError(f"{path}: expected '# schema={SCHEMA_VERSION}' header, found {first!r}")
    return pd.read_csv(path, comment='#')
