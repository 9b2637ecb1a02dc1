"""
RIS Copula Outage Toolkit - Reporting Module
Deterministic CSV tables and result-file integrity digests
"""

from .integrity import ResultIntegrity
from .reporter import SCHEMA_VERSION, CsvReporter, read_table

__all__ = ['SCHEMA_VERSION', 'CsvReporter', 'ResultIntegrity', 'read_table']
