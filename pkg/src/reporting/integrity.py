#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Result Integrity

SHA-256 digests of written result files, so reruns with the same flags and
seed can be confirmed byte-identical.
"""

import hashlib
import logging

logger = logging.getLogger(__name__)


class ResultIntegrity:
    """Digest and comparison helpers for result files"""

    @staticmethod
    def sha256(filepath: str, chunk_size: int = 8192) -> str:
        """
        Calculate the SHA-256 digest of a file.

        Args:
            filepath: Path to file
            chunk_size: Size of chunks to read at a time

        Returns:
            Hexadecimal digest
        """
        digest = hashlib.sha256()
        with open(filepath, 'rb') as f:
            while chunk := f.read(chunk_size):
                digest.update(chunk)
        return digest.hexdigest()

    @staticmethod
    def compare_files(file1: str, file2: str) -> bool:
        """True when two result files are byte-identical"""
        match = ResultIntegrity.sha256(file1) == ResultIntegrity.sha256(file2)
        if match:
            logger.info(f"Results are identical: {file1} == {file2}")
        else:
            logger.warning(f"Results differ: {file1} != {file2}")
        return match
