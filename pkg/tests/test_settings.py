#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tests for settings module
"""

import os
import tempfile
from pathlib import Path

import pytest

from src.settings import THREADS_ENV, load_run_file, to_cli_tokens, worker_count


class TestLoadRunFile:
    """Test run-file loading"""

    def test_values_and_comments(self):
        """Keys are normalised and comments skipped"""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / 'run.ini'
            path.write_text("# curve\nM = 8\ngamma_th_db = 5  # dB\nsnr_db = 0:30:2\n", encoding='utf-8')
            assert load_run_file(str(path)) == {'M': '8', 'gamma-th-db': '5', 'snr-db': '0:30:2'}

    def test_list_values(self):
        """Comma lists are joined with spaces"""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / 'run.ini'
            path.write_text("M = 1, 2, 4\n", encoding='utf-8')
            assert load_run_file(str(path)) == {'M': '1 2 4'}

    def test_missing_file(self):
        """Missing files raise FileNotFoundError"""
        with pytest.raises(FileNotFoundError):
            load_run_file('/nonexistent/run.ini')

    def test_sections_rejected(self):
        """Run files are flat"""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / 'run.ini'
            path.write_text("[curve]\nM = 2\n", encoding='utf-8')
            with pytest.raises(ValueError):
                load_run_file(str(path))


class TestCliTokens:
    """Test conversion to argv tokens"""

    KINDS = {'M': 'list', 'seed': 'value', 'quiet': 'switch'}

    def test_kinds(self):
        """Switches, lists and values render as flags"""
        tokens = to_cli_tokens({'M': '1 2', 'seed': '7', 'quiet': 'yes'}, self.KINDS)
        assert tokens == ['--M', '1', '2', '--seed=7', '--quiet']

    def test_false_switch_omitted(self):
        """False switches add nothing"""
        assert to_cli_tokens({'quiet': 'off'}, self.KINDS) == []

    def test_bad_switch(self):
        """Switch values must be boolean words"""
        with pytest.raises(ValueError):
            to_cli_tokens({'quiet': 'maybe'}, self.KINDS)

    def test_unknown_key(self):
        """Unknown keys are rejected"""
        with pytest.raises(ValueError):
            to_cli_tokens({'colour': 'blue'}, self.KINDS)


class TestWorkerCount:
    """Test the thread cap"""

    def test_from_environment(self, monkeypatch):
        """RIS_COPULA_THREADS sets the cap"""
        monkeypatch.setenv(THREADS_ENV, '3')
        assert worker_count() == 3

    @pytest.mark.parametrize("raw", ['abc', '0', ''])
    def test_invalid_falls_back(self, monkeypatch, raw):
        """Invalid values fall back to the CPU count"""
        monkeypatch.setenv(THREADS_ENV, raw)
        assert worker_count() == max(1, os.cpu_count() or 1)
