#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Integration tests for the command-line workflow
"""

import argparse
import math
import tempfile
from pathlib import Path

import numpy as np
import pytest

from main import EXIT_OK, EXIT_USAGE, main, snr_range, theta_choice
from src.reporting import ResultIntegrity, read_table


def curve_args(output: str, *extra: str):
    return ['outage-curve', '--M', '4', '--bits', '1', '--gamma-th-db', '5', '--snr-db', '0:30:2',
            '--theta', '0.55', '--seed', '7', '--n', '20000', '--no-closed-form', '--quiet',
            '--output', output, *extra]


def read_summary(path: Path):
    return dict(line.split(': ', 1) for line in path.read_text(encoding='utf-8').splitlines())


class TestArgumentHelpers:
    """Test argument parsing helpers"""

    def test_snr_range_inclusive(self):
        """Stop value is included"""
        values = snr_range('0:30:2')
        assert len(values) == 16
        assert values[0] == 0.0 and values[-1] == 30.0

    def test_snr_range_fractional_step(self):
        """Fractional steps do not overshoot"""
        assert snr_range('0:1:0.3') == [0.0, 0.3, 0.6, 0.9]

    @pytest.mark.parametrize("text", ['0:10', '0:10:0', '10:0:1', 'a:b:c'])
    def test_snr_range_invalid(self, text):
        """Malformed ranges are rejected"""
        with pytest.raises(argparse.ArgumentTypeError):
            snr_range(text)

    def test_theta_choice(self):
        """'fit' or a number in [-1, 1]"""
        assert theta_choice('FIT') == 'fit'
        assert theta_choice('-0.25') == -0.25
        with pytest.raises(argparse.ArgumentTypeError):
            theta_choice('1.5')


class TestUsage:
    """Test argument errors"""

    def test_no_command(self):
        """Missing subcommand prints help and fails"""
        assert main([]) == EXIT_USAGE

    @pytest.mark.parametrize("flags", [['--theta', '2'], ['--n', '5'], ['--M', '0']])
    def test_bad_flags(self, flags):
        """Out-of-range flags exit with code 1"""
        with tempfile.TemporaryDirectory() as tmpdir:
            with pytest.raises(SystemExit) as exc:
                main(['outage-curve', '--output', str(Path(tmpdir) / 'o.csv'), *flags])
            assert exc.value.code == EXIT_USAGE

    def test_missing_config(self):
        """A missing run file is a usage error"""
        with pytest.raises(SystemExit) as exc:
            main(['outage-curve', '--config', '/nonexistent/run.ini'])
        assert exc.value.code == EXIT_USAGE


class TestOutageCurve:
    """Test the outage-curve command"""

    def test_curve_table(self):
        """One row per SNR point with nonincreasing outage"""
        with tempfile.TemporaryDirectory() as tmpdir:
            output = str(Path(tmpdir) / 'curve.csv')
            assert main(curve_args(output)) == EXIT_OK
            frame = read_table(output)
            assert len(frame) == 16
            assert list(frame['snr_db']) == snr_range('0:30:2')
            assert frame['outage_closed_form'].isna().all()
            assert (frame['theta'] == 0.55).all()
            quadrature = frame['outage_quadrature'].to_numpy()
            assert np.all(np.diff(quadrature) <= 1e-12)
            assert np.all((frame['outage_mc'] >= 0.0) & (frame['outage_mc'] <= 1.0))

    def test_rerun_identical(self):
        """Same flags and seed give byte-identical files"""
        with tempfile.TemporaryDirectory() as tmpdir:
            first = str(Path(tmpdir) / 'first.csv')
            second = str(Path(tmpdir) / 'second.csv')
            assert main(curve_args(first)) == EXIT_OK
            assert main(curve_args(second)) == EXIT_OK
            assert ResultIntegrity.compare_files(first, second)

    def test_mc_summary(self):
        """A key: value summary of the simulation is written beside the table"""
        with tempfile.TemporaryDirectory() as tmpdir:
            output = str(Path(tmpdir) / 'curve.csv')
            assert main(curve_args(output)) == EXIT_OK
            summary = read_summary(Path(tmpdir) / 'curve.summary.txt')
            frame = read_table(output)
            assert summary['command'] == 'outage-curve'
            assert summary['seed'] == '7'
            assert summary['n'] == '20000'
            assert summary['sha256'] == ResultIntegrity.sha256(output)
            assert float(summary['value[snr_db=0]']) == pytest.approx(frame['outage_mc'][0], rel=1e-11)
            assert float(summary['std_error[snr_db=30]']) == pytest.approx(frame['mc_stderr'][15], rel=1e-11)

    def test_negligible_threshold(self):
        """gamma_th = -300 dB gives zero outage in every column"""
        with tempfile.TemporaryDirectory() as tmpdir:
            output = str(Path(tmpdir) / 'zero.csv')
            assert main(curve_args(output, '--gamma-th-db', '-300')) == EXIT_OK
            frame = read_table(output)
            for column in ('outage_mc', 'outage_quadrature', 'outage_asymptotic'):
                assert (frame[column] == 0.0).all()

    def test_config_file(self):
        """Run-file values apply and explicit flags override them"""
        with tempfile.TemporaryDirectory() as tmpdir:
            run_file = Path(tmpdir) / 'run.ini'
            run_file.write_text("# outage run\nM = 2\ntheta = 0\nn = 10000\nsnr_db = 0:10:5\n"
                                "no_closed_form = true\nquiet = yes\n", encoding='utf-8')
            output = str(Path(tmpdir) / 'cfg.csv')
            assert main(['outage-curve', '--config', str(run_file), '--snr-db', '0:20:5',
                         '--output', output]) == EXIT_OK
            frame = read_table(output)
            assert list(frame['snr_db']) == [0.0, 5.0, 10.0, 15.0, 20.0]
            assert (frame['theta'] == 0.0).all()

    def test_unknown_config_key(self):
        """Unknown run-file keys are usage errors"""
        with tempfile.TemporaryDirectory() as tmpdir:
            run_file = Path(tmpdir) / 'run.ini'
            run_file.write_text("colour = blue\n", encoding='utf-8')
            with pytest.raises(SystemExit) as exc:
                main(['outage-curve', '--config', str(run_file)])
            assert exc.value.code == EXIT_USAGE

    def test_multibit_curve(self):
        """b-bit curves fill the quadrature column and leave the asymptote empty"""
        with tempfile.TemporaryDirectory() as tmpdir:
            output = str(Path(tmpdir) / 'bbit.csv')
            assert main(['outage-curve', '--M', '8', '--bits', '2', '--snr-db', '0:20:10', '--theta', '0.3',
                         '--n', '10000', '--no-closed-form', '--quiet', '--output', output]) == EXIT_OK
            frame = read_table(output)
            assert frame['outage_quadrature'].notna().all()
            assert frame['outage_asymptotic'].isna().all()

    def test_continuous_phase_curve(self):
        """Continuous phase keeps the MC column and leaves analytic columns empty"""
        with tempfile.TemporaryDirectory() as tmpdir:
            output = str(Path(tmpdir) / 'cont.csv')
            assert main(['outage-curve', '--M', '4', '--continuous-phase', '--snr-db', '0:10:10',
                         '--theta', '0', '--n', '10000', '--quiet', '--output', output]) == EXIT_OK
            frame = read_table(output)
            assert frame['outage_mc'].notna().all()
            assert frame['outage_quadrature'].isna().all()


class TestTables:
    """Test the table commands"""

    def test_moments_table(self):
        """M = 1, b = 1 gives E2 = 0.5 on both axes"""
        with tempfile.TemporaryDirectory() as tmpdir:
            output = str(Path(tmpdir) / 'moments.csv')
            assert main(['moments-table', '--M', '1', '--bits', '1', '--quiet', '--output', output]) == EXIT_OK
            frame = read_table(output)
            assert list(frame['axis']) == ['X', 'Y']
            assert frame['E2'].tolist() == pytest.approx([0.5, 0.5])
            assert frame['gamma_shape'].tolist() == pytest.approx([0.2, 0.2])
            assert frame['mc_E2'].isna().all()

    def test_moments_table_with_simulation(self):
        """--n adds Monte-Carlo columns"""
        with tempfile.TemporaryDirectory() as tmpdir:
            output = str(Path(tmpdir) / 'moments.csv')
            assert main(['moments-table', '--M', '2', '--bits', '2', '--n', '20000', '--quiet',
                         '--output', output]) == EXIT_OK
            frame = read_table(output)
            assert frame['mc_E2'].notna().all()
            assert abs(frame['mc_E2'][0] - frame['E2'][0]) < 5.0 * frame['mc_E2_stderr'][0]

    def test_validate_marginals(self):
        """One row per M and axis; small runs still exit 0"""
        with tempfile.TemporaryDirectory() as tmpdir:
            output = str(Path(tmpdir) / 'marginals.csv')
            assert main(['validate-marginals', '--M', '1', '2', '--n', '20000', '--quiet',
                         '--output', output]) == EXIT_OK
            frame = read_table(output)
            assert len(frame) == 4
            assert (frame['ks_distance'] < 0.02).all()

    def test_fit_theta(self, capsys):
        """Summary goes to stdout and the fit to CSV"""
        with tempfile.TemporaryDirectory() as tmpdir:
            output = str(Path(tmpdir) / 'fit.csv')
            assert main(['fit-theta', '--M', '4', '--n', '20000', '--seed', '3', '--quiet',
                         '--output', output]) == EXIT_OK
            assert "theta: " in capsys.readouterr().out
            frame = read_table(output)
            assert -1.0 <= frame['theta'][0] <= 1.0
            assert frame['margins'][0] == 'analytic'


class TestPositionSweep:
    """Test the position-sweep command"""

    def test_outage_peaks_mid_link(self):
        """Outage is largest with the RIS halfway between the ends"""
        with tempfile.TemporaryDirectory() as tmpdir:
            output = str(Path(tmpdir) / 'sweep.csv')
            assert main(['position-sweep', '--D', '10', '--nu', '2', '--tx-snr-db', '50', '--gamma-th-db', '0',
                         '--M', '8', '--points', '9', '--theta', '0', '--n', '10000', '--quiet',
                         '--output', output]) == EXIT_OK
            frame = read_table(output)
            assert len(frame) == 9
            assert int(np.argmax(frame['outage'].to_numpy())) == 4
            assert (frame['l1'] + frame['l2']).tolist() == pytest.approx([10.0] * 9)
            assert frame['snr_db'][4] == pytest.approx(50.0 - 40.0 * math.log10(5.0))

    def test_default_geometry(self):
        """15 dB, nu = 2.8: symmetric, saturated mid-link, summary per position"""
        with tempfile.TemporaryDirectory() as tmpdir:
            output = str(Path(tmpdir) / 'sweep.csv')
            assert main(['position-sweep', '--M', '8', '--theta', '0', '--n', '10000', '--quiet',
                         '--output', output]) == EXIT_OK
            frame = read_table(output)
            outage = frame['outage'].to_numpy()
            assert len(frame) == 21
            assert outage == pytest.approx(outage[::-1], abs=1e-6)
            assert outage[10] == pytest.approx(outage.max(), abs=1e-9)
            assert outage[0] < outage[10]
            summary = read_summary(Path(tmpdir) / 'sweep.summary.txt')
            assert summary['command'] == 'position-sweep'
            assert sum(key.startswith('value[d=') for key in summary) == 21


class TestSpecfunEval:
    """Test the parameter-file evaluator"""

    def test_prints_value(self, capsys):
        """H^{1,0}_{0,1}[z | (0, 1)] = exp(-z)"""
        with tempfile.TemporaryDirectory() as tmpdir:
            params = Path(tmpdir) / 'exp.txt'
            params.write_text("# exp(-z)\nlower 0 1\nm 1\nz 1.5\n", encoding='utf-8')
            assert main(['specfun-eval', '--params', str(params), '--quiet']) == EXIT_OK
            lines = dict(line.split(': ', 1) for line in capsys.readouterr().out.splitlines())
            assert float(lines['value']) == pytest.approx(math.exp(-1.5), rel=1e-7)
            assert int(lines['nodes']) > 0
