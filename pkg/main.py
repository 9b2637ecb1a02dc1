#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
RIS Copula Outage Toolkit - Main Entry Point

Outage probability of RIS-assisted links under b-bit phase quantization:
outage curves, marginal and moment validation, FGM dependence fitting and RIS
placement sweeps, all written as deterministic CSV.

Exit codes: 0 success, 1 bad arguments or failure, 2 numerical non-convergence
in at least one cell (the row is still written with an empty cell).
"""

import argparse
import logging
import math
import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.console import configure_logging
from src.copula import MarginMode, fit_theta, gamma_margins, onebit_margins
from src.errors import ConvergenceError, DegenerateError
from src.marginals import Axis, OneBitMarginal
from src.moments import fourth_moment, gamma_fit, mean_square, published_fourth_moment
from src.montecarlo import (
    SystemConfig,
    estimate_moments,
    estimate_outage_curve,
    ks_test,
    sample_pairs,
)
from src.outage import (
    AsymptoteMode,
    BBitRoute,
    Region,
    default_fits,
    from_monte_carlo,
    outage_asymptotic,
    outage_bbit,
    outage_closed_form_onebit,
    outage_quadrature_onebit,
    placements,
)
from src.reporting import CsvReporter, ResultIntegrity
from src.settings import load_run_file, to_cli_tokens, worker_count
from src.specfun import load_parameter_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2

CURVE_COLUMNS = ['snr_db', 'outage_mc', 'mc_stderr', 'outage_quadrature',
                 'outage_closed_form', 'outage_asymptotic', 'theta']
SWEEP_COLUMNS = ['d', 'l1', 'l2', 'path_loss_db', 'snr_db', 'outage', 'err_estimate',
                 'outage_mc', 'mc_stderr', 'theta']
MARGINAL_COLUMNS = ['M', 'axis', 'n', 'ks_distance', 'pvalue', 'passes']
MOMENT_COLUMNS = ['M', 'bits', 'axis', 'E2', 'E4', 'E4_published', 'gamma_shape', 'gamma_scale',
                  'mc_E2', 'mc_E2_stderr', 'mc_E4', 'mc_E4_stderr']
FIT_COLUMNS = ['M', 'bits', 'margins', 'n', 'theta', 'log_likelihood', 'kendall_tau', 'spearman_rho']


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with code 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def db_to_linear(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


def snr_range(text: str) -> List[float]:
    """Parse an inclusive `start:stop:step` range in dB"""
    parts = text.split(':')
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric range {text!r}")
    if not step > 0:
        raise argparse.ArgumentTypeError(f"step must be positive, got {step}")
    if start > stop:
        raise argparse.ArgumentTypeError(f"start {start} exceeds stop {stop}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [float(v) for v in np.round(start + step * np.arange(count), 10)]


def theta_choice(text: str):
    """'fit' or a number in [-1, 1]"""
    if text.strip().lower() == 'fit':
        return 'fit'
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"theta must be 'fit' or a number, got {text!r}")
    if not -1.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"theta must lie in [-1, 1], got {value}")
    return value


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not value > 0 or not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def sample_count(text: str) -> int:
    value = positive_int(text)
    if value < 10_000:
        raise argparse.ArgumentTypeError(f"Monte-Carlo runs need at least 10000 samples, got {value}")
    return value


def build_parser() -> CliParser:
    """Construct the argument parser with every subcommand"""
    common = CliParser(add_help=False)
    common.add_argument('--config', help='Run file of key = value settings (flags override it)')
    common.add_argument('--seed', type=int, default=0, help='Root random seed (default: 0)')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', action='store_true', help='Debug logging')
    verbosity.add_argument('--quiet', action='store_true', help='Warnings and errors only')

    link = CliParser(add_help=False)
    link.add_argument('--M', type=positive_int, default=4, help='Number of RIS elements (default: 4)')
    link.add_argument('--bits', type=positive_int, default=1, help='Phase quantization bits (default: 1)')
    link.add_argument('--continuous-phase', action='store_true', help='Perfect phase alignment')
    link.add_argument('--channel-power', type=positive_float, default=1.0,
                      help='Per-hop mean power E|h|^2 = E|g|^2 (default: 1)')
    link.add_argument('--gamma-th-db', type=float, default=5.0, help='SNR threshold in dB (default: 5)')
    link.add_argument('--theta', type=theta_choice, default='fit',
                      help="FGM parameter in [-1, 1] or 'fit' (default: fit)")
    link.add_argument('--margins', choices=[mode.value for mode in MarginMode], default='analytic',
                      help='Pseudo-observation margins for theta fitting (default: analytic)')
    link.add_argument('--region', choices=[region.value for region in Region], default='full',
                      help='One-bit integration region (default: full)')

    parser = CliParser(
        description='RIS Copula Outage Toolkit - outage analysis under b-bit phase quantization',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # One-bit outage curve with a fixed dependence parameter
  python main.py outage-curve --M 4 --bits 1 --gamma-th-db 5 --snr-db 0:30:2 --theta 0.55 --seed 7

  # KS validation of the one-bit marginals
  python main.py validate-marginals --M 1 2 4 8 --n 1000000

  # Closed-form moments and Gamma fits
  python main.py moments-table --M 1 4 16 --bits 1 2 3

  # Fit theta from simulated pairs
  python main.py fit-theta --M 16 --bits 1 --n 100000 --seed 3

  # RIS placement sweep along a 10 m link
  python main.py position-sweep --D 10 --nu 2.8 --tx-snr-db 15 --M 8 --bits 1
        """
    )

    subparsers = parser.add_subparsers(
        dest='command',
        metavar='{outage-curve,validate-marginals,moments-table,fit-theta,position-sweep}',
        help='Command to execute',
    )

    curve = subparsers.add_parser('outage-curve', parents=[common, link], help='Outage probability versus SNR')
    curve.add_argument('--snr-db', type=snr_range, default=snr_range('0:30:2'),
                       help='Transmit SNR range start:stop:step in dB, inclusive (default: 0:30:2)')
    curve.add_argument('--asymptote', choices=[mode.value for mode in AsymptoteMode], default='derived',
                       help='High-SNR asymptote variant (default: derived)')
    curve.add_argument('--n', type=sample_count, default=1_000_000, help='Monte-Carlo samples (default: 10^6)')
    curve.add_argument('--no-closed-form', action='store_true', help='Skip the Fox-H closed-form column')
    curve.add_argument('--output', default='output/outage_curve.csv', help='CSV output path')

    marginals = subparsers.add_parser('validate-marginals', parents=[common],
                                      help='KS test of the one-bit marginals against simulation')
    marginals.add_argument('--M', type=positive_int, nargs='+', default=[1, 2, 4, 8], help='Element counts')
    marginals.add_argument('--channel-power', type=positive_float, default=1.0, help='Per-hop mean power')
    marginals.add_argument('--n', type=sample_count, default=1_000_000, help='Samples per M (default: 10^6)')
    marginals.add_argument('--output', default='output/marginals.csv', help='CSV output path')

    moments = subparsers.add_parser('moments-table', parents=[common],
                                    help='Closed-form moments and Gamma fits of X^2 and Y^2')
    moments.add_argument('--M', type=positive_int, nargs='+', default=[1, 4, 16], help='Element counts')
    moments.add_argument('--bits', type=positive_int, nargs='+', default=[1, 2, 3], help='Quantization bits')
    moments.add_argument('--continuous-phase', action='store_true', help='Perfect phase alignment')
    moments.add_argument('--channel-power', type=positive_float, default=1.0, help='Per-hop mean power')
    moments.add_argument('--n', type=int, default=0, help='Monte-Carlo samples for comparison (0 = none)')
    moments.add_argument('--output', default='output/moments.csv', help='CSV output path')

    fit = subparsers.add_parser('fit-theta', parents=[common], help='Maximum pseudo-likelihood fit of theta')
    fit.add_argument('--M', type=positive_int, default=16, help='Number of RIS elements (default: 16)')
    fit.add_argument('--bits', type=positive_int, default=1, help='Phase quantization bits (default: 1)')
    fit.add_argument('--channel-power', type=positive_float, default=1.0, help='Per-hop mean power')
    fit.add_argument('--margins', choices=[mode.value for mode in MarginMode], default='analytic',
                     help='Pseudo-observation margins (default: analytic)')
    fit.add_argument('--n', type=positive_int, default=100_000, help='Simulated pairs (default: 10^5)')
    fit.add_argument('--output', default='output/theta_fit.csv', help='CSV output path')

    sweep = subparsers.add_parser('position-sweep', parents=[common, link],
                                  help='Outage versus RIS position between transmitter and receiver')
    sweep.add_argument('--D', type=positive_float, default=10.0, help='Transmitter-receiver distance (default: 10)')
    sweep.add_argument('--nu', type=positive_float, default=2.8, help='Path-loss exponent (default: 2.8)')
    sweep.add_argument('--tx-snr-db', type=float, default=15.0, help='Transmit SNR p_t/sigma^2 in dB (default: 15)')
    sweep.add_argument('--points', type=positive_int, default=21, help='Interior grid points (default: 21)')
    sweep.add_argument('--n', type=sample_count, default=100_000, help='Monte-Carlo samples (default: 10^5)')
    sweep.add_argument('--output', default='output/position_sweep.csv', help='CSV output path')

    specfun = subparsers.add_parser('specfun-eval', parents=[common])
    specfun.add_argument('--params', required=True, help='Fox-H parameter file')

    return parser


def flag_kinds(subparser: argparse.ArgumentParser) -> Dict[str, str]:
    """Long-flag name -> 'switch', 'list' or 'value' for run-file conversion"""
    kinds = {}
    for action in subparser._actions:
        for option in action.option_strings:
            if not option.startswith('--') or option in ('--help', '--config'):
                continue
            if action.nargs == 0:
                kinds[option[2:]] = 'switch'
            elif action.nargs in ('+', '*'):
                kinds[option[2:]] = 'list'
            else:
                kinds[option[2:]] = 'value'
    return kinds


def expand_config(parser: CliParser, argv: List[str]) -> List[str]:
    """Insert run-file settings right after the subcommand so explicit flags win"""
    if not argv or argv[0].startswith('-'):
        return argv
    prescan = argparse.ArgumentParser(add_help=False)
    prescan.add_argument('--config')
    known, _ = prescan.parse_known_args(argv[1:])
    if not known.config:
        return argv
    subparser = _subparser(parser, argv[0])
    if subparser is None:
        return argv
    try:
        tokens = to_cli_tokens(load_run_file(known.config), flag_kinds(subparser))
    except (OSError, ValueError) as e:
        parser.error(str(e))
    logger.debug(f"Config {known.config} expanded to {tokens}")
    return [argv[0]] + tokens + argv[1:]


def _subparser(parser: argparse.ArgumentParser, name: str) -> Optional[argparse.ArgumentParser]:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices.get(name)
    return None


def link_config(args, transmit_snr: float = 1.0, path_loss: float = 1.0) -> SystemConfig:
    return SystemConfig(
        elements=args.M,
        bits=args.bits,
        transmit_snr=transmit_snr,
        path_loss=path_loss,
        threshold=db_to_linear(args.gamma_th_db),
        channel_power=args.channel_power,
        continuous_phase=args.continuous_phase,
    )


def resolve_theta(args, config: SystemConfig, n_samples: int) -> float:
    """Fixed theta from the flags, or an MPLE fit on simulated pairs"""
    if args.theta != 'fit':
        return float(args.theta)
    return run_theta_fit(config, MarginMode(args.margins), n_samples, args.seed).theta.theta


def run_theta_fit(config: SystemConfig, mode: MarginMode, n_samples: int, seed: int):
    """Fit on (X, Y) for one bit, on (X^2, Y^2) otherwise"""
    x, y = sample_pairs(config, n_samples, seed)
    if config.bits == 1 and not config.continuous_phase:
        margins = onebit_margins(config.elements, config.onebit_scale) if mode is MarginMode.ANALYTIC else None
        return fit_theta((x, y), margins)
    margins = gamma_margins(*default_fits(config)) if mode is MarginMode.ANALYTIC else None
    return fit_theta((x * x, y * y), margins)


class CellRunner:
    """Evaluates one output cell, turning numerical failures into empty cells"""

    def __init__(self):
        self.failures = 0
        self.skipped = set()
        self._lock = threading.Lock()

    def __call__(self, label: str, compute: Callable[[], Tuple[float, float]]) -> Tuple[Optional[float], Optional[float]]:
        try:
            return compute()
        except ConvergenceError as e:
            with self._lock:
                self.failures += 1
            logger.warning(f"{label}: no convergence ({e}); cell left empty")
        except DegenerateError as e:
            with self._lock:
                first = label not in self.skipped
                self.skipped.add(label)
            if first:
                logger.warning(f"{label}: {e}; column left empty")
        return None, None


def analytic_routes(config: SystemConfig, theta: float, region: Region, asymptote: AsymptoteMode,
                    closed_form: bool, runner: CellRunner) -> Dict[str, Optional[float]]:
    """Quadrature, closed-form and asymptotic outage for one configuration"""
    onebit = config.bits == 1 and not config.continuous_phase
    row = {}

    def value_of(result):
        return result.value, result.err_estimate

    if onebit:
        row['quadrature'], row['quadrature_err'] = runner(
            'outage_quadrature', lambda: value_of(outage_quadrature_onebit(config, theta, region)))
        if closed_form:
            row['closed_form'], _ = runner(
                'outage_closed_form', lambda: value_of(outage_closed_form_onebit(config, theta, region=region)))
        row['asymptotic'] = outage_asymptotic(config, asymptote).value
    else:
        row['quadrature'], row['quadrature_err'] = runner(
            'outage_quadrature', lambda: value_of(outage_bbit(config, theta)))
        if closed_form:
            row['closed_form'], _ = runner(
                'outage_closed_form', lambda: value_of(outage_bbit(config, theta, route=BBitRoute.CLOSED_FORM)))
    return row


def parallel_map(func: Callable, items: Sequence) -> List:
    """Ordered map over a thread pool capped by RIS_COPULA_THREADS"""
    with ThreadPoolExecutor(max_workers=worker_count()) as executor:
        return list(executor.map(func, items))


def summary_path(csv_path: str) -> str:
    return str(Path(csv_path).with_suffix('.summary.txt'))


def write_mc_summary(reporter: CsvReporter, command: str, theta: float, csv_path: str,
                     points: Sequence[Tuple[str, object]]) -> str:
    """
    Write the per-run Monte-Carlo summary next to a result table.

    Args:
        reporter: Reporter that wrote the table
        command: Subcommand name
        theta: Dependence parameter used by the analytic columns
        csv_path: Path of the written table
        points: (label, McEstimate) per sweep point; all share seed and n

    Returns:
        Path of the summary file
    """
    entries: Dict[str, object] = {
        'command': command,
        'theta': theta,
        'table': csv_path,
        'sha256': ResultIntegrity.sha256(csv_path),
    }
    for label, estimate in points:
        for key, value in estimate.summary_entries().items():
            if key in ('seed', 'n'):
                entries.setdefault(key, value)
            else:
                entries[f"{key}[{label}]"] = value
    return reporter.write_summary(entries, summary_path(csv_path))


def handle_outage_curve(args) -> int:
    """Handle outage-curve command"""
    base = link_config(args)
    region = Region(args.region)
    asymptote = AsymptoteMode(args.asymptote)
    logger.info(f"Outage curve: M={args.M} b={args.bits} gamma_th={args.gamma_th_db} dB, "
                f"{len(args.snr_db)} SNR points")

    theta = resolve_theta(args, base, args.n)
    logger.info(f"Using theta={theta:.6g}")

    estimates = estimate_outage_curve(base, [db_to_linear(v) for v in args.snr_db], args.n, args.seed)
    runner = CellRunner()

    def evaluate(snr_db: float) -> Dict[str, Optional[float]]:
        config = base.with_transmit_snr(db_to_linear(snr_db))
        return analytic_routes(config, theta, region, asymptote, not args.no_closed_form, runner)

    analytic = parallel_map(evaluate, args.snr_db)
    rows = []
    for snr_db, estimate, values in zip(args.snr_db, estimates, analytic):
        simulated = from_monte_carlo(estimate, base.with_transmit_snr(db_to_linear(snr_db)))
        rows.append({
            'snr_db': snr_db,
            'outage_mc': simulated.value,
            'mc_stderr': simulated.err_estimate,
            'outage_quadrature': values.get('quadrature'),
            'outage_closed_form': values.get('closed_form'),
            'outage_asymptotic': values.get('asymptotic'),
            'theta': theta,
        })

    reporter = CsvReporter()
    table = reporter.write_table(rows, CURVE_COLUMNS, args.output, sort_by='snr_db')
    write_mc_summary(reporter, 'outage-curve', theta, table,
                     [(f"snr_db={snr_db:g}", estimate) for snr_db, estimate in zip(args.snr_db, estimates)])
    return EXIT_NUMERICAL if runner.failures else EXIT_OK


def handle_validate_marginals(args) -> int:
    """Handle validate-marginals command"""
    rows = []
    for M in args.M:
        config = SystemConfig(elements=M, bits=1, channel_power=args.channel_power)
        x, y = sample_pairs(config, args.n, args.seed)
        for axis, samples in ((Axis.IN_PHASE, x), (Axis.QUADRATURE, y)):
            law = OneBitMarginal(M, axis, config.onebit_scale)
            result = ks_test(samples, law.cdf)
            if not result.passes():
                logger.warning(f"M={M} {axis.value}: KS distance {result.distance:.4g} above threshold")
            rows.append({
                'M': M,
                'axis': axis.value,
                'n': result.n_samples,
                'ks_distance': result.distance,
                'pvalue': result.pvalue,
                'passes': result.passes(),
            })
        logger.info(f"Validated marginals for M={M}")
    CsvReporter().write_table(rows, MARGINAL_COLUMNS, args.output)
    return EXIT_OK


def _optional(compute: Callable[[], float], label: str) -> Optional[float]:
    try:
        return compute()
    except (DegenerateError, ValueError) as e:
        logger.warning(f"{label}: {e}")
        return None


def handle_moments_table(args) -> int:
    """Handle moments-table command"""
    bit_choices = [None] if args.continuous_phase else args.bits
    rows = []
    for M in args.M:
        for bits in bit_choices:
            levels = None if bits is None else 2 ** bits
            mc = None
            if args.n > 0:
                config = SystemConfig(elements=M, bits=bits or 1, channel_power=args.channel_power,
                                      continuous_phase=bits is None)
                mc = estimate_moments(config, args.n, args.seed)
            for axis in (Axis.IN_PHASE, Axis.QUADRATURE):
                label = f"M={M} b={bits if bits is not None else 'continuous'} {axis.value}"
                fit = _optional(lambda: gamma_fit(M, bits, axis, args.channel_power), f"{label} gamma fit")
                row = {
                    'M': M,
                    'bits': bits,
                    'axis': axis.value,
                    'E2': mean_square(M, levels, axis, args.channel_power),
                    'E4': fourth_moment(M, levels, axis, args.channel_power),
                    'E4_published': _optional(
                        lambda: published_fourth_moment(M, levels, axis, args.channel_power),
                        f"{label} printed fourth moment"),
                    'gamma_shape': fit.shape if fit else None,
                    'gamma_scale': fit.scale if fit else None,
                }
                if mc is not None:
                    second, fourth = (mc.x2, mc.x4) if axis is Axis.IN_PHASE else (mc.y2, mc.y4)
                    row.update({
                        'mc_E2': second.value, 'mc_E2_stderr': second.std_error,
                        'mc_E4': fourth.value, 'mc_E4_stderr': fourth.std_error,
                    })
                rows.append(row)
    CsvReporter().write_table(rows, MOMENT_COLUMNS, args.output)
    return EXIT_OK


def handle_fit_theta(args) -> int:
    """Handle fit-theta command"""
    config = SystemConfig(elements=args.M, bits=args.bits, channel_power=args.channel_power)
    mode = MarginMode(args.margins)
    logger.info(f"Fitting theta for M={args.M} b={args.bits} from {args.n} pairs ({mode.value} margins)")
    result = run_theta_fit(config, mode, args.n, args.seed)
    print(result.summary())
    CsvReporter().write_table([{
        'M': args.M,
        'bits': args.bits,
        'margins': mode.value,
        'n': result.n_samples,
        'theta': result.theta.theta,
        'log_likelihood': result.log_likelihood,
        'kendall_tau': result.theta.kendall_tau,
        'spearman_rho': result.theta.spearman_rho,
    }], FIT_COLUMNS, args.output)
    return EXIT_OK


def handle_position_sweep(args) -> int:
    """Handle position-sweep command"""
    transmit_snr = db_to_linear(args.tx_snr_db)
    grid = placements(args.D, args.nu, args.points)
    base = link_config(args, transmit_snr=transmit_snr)
    region = Region(args.region)
    logger.info(f"Position sweep: D={args.D} nu={args.nu} rho_S={args.tx_snr_db} dB, {len(grid)} positions")

    theta = resolve_theta(args, base, args.n)
    estimates = estimate_outage_curve(base, [transmit_snr * p.path_loss for p in grid], args.n, args.seed)
    runner = CellRunner()

    def evaluate(placement) -> Dict[str, Optional[float]]:
        config = link_config(args, transmit_snr=transmit_snr, path_loss=placement.path_loss)
        return analytic_routes(config, theta, region, AsymptoteMode.DERIVED, False, runner)

    analytic = parallel_map(evaluate, grid)
    rows = []
    for placement, estimate, values in zip(grid, estimates, analytic):
        simulated = from_monte_carlo(
            estimate, link_config(args, transmit_snr=transmit_snr, path_loss=placement.path_loss))
        rows.append({
            'd': placement.distance,
            'l1': placement.l1,
            'l2': placement.l2,
            'path_loss_db': placement.path_loss_db,
            'snr_db': args.tx_snr_db + placement.path_loss_db,
            'outage': values.get('quadrature'),
            'err_estimate': values.get('quadrature_err'),
            'outage_mc': simulated.value,
            'mc_stderr': simulated.err_estimate,
            'theta': theta,
        })
    reporter = CsvReporter()
    table = reporter.write_table(rows, SWEEP_COLUMNS, args.output, sort_by='d')
    write_mc_summary(reporter, 'position-sweep', theta, table,
                     [(f"d={p.distance:.12g}", estimate) for p, estimate in zip(grid, estimates)])
    return EXIT_NUMERICAL if runner.failures else EXIT_OK


def handle_specfun_eval(args) -> int:
    """Handle specfun-eval command: print value and diagnostics of one H-function"""
    parameters = load_parameter_file(args.params)
    try:
        result = parameters.evaluate()
    except ConvergenceError as e:
        logger.warning(f"specfun-eval: {e}")
        print(f"value: {'' if e.value is None else format(e.value, '.17g')}")
        print(f"residual: {'' if e.residual is None else format(e.residual, '.3e')}")
        return EXIT_NUMERICAL
    print(f"value: {result.value:.17g}")
    print(f"residual: {result.residual:.3e}")
    print(f"nodes: {result.nodes}")
    print(f"half_height: {result.half_height:g}")
    return EXIT_OK


HANDLERS = {
    'outage-curve': handle_outage_curve,
    'validate-marginals': handle_validate_marginals,
    'moments-table': handle_moments_table,
    'fit-theta': handle_fit_theta,
    'position-sweep': handle_position_sweep,
    'specfun-eval': handle_specfun_eval,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the RIS Copula Outage Toolkit"""
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(expand_config(parser, argv))

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    configure_logging(level)

    try:
        return HANDLERS[args.command](args)
    except Exception as e:
        logger.error(f"Error executing command: {e}", exc_info=True)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
