"""This module provides the implementations of the subcommands.

Every ``run_*`` function takes a validated :class:`~humbertkit.cli.config.RunConfig`, writes its document (a text table or a JSON document) to stdout or ``config.output`` and returns the exit code: 0 when every check passes, 1 when a mathematical check fails. Invalid input and budget errors propagate and are mapped to exit code 2 by :func:`dispatch`.
"""

from collections.abc import Callable
import json
import logging
import sys

from humbertkit.cli.config import RunConfig
from humbertkit.counting.base import BudgetExceededError, CountingError
from humbertkit.counting.cache import CountCache
from humbertkit.counting.factory import make_counter
from humbertkit.counting.trace import trace
from humbertkit.curves.curve import InvalidCurveError, load_curve, quotient, dumps_curve
from humbertkit.curves.group import SubsetMask
from humbertkit.curves.sampling import CurveSamplingError
from humbertkit.decomp.identities import identity_suite, suite_frame
from humbertkit.decomp.report import decompose
from humbertkit.fields.extension import FieldArithmeticError
from humbertkit.verifier.engine import full_verify, run_trials

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2

_logger = logging.getLogger(__name__)


def emit(text: str, config: RunConfig) -> None:
    """Writes the run's document to ``config.output`` or stdout."""
    if not text.endswith('\n'):
        text += '\n'
    if config.output is None:
        sys.stdout.write(text)
    else:
        with open(config.output, 'w', encoding='utf-8') as f:
            f.write(text)
        _logger.info(f' Saving output to file {config.output}')


def _dumps(document) -> str:
    return json.dumps(document, indent=2)


def _counter(config: RunConfig):
    return make_counter({'name': config.method, 'workers': config.threads})


def run_predict(config: RunConfig) -> int:
    """Prints the predicted decomposition of JX_n."""
    report = decompose(config.n)
    if config.format == 'structured':
        emit(_dumps(report.to_dict()), config)
        return EXIT_PASS

    a_dim, minus_dim = report.coarse_split
    lines = [f'Humbert-Edge curve of type n={report.n}',
             f'genus: {report.genus}',
             f'total dimension of factors: {report.total_dim}',
             f'factors (|T| <= n-3): {report.factor_count}, positive-dimensional: {sum(report.counts_by_dim.values())}',
             f'Prym-Tyurin exponent: {report.pt_exponent}',
             f'kernel order: {report.kernel_order_text} = 2^{report.kernel_exponent}',
             f'coarse split: dim A = {a_dim}, dim JX^- = {minus_dim}',
             '',
             report.to_frame().to_string(index=False)]
    emit('\n'.join(lines), config)
    return EXIT_PASS


def run_verify(config: RunConfig) -> int:
    """Verifies the decomposition on a curve file or on seeded random curves."""
    cache = CountCache(config.cache) if config.cache else None
    counter = make_counter({'name': config.method})

    if config.curve is not None:
        curve = load_curve(config.curve)
        if config.p and curve.p not in config.p:
            raise ValueError(f'--p {config.p} does not match the curve file (p={curve.p})')
        if config.n is not None and config.n != curve.n:
            raise ValueError(f'--n {config.n} does not match the curve file (type {curve.n})')
        reports = [full_verify(curve, config.kmax, counter, config.threads, cache, config.seed)]
        frame = None
    else:
        seeds = range(config.seed, config.seed + config.trials)
        result = run_trials(config.n, config.p, seeds, config.kmax, counter, config.threads, cache)
        reports, frame = result.reports, result.frame

    passed = all(r.passed for r in reports)
    if config.format == 'structured':
        emit(_dumps({'trials': [r.to_dict(config.deterministic) for r in reports],
                     'verdict': 'pass' if passed else 'fail'}), config)
    else:
        lines = []
        for r in reports:
            lines.append(f'n={r.n} p={r.p} kmax={r.kmax} method={r.method} curve={r.curve.curve_hash()[:12]}: '
                         f'{r.verdict}')
            lines += [f'  {reason}' for reason in r.failures()]
        if frame is not None:
            lines += ['', frame.to_string(index=False)]
        lines.append(f'verdict: {"pass" if passed else "fail"}')
        emit('\n'.join(lines), config)
    return EXIT_PASS if passed else EXIT_FAIL


def run_count(config: RunConfig) -> int:
    """Counts one quotient of a curve file over F_{p^k}."""
    curve = load_curve(config.curve)
    p = config.p[0] if config.p else curve.p
    subset = SubsetMask.from_indices(config.subset, curve.n + 1)
    cache = CountCache(config.cache) if config.cache else None

    rec = trace(curve, subset, p, config.k, _counter(config), cache, config.seed)
    if config.format == 'structured':
        doc = rec.to_dict()
        if config.stats and cache is not None:
            doc['cache'] = cache.stats()
        emit(_dumps(doc), config)
    else:
        lines = [f'T={subset} type={rec.n} p={rec.p} k={rec.k}: N={rec.N} a={rec.a} ({rec.method})']
        if config.stats and cache is not None:
            s = cache.stats()
            lines.append(f'cache: {s["entries"]} entries, {s["hits"]} hits, {s["misses"]} misses')
        emit('\n'.join(lines), config)
    return EXIT_PASS if rec.weil_ok else EXIT_FAIL


def run_quotient(config: RunConfig) -> int:
    """Writes the canonical curve file of X_T."""
    curve = load_curve(config.curve)
    quot = quotient(curve, SubsetMask.from_indices(config.subset, curve.n + 1))
    emit(dumps_curve(quot), config)
    return EXIT_PASS


def run_identities(config: RunConfig) -> int:
    """Evaluates the identity suite up to ``max_n``."""
    results = identity_suite(config.max_n)
    passed = all(r.passed for r in results)
    if config.format == 'structured':
        emit(_dumps({'results': [r.to_dict() for r in results], 'verdict': 'pass' if passed else 'fail'}), config)
    else:
        frame = suite_frame(results)
        # long operands are shortened for display only
        for col in ('lhs', 'rhs'):
            frame[col] = frame[col].map(lambda s: s if len(s) <= 24 else f'{s[:10]}...({len(s)} digits)')
        emit(frame.to_string(index=False) + f'\nverdict: {"pass" if passed else "fail"}', config)
    return EXIT_PASS if passed else EXIT_FAIL


COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    'predict': run_predict,
    'verify': run_verify,
    'count': run_count,
    'quotient': run_quotient,
    'identities': run_identities,
}


def dispatch(config: RunConfig) -> int:
    """Validates ``config``, runs its command and maps errors to exit codes.

    Returns
    -------
    int
        0 on pass, 1 on a failed mathematical check, 2 on invalid input or an exceeded budget
    """
    try:
        config.validate()
        return COMMANDS[config.command](config)
    except InvalidCurveError as e:
        minor = f' (vanishing minor on columns {list(e.minor)})' if e.minor is not None else ''
        print(f'error: invalid curve: {e}{minor}', file=sys.stderr)
    except BudgetExceededError as e:
        cell = f' at T={list(e.cell[0])}, k={e.cell[1]}' if e.cell is not None else ''
        print(f'error: budget exceeded{cell}: {e}', file=sys.stderr)
    except CountingError as e:
        print(f'error: inexact count: {e}', file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, RuntimeError, CurveSamplingError, FieldArithmeticError, OverflowError) as e:
        print(f'error: {e}', file=sys.stderr)
    return EXIT_INVALID
