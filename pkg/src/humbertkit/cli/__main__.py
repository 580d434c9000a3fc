"""This module makes the command-line interface executable.

It runs the subcommands ``predict``, ``verify``, ``count``, ``quotient`` and ``identities`` via the console script ``humbertkit`` or ``python -m humbertkit.cli``. The process exits with 0 when every check passes, 1 when a mathematical check fails and 2 on invalid input or an exceeded budget.
"""

import argparse
import logging
import sys

from humbertkit.cli.commands import dispatch
from humbertkit.cli.config import RunConfig


def build_parser() -> argparse.ArgumentParser:
    """Declares the subcommands and their flags."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['table', 'structured'], default='table', help='output format')
    common.add_argument('--output', help='write the document to this file')
    common.add_argument('--seed', type=int, default=0, help='seed of every random choice')
    common.add_argument('--method', default='auto', help='counter: naive, charsum, auto or an importable counter module')
    common.add_argument('--cache', help='append-only count cache (JSON lines)')
    common.add_argument('--threads', type=int, default=1, help='worker processes for counting')
    common.add_argument('--deterministic', action='store_true', help='omit the timestamp from structured output')
    common.add_argument('--verbose', action='store_true', help='log at INFO level')
    common.add_argument('--log-path', dest='log_path', help='log file (default stderr)')

    parser = argparse.ArgumentParser(prog='humbertkit',
                                     description='Jacobian decompositions of Humbert-Edge curves, predicted and verified')
    sub = parser.add_subparsers(dest='command', required=True)

    predict = sub.add_parser('predict', parents=[common], help='predicted decomposition of JX_n')
    predict.add_argument('--n', type=int, required=True)

    verify = sub.add_parser('verify', parents=[common], help='verify the decomposition by point counting')
    verify.add_argument('--n', type=int)
    verify.add_argument('--p', type=int, nargs='+', default=[])
    verify.add_argument('--kmax', type=int, default=3)
    verify.add_argument('--trials', type=int, default=1, help='curves per prime (seeds seed..seed+trials-1)')
    verify.add_argument('--curve', help='curve file instead of a seeded random curve')

    count = sub.add_parser('count', parents=[common], help='count points of a quotient X_T')
    count.add_argument('--curve', required=True)
    count.add_argument('--T', dest='subset', type=int, nargs='*', default=[])
    count.add_argument('--p', type=int, nargs='+', default=[])
    count.add_argument('--k', type=int, default=1)
    count.add_argument('--stats', action='store_true', help='print cache statistics')

    quot = sub.add_parser('quotient', parents=[common], help='write the curve file of X_T')
    quot.add_argument('--curve', required=True)
    quot.add_argument('--T', dest='subset', type=int, nargs='*', default=[])

    identities = sub.add_parser('identities', parents=[common], help='exact identity suite')
    identities.add_argument('--max-n', dest='max_n', type=int, required=True)

    return parser


def configure_logging(config: RunConfig) -> None:
    level = logging.INFO if config.verbose else logging.WARNING
    logging.basicConfig(filename=config.log_path, encoding='utf-8', level=level)


def main(argv: list[str] | None = None) -> int:
    """Defines the main function to execute when ``humbertkit`` or ``python -m humbertkit.cli`` is called."""
    args = build_parser().parse_args(argv)
    config = RunConfig.from_dict(vars(args))
    configure_logging(config)
    return dispatch(config)


if __name__ == '__main__':
    sys.exit(main())
