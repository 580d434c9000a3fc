"""This module makes the verification engine executable.

It runs a verification described by a JSON run file via the command ``python -m humbertkit.verifier <run.json>``. The run file holds the keys of :class:`~humbertkit.cli.config.RunConfig` (``n``, ``p``, ``kmax``, ``seed``, ``trials``, ``method``, ``curve``, ...); the command is always ``verify``.
"""

import logging
import sys

from humbertkit.cli.commands import dispatch, EXIT_INVALID
from humbertkit.cli.config import RunConfig, load_config


def main() -> None:
    """Defines the main function to execute when python -m humbertkit.verifier
    is called
    """
    if len(sys.argv) != 2:
        print('Usage: python -m humbertkit.verifier <run.json>')
        sys.exit(EXIT_INVALID)

    sys.exit(run(sys.argv[1]))


def run(cfg_path: str) -> int:
    """Loads a json run file and runs the corresponding verification.

    Parameters
    ----------
    cfg_path : str
        The path to the run file

    Returns
    -------
    int
        The exit code (0 pass, 1 fail, 2 invalid input or budget)
    """
    try:
        cfg = load_config(cfg_path)
    except RuntimeError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_INVALID

    config = RunConfig.from_dict(cfg | {'command': 'verify'})
    try:
        config.validate()
    except ValueError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_INVALID
    logging.basicConfig(filename=config.log_path, encoding='utf-8',
                        level=logging.INFO if config.verbose else logging.WARNING)
    return dispatch(config)


if __name__ == '__main__':
    main()
