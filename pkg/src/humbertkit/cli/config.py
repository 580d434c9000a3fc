"""This module provides the RunConfig class and the JSON run-file loader.

A RunConfig holds every setting of one command-line run. It is built from parsed flags or from a JSON run file; keys that are not fields of RunConfig are ignored. :meth:`RunConfig.validate` checks the settings before any computation.
"""

from dataclasses import dataclass, field, asdict
import inspect
import json

from humbertkit.counting.factory import get_counter, show_counter_names
from humbertkit.fields.prime import is_prime

COMMANDS = ('predict', 'verify', 'count', 'quotient', 'identities')
FORMATS = ('table', 'structured')

INT_SETTINGS = ('n', 'kmax', 'k', 'seed', 'trials', 'max_n', 'threads')
INT_LIST_SETTINGS = ('p', 'subset')
STR_SETTINGS = ('command', 'method', 'curve', 'format', 'cache', 'output', 'log_path')
BOOL_SETTINGS = ('deterministic', 'stats', 'verbose')


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass
class RunConfig:
    """Settings of one run.

    Parameters
    ----------
    command : str
        One of ``predict``, ``verify``, ``count``, ``quotient``, ``identities``
    n : int | None
        The type (predict, verify)
    p : list[int]
        The characteristics (verify uses all of them, count the first)
    kmax : int
        The largest extension degree (verify)
    k : int
        The extension degree (count)
    seed : int
        The seed of every random choice
    trials : int
        Curves per prime, seeds ``seed .. seed + trials - 1`` (verify)
    method : str
        The counter: ``naive``, ``charsum`` or ``auto``
    curve : str | None
        Path of a curve file (verify, count, quotient)
    subset : list[int]
        The involution indices of T (count, quotient)
    max_n : int | None
        The largest type of the identity suite
    format : str
        ``table`` or ``structured``
    cache : str | None
        Path of the count cache
    threads : int
        Worker processes for counting
    deterministic : bool
        Suppresses the timestamp in structured output
    stats : bool
        Prints cache statistics (count)
    output : str | None
        Writes the document to this path instead of stdout
    verbose : bool
        Logs at INFO level
    log_path : str | None
        Log file (stderr when None)
    """
    command: str
    n: int | None = None
    p: list[int] = field(default_factory=list)
    kmax: int = 3
    k: int = 1
    seed: int = 0
    trials: int = 1
    method: str = 'auto'
    curve: str | None = None
    subset: list[int] = field(default_factory=list)
    max_n: int | None = None
    format: str = 'table'
    cache: str | None = None
    threads: int = 1
    deterministic: bool = False
    stats: bool = False
    output: str | None = None
    verbose: bool = False
    log_path: str | None = None

    @classmethod
    def from_dict(cls, cfg: dict) -> 'RunConfig':
        """Builds a RunConfig from a dictionary, ignoring unknown keys; a single prime may be given as an integer."""
        keys = set(inspect.signature(cls).parameters)
        kwargs = {k: v for k, v in cfg.items() if k in keys and v is not None}
        if isinstance(kwargs.get('p'), int):
            kwargs['p'] = [kwargs['p']]
        return cls(**kwargs)

    def to_dict(self) -> dict:
        return asdict(self)

    def validate(self) -> None:
        """Checks all settings.

        Raises
        ------
        ValueError
            describing the first invalid setting
        """
        self._check_types()
        if self.command not in COMMANDS:
            raise ValueError(f'Unknown command {self.command!r}; expected one of {", ".join(COMMANDS)}')
        if self.format not in FORMATS:
            raise ValueError(f'Unknown format {self.format!r}; expected table or structured')
        try:
            get_counter(self.method)
        except KeyError:
            raise ValueError(f'Unknown method {self.method!r}; expected one of {", ".join(show_counter_names())} or an importable counter module')
        if self.threads < 1:
            raise ValueError('--threads must be >= 1')
        if self.seed < 0:
            raise ValueError('--seed must be non-negative')
        for p in self.p:
            if p % 2 == 0 or not is_prime(p):
                raise ValueError(f'--p must be odd primes, got {p}')

        if self.command == 'predict':
            self._require_type()
        elif self.command == 'verify':
            if self.curve is None:
                self._require_type()
                if not self.p:
                    raise ValueError('verify needs --p or --curve')
            if self.kmax < 1:
                raise ValueError('--kmax must be >= 1')
            if self.trials < 1:
                raise ValueError('--trials must be >= 1')
        elif self.command in ('count', 'quotient'):
            if self.curve is None:
                raise ValueError(f'{self.command} needs --curve')
            if self.k < 1:
                raise ValueError('--k must be >= 1')
            if len(set(self.subset)) != len(self.subset) or any(i < 0 for i in self.subset):
                raise ValueError(f'--T must list distinct non-negative indices, got {self.subset}')
        elif self.command == 'identities':
            if self.max_n is None or self.max_n < 3:
                raise ValueError('--max-n must be >= 3')

    def _check_types(self) -> None:
        # run files are not type-checked by argparse; None stands for an unset optional setting
        for name in INT_SETTINGS:
            value = getattr(self, name)
            if value is not None and not _is_int(value):
                raise ValueError(f'Setting {name} must be an integer, got {value!r}')
        for name in INT_LIST_SETTINGS:
            value = getattr(self, name)
            if not isinstance(value, list) or not all(_is_int(v) for v in value):
                raise ValueError(f'Setting {name} must be a list of integers, got {value!r}')
        for name in STR_SETTINGS:
            value = getattr(self, name)
            if value is not None and not isinstance(value, str):
                raise ValueError(f'Setting {name} must be a string, got {value!r}')
        for name in BOOL_SETTINGS:
            if not isinstance(getattr(self, name), bool):
                raise ValueError(f'Setting {name} must be true or false, got {getattr(self, name)!r}')

    def _require_type(self) -> None:
        if self.n is None or self.n < 3:
            raise ValueError(f'--n must be >= 3, got {self.n}')


def load_config(path: str) -> dict:
    """Loads a dictionary of run settings from a json file

    Parameters
    ----------
    path : str
        The path to the json run file

    Returns
    -------
    dict
        The dictionary containing the settings

    Raises
    ------
    RuntimeError
        Run file not found, not valid JSON or not a JSON object
    """
    try:
        with open(path, 'r') as f:
            cfg = json.load(f)
    except FileNotFoundError:
        raise RuntimeError(f'Run file not found: {path}')
    except json.JSONDecodeError as e:
        raise RuntimeError(f'Run file {path} is not valid JSON: {e}')
    if not isinstance(cfg, dict):
        raise RuntimeError(f'Run file {path} must hold a JSON object, got {type(cfg).__name__}')

    return cfg
