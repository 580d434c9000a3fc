"""This module provides a registry for PointCounter subclasses.

It holds the built-in counters ``naive``, ``charsum`` and ``auto``. New custom subclasses ``Subclass`` are added to the registry by appending ``add_counter('name', Subclass)`` to the module defining them.
"""

import inspect
import logging

from humbertkit.counting.base import PointCounter
from humbertkit.counting.charsum import CharSumCounter, DEFAULT_CHARSUM_BUDGET
from humbertkit.counting.naive import NaiveCounter, DEFAULT_NAIVE_BUDGET
from humbertkit.curves.curve import CurveMatrix
from humbertkit.fields.extension import ExtField

DEFAULT_AUTO_THRESHOLD = 10**7

_COUNTERS = {}

_logger = logging.getLogger(__name__)


class AutoCounter(PointCounter):
    """This class uses the naive oracle on small inputs and the character sum otherwise.
    """
    name = 'auto'

    def __init__(self, threshold: int = DEFAULT_AUTO_THRESHOLD, naive_budget: int = DEFAULT_NAIVE_BUDGET,
                 charsum_budget: int = DEFAULT_CHARSUM_BUDGET, workers: int = 1) -> None:
        """Initialises an AutoCounter object.

        Parameters
        ----------
        threshold : int, optional
            Largest ``Q**(n+1)`` counted naively, by default 10**7
        naive_budget : int, optional
            Budget of the naive counter, by default 10**9
        charsum_budget : int, optional
            Budget of the character-sum counter, by default 10**9
        workers : int, optional
            Worker processes of the character-sum counter, by default 1
        """
        self.threshold = threshold
        self.workers = workers
        self.naive = NaiveCounter(naive_budget)
        self.charsum = CharSumCounter(charsum_budget, workers)

    def select(self, curve: CurveMatrix, field: ExtField) -> PointCounter:
        return self.naive if field.order ** (curve.n + 1) <= self.threshold else self.charsum

    def fits(self, curve: CurveMatrix, field: ExtField) -> bool:
        return self.select(curve, field).fits(curve, field)

    def method_for(self, curve: CurveMatrix, field: ExtField) -> str:
        return self.select(curve, field).name

    def count(self, curve: CurveMatrix, field: ExtField) -> int:
        return self.select(curve, field).count(curve, field)

    def __repr__(self) -> str:
        return f'AutoCounter(threshold={self.threshold})'


def add_counter(name: str, cls: type[PointCounter]) -> None:
    """This function adds a counter class to the registry.

    Parameters
    ----------
    name : str
        The name under which the class is looked up
    cls : type[PointCounter]
        The class (subclass of :class:`~humbertkit.counting.base.PointCounter`)
    """
    if name in _COUNTERS:
        _logger.warning(f' Counter {name} already exists')
        return

    _COUNTERS[name] = cls


def get_counter(name: str) -> type[PointCounter]:
    """This function retrieves a counter class from the registry. Unknown names are imported as modules first, which registers custom counters.

    Raises
    ------
    KeyError
        if no counter is registered under ``name``
    """
    if name not in _COUNTERS:
        try:
            __import__(name)
        except ModuleNotFoundError:
            raise KeyError(f'Counter {name} not registered')
        if name not in _COUNTERS:
            raise KeyError(f'Counter {name} not registered')

    return _COUNTERS[name]


def show_counter_names() -> list[str]:
    return list(_COUNTERS.keys())


def make_counter(cfg: dict) -> PointCounter:
    """This function instantiates a registered counter.

    Parameters
    ----------
    cfg : dict
        ``cfg['name']`` selects the counter; the remaining keys matching its init parameters are passed on, others are ignored

    Returns
    -------
    PointCounter
        The counter instance
    """
    cls = get_counter(cfg['name'])

    init_keys = {key for key in inspect.signature(cls.__init__).parameters if key != 'self'}
    kwargs = {k: v for k, v in cfg.items() if k != 'name' and k in init_keys}

    return cls(**kwargs)


add_counter('naive', NaiveCounter)
add_counter('charsum', CharSumCounter)
add_counter('auto', AutoCounter)
