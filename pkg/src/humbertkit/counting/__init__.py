from humbertkit.counting.base import PointCounter, CountRecord, BudgetExceededError, CountingError
from humbertkit.counting.cache import CountCache
from humbertkit.counting.charsum import CharSumCounter, GaussAccumulator
from humbertkit.counting.factory import AutoCounter, add_counter, get_counter, make_counter, show_counter_names
from humbertkit.counting.naive import NaiveCounter, iter_points, count_system_naive
from humbertkit.counting.singular import find_singular_points, is_degenerate
from humbertkit.counting.tables import FieldTables, field_tables, field_for
from humbertkit.counting.trace import trace, fixed_locus_count, resolve_counter

__all__ = ['PointCounter', 'CountRecord', 'BudgetExceededError', 'CountingError', 'CountCache', 'CharSumCounter',
           'GaussAccumulator', 'AutoCounter', 'add_counter', 'get_counter', 'make_counter', 'show_counter_names',
           'NaiveCounter', 'iter_points', 'count_system_naive', 'find_singular_points', 'is_degenerate',
           'FieldTables', 'field_tables', 'field_for', 'trace', 'fixed_locus_count', 'resolve_counter']
