from humbertkit.counting.base import PointCounter, BudgetExceededError, CountingError
from humbertkit.counting.factory import add_counter
from humbertkit.counting.tables import field_tables
from humbertkit.curves.linalg import nullspace_mod
import numpy as np

class KernelSumCounter(PointCounter):
    name = 'my_counters.kernel_sum'

    def __init__(self, budget: int = 10**8, chunk: int = 1 << 16):
        self.budget = budget
        self.chunk = chunk

    def fits(self, curve, field):
        return field.order ** 2 <= self.budget

    # x is a point iff y = x^2 lies in the 2-dimensional kernel of A; each y has prod(1 + chi(y_i)) square roots
    def count(self, curve, field):
        tables = field_tables(field)
        q = tables.order
        if q ** 2 > self.budget:
            raise BudgetExceededError(f'Kernel sum needs {q}^2 terms, over the budget {self.budget}')
        u, v = nullspace_mod(curve.rows, curve.p)

        affine = 0
        for start in range(0, q * q, self.chunk):
            flat = np.arange(start, min(start + self.chunk, q * q), dtype=np.int64)
            st = np.stack([flat // q, flat % q], axis=1)
            prods = np.ones(flat.size, dtype=np.int64)
            for ui, vi in zip(u, v):
                prods *= 1 + tables.chi[tables.combine([ui, vi], st)]
            affine += int(prods.sum())

        n_points, r = divmod(affine - 1, q - 1)
        if r:
            raise CountingError(f'{affine - 1} affine points do not form projective classes')
        return n_points

add_counter('my_counters.kernel_sum', KernelSumCounter)
