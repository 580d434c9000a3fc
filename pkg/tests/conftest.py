import json

import pytest

from humbertkit.curves.curve import validate_curve
from humbertkit.curves.sampling import random_smooth_curve


@pytest.fixture
def cubic_f5():
    """The accepted type-3 curve [[1,1,1,0],[0,1,2,3]] over F_5."""
    return validate_curve(3, 5, [[1, 1, 1, 0], [0, 1, 2, 3]])


@pytest.fixture
def cubic_f3():
    """A type-3 curve over F_3; its columns are the four points of P^1(F_3)."""
    return validate_curve(3, 3, [[1, 0, 1, 1], [0, 1, 1, 2]])


@pytest.fixture
def quartic_f7():
    return random_smooth_curve(4, 7, seed=11)


@pytest.fixture
def quintic_f5():
    return random_smooth_curve(5, 5, seed=3)


@pytest.fixture
def curve_file(tmp_path, cubic_f5):
    path = tmp_path / 'curve.json'
    path.write_text(json.dumps(cubic_f5.to_dict()))
    return str(path)


@pytest.fixture
def singular_file(tmp_path):
    path = tmp_path / 'singular.json'
    path.write_text(json.dumps({'n': 3, 'p': 5, 'rows': [[1, 1, 1, 0], [0, 1, 1, 1]]}))
    return str(path)
