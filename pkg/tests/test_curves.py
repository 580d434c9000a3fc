import pytest

from humbertkit.curves.curve import (CurveMatrix, InvalidCurveError, TypeOneQuotient, dump_curve, dumps_curve,
                                     load_curve, quotient, validate_curve)
from humbertkit.curves.group import (GroupElement, SubsetMask, fixed_point_count, group_elements, h_subgroup,
                                     proper_supersets, quotient_genus, subgroup_closure, subsets_up_to)
from humbertkit.curves.invariants import fixed_point_degree, genus_of_type, signature_of_type
from humbertkit.curves.linalg import det_mod, nullspace_mod, rank_mod, rref_mod
from humbertkit.curves.sampling import random_smooth_curve


def test_genus_and_fixed_points():
    assert [genus_of_type(nu) for nu in (2, 3, 4, 5, 7)] == [0, 1, 5, 17, 129]
    assert [fixed_point_degree(nu) for nu in (3, 4, 5)] == [4, 8, 16]
    assert signature_of_type(4).branch_count == 5
    with pytest.raises(ValueError):
        genus_of_type(1)


def test_linalg_mod_p():
    assert det_mod([[1, 1], [1, 1]], 5) == 0
    assert det_mod([[1, 2], [3, 4]], 7) == (4 - 6) % 7
    reduced, pivots = rref_mod([[2, 4, 1], [1, 2, 4]], 5)
    assert pivots == [0, 2]
    assert reduced[0][0] == 1
    assert rank_mod([[1, 1, 1], [2, 2, 2]], 3) == 1
    kernel = nullspace_mod([[1, 1, 1], [0, 1, 2]], 5)
    assert len(kernel) == 1
    v = kernel[0]
    assert (v[0] + v[1] + v[2]) % 5 == 0 and (v[1] + 2 * v[2]) % 5 == 0


def test_validate_reports_first_vanishing_minor():
    with pytest.raises(InvalidCurveError) as err:
        validate_curve(3, 5, [[1, 1, 1, 0], [0, 1, 1, 1]])
    assert err.value.minor == (1, 2)
    assert validate_curve(3, 5, [[1, 1, 1, 0], [0, 1, 2, 3]]).genus == 1


@pytest.mark.parametrize('n,p,rows', [
    (3, 4, [[1, 1, 1, 0], [0, 1, 2, 3]]),
    (3, 5, [[1, 1, 1, 0]]),
    (3, 5, [[1, 1, 1, 5], [0, 1, 2, 3]]),
    (1, 5, []),
])
def test_validate_rejects_malformed_input(n, p, rows):
    with pytest.raises(InvalidCurveError):
        validate_curve(n, p, rows)


def test_conic_is_accepted_iff_coefficients_nonzero():
    assert validate_curve(2, 5, [[1, 1, 1]]).n == 2
    with pytest.raises(InvalidCurveError):
        validate_curve(2, 5, [[1, 0, 1]])


def test_quotient_examples(cubic_f5):
    assert quotient(cubic_f5, SubsetMask.from_indices([3], 4)).rows == ((1, 1, 1),)
    assert quotient(cubic_f5, SubsetMask.from_indices([0], 4)).rows == ((1, 2, 3),)
    assert isinstance(quotient(cubic_f5, SubsetMask.from_indices([0, 1], 4)), TypeOneQuotient)
    with pytest.raises(ValueError):
        quotient(cubic_f5, SubsetMask.from_indices([0, 1, 2], 4))


@pytest.mark.parametrize('seed', range(5))
def test_quotients_of_accepted_curves_are_accepted(seed):
    curve = random_smooth_curve(5, 7, seed)
    for subset in subsets_up_to(6, 3):
        quot = quotient(curve, subset)
        assert isinstance(quot, CurveMatrix)
        assert quot.n == 5 - len(subset)


def test_quotient_commutes_with_row_operations(cubic_f5):
    scaled = cubic_f5.scale_row(1, 3)
    for i in range(4):
        t = SubsetMask.from_indices([i], 4)
        assert quotient(scaled, t) == quotient(cubic_f5, t)


@pytest.mark.parametrize('seed', range(3))
@pytest.mark.parametrize('n', [3, 4, 5])
def test_quotients_compose(n, seed):
    curve = random_smooth_curve(n, 7, seed)
    size = n + 1
    for i in range(size):
        first = quotient(curve, SubsetMask.from_indices([i], size))
        for j in range(size):
            if j == i:
                continue
            image = SubsetMask.from_indices([j], size).without_index(i)
            assert quotient(first, image) == quotient(curve, SubsetMask.from_indices([i, j], size)), (n, seed, i, j)


def test_canonical_form_and_hash(cubic_f5):
    scaled = cubic_f5.scale_row(0, 2)
    assert scaled.rows != cubic_f5.rows
    assert scaled.canonical() == cubic_f5.canonical()
    assert scaled.curve_hash() == cubic_f5.curve_hash()
    assert len(cubic_f5.curve_hash()) == 64


def test_curve_file_round_trip(tmp_path, cubic_f5):
    path = tmp_path / 'x.json'
    dump_curve(cubic_f5, str(path))
    assert load_curve(str(path)).canonical() == cubic_f5.canonical()
    assert path.read_text() == dumps_curve(cubic_f5)
    assert dumps_curve(TypeOneQuotient(5)).endswith('"rows": []\n}\n')


def test_load_curve_errors(tmp_path, singular_file):
    with pytest.raises(InvalidCurveError):
        load_curve(str(tmp_path / 'missing.json'))
    broken = tmp_path / 'broken.json'
    broken.write_text('{"n": 3,')
    with pytest.raises(InvalidCurveError):
        load_curve(str(broken))
    with pytest.raises(InvalidCurveError) as err:
        load_curve(singular_file)
    assert err.value.minor == (1, 2)


@pytest.mark.parametrize('n,p', [(2, 5), (3, 5), (3, 7), (4, 7), (4, 11), (5, 7)])
def test_random_curves_are_accepted_and_deterministic(n, p):
    for seed in range(10):
        curve = random_smooth_curve(n, p, seed)
        assert validate_curve(n, p, curve.rows) == curve
        assert random_smooth_curve(n, p, seed) == curve


def test_subset_mask_operations():
    t = SubsetMask.from_indices([0, 2], 5)
    assert len(t) == 2 and 2 in t and 1 not in t
    assert t.complement().indices() == (1, 3, 4)
    assert t.without_index(1).indices() == (0, 1)
    assert str(t) == '{0,2}'
    with pytest.raises(ValueError):
        SubsetMask.from_indices([5], 5)


def test_subset_enumeration_order():
    subsets = list(subsets_up_to(4, 2))
    assert len(subsets) == 1 + 4 + 6
    assert [s.sort_key() for s in subsets] == sorted(s.sort_key() for s in subsets)
    supers = list(proper_supersets(SubsetMask.from_indices([0], 4), 2))
    assert sorted(s.indices() for s in supers) == [(0, 1), (0, 2), (0, 3)]


def test_group_relation_and_h_subgroup():
    n = 5
    product = GroupElement.identity(n)
    for i in range(n + 1):
        product = product * GroupElement.sigma(i, n)
    assert product.is_identity()

    h5 = h_subgroup(5)
    assert h5.order == 16
    assert len(subgroup_closure(5, h5.generators())) == 16
    assert h5.elements() == subgroup_closure(5, h5.generators())
    assert h5.involution_count() == 0

    h4 = h_subgroup(4)
    assert h4.elements() == frozenset(group_elements(4))


@pytest.mark.parametrize('n', range(2, 65))
def test_h_subgroup_order_by_parity(n):
    h = h_subgroup(n)
    assert h.order == (2 ** (n - 1) if n % 2 else 2 ** n)
    # sigma_i lifts to masks of weight 1 and n
    assert h.involution_count() == (0 if n % 2 else n + 1)
    assert GroupElement.from_mask(0b11, n) in h
    if n <= 10:
        assert len(subgroup_closure(n, h.generators())) == h.order


def test_riemann_hurwitz_on_quotients():
    n = 5
    for i in range(n + 1):
        k = subgroup_closure(n, [GroupElement.sigma(i, n)])
        assert quotient_genus(n, k) == genus_of_type(n - 1)
        assert fixed_point_count(n, GroupElement.sigma(i, n)) == 16
    assert h_subgroup(5).quotient_genus() == 2
    assert fixed_point_count(n, GroupElement.from_mask(0b11, n)) == 0


def test_quotient_genus_of_whole_group_and_subsets():
    n = 6
    assert quotient_genus(n, group_elements(n)) == 0
    t = [GroupElement.sigma(i, n) for i in (0, 2, 5)]
    assert quotient_genus(n, subgroup_closure(n, t)) == genus_of_type(n - 3)
    assert h_subgroup(7).quotient_genus() == 3
