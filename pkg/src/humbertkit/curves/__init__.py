from humbertkit.curves.curve import (CurveMatrix, TypeOneQuotient, InvalidCurveError, validate_curve, quotient,
                                     vanishing_minor, curve_hash, dumps_curve, dump_curve, load_curve)
from humbertkit.curves.group import (SubsetMask, GroupElement, HSubgroup, h_subgroup, group_elements,
                                     subgroup_closure, fixed_point_count, quotient_genus, riemann_hurwitz_genus,
                                     subsets_up_to, proper_supersets)
from humbertkit.curves.invariants import Signature, genus_of_type, signature_of_type, fixed_point_degree
from humbertkit.curves.sampling import random_smooth_curve, CurveSamplingError

__all__ = ['CurveMatrix', 'TypeOneQuotient', 'InvalidCurveError', 'validate_curve', 'quotient', 'vanishing_minor',
           'curve_hash', 'dumps_curve', 'dump_curve', 'load_curve', 'SubsetMask', 'GroupElement', 'HSubgroup',
           'h_subgroup', 'group_elements', 'subgroup_closure', 'fixed_point_count', 'quotient_genus',
           'riemann_hurwitz_genus', 'subsets_up_to', 'proper_supersets', 'Signature', 'genus_of_type',
           'signature_of_type', 'fixed_point_degree', 'random_smooth_curve', 'CurveSamplingError']
