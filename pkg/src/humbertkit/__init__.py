from humbertkit.fields.prime import PrimeField
from humbertkit.fields.extension import ExtField, make_extension

from humbertkit.curves.curve import CurveMatrix, validate_curve, quotient, load_curve, dump_curve
from humbertkit.curves.group import SubsetMask, GroupElement, h_subgroup
from humbertkit.curves.sampling import random_smooth_curve

from humbertkit.decomp.report import DecompositionReport, decompose
from humbertkit.decomp.identities import identity_suite

from humbertkit.counting.trace import trace, fixed_locus_count
from humbertkit.counting.factory import make_counter

from humbertkit.verifier.engine import VerificationReport, full_verify, run_trials

__all__ = ['PrimeField', 'ExtField', 'make_extension', 'CurveMatrix', 'validate_curve', 'quotient', 'load_curve',
           'dump_curve', 'SubsetMask', 'GroupElement', 'h_subgroup', 'random_smooth_curve', 'DecompositionReport',
           'decompose', 'identity_suite', 'trace', 'fixed_locus_count', 'make_counter', 'VerificationReport',
           'full_verify', 'run_trials']
