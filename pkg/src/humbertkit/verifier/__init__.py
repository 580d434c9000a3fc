from humbertkit.verifier.table import TraceTable, TraceTableBuilder, SpotCheck, build_trace_table
from humbertkit.verifier.lattice import (Residual, WeilViolation, AuditResult, LatticeShape, solve_new_traces,
                                         check_consistency, weil_violations, lattice_shape, perturb,
                                         uncovered_subsets, audit_uncovered)
from humbertkit.verifier.engine import VerificationReport, TrialsResult, verify_table, full_verify, run_trials

__all__ = ['TraceTable', 'TraceTableBuilder', 'SpotCheck', 'build_trace_table', 'Residual', 'WeilViolation',
           'AuditResult', 'LatticeShape', 'solve_new_traces', 'check_consistency', 'weil_violations',
           'lattice_shape', 'perturb', 'uncovered_subsets', 'audit_uncovered', 'VerificationReport',
           'TrialsResult', 'verify_table', 'full_verify', 'run_trials']
