from humbertkit.decomp.report import (FactorRecord, DecompositionReport, decompose, prym_dimension, pt_exponent,
                                     pt_data, polarization_type, kernel_order, kernel_exponent, render_power_of_two)
from humbertkit.decomp.characters import (Character, character_dimension, character_decompose, compare_with_subsets,
                                         characters_agree)
from humbertkit.decomp.identities import IdentityResult, identities_for, identity_suite, suite_frame

__all__ = ['FactorRecord', 'DecompositionReport', 'decompose', 'prym_dimension', 'pt_exponent', 'pt_data',
           'polarization_type', 'kernel_order', 'kernel_exponent', 'render_power_of_two', 'Character',
           'character_dimension', 'character_decompose', 'compare_with_subsets', 'characters_agree',
           'IdentityResult', 'identities_for', 'identity_suite', 'suite_frame']
