from humbertkit.fields.prime import PrimeField, is_prime
from humbertkit.fields.extension import (ExtField, Elem, FieldArithmeticError, make_extension,
                                         quadratic_character, enumerate_field)

__all__ = ['PrimeField', 'is_prime', 'ExtField', 'Elem', 'FieldArithmeticError', 'make_extension',
           'quadratic_character', 'enumerate_field']
