from humbertkit.cli.config import RunConfig, load_config
from humbertkit.cli.commands import (dispatch, run_predict, run_verify, run_count, run_quotient, run_identities,
                                     EXIT_PASS, EXIT_FAIL, EXIT_INVALID)

__all__ = ['RunConfig', 'load_config', 'dispatch', 'run_predict', 'run_verify', 'run_count', 'run_quotient',
           'run_identities', 'EXIT_PASS', 'EXIT_FAIL', 'EXIT_INVALID']
