"""This module provides the seeded generators used throughout the package.

Every random choice (irreducible polynomial search, curve sampling, spot checks of the trace table) is drawn from a numpy ``Generator`` built from a ``SeedSequence`` whose entropy is the single user seed followed by a *stream* tuple naming the purpose of the draw. Identical (seed, stream) pairs give identical draws on every platform.
"""

import numpy as np

# stream tags; the remaining stream entries are call-specific integers
IRREDUCIBLE_STREAM = 1
CURVE_STREAM = 2
SPOT_CHECK_STREAM = 3


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Creates a deterministic generator for a given seed and stream.

    Parameters
    ----------
    seed : int
        The user seed (any non-negative integer, typically 64-bit)
    *stream : int
        Non-negative integers distinguishing independent uses of the same seed

    Returns
    -------
    np.random.Generator
        A PCG64 generator seeded by ``SeedSequence([seed, *stream])``
    """
    if seed < 0 or any(s < 0 for s in stream):
        raise ValueError('Seeds and stream tags must be non-negative')
    return np.random.default_rng(np.random.SeedSequence([seed, *stream]))

