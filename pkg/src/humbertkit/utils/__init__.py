from humbertkit.utils.rng import make_rng, IRREDUCIBLE_STREAM, CURVE_STREAM, SPOT_CHECK_STREAM

__all__ = ['make_rng', 'IRREDUCIBLE_STREAM', 'CURVE_STREAM', 'SPOT_CHECK_STREAM']
