"""Distance estimators for half-plane, convexity and connectedness of binary images.

Images are square numpy arrays indexed ``[row, column]``; nonzero pixels are black.
"""

from ._tit import (
    IoError,
    ParameterError,
    ParseError,
    ResourceError,
    add_noise,
    estimate,
    gen_connected,
    gen_convex,
    gen_halfplane,
    is_border_connected,
    is_connected,
    is_convex,
    is_halfplane,
    learn_convex,
    learn_halfplane,
    oracle,
    read_pbm,
    write_pbm,
)

__all__ = [
    "IoError",
    "ParameterError",
    "ParseError",
    "ResourceError",
    "add_noise",
    "estimate",
    "gen_connected",
    "gen_convex",
    "gen_halfplane",
    "is_border_connected",
    "is_connected",
    "is_convex",
    "is_halfplane",
    "learn_convex",
    "learn_halfplane",
    "oracle",
    "read_pbm",
    "write_pbm",
]
