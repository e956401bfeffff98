"""Time-scale calculus engine and inequality verifier."""

from ._chronoscale import (
    ChronoscaleError,
    TimeScale,
    __version__,
    delta_integral_1d,
    delta_integral_2d,
    eval_expr,
    mixed_delta,
    parse_expr,
    run_campaign,
    verify,
)

__all__ = [
    "ChronoscaleError",
    "TimeScale",
    "__version__",
    "delta_integral_1d",
    "delta_integral_2d",
    "eval_expr",
    "mixed_delta",
    "parse_expr",
    "run_campaign",
    "verify",
]
