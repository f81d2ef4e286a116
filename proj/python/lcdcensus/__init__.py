"""Exact counts of complementary-dual cyclic additive codes."""

from ._core import (
    Error,
    ValidationError,
    WorkBoundExceeded,
    census,
    enumerate_lcd_count,
    gauss_binom,
    total_count,
)

__all__ = [
    "Error",
    "ValidationError",
    "WorkBoundExceeded",
    "census",
    "enumerate_lcd_count",
    "gauss_binom",
    "total_count",
]
