"""Dimension condition under which a general complete intersection has ample cotangent bundle."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError

__all__ = ["HypothesisReport", "check", "surface_criterion"]


@dataclass(frozen=True)
class HypothesisReport:
    m: int
    d_min: int
    dim_y: int
    bound: Fraction
    satisfied: bool


def check(dims, dim_y: int) -> HypothesisReport:
    """Test dim Y <= (d(m+1)+1) / (2(d+1)) for m factors of dimension at least d.

    Only the numeric inequality is evaluated; bigness of the factors'
    cotangent bundles and genericity of Y are assumed.
    """
    dims = list(dims)
    if not dims:
        raise ValidationError("dims must be non-empty")
    if any(x < 1 for x in dims):
        raise ValidationError(f"factor dimensions must be >= 1, got {dims}")
    if dim_y < 1:
        raise ValidationError(f"dim_y must be >= 1, got {dim_y}")
    m = len(dims)
    d = min(dims)
    bound = Fraction(d * (m + 1) + 1, 2 * (d + 1))
    return HypothesisReport(m=m, d_min=d, dim_y=dim_y, bound=bound, satisfied=dim_y <= bound)


def surface_criterion(m: int, d: int) -> bool:
    """Surface case of :func:`check`, rewritten as m >= 3 + 3/d."""
    return m >= 3 + Fraction(3, d)
