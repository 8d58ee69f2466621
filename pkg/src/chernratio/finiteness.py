"""
Enumeration of the finitely many multidegrees with c_1^2(S) >= 2 c_2(S).

For c_2(S) > 0 the inequality is equivalent to

    sum d_i^2 <= (c1sq_h - 2 c2_h) / b

so only vectors inside a ball need to be inspected. Each candidate's ratio is
recomputed through :func:`chern_numbers` as a guard against a bad reduction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .chern import DegreeVector, chern_numbers
from .errors import ConsistencyError, ValidationError
from .geometry import AmbientInvariants

__all__ = ["EnumerationReport", "slope_bound", "floor_sqrt", "enumerate_ge2", "sorted_vectors_within"]


@dataclass(frozen=True)
class EnumerationReport:
    """Vectors are sorted ascending within and lexicographically across.

    ``boundary[i]`` is True when sum d_i^2 equals the bound, in which case the
    ratio is exactly 2.
    """

    bound: Fraction
    vectors: tuple[DegreeVector, ...] = ()
    ratios: tuple[Fraction, ...] = ()
    boundary: tuple[bool, ...] = ()


def slope_bound(amb: AmbientInvariants) -> Fraction:
    """(c_1^2(X) - 2 c_2(X)) . H^(N-2) / H^N."""
    return Fraction(amb.c1sq_h - 2 * amb.c2_h, amb.b)


def floor_sqrt(x: Fraction) -> int:
    """Largest integer k >= 0 with k^2 <= x, computed without floating point."""
    if x < 0:
        raise ValueError("floor_sqrt of a negative number")
    return isqrt(x.numerator // x.denominator)


def sorted_vectors_within(length: int, max_sum_sq: int):
    """Yield non-decreasing positive integer tuples of ``length`` with sum of squares <= max_sum_sq."""

    def rec(prefix: tuple[int, ...], start: int, budget: int, remaining: int):
        if remaining == 0:
            yield prefix
            return
        # every later entry is >= x, so x^2 * remaining must fit
        x = start
        while x * x * remaining <= budget:
            yield from rec(prefix + (x,), x, budget - x * x, remaining - 1)
            x += 1

    yield from rec((), 1, max_sum_sq, length)


def enumerate_ge2(amb: AmbientInvariants) -> EnumerationReport:
    """All multidegrees (up to permutation) whose surface has Chern ratio >= 2.

    Raises
    ------
    ConsistencyError
        If a candidate inside the bound has ratio < 2, or a vector on the
        first layer outside the bound reaches ratio >= 2. Either means the
        reduction to the sum-of-squares bound does not hold for ``amb``
        (for instance c_2(S) <= 0).
    """
    if amb.n < 3:
        raise ValidationError(f"surfaces need an ambient of dimension >= 3, got {amb.n}")
    bound = slope_bound(amb)
    length = amb.n - 2
    if bound <= 0:
        return EnumerationReport(bound=bound)

    top = bound.numerator // bound.denominator
    vectors, ratios, boundary = [], [], []
    for entries in sorted_vectors_within(length, top):
        d = DegreeVector(entries)
        inv = chern_numbers(amb, d)
        if inv.c2 <= 0 or inv.ratio < 2:
            raise ConsistencyError(f"{entries} satisfies the bound but has ratio {inv.ratio}")
        on_edge = d.sum_sq == bound
        if on_edge != (inv.c1sq == 2 * inv.c2):
            raise ConsistencyError(f"{entries}: boundary case disagrees with c1^2 = 2 c2")
        vectors.append(d)
        ratios.append(inv.ratio)
        boundary.append(on_edge)

    _check_outer_layer(amb, length, top + 1)
    return EnumerationReport(bound, tuple(vectors), tuple(ratios), tuple(boundary))


def _check_outer_layer(amb: AmbientInvariants, length: int, layer: int) -> None:
    for entries in sorted_vectors_within(length, layer):
        d = DegreeVector(entries)
        if d.sum_sq != layer:
            continue
        inv = chern_numbers(amb, d)
        if inv.c2 > 0 and inv.ratio >= 2:
            raise ConsistencyError(f"{entries} lies outside the bound but has ratio {inv.ratio}")
