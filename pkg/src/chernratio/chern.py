"""
Chern numbers of complete-intersection surfaces.

Two routes are provided and are expected to agree exactly on curve products:

* :func:`chern_numbers` works for any ambient described by
  :class:`~chernratio.geometry.AmbientInvariants`;
* :func:`ratio_closed_form` uses only the multiples l_i of a curve product
  (the genera cancel out of the ratio).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import ValidationError
from .geometry import AmbientInvariants, CurveProductConfig

__all__ = [
    "DegreeVector",
    "SurfaceInvariants",
    "chern_numbers",
    "ratio_closed_form",
    "ratio_at_scale",
    "convergence_constant",
]


@dataclass(frozen=True)
class DegreeVector:
    """Degrees (d_1, ..., d_c) of the hypersurfaces cutting out the surface."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValidationError("degree vector is empty")
        for x in entries:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError(f"degree entries must be integers, got {x!r}")
            if x < 1:
                raise ValidationError(f"degree entries must be >= 1, got {x}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def ones(cls, length: int) -> "DegreeVector":
        return cls((1,) * length)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def sum_sq(self) -> int:
        return sum(x * x for x in self.entries)

    @property
    def pair_sum(self) -> int:
        """sum_{i<=j} d_i d_j, via (|d|^2 + sum d_i^2) / 2."""
        t = self.total
        return (t * t + self.sum_sq) // 2

    @property
    def product(self) -> int:
        return prod(self.entries)

    def scaled(self, factor: int) -> "DegreeVector":
        if factor < 1:
            raise ValidationError(f"scale must be >= 1, got {factor}")
        return DegreeVector(tuple(factor * x for x in self.entries))

    def canonical(self) -> "DegreeVector":
        return DegreeVector(tuple(sorted(self.entries)))


@dataclass(frozen=True)
class SurfaceInvariants:
    c1sq: int
    c2: int
    ratio: Fraction
    ample_hypothesis: bool = False


def _as_degrees(d) -> DegreeVector:
    return d if isinstance(d, DegreeVector) else DegreeVector(tuple(d))


def _check_length(n: int, d: DegreeVector) -> None:
    if n < 3:
        raise ValidationError(f"surfaces need an ambient of dimension >= 3, got {n}")
    if len(d) != n - 2:
        raise ValidationError(
            f"degree vector has length {len(d)}, expected {n - 2} for an ambient of dimension {n}"
        )


def chern_numbers(amb: AmbientInvariants, d) -> SurfaceInvariants:
    """c_1^2 and c_2 of a general complete intersection of multidegree ``d`` in ``amb``.

    c_1^2(S) = (prod d)(c1sq_h - 2a|d| + b|d|^2)
    c_2(S)   = (prod d)(c2_h - a|d| + b sum_{i<=j} d_i d_j)

    Raises ``ValidationError`` when c_2(S) vanishes, since the ratio is then
    undefined and the input cannot describe a surface of general type.
    """
    d = _as_degrees(d)
    _check_length(amb.n, d)
    t = d.total
    p = d.product
    c1sq = p * (amb.c1sq_h - 2 * amb.a * t + amb.b * t * t)
    c2 = p * (amb.c2_h - amb.a * t + amb.b * d.pair_sum)
    if c2 == 0:
        raise ValidationError("c_2(S) = 0: ratio undefined for these ambient invariants")
    return SurfaceInvariants(c1sq, c2, Fraction(c1sq, c2), amb.ample_hypothesis)


def ratio_closed_form(config: CurveProductConfig, d) -> Fraction:
    """Chern ratio of a complete intersection in a curve product, from the l_i alone.

    2 - N(N-1) sum d_i^2 / [sum_{i<j} 1/(l_i l_j) + (N-1)(|d| sum_i 1/l_i + N sum_{i<=j} d_i d_j)]
    """
    d = _as_degrees(d)
    n = config.n
    _check_length(n, d)
    inv = [Fraction(1, l) for l in config.multiples]
    s1 = sum(inv)
    # sum_{i<j} x_i x_j = (s1^2 - sum x_i^2) / 2
    s2 = (s1 * s1 - sum(x * x for x in inv)) / 2
    denom = s2 + (n - 1) * (d.total * s1 + n * d.pair_sum)
    return 2 - Fraction(n * (n - 1) * d.sum_sq) / denom


def ratio_at_scale(amb: AmbientInvariants, e, scale: int) -> Fraction:
    """Chern ratio of the complete intersection of multidegree ``scale * e``.

    Evaluated as a quadratic in ``scale`` with coefficients depending only on
    |e| and sum_{i<=j} e_i e_j.
    """
    e = _as_degrees(e)
    _check_length(amb.n, e)
    if isinstance(scale, bool) or not isinstance(scale, int) or scale < 1:
        raise ValidationError(f"scale must be a positive integer, got {scale!r}")
    t = e.total
    num = amb.c1sq_h - 2 * amb.a * scale * t + amb.b * scale * scale * t * t
    den = amb.c2_h - amb.a * scale * t + amb.b * scale * scale * e.pair_sum
    if den == 0:
        raise ValidationError("zero denominator: ratio undefined at this scale")
    return Fraction(num, den)


def convergence_constant(amb: AmbientInvariants, e) -> Fraction:
    """A constant K with |ratio_at_scale(amb, e, d) - limit| <= K / d for every d >= 1.

    With T = |e|, P = sum_{i<=j} e_i e_j, U = sum e_i^2 the gap equals

        (P c1sq_h - T^2 c2_h - a d T U) / (P (c2_h - a d T + b d^2 P))

    and when a <= 0 <= c2_h the denominator is at least b d^2 P^2, giving
    K = (|P c1sq_h - T^2 c2_h| + |a| T U) / (b P^2). Other sign patterns are
    rejected because the denominator can then approach zero.
    """
    e = _as_degrees(e)
    _check_length(amb.n, e)
    if amb.a > 0 or amb.c2_h < 0:
        raise ValidationError("convergence constant requires a <= 0 and c2_h >= 0")
    t, p, u = e.total, e.pair_sum, e.sum_sq
    return Fraction(abs(p * amb.c1sq_h - t * t * amb.c2_h) + abs(amb.a) * t * u, amb.b * p * p)
