"""
Constructive density of Chern ratios in (1, 2).

The limit of c_1^2/c_2 along the scaled family d = s * e only depends on the
direction e, through f(e) = (sum e_i)^2 / sum e_i^2. For each M >= 4 the map
f restricted to vectors (1, ..., 1, s), s in [1, M^2], sweeps continuously
and strictly monotonically from M down to 1 + epsilon(M); bisecting on s over
exact rationals then gives an integer direction vector hitting any target.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .chern import DegreeVector, ratio_at_scale
from .errors import InfeasibleError, NonterminationError, ValidationError
from .geometry import AmbientInvariants

__all__ = [
    "DirectionVector",
    "ApproximationResult",
    "f",
    "epsilon",
    "asymptotic_ratio",
    "approximate_f_target",
    "approximate_surface_ratio",
    "required_scale",
    "DEFAULT_MAX_STEPS",
]

DEFAULT_MAX_STEPS = 10_000


@dataclass(frozen=True)
class DirectionVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValidationError("direction vector is empty")
        for x in entries:
            if isinstance(x, bool) or not isinstance(x, int) or x < 1:
                raise ValidationError(f"direction entries must be positive integers, got {x!r}")
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def t(self) -> int:
        return sum(self.entries)

    @property
    def u(self) -> int:
        return sum(x * x for x in self.entries)


@dataclass(frozen=True)
class ApproximationResult:
    m: int
    e: DirectionVector
    f_value: Fraction
    asymptotic: Fraction
    error: Fraction


def _direction(e) -> DirectionVector:
    if isinstance(e, DirectionVector):
        return e
    if isinstance(e, DegreeVector):
        return DirectionVector(e.entries)
    return DirectionVector(tuple(e))


def _rational(x, name: str) -> Fraction:
    try:
        return Fraction(x)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} is not a rational number: {x!r}") from exc


def f(e) -> Fraction:
    """(sum e_i)^2 / (sum e_i^2); lies in [1, M], equal to M iff all entries agree."""
    e = _direction(e)
    return Fraction(e.t * e.t, e.u)


def epsilon(m: int) -> Fraction:
    """Gap epsilon(M) with f(1, ..., 1, M^2) = 1 + epsilon(M)."""
    if m < 4:
        raise ValidationError(f"epsilon(M) is defined for M >= 4, got {m}")
    return Fraction(2 * m**3 - m**2 - 3 * m + 2, m**4 + m - 1)


def asymptotic_ratio(e) -> Fraction:
    """Limit of the Chern ratio along multidegrees d * e as d grows: 2T^2 / (T^2 + U)."""
    e = _direction(e)
    t2 = e.t * e.t
    return Fraction(2 * t2, t2 + e.u)


def _g(m: int, s: Fraction) -> Fraction:
    # f(1, ..., 1, s) with M-1 ones; strictly decreasing for s in [1, M^2]
    return (m - 1 + s) ** 2 / (m - 1 + s * s)


def _choose_m(target: Fraction) -> int:
    m = max(4, target.numerator // target.denominator + 1)
    while 1 + epsilon(m) >= target:
        m += 1
    return m


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    p, q = isqrt(x.numerator), isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return None


def _exact_root(m: int, target: Fraction) -> Fraction | None:
    """Rational s in [1, M^2] with g(s) = target, if one exists."""
    # (1 - t) s^2 + 2(M-1) s + (M-1)^2 - t(M-1) = 0
    qa = 1 - target
    qb = Fraction(2 * (m - 1))
    qc = (m - 1) ** 2 - target * (m - 1)
    root = _rational_sqrt(qb * qb - 4 * qa * qc)
    if root is None:
        return None
    for s in ((-qb + root) / (2 * qa), (-qb - root) / (2 * qa)):
        if 1 <= s <= m * m and _g(m, s) == target:
            return s
    return None


def _result(m: int, s: Fraction, target: Fraction) -> ApproximationResult:
    e = DirectionVector((s.denominator,) * (m - 1) + (s.numerator,))
    value = f(e)
    return ApproximationResult(
        m=m,
        e=e,
        f_value=value,
        asymptotic=2 * value / (value + 1),
        error=abs(value - target),
    )


def approximate_f_target(target, tol, max_steps: int = DEFAULT_MAX_STEPS) -> ApproximationResult:
    """Find a positive integer vector e with |f(e) - target| <= tol.

    Integer targets M >= 4 are hit exactly by the all-ones vector of length
    M. Otherwise the smallest M >= 4 with 1 + epsilon(M) < target < M is
    used and s is bisected in [1, M^2]; the returned vector is
    (q, ..., q, p) for s = p/q in lowest terms. With ``tol == 0`` an exact
    rational solution of the quadratic g(s) = target is used when it exists.

    Raises
    ------
    InfeasibleError
        If ``target <= 1``.
    NonterminationError
        If bisection does not reach ``tol`` within ``max_steps`` halvings.
    """
    target = _rational(target, "target")
    tol = _rational(tol, "tol")
    if tol < 0:
        raise ValidationError(f"tol must be >= 0, got {tol}")
    if target <= 1:
        raise InfeasibleError(f"f takes values in (1, +inf); target {target} is not reachable")

    if target.denominator == 1 and target >= 4:
        m = target.numerator
        return _result(m, Fraction(1), target)

    m = _choose_m(target)
    if tol == 0:
        s = _exact_root(m, target)
        if s is not None:
            return _result(m, s, target)

    lo, hi = Fraction(1), Fraction(m * m)
    for _ in range(max_steps):
        mid = (lo + hi) / 2
        value = _g(m, mid)
        if abs(value - target) <= tol:
            return _result(m, mid, target)
        if value > target:
            lo = mid
        else:
            hi = mid
    raise NonterminationError(
        f"bisection for target {target} with tol {tol} did not converge in {max_steps} steps"
    )


def approximate_surface_ratio(target, tol, max_steps: int = DEFAULT_MAX_STEPS) -> ApproximationResult:
    """Direction vector e whose asymptotic Chern ratio is within ``tol`` of ``target``.

    The target r in (1, 2) corresponds to f = r / (2 - r). Since
    f -> 2f/(f+1) has derivative 2/(f+1)^2 <= 1/2 for f >= 1, solving for f
    with tolerance 2 * tol is enough.
    """
    target = _rational(target, "target")
    tol = _rational(tol, "tol")
    if tol < 0:
        raise ValidationError(f"tol must be >= 0, got {tol}")
    if not 1 < target < 2:
        raise InfeasibleError(f"surface ratios are dense in the open interval (1, 2); got {target}")
    res = approximate_f_target(target / (2 - target), 2 * tol, max_steps=max_steps)
    return ApproximationResult(
        m=res.m,
        e=res.e,
        f_value=res.f_value,
        asymptotic=res.asymptotic,
        error=abs(res.asymptotic - target),
    )


def required_scale(amb: AmbientInvariants, e, tol, max_doublings: int = 512) -> int:
    """Smallest power of two d with |ratio_at_scale(amb, e, d) - asymptotic_ratio(e)| <= tol."""
    tol = _rational(tol, "tol")
    if tol <= 0:
        raise ValidationError(f"tol must be > 0, got {tol}")
    e = e if isinstance(e, DegreeVector) else DegreeVector(tuple(e))
    limit = asymptotic_ratio(e)
    d = 1
    for _ in range(max_doublings + 1):
        if abs(ratio_at_scale(amb, e, d) - limit) <= tol:
            return d
        d *= 2
    raise NonterminationError(f"gap did not fall below {tol} up to d = 2^{max_doublings}")
