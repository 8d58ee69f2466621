"""
Curve-product ambients and their intersection numbers.

The ambient is X = X_1 x ... x X_N where X_i is a smooth curve of genus
g_i >= 2 embedded by l_i times its canonical class, the product sitting in
projective space through the Segre map. Every surface computation downstream
only needs the four numbers collected in :class:`AmbientInvariants`.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial, prod

from .errors import ValidationError

__all__ = [
    "CurveSpec",
    "CurveProductConfig",
    "AmbientInvariants",
    "alpha",
    "curve_product_invariants",
]


@dataclass(frozen=True)
class CurveSpec:
    """A smooth curve of genus ``genus`` embedded by ``multiple`` times its canonical class.

    Genus-2 curves are always hyperelliptic; for higher genus the flag has to
    be supplied. Hyperelliptic curves need ``multiple >= 2`` for the
    pluricanonical map to be an embedding.
    """

    genus: int
    multiple: int = 1
    hyperelliptic: bool | None = None

    def __post_init__(self):
        if self.hyperelliptic is None:
            object.__setattr__(self, "hyperelliptic", self.genus == 2)
        self.validate()

    def validate(self) -> None:
        if self.genus < 2:
            raise ValidationError(f"genus must be >= 2, got {self.genus}")
        if self.multiple < 1:
            raise ValidationError(f"multiple must be >= 1, got {self.multiple}")
        if self.genus == 2 and not self.hyperelliptic:
            raise ValidationError("a genus-2 curve is always hyperelliptic")
        if self.hyperelliptic and self.multiple < 2:
            raise ValidationError(
                f"hyperelliptic curve (genus {self.genus}) needs multiple >= 2, got {self.multiple}"
            )

    @property
    def canonical_degree(self) -> int:
        return 2 * self.genus - 2


@dataclass(frozen=True)
class CurveProductConfig:
    curves: tuple[CurveSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        if len(self.curves) < 2:
            raise ValidationError(f"need at least 2 curves, got {len(self.curves)}")

    @classmethod
    def from_lists(cls, genera, multiples, hyperelliptic=None) -> "CurveProductConfig":
        """Build a config from parallel lists; ``hyperelliptic`` defaults to genus == 2."""
        genera = list(genera)
        multiples = list(multiples)
        if len(genera) != len(multiples):
            raise ValidationError(
                f"genera and multiples differ in length ({len(genera)} vs {len(multiples)})"
            )
        if hyperelliptic is None:
            hyperelliptic = [None] * len(genera)
        hyperelliptic = list(hyperelliptic)
        if len(hyperelliptic) != len(genera):
            raise ValidationError("hyperelliptic flags must match the number of curves")
        return cls(tuple(CurveSpec(g, l, h) for g, l, h in zip(genera, multiples, hyperelliptic)))

    @property
    def n(self) -> int:
        return len(self.curves)

    @property
    def genera(self) -> tuple[int, ...]:
        return tuple(c.genus for c in self.curves)

    @property
    def multiples(self) -> tuple[int, ...]:
        return tuple(c.multiple for c in self.curves)

    @property
    def ample_hypothesis(self) -> bool:
        """True when a general complete-intersection surface has ample cotangent bundle (N >= 6)."""
        return self.n >= 6


@dataclass(frozen=True)
class AmbientInvariants:
    """Intersection numbers of an N-dimensional ambient X with hyperplane class H.

    Attributes
    ----------
    n : int
        dim X.
    c1sq_h : int
        c_1(X)^2 . H^(N-2)
    c2_h : int
        c_2(X) . H^(N-2)
    a : int
        c_1(X) . H^(N-1)
    b : int
        H^N, the degree of X.
    ample_hypothesis : bool
        Whether surfaces cut from this ambient are known to have ample
        cotangent bundle. Only set for curve products with N >= 6, or when
        the caller vouches for it.
    """

    n: int
    c1sq_h: int
    c2_h: int
    a: int
    b: int
    ample_hypothesis: bool = False

    def __post_init__(self):
        for name in ("n", "c1sq_h", "c2_h", "a", "b"):
            if not isinstance(getattr(self, name), int):
                raise ValidationError(f"{name} must be an integer")
        if self.n < 2:
            raise ValidationError(f"ambient dimension must be >= 2, got {self.n}")
        if self.b <= 0:
            raise ValidationError(f"H^N must be positive, got b={self.b}")


def alpha(curve: CurveSpec) -> int:
    """Degree l(2g-2) of the pluricanonically embedded curve."""
    curve.validate()
    return curve.multiple * curve.canonical_degree


def curve_product_invariants(config: CurveProductConfig) -> AmbientInvariants:
    """Exact intersection numbers of the Segre-embedded product of curves.

    With K = prod(2g_i - 2):

    * b = N! K prod(l_i)
    * a = -(N-1)! K sum_j prod_{k != j} l_k
    * c2_h = (N-2)! K sum_{i<j} prod_{k != i,j} l_k
    * c1sq_h = 2 c2_h, since c_1(X_i)^2 = 0 on each factor.
    """
    for c in config.curves:
        c.validate()
    n = config.n
    ls = config.multiples
    k = prod(c.canonical_degree for c in config.curves)

    b = factorial(n) * k * prod(ls)
    a = -factorial(n - 1) * k * sum(
        prod(ls[m] for m in range(n) if m != j) for j in range(n)
    )
    c2_h = factorial(n - 2) * k * sum(
        prod(ls[m] for m in range(n) if m not in (i, j)) for i, j in combinations(range(n), 2)
    )
    return AmbientInvariants(
        n=n,
        c1sq_h=2 * c2_h,
        c2_h=c2_h,
        a=a,
        b=b,
        ample_hypothesis=config.ample_hypothesis,
    )
