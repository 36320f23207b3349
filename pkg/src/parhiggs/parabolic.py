"""Rank-2 parabolic bundle numerics over a genus-``g`` curve with ``n`` marked points.

Conventions: full flags at every marked point, weights ``alpha_i`` and
``1 - alpha_i`` at ``p_i`` with ``0 < alpha_i < 1/2``, parabolic degree of the
rank-2 bundle zero (so its underlying degree is ``-n``). A line subbundle
``L`` is recorded by its degree ``d`` and the vector ``e`` with
``e_i = dim(L_{p_i} ∩ F_2(p_i))``; it inherits the weight
``beta_i = e_i + (-1)**e_i * alpha_i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvalidInput
from .exactmath import parse_fraction

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Curve:
    g: int
    n: int

    def __post_init__(self):
        if self.g < 0:
            raise InvalidInput(f"genus must be >= 0, got {self.g}")
        if self.n < 1:
            raise InvalidInput(f"need at least one marked point, got n={self.n}")

    @property
    def canonical_degree(self) -> int:
        return 2 * self.g - 2

    @property
    def kd_degree(self) -> int:
        """Degree of ``K(D)``."""
        return 2 * self.g - 2 + self.n


@dataclass(frozen=True)
class WeightVector:
    curve: Curve
    alpha: tuple[Fraction, ...]

    def __post_init__(self):
        alpha = tuple(Fraction(a) for a in self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if len(alpha) != self.curve.n:
            raise InvalidInput(f"expected {self.curve.n} weights, got {len(alpha)}")
        for i, a in enumerate(alpha):
            if not 0 < a < HALF:
                raise InvalidInput(f"weight alpha_{i + 1} = {a} not in the open interval (0, 1/2)")

    @classmethod
    def of(cls, g: int, alpha: Sequence) -> WeightVector:
        return cls(Curve(g, len(alpha)), tuple(Fraction(a) for a in alpha))

    @property
    def n(self) -> int:
        return self.curve.n

    @property
    def g(self) -> int:
        return self.curve.g

    def __str__(self):
        return ",".join(_fmt(a) for a in self.alpha)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def normalize_weight_pair(a1: Fraction, a2: Fraction) -> Fraction:
    """Reduce a flag with weights ``0 <= a1 < a2 < 1`` to the form ``(a, 1-a)``.

    Tensoring by a parabolic line bundle (which changes neither stability
    nor the moduli) shifts both weights by ``(a1 + a2 - 1)/2``, leaving
    ``a = (a1 - a2 + 1)/2`` in ``(0, 1/2)``.
    """
    a1, a2 = Fraction(a1), Fraction(a2)
    if not 0 <= a1 < a2 < 1:
        raise InvalidInput(f"need 0 <= a1 < a2 < 1, got ({a1}, {a2})")
    return (a1 - a2 + 1) / 2


def parse_weights(text: str, g: int = 0) -> WeightVector:
    """Parse ``"1/3,1/9,1/27"``.

    An entry may also be a flag weight pair ``"a1:a2"``, which is normalized
    with :func:`normalize_weight_pair`. Decimals are rejected.
    """
    entries = [s for s in text.split(",") if s.strip()]
    if not entries:
        raise InvalidInput("empty weight list")
    alpha = []
    for s in entries:
        if ":" in s:
            lo, hi = s.split(":", 1)
            alpha.append(normalize_weight_pair(parse_fraction(lo), parse_fraction(hi)))
        else:
            alpha.append(parse_fraction(s))
    return WeightVector(Curve(g, len(alpha)), tuple(alpha))


def check_evector(e: Sequence[int], n: int) -> tuple[int, ...]:
    e = tuple(int(x) for x in e)
    if len(e) != n:
        raise InvalidInput(f"e-vector has length {len(e)}, expected {n}")
    if any(x not in (0, 1) for x in e):
        raise InvalidInput(f"e-vector entries must be 0/1, got {e}")
    return e


def parse_evector(text: str, n: int) -> tuple[int, ...]:
    try:
        bits = [int(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise InvalidInput(f"bad e-vector {text!r}") from exc
    return check_evector(bits, n)


def complement(e: Sequence[int]) -> tuple[int, ...]:
    return tuple(1 - x for x in e)


def beta_values(alpha: Sequence[Fraction], e: Sequence[int]) -> tuple[Fraction, ...]:
    return tuple(a if ei == 0 else 1 - a for a, ei in zip(alpha, e))


def beta(w: WeightVector, e: Sequence[int]) -> tuple[Fraction, ...]:
    """Weights inherited by a line subbundle with intersection pattern ``e``."""
    return beta_values(w.alpha, check_evector(e, w.n))


def pardeg_sub(d: int, w: WeightVector, e: Sequence[int]) -> Fraction:
    """Parabolic degree ``d + sum(beta)`` of the line subbundle ``(d, e)``."""
    return d + sum(beta(w, e), Fraction(0))


@dataclass(frozen=True)
class ParLineData:
    """A parabolic line bundle: underlying degree and one weight in [0,1) per point."""
    deg: int
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(Fraction(x) for x in self.weights)
        object.__setattr__(self, "weights", ws)
        for x in ws:
            if not 0 <= x < 1:
                raise InvalidInput(f"parabolic line weight {x} not in [0, 1)")


def sub_and_quotient(d: int, w: WeightVector, e: Sequence[int]) -> tuple[ParLineData, ParLineData]:
    """The subbundle ``L`` with data ``(d, e)`` and the quotient ``M = E/L``."""
    b = beta(w, e)
    line = ParLineData(d, b)
    quot = ParLineData(-w.n - d, tuple(1 - x for x in b))
    return line, quot


def hom_twist_degree(a: ParLineData, b: ParLineData, strong: bool, k_twist: bool,
                     curve: Curve) -> int:
    """Degree of the line bundle whose sections are the (strongly) parabolic maps ``a -> b``.

    A parabolic map must vanish at ``p_i`` when ``a_i > b_i``; a strongly
    parabolic one also when ``a_i == b_i``. With ``k_twist`` the target is
    tensored by ``K(D)``.
    """
    if len(a.weights) != curve.n or len(b.weights) != curve.n:
        raise InvalidInput("weight sequences must have one entry per marked point")
    if strong:
        drops = sum(1 for x, y in zip(a.weights, b.weights) if x >= y)
    else:
        drops = sum(1 for x, y in zip(a.weights, b.weights) if x > y)
    deg = b.deg - a.deg - drops
    if k_twist:
        deg += curve.kd_degree
    return deg


def intersection_counts(a: ParLineData, b: ParLineData) -> tuple[int, int]:
    """``(#{a_i >= b_i}, #{a_i > b_i})`` for a sub ``a`` and quotient ``b``."""
    closed = sum(1 for x, y in zip(a.weights, b.weights) if x >= y)
    open_ = sum(1 for x, y in zip(a.weights, b.weights) if x > y)
    return closed, open_


def hom_chi(a: ParLineData, b: ParLineData, strong: bool, k_twist: bool, curve: Curve) -> int:
    """Riemann-Roch Euler characteristic of the (strongly) parabolic hom bundle."""
    return hom_twist_degree(a, b, strong, k_twist, curve) + 1 - curve.g


@dataclass(frozen=True)
class H0Result:
    value: Optional[int] = None
    degree: Optional[int] = None
    reason: str = ""

    @classmethod
    def known(cls, value: int) -> H0Result:
        return cls(value=value)

    @classmethod
    def indeterminate(cls, degree: int, reason: str) -> H0Result:
        return cls(value=None, degree=degree, reason=reason)

    @property
    def is_known(self) -> bool:
        return self.value is not None

    def __str__(self):
        return str(self.value) if self.is_known else f"indeterminate(deg={self.degree})"


def line_h0(curve: Curve, deg: int, is_trivial_hint: Optional[bool] = None) -> H0Result:
    """``h^0`` of a line bundle of degree ``deg``, when the degree alone decides it.

    Degree 0 on a curve of positive genus is decided by ``is_trivial_hint``
    when given. Degrees in ``[1, 2g-2]`` (and ``[0, 2g-2]`` without a hint)
    depend on the bundle, and come back indeterminate.
    """
    g = curve.g
    if deg < 0:
        return H0Result.known(0)
    if deg > 2 * g - 2:
        return H0Result.known(deg + 1 - g)
    # from here on g >= 1 and 0 <= deg <= 2g-2
    if deg == 0:
        if is_trivial_hint is None:
            return H0Result.indeterminate(0, "degree-0 line bundle: h0 is 1 iff it is trivial")
        return H0Result.known(1 if is_trivial_hint else 0)
    return H0Result.indeterminate(
        deg, f"degree {deg} lies in [0, 2g-2] = [0, {2 * g - 2}]; h0 depends on the bundle")


@dataclass(frozen=True)
class Dimensions:
    """Complex dimensions of the rank-2, full-flag moduli spaces."""
    parabolic: int        # M_alpha
    kd_pairs: int         # P_alpha
    higgs: int            # N_alpha
    higgs_fixed_det: int  # N^0_alpha

    @property
    def higgs_fixed_det_real(self) -> int:
        return 2 * self.higgs_fixed_det


def dims(curve: Curve) -> Dimensions:
    g, n = curve.g, curve.n
    return Dimensions(
        parabolic=4 * (g - 1) + 1 + n,
        kd_pairs=4 * (2 * g - 2 + n) + 1,
        higgs=8 * (g - 1) + 2 + 2 * n,
        higgs_fixed_det=6 * (g - 1) + 2 * n,
    )
