"""Critical submanifolds of the circle-action Morse function on the
fixed-determinant parabolic Higgs moduli space.

Besides the minimum (the stable parabolic bundles, when there are any),
each critical set is labelled by a line subbundle ``(d, e)`` with
positive parabolic degree whose twisted Higgs component has a nonnegative
degree divisor. That set is a ``2^{2g}``-fold cover of the symmetric
product ``S^h X``, with Morse index ``lambda``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arrangement import chamber_of
from .errors import ConsistencyError, NonGeneric, OnWall, WrongGenus
from .exactmath import ZERO, IntPoly, binom, macdonald_coeff
from .parabolic import Curve, WeightVector, beta_values


@dataclass(frozen=True)
class Stratum:
    d: int
    e: tuple[int, ...]
    lam: int
    h: int
    critical_value: Fraction

    @property
    def size(self) -> int:
        return sum(self.e)

    @property
    def j(self) -> int:
        """Reindexing ``2d + n + |e| - 1`` (so ``lam == 2(g+j)``)."""
        return 2 * self.d + len(self.e) + self.size - 1

    def to_json_obj(self) -> dict:
        cv = self.critical_value
        return {
            "d": self.d,
            "e": list(self.e),
            "lambda": self.lam,
            "h": self.h,
            "critical_value": f"{cv.numerator}/{cv.denominator}",
        }


def morse_index(curve: Curve, d: int, e) -> int:
    return 2 * (curve.n + 2 * d + curve.g - 1 + sum(e))


def divisor_degree(curve: Curve, d: int, e) -> int:
    return 2 * curve.g - 2 - 2 * d - sum(e)


def require_generic(w: WeightVector):
    try:
        chamber_of(w)
    except OnWall as exc:
        raise NonGeneric(f"weights {w} are not generic: on {exc.wall}") from exc


def enumerate_strata(w: WeightVector) -> list[Stratum]:
    """All ``(d, e)`` with ``-sum(beta) < d <= g - 1 - |e|/2``.

    Sorted by critical value, then ``d``, then ``e``.
    """
    require_generic(w)
    curve = w.curve
    g, n = curve.g, curve.n
    out = []
    for e in itertools.product((0, 1), repeat=n):
        sb = sum(beta_values(w.alpha, e), Fraction(0))
        k = sum(e)
        # generic weights never make -sb an integer, so floor+1 is the strict bound
        d_lo = (-sb).__floor__() + 1
        d_hi = (2 * g - 2 - k) // 2
        for d in range(d_lo, d_hi + 1):
            out.append(Stratum(d, e, morse_index(curve, d, e), divisor_degree(curve, d, e), d + sb))
    out.sort(key=lambda s: (s.critical_value, s.d, s.e))
    return out


def cover_poincare(h: int, g: int) -> IntPoly:
    """Poincare polynomial of the ``2^{2g}``-fold cover of ``S^h X``; zero for ``h < 0``."""
    if h < 0:
        return ZERO
    correction = (2 ** (2 * g) - 1) * binom(2 * g - 2, h)
    return IntPoly.monomial(h, correction) + macdonald_coeff(h, g)


def stratum_poincare(s: Stratum, curve: Curve) -> IntPoly:
    return cover_poincare(s.h, curve.g)


def weighted_stratum_sum(w: WeightVector) -> IntPoly:
    """``sum over strata of t^lambda * P_t(stratum)``."""
    total = ZERO
    for s in enumerate_strata(w):
        total = total + stratum_poincare(s, w.curve).shift(s.lam)
    return total


def minimum_stratum(w: WeightVector) -> Optional[Stratum]:
    """The index-0 stratum in genus 0, present exactly when no stable bundle exists."""
    if w.g != 0:
        raise WrongGenus(f"minimum_stratum is a genus-0 question (got g={w.g})")
    zeros = [s for s in enumerate_strata(w) if s.lam == 0]
    if len(zeros) > 1:
        raise ConsistencyError(f"several index-0 strata for {w}: {zeros}")
    return zeros[0] if zeros else None
