"""Exact arithmetic: rationals, dense integer polynomials in ``t``, and
truncated power series in ``x`` with polynomial coefficients.

Nothing here touches floating point. Rationals are :class:`fractions.Fraction`
(always reduced, positive denominator); polynomials are immutable
:class:`IntPoly` values with Python ``int`` coefficients.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidInput, NotDivisible

BigRat = Fraction

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_fraction(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimal notation is rejected outright."""
    m = _FRACTION_RE.match(text)
    if m is None:
        raise InvalidInput(f"not an exact fraction: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InvalidInput(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_fraction(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def binom(m: int, k: int) -> int:
    """Binomial coefficient with ``C(m, k) = 0`` whenever ``k < 0`` or ``k > m``.

    Negative ``m`` therefore always gives 0; the only caller that can pass one
    (the symmetric-product cover correction at genus 0) multiplies it by
    ``2**0 - 1 = 0`` anyway.
    """
    if k < 0 or k > m:
        return 0
    k = min(k, m - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (m - k + i) // i
    return out


class IntPoly:
    """Dense univariate polynomial in ``t`` over the integers.

    ``coeffs[i]`` is the coefficient of ``t**i``. Trailing zeros are stripped
    on construction, so the zero polynomial has ``coeffs == ()`` and
    ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def __reduce__(self):
        return (IntPoly, (self.coeffs,))

    # constructors
    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        return cls([0] * k + [c])

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> IntPoly:
        if not terms:
            return cls()
        cs = [0] * (max(terms) + 1)
        for k, c in terms.items():
            if k < 0:
                raise ValueError(f"negative exponent {k}")
            cs[k] += c
        return cls(cs)

    # basic accessors
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    # ring operations
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``t**k`` (``k >= 0``)."""
        if k < 0:
            raise ValueError(f"negative shift {k}")
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def divmod(self, den: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division over Q, returning integer quotient and remainder.

        Raises :class:`NotDivisible` if an intermediate quotient coefficient
        is not an integer (the leading coefficient of ``den`` must divide it).
        """
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = den.degree
        lead = den.coeffs[-1]
        if len(rem) - 1 < dd:
            return IntPoly(), self
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise NotDivisible(f"{self} / {den}: non-integral quotient coefficient")
            quot[k - dd] = q
            for i, dc in enumerate(den.coeffs):
                rem[k - dd + i] -= q * dc
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, den: IntPoly) -> IntPoly:
        q, r = self.divmod(den)
        if not r.is_zero():
            raise NotDivisible(f"({self}) / ({den}) leaves remainder {r}")
        return q

    __floordiv__ = exact_div

    def is_palindromic(self, top: int | None = None) -> bool:
        top = self.degree if top is None else top
        return all(self[k] == self[top - k] for k in range(top + 1))

    # serialization
    def to_json_obj(self) -> dict:
        return {"var": "t", "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> IntPoly:
        if obj.get("var") != "t":
            raise InvalidInput(f"expected var 't', got {obj.get('var')!r}")
        return cls(int(c) for c in obj["coeffs"])

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> IntPoly:
        return cls.from_json_obj(json.loads(text))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.const(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return IntPoly.const(x.numerator)
    return None


ZERO = IntPoly()
ONE = IntPoly.const(1)
T = IntPoly.monomial(1)


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def poly_pow(p: IntPoly, k: int) -> IntPoly:
    return p ** k


def poly_exact_div(num: IntPoly, den: IntPoly) -> IntPoly:
    return num.exact_div(den)


def one_minus_t2() -> IntPoly:
    return IntPoly((1, 0, -1))


def projective_poincare(m: int) -> IntPoly:
    """``P_t(P^m) = 1 + t^2 + ... + t^{2m}``; the empty space ``P^{-1}`` gives 0."""
    if m < 0:
        return ZERO
    return IntPoly.from_dict({2 * k: 1 for k in range(m + 1)})


class Series2:
    """Power series in ``x`` truncated above ``x**order``, coefficients in Z[t].

    Products truncate, so every coefficient up to ``x**order`` is exact. Pick
    ``order`` to be the highest power you intend to read off.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[IntPoly] = ()):
        if order < 0:
            raise ValueError("negative truncation order")
        cs = list(coeffs)[: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series2 is immutable")

    def __reduce__(self):
        return (Series2, (self.order, self.coeffs))

    @classmethod
    def one(cls, order: int) -> Series2:
        return cls(order, [ONE])

    @classmethod
    def geometric(cls, order: int, c) -> Series2:
        """``1 / (1 - c*x)`` for an integer or polynomial ``c``."""
        c = _coerce(c)
        if c is None:
            raise InvalidInput("geometric ratio must be an integer or IntPoly")
        cs = [ONE]
        for _ in range(order):
            cs.append(cs[-1] * c)
        return cls(order, cs)

    @classmethod
    def binomial(cls, order: int, c, k: int) -> Series2:
        """``(1 + c*x)**k`` for ``k >= 0``."""
        c = _coerce(c)
        if c is None:
            raise InvalidInput("binomial coefficient must be an integer or IntPoly")
        cs = []
        power = ONE
        for j in range(min(order, k) + 1):
            cs.append(binom(k, j) * power)
            power = power * c
        return cls(order, cs)

    def __getitem__(self, j: int) -> IntPoly:
        return self.coeffs[j] if 0 <= j <= self.order else ZERO

    def __mul__(self, other: Series2) -> Series2:
        if not isinstance(other, Series2):
            return NotImplemented
        order = min(self.order, other.order)
        out = [ZERO] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series2(order, out)

    def __eq__(self, other):
        if not isinstance(other, Series2):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Series2", self.order, self.coeffs))

    def __repr__(self):
        return f"Series2(order={self.order}, coeffs={[list(c) for c in self.coeffs]})"


def series_invert_linear(c, order: int) -> Series2:
    """Truncated expansion of ``1 / (1 - c*x)``.

    ``c`` may be an ``int``, an integral :class:`~fractions.Fraction`, or an
    :class:`IntPoly` (e.g. ``t**2`` for the ``1/(1 - x t^2)`` factor).
    """
    return Series2.geometric(order, c)


@lru_cache(maxsize=None)
def macdonald_coeff(h: int, g: int) -> IntPoly:
    """Poincare polynomial of the ``h``-th symmetric product of a genus-``g`` curve.

    It is the ``x**h`` coefficient of ``(1+xt)^{2g} / ((1-x)(1-xt^2))``; the
    series is truncated at order ``h``, which is all the extraction needs.
    """
    if h < 0 or g < 0:
        raise ValueError(f"macdonald_coeff needs h, g >= 0 (got h={h}, g={g})")
    s = (Series2.binomial(h, T, 2 * g)
         * series_invert_linear(1, h)
         * series_invert_linear(T ** 2, h))
    return s[h]


def symmetric_product_poincare(h: int, g: int) -> IntPoly:
    """Like :func:`macdonald_coeff` but with ``P_t(S^h X) = 0`` for ``h < 0``."""
    return ZERO if h < 0 else macdonald_coeff(h, g)
