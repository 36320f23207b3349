"""Existence of stabilizing fields for a non-stable rank-2 parabolic bundle.

A non-stable ``E`` sits in ``0 -> L -> E -> M -> 0`` with ``L`` of maximal
parabolic degree (>= 0). Whether some parabolic ``K(D)``-field, or some
strongly parabolic Higgs field, makes ``(E, Phi)`` stable is decided from

* ``h^1(M^v (x) L^)``: by Serre duality the sections of the degree
  ``hom_twist_degree(L, M, strong=False, k_twist=True)`` line bundle;
* ``h^1(M^v (x) L)``: likewise with ``strong=True``;
* whether the extension splits, and (in low genus) a short list of
  split semistable exceptions.

The inputs are the numerical shadow of the sequence (:class:`SplitData`),
not an actual bundle. Where that shadow does not determine a section count
the answer is :attr:`Decision.INDETERMINATE` (genus >= 2) or an
:class:`~parhiggs.errors.InsufficientData` error (genus <= 1).

:func:`p1_three_classify` works out the three-point projective-line case
completely.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InsufficientData, InvalidInput, WrongGenus
from .parabolic import (
    Curve, H0Result, ParLineData, WeightVector, check_evector, complement, hom_twist_degree,
    line_h0, sub_and_quotient,
)


@dataclass(frozen=True)
class Decision:
    tag: str  # "yes" | "no" | "indeterminate"
    reason: str = ""
    missing: Optional[str] = None

    def __post_init__(self):
        if self.tag not in ("yes", "no", "indeterminate"):
            raise ValueError(f"bad decision tag {self.tag!r}")

    @classmethod
    def yes(cls, reason=""):
        return cls("yes", reason)

    @classmethod
    def no(cls, reason=""):
        return cls("no", reason)

    @classmethod
    def indeterminate(cls, missing, reason=""):
        return cls("indeterminate", reason, missing)

    @property
    def is_yes(self):
        return self.tag == "yes"

    @property
    def is_no(self):
        return self.tag == "no"

    def to_json_obj(self) -> dict:
        out = {"decision": self.tag, "reason": self.reason}
        if self.missing is not None:
            out["missing"] = self.missing
        return out


@dataclass(frozen=True)
class SplitData:
    """Numerical data of the destabilizing (or Jordan-Holder) sequence.

    ``L_eq_M`` says whether ``L`` and ``M`` are isomorphic parabolic line
    bundles; when omitted it is inferred where the numbers force it (different
    degrees or weights). ``hom_trivial`` says whether the twisted hom line
    bundle is trivial, and is only consulted when its degree is 0 in genus >= 1.
    """
    weights: WeightVector
    degL: int
    e: tuple[int, ...]
    xi_zero: bool
    L_eq_M: Optional[bool] = None
    hom_trivial: Optional[bool] = None
    line: ParLineData = field(init=False, repr=False, compare=False)
    quotient: ParLineData = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        e = check_evector(self.e, self.weights.n)
        object.__setattr__(self, "e", e)
        line, quot = sub_and_quotient(self.degL, self.weights, e)
        object.__setattr__(self, "line", line)
        object.__setattr__(self, "quotient", quot)
        if self.pardeg < 0:
            raise InvalidInput(
                f"L has parabolic degree {self.pardeg} < 0, so E is not destabilized by it")

    @property
    def curve(self) -> Curve:
        return self.weights.curve

    @property
    def degM(self) -> int:
        return self.quotient.deg

    @property
    def pardeg(self) -> Fraction:
        return self.line.deg + sum(self.line.weights, Fraction(0))

    @property
    def semistable(self) -> bool:
        return self.pardeg == 0

    @property
    def split(self) -> bool:
        return self.xi_zero

    @property
    def e_closed(self) -> int:
        """``#{i : beta_i >= gamma_i}``, the count in the parabolic-hom Euler characteristic."""
        return sum(1 for b, c in zip(self.line.weights, self.quotient.weights) if b >= c)

    @property
    def e_open(self) -> int:
        """``#{i : beta_i > gamma_i}``, the count in the strong-hom Euler characteristic."""
        return sum(1 for b, c in zip(self.line.weights, self.quotient.weights) if b > c)

    def l_equals_m(self) -> Optional[bool]:
        if self.L_eq_M is not None:
            return self.L_eq_M
        if self.degL != self.degM or self.line.weights != self.quotient.weights:
            return False
        return None

    def pair_hom_degree(self) -> int:
        """Degree whose ``h^0`` is ``h^1(M^v (x) L^)``."""
        return hom_twist_degree(self.line, self.quotient, strong=False, k_twist=True, curve=self.curve)

    def higgs_hom_degree(self) -> int:
        """Degree whose ``h^0`` is ``h^1(M^v (x) L)``."""
        return hom_twist_degree(self.line, self.quotient, strong=True, k_twist=True, curve=self.curve)

    def h1_pair(self) -> H0Result:
        return line_h0(self.curve, self.pair_hom_degree(), self.hom_trivial)

    def h1_higgs(self) -> H0Result:
        return line_h0(self.curve, self.higgs_hom_degree(), self.hom_trivial)


def _need_l_eq_m(data: SplitData, family: str) -> bool:
    leq = data.l_equals_m()
    if leq is None:
        raise InsufficientData(f"case ({family}) depends on whether L = M; pass L_eq_M")
    return leq


def _unknown(data: SplitData, h: H0Result, what: str) -> Decision:
    if data.curve.g <= 1:
        raise InsufficientData(f"{what}: {h.reason}; pass hom_trivial")
    return Decision.indeterminate(
        f"{what} = h0 of a degree-{h.degree} line bundle on a genus-{data.curve.g} curve",
        h.reason)


def exists_stable_pair(data: SplitData) -> Decision:
    """Is there a parabolic ``K(D)``-field ``Phi`` with ``(E, Phi)`` stable?"""
    g, n = data.curve.g, data.curve.n
    if g <= 1 and data.split and data.semistable:
        if (g, n) in ((0, 2), (1, 1)) and _need_l_eq_m(data, "i-a"):
            return Decision.no("exception (i-a): split with L = M, every field is a constant matrix")
        lhs = data.degL - data.degM + data.e_closed
        if g == 0 and lhs == 1:
            return Decision.no("exception (i-b): M is invariant under every field")
    h = data.h1_pair()
    if not h.is_known:
        return _unknown(data, h, "h1(M^v (x) L^)")
    if h.value >= 1:
        return Decision.yes(f"h1(M^v (x) L^) = {h.value} >= 1")
    return Decision.no("h1(M^v (x) L^) = 0: L is invariant under every field")


def exists_stable_higgs(data: SplitData) -> Decision:
    """Is there a strongly parabolic Higgs field ``Phi`` with ``(E, Phi)`` stable?"""
    g = data.curve.g
    if g <= 1 and data.split and data.semistable:
        lhs = data.degL - data.degM + data.e_open
        if g == 0 and 0 <= lhs <= 1:
            return Decision.no("exception (ii-a): M is invariant under every Higgs field")
        if g == 1 and _need_l_eq_m(data, "ii-b"):
            return Decision.no("exception (ii-b): split with L = M, every Higgs field is constant")
    h = data.h1_higgs()
    if not h.is_known:
        return _unknown(data, h, "h1(M^v (x) L)")
    if h.value > 1:
        return Decision.yes(f"h1(M^v (x) L) = {h.value} > 1")
    if h.value == 1 and data.xi_zero:
        return Decision.yes("h1(M^v (x) L) = 1 and the extension splits")
    if h.value == 1:
        return Decision.no("h1(M^v (x) L) = 1 is used up by the extension class")
    return Decision.no("h1(M^v (x) L) = 0: L is invariant under every Higgs field")


def exists_semistable_pair(data: SplitData) -> Decision:
    if data.semistable:
        return Decision.yes("E is semistable, so (E, Phi) is for every Phi")
    return exists_stable_pair(data)


def exists_semistable_higgs(data: SplitData) -> Decision:
    if data.semistable:
        return Decision.yes("E is semistable, so (E, Phi) is for every Phi")
    return exists_stable_higgs(data)


# three points on the projective line

P1_INDEX = ((0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0))


def _e_name(e: Sequence[int]) -> str:
    return "".join(map(str, e))


@dataclass(frozen=True)
class P1Classification:
    weights: WeightVector
    label: str                       # "C0", "C_e" or "H_e"
    e: Optional[tuple[int, ...]]     # the e in I for C_e / H_e
    stable_bundles: tuple[str, ...]  # bundles among {G, F^e} that are stable
    pair_bundles: tuple[str, ...]    # ... that carry a stable K(D) pair
    higgs_bundles: tuple[str, ...]   # ... that carry a stable Higgs field
    parabolic: str
    higgs: str
    pairs: str

    @property
    def name(self) -> str:
        return self.label if self.e is None else f"{self.label[0]}_{_e_name(self.e)}"

    def to_json_obj(self) -> dict:
        return {
            "weights": str(self.weights),
            "label": self.name,
            "stable_bundles": list(self.stable_bundles),
            "pair_bundles": list(self.pair_bundles),
            "higgs_bundles": list(self.higgs_bundles),
            "M": self.parabolic,
            "N": self.higgs,
            "P": self.pairs,
        }


def _hyperplane_offset(w: WeightVector, e) -> Fraction:
    """Parabolic degree of ``L^e = O(-1-|e|/2)`` with the inherited weights."""
    total = sum((1 - a if ei else a for a, ei in zip(w.alpha, e)), Fraction(0))
    return total - 1 - Fraction(sum(e), 2)


def _split_sequence(w: WeightVector, e) -> Optional[SplitData]:
    """Destabilizing sequence of ``F^e = L^e (+) (L^e)^v``, None if ``F^e`` were stable."""
    d = -1 - sum(e) // 2
    v = _hyperplane_offset(w, e)
    if v >= 0:
        return SplitData(w, d, tuple(e), xi_zero=True)
    return SplitData(w, -3 - d, complement(e), xi_zero=True)


def p1_three_label(alpha) -> tuple[str, Optional[tuple[int, ...]]]:
    """Just the chamber label: ``("C0", None)``, ``("C_e", e)`` or ``("H_e", e)``."""
    w = alpha if isinstance(alpha, WeightVector) else WeightVector.of(0, alpha)
    if w.g != 0 or w.n != 3:
        raise WrongGenus("the three-point classification needs g = 0 and n = 3")
    offsets = {e: _hyperplane_offset(w, e) for e in P1_INDEX}
    on = [e for e, v in offsets.items() if v == 0]
    above = [e for e, v in offsets.items() if v > 0]
    if len(on) > 1 or len(above) > 1 or (on and above):
        raise AssertionError(f"hyperplanes H_e overlap at {w}")  # impossible inside W
    if on:
        return "H_e", on[0]
    if above:
        return "C_e", above[0]
    return "C0", None


def p1_three_classify(alpha: Sequence) -> P1Classification:
    """Chamber and moduli of rank-2 parabolic objects on P^1 with three points.

    The semistable bundles are among ``G`` (the nontrivial extension) and
    ``F^e = L^e (+) (L^e)^v`` for ``e`` in ``I``. Which of them admit stable
    pairs or Higgs fields is decided with :func:`exists_stable_pair` and
    :func:`exists_stable_higgs`.
    """
    w = alpha if isinstance(alpha, WeightVector) else WeightVector.of(0, alpha)
    label, e0 = p1_three_label(w)

    stable, pairs, higgs = [], [], []
    # G: stable iff no L^e destabilizes it
    if e0 is None:
        stable.append("G")
        pairs.append("G")
        higgs.append("G")
    else:
        seq = SplitData(w, -1 - sum(e0) // 2, e0, xi_zero=False)
        if exists_stable_pair(seq).is_yes:
            pairs.append("G")
        if exists_stable_higgs(seq).is_yes:
            higgs.append("G")
    for e in P1_INDEX:
        name = f"F^{_e_name(e)}"
        seq = _split_sequence(w, e)
        if exists_stable_pair(seq).is_yes:
            pairs.append(name)
        if exists_stable_higgs(seq).is_yes:
            higgs.append(name)

    if label == "C0":
        m = "{G}: a single stable bundle"
        n_ = "{(G, 0)}: one point (G admits no nonzero strongly parabolic field)"
        p = "H^0(End G (x) K(D)) = C^5; fixed determinant C^3"
    elif label == "C_e":
        f = f"F^{_e_name(e0)}"
        m = "empty"
        n_ = f"{{({f}, Phi_0)}}: one point"
        p = f"Y = C^5 (extensions G^xi of L^e by its dual, xi in C; xi = 0 gives {f}); fixed determinant C^3"
    else:
        f = f"F^{_e_name(e0)}"
        m = f"{{[{f}]}}: one S-equivalence class, G and {f} the two isomorphism classes"
        n_ = (f"{{[{f}, 0]}}: one point; (G, 0), ({f}, 0), ({f}, Phi_0) the three "
              "isomorphism classes")
        p = ("H^0(End G (x) K(D)) = C^5; strictly semistable part a hyperplane "
             "(three components of isomorphism classes, each C^4)")
    return P1Classification(w, label, e0, tuple(stable), tuple(pairs), tuple(higgs), m, n_, p)
