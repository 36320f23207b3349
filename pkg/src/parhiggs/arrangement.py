"""The wall arrangement in weight space ``W = (0, 1/2)^n``.

A label ``(d, e)`` cuts out the hyperplane ``d + sum(beta(alpha, e)) = 0``.
The labels ``(d, e)`` and ``(-n-d, 1-e)`` define the same hyperplane with
opposite orientation; a :class:`Wall` stores the representative with
``e[0] == 0``. Chambers are identified by their sign vector over all walls,
so they are never built as polytopes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import Codim2Collision, InvalidInput, OnWall, WrongGenus
from .parabolic import Curve, WeightVector, complement

HALF = Fraction(1, 2)

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


@dataclass(frozen=True, order=True)
class Wall:
    d: int
    e: tuple[int, ...]

    def __post_init__(self):
        if not self.e or self.e[0] != 0:
            raise InvalidInput(f"wall label {self.d, self.e} is not canonical (needs e_1 = 0)")

    @classmethod
    def from_label(cls, d: int, e: Sequence[int]) -> Wall:
        """Canonical wall for either of its two labels."""
        e = tuple(int(x) for x in e)
        if e[0] == 0:
            return cls(d, e)
        return cls(-len(e) - d, complement(e))

    @property
    def n(self) -> int:
        return len(self.e)

    @property
    def size(self) -> int:
        return sum(self.e)

    @property
    def partner(self) -> tuple[int, tuple[int, ...]]:
        return (-self.n - self.d, complement(self.e))

    @property
    def labels(self) -> tuple[tuple[int, tuple[int, ...]], tuple[int, tuple[int, ...]]]:
        return (self.d, self.e), self.partner

    def value(self, alpha: Sequence[Fraction]) -> Fraction:
        """``d + sum(beta(alpha, e))`` for the canonical label."""
        v = Fraction(self.d + self.size)
        for a, ei in zip(alpha, self.e):
            v += -a if ei else a
        return v

    def to_json_obj(self) -> dict:
        return {"d": self.d, "e": list(self.e)}

    def __str__(self):
        return f"H({self.d}; {''.join(map(str, self.e))})"


def label_meets_weight_space(d: int, e: Sequence[int]) -> bool:
    """Whether ``d + sum(beta) = 0`` has solutions in the open cube."""
    k = sum(e)
    n = len(e)
    # |e|/2 < -d < (n+|e|)/2, doubled to stay in integers
    return k < -2 * d < n + k


@lru_cache(maxsize=None)
def _walls_for(n: int) -> tuple[Wall, ...]:
    out = []
    for tail in itertools.product((0, 1), repeat=n - 1):
        e = (0,) + tail
        k = sum(e)
        # -2d ranges strictly between k and n+k
        for m in range(k + 1, n + k):
            if m % 2 == 0:
                out.append(Wall(-m // 2, e))
    return tuple(sorted(out, key=lambda w: (w.e, -w.d)))


def enumerate_walls(curve: Curve) -> tuple[Wall, ...]:
    """All walls meeting the open weight cube, each listed once.

    The arrangement depends only on ``n``; the genus is irrelevant here.
    """
    return _walls_for(curve.n)


@dataclass(frozen=True)
class ChamberID:
    n: int
    signs: tuple[int, ...]

    @property
    def walls(self) -> tuple[Wall, ...]:
        return _walls_for(self.n)

    def as_dict(self) -> dict[Wall, int]:
        return dict(zip(self.walls, self.signs))

    def sign(self, wall: Wall) -> int:
        return self.signs[self.walls.index(wall)]

    def flipped(self, index: int) -> ChamberID:
        s = list(self.signs)
        s[index] = -s[index]
        return ChamberID(self.n, tuple(s))

    def key(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)


def wall_values(w: WeightVector) -> list[tuple[Wall, Fraction]]:
    return [(wall, wall.value(w.alpha)) for wall in enumerate_walls(w.curve)]


def on_walls(w: WeightVector) -> list[Wall]:
    return [wall for wall, v in wall_values(w) if v == 0]


def is_generic(w: WeightVector) -> bool:
    return not on_walls(w)


def chamber_of(w: WeightVector) -> ChamberID:
    signs = []
    for wall, v in wall_values(w):
        if v == 0:
            raise OnWall(wall)
        signs.append(1 if v > 0 else -1)
    return ChamberID(w.n, tuple(signs))


@dataclass(frozen=True)
class Crossing:
    wall: Wall
    param: Fraction
    from_sign: int
    to_sign: int

    def to_json_obj(self) -> dict:
        p = self.param
        return {
            "wall": self.wall.to_json_obj(),
            "param": f"{p.numerator}/{p.denominator}",
            "direction": ("+" if self.from_sign > 0 else "-") + ("+" if self.to_sign > 0 else "-"),
        }


def segment_crossings(start: WeightVector, end: WeightVector) -> list[Crossing]:
    """Walls crossed by the straight segment ``start -> end``, ordered by parameter.

    Raises :class:`Codim2Collision` if two walls are crossed at the same
    parameter; the caller has to perturb an endpoint.
    """
    if start.n != end.n:
        raise InvalidInput("segment endpoints have different numbers of weights")
    for ep in (start, end):
        bad = on_walls(ep)
        if bad:
            raise OnWall(bad[0], f"segment endpoint {ep} lies on {bad[0]}")
    found = []
    for wall in enumerate_walls(start.curve):
        v0 = wall.value(start.alpha)
        v1 = wall.value(end.alpha)
        if (v0 > 0) != (v1 > 0):
            s = v0 / (v0 - v1)
            found.append(Crossing(wall, s, 1 if v0 > 0 else -1, 1 if v1 > 0 else -1))
    found.sort(key=lambda c: (c.param, c.wall))
    for a, b in zip(found, found[1:]):
        if a.param == b.param:
            same = [c.wall for c in found if c.param == a.param]
            raise Codim2Collision(a.param, same)
    return found


def perturb(w: WeightVector, scale: Fraction | int = 1) -> WeightVector:
    """Shift ``alpha_i`` by ``p_i / 10**6 * scale`` with ``p_i`` the i-th prime."""
    if w.n > len(_PRIMES):
        raise InvalidInput(f"perturbation table covers n <= {len(_PRIMES)}")
    scale = Fraction(scale)
    alpha = tuple(a + Fraction(_PRIMES[i], 10 ** 6) * scale for i, a in enumerate(w.alpha))
    return WeightVector(w.curve, alpha)


def _check_genus_zero(curve: Curve, what: str):
    if curve.g != 0:
        raise WrongGenus(f"{what} is only defined in genus 0 (got g={curve.g})")


def null_witnesses(w: WeightVector) -> list[tuple[int, ...]]:
    """The ``e`` (with ``n - |e| + 1`` even) for which the nonemptiness inequality fails."""
    n = w.n
    out = []
    for e in itertools.product((0, 1), repeat=n):
        k = sum(e)
        if (n - k + 1) % 2:
            continue
        total = sum((1 - a if ei else a for a, ei in zip(w.alpha, e)), Fraction(0))
        bound = Fraction(n + k - 1, 2)
        if total == bound:
            raise OnWall(Wall.from_label((1 - n - k) // 2, e))
        if total > bound:
            out.append(e)
    return out


def is_null_chamber(w: WeightVector) -> bool:
    """Genus-0 test for an empty moduli space of stable parabolic bundles."""
    _check_genus_zero(w.curve, "is_null_chamber")
    return bool(null_witnesses(w))


def is_vanishing_wall(wall: Wall, curve: Curve) -> bool:
    _check_genus_zero(curve, "is_vanishing_wall")
    n = curve.n
    return any(2 * d == 1 - n - sum(e) for d, e in wall.labels)


def null_chamber_wall(w: WeightVector) -> Wall | None:
    """The vanishing wall bounding the null chamber containing ``w``, if any."""
    ws = null_witnesses(w)
    if not ws:
        return None
    e = ws[0]
    return Wall.from_label((1 - w.n - sum(e)) // 2, e)


def fusion_nonempty(alpha: Sequence) -> bool:
    """Three-point genus-0 nonemptiness via the quantum Clebsch-Gordan inequalities."""
    if len(alpha) != 3:
        raise InvalidInput("fusion rules take exactly three weights")
    a1, a2, a3 = (Fraction(a) for a in alpha)
    return abs(a1 - a2) <= a3 <= min(a1 + a2, 1 - a1 - a2)


# grid sampling of chambers

def _wall_matrix(n: int) -> tuple[np.ndarray, np.ndarray]:
    walls = _walls_for(n)
    normals = np.array([[-1 if ei else 1 for ei in wl.e] for wl in walls], dtype=np.int64)
    offsets = np.array([wl.d + wl.size for wl in walls], dtype=np.int64)
    return normals.reshape(len(walls), n), offsets


@dataclass(frozen=True)
class ChamberSample:
    curve: Curve
    denominator: int
    chambers: tuple[tuple[ChamberID, WeightVector], ...]
    heuristic: bool

    def __len__(self):
        return len(self.chambers)

    def __iter__(self) -> Iterator[tuple[ChamberID, WeightVector]]:
        return iter(self.chambers)

    def lookup(self) -> dict[ChamberID, WeightVector]:
        return dict(self.chambers)

    def adjacent_pairs(self) -> list[tuple[Wall, ChamberID, ChamberID]]:
        """Pairs of sampled chambers whose sign vectors differ in exactly one wall.

        In a convex region such chambers share a facet on that wall.
        Each pair is reported once, with the chamber on the negative side first.
        """
        index = self.lookup()
        walls = _walls_for(self.curve.n)
        out = []
        for cid, _ in self.chambers:
            for i, wl in enumerate(walls):
                if cid.signs[i] < 0:
                    other = cid.flipped(i)
                    if other in index:
                        out.append((wl, cid, other))
        return out


def enumerate_chambers(curve: Curve, K: int = 16, chunk: int = 1 << 16) -> ChamberSample:
    """Find chambers by sampling the grid ``alpha_i = k / (2K+1)``, ``1 <= k <= K``.

    Grid points lying on a wall are skipped. Each chamber is represented by
    its lexicographically first grid point. Completeness is only claimed for
    ``n <= 5`` (``heuristic`` is set beyond that).
    """
    if K < 2:
        raise InvalidInput("grid parameter K must be >= 2")
    n = curve.n
    N = 2 * K + 1
    normals, offsets = _wall_matrix(n)
    nw = len(offsets)
    total = K ** n
    seen: dict[bytes, int] = {}
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        pts = np.empty((len(idx), n), dtype=np.int64)
        rem = idx.copy()
        for j in range(n - 1, -1, -1):
            pts[:, j] = rem % K + 1
            rem //= K
        if nw == 0:
            vals = np.ones((len(idx), 0), dtype=np.int64)
        else:
            vals = N * offsets[None, :] + pts @ normals.T
        generic = np.all(vals != 0, axis=1)
        bits = np.packbits(vals[generic] > 0, axis=1)
        gidx = idx[generic]
        for row, i in zip(map(bytes, bits), gidx.tolist()):
            if row not in seen:
                seen[row] = i
    chambers = []
    for row, i in seen.items():
        ks = []
        rem = i
        for _ in range(n):
            ks.append(rem % K + 1)
            rem //= K
        alpha = tuple(Fraction(k, N) for k in reversed(ks))
        wv = WeightVector(curve, alpha)
        chambers.append((chamber_of(wv), wv))
    chambers.sort(key=lambda c: c[1].alpha)
    return ChamberSample(curve, N, tuple(chambers), heuristic=n > 5)
