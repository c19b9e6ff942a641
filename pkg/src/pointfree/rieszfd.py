"""The coordinate Riesz space Q^n, its bands, and the embedding into C(2^n).

Vectors are exact rational n-tuples ordered coordinatewise.  Bands are the
coordinate subspaces and are stored by their support.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil
from typing import Iterable, Sequence

from .errors import GNotPositive, NotPositive, NotWeakUnit
from .frames import FiniteFrame, FrameHom, booleanize, powerset_frame
from .realfn import RealFn, Scale, constant, from_scale, is_scale, leq, point_value
from .steps import as_fraction, cells


@dataclass(frozen=True)
class RieszVec:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_fraction(c) for c in self.coords))

    @classmethod
    def of(cls, *xs) -> "RieszVec":
        return cls(tuple(xs))

    @classmethod
    def zero(cls, n: int) -> "RieszVec":
        return cls((Fraction(0),) * n)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _zip(self, other, op):
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return RieszVec(tuple(op(a, b) for a, b in zip(self.coords, other.coords)))

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return RieszVec(tuple(-a for a in self.coords))

    def scale(self, lam) -> "RieszVec":
        lam = as_fraction(lam)
        return RieszVec(tuple(lam * a for a in self.coords))

    def join(self, other):
        return self._zip(other, max)

    def meet(self, other):
        return self._zip(other, min)

    def abs(self) -> "RieszVec":
        return RieszVec(tuple(abs(a) for a in self.coords))

    def pos(self) -> "RieszVec":
        return RieszVec(tuple(max(a, 0) for a in self.coords))

    def le(self, other) -> bool:
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.coords) if a != 0)


@dataclass(frozen=True)
class BandFD:
    dim: int
    support: frozenset[int]

    def contains(self, v: RieszVec) -> bool:
        return v.dim == self.dim and v.support <= self.support

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.support)


def band_generated(f: RieszVec) -> BandFD:
    return BandFD(f.dim, f.support)


def band_membership_oracle(g: RieszVec, f: RieszVec) -> bool:
    """``g`` lies in the band of ``f`` iff ``|g|`` is the supremum of some
    ``f_k <= k|f|``; the canonical choice ``f_k = |g| ^ k|f|`` is tested up to
    the first ``k`` where it could stop growing."""
    ag, af = g.abs(), f.abs()
    bound = 1
    for a, b in zip(ag.coords, af.coords):
        if b != 0:
            bound = max(bound, ceil(a / b))
    sup = RieszVec.zero(g.dim)
    for k in range(1, bound + 2):
        sup = sup.join(ag.meet(af.scale(k)))
    return sup == ag


def is_band(dim: int, support: Iterable[int], probes: Sequence[RieszVec]) -> bool:
    """Solidity and closure under finite suprema, tested on ``probes``."""
    band = BandFD(dim, frozenset(support))
    members = [v for v in probes if band.contains(v)]
    for v in members:
        for w in probes:
            if w.abs().le(v.abs()) and not band.contains(w):
                return False
        for w in members:
            if not band.contains(v.join(w)) or not band.contains(v + w):
                return False
    return True


def is_weak_unit(e: RieszVec) -> bool:
    """``e ^ |f| = 0`` forces ``f = 0``; on coordinates: no zero entry."""
    if any(a < 0 for a in e.coords) or e.is_zero():
        raise NotPositive("weak units are taken among positive vectors")
    return all(a > 0 for a in e.coords)


def _require_unit(e: RieszVec):
    try:
        ok = is_weak_unit(e)
    except NotPositive:
        ok = False
    if not ok:
        raise NotWeakUnit(f"{e.coords} is not a weak unit")


def band_scale(f: RieszVec, e: RieszVec) -> Scale:
    """``p`` goes to the support of ``(f - p e)^+`` as an element of ``2^n``."""
    _require_unit(e)
    if f.dim != e.dim:
        raise ValueError("dimension mismatch")
    frame = powerset_frame(f.dim)
    ratios = [a / b for a, b in zip(f.coords, e.coords)]
    bps = tuple(sorted(set(ratios)))

    def sigma(p):
        return sum(1 << i for i, r in enumerate(ratios) if r > p)

    segs, pts = [], []
    for c in cells(bps):
        (segs if c.is_open else pts).append(sigma(c.rep))
    return Scale(frame, bps, tuple(segs), tuple(pts))


def m_embed(f: RieszVec, e: RieszVec) -> RealFn:
    return from_scale(band_scale(f, e))


def atom_prime(n: int, i: int) -> int:
    """The coatom of ``2^n`` missing atom ``i``: the prime for that point."""
    return ((1 << n) - 1) ^ (1 << i)


def evaluate_at_atoms(g: RealFn, n: int) -> list[tuple]:
    return [point_value(g, atom_prime(n, i)) for i in range(n)]


def sandwich_check(g: RealFn, e: RieszVec) -> tuple[RieszVec, RieszVec]:
    """Nonzero ``f``, ``h`` with ``0 <= m(f) <= g <= m(h)``."""
    _require_unit(e)
    n = e.dim
    frame = powerset_frame(n)
    if g.frame != frame:
        raise ValueError("g must live on the powerset frame of the right size")
    zero = constant(frame, 0)
    if not leq(zero, g) or g == zero:
        raise GNotPositive("g must be positive and nonzero")
    later = [b for b in g.up.breakpoints if b > 0]
    p = later[0] / 2 if later else Fraction(1)
    support = g.up(p)
    f = RieszVec(tuple(p * e.coords[i] if support >> i & 1 else Fraction(0) for i in range(n)))
    values = evaluate_at_atoms(g, n)
    h = RieszVec(tuple(e.coords[i] * values[i][0] for i in range(n)))
    if f.is_zero() or h.is_zero():
        raise AssertionError("sandwich vectors must be nonzero")
    if not (leq(zero, m_embed(f, e)) and leq(m_embed(f, e), g) and leq(g, m_embed(h, e))):
        raise AssertionError("sandwich inequalities fail")
    return f, h


def bands_frame(n: int) -> tuple[list[BandFD], FiniteFrame]:
    """Every coordinate band of ``Q^n`` ordered by inclusion."""
    bands = [BandFD(n, frozenset(c)) for k in range(n + 1) for c in combinations(range(n), k)]
    leq_ = [[a.support <= b.support for b in bands] for a in bands]
    names = ["{" + ",".join(str(i) for i in sorted(b.support)) + "}" for b in bands]
    return bands, FiniteFrame(leq_, names)


def _probes(n: int) -> list[RieszVec]:
    vals = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(2))
    out = [RieszVec(())]
    for _ in range(n):
        out = [RieszVec(v.coords + (a,)) for v in out for a in vals]
    return out


def bands_booleanization_check(n: int) -> FrameHom:
    """The bands of ``Q^n`` against the Booleanization of ``2^n``.

    A band goes to the cozero of the embedded indicator of its support; the
    result is checked to be a frame isomorphism, every band passes the band
    oracle, and every band generated by a probe is one of them.
    """
    if not 1 <= n <= 5:
        raise ValueError("n must be between 1 and 5")
    bands, frame = bands_frame(n)
    probes = _probes(n) if n <= 3 else [RieszVec(tuple(Fraction(1) if i in b.support else 0
                                                          for i in range(n))) for b in bands]
    for b in bands:
        if not is_band(n, b.support, probes):
            raise AssertionError(f"support {sorted(b.support)} fails the band oracle")
    known = {b.support for b in bands}
    if any(band_generated(v).support not in known for v in probes):
        raise AssertionError("a generated band is not a coordinate band")
    e = RieszVec((Fraction(1),) * n)
    boo = booleanize(powerset_frame(n))
    target = boo.frame
    images = []
    for b in bands:
        ind = RieszVec(tuple(Fraction(1) if i in b.support else Fraction(0) for i in range(n)))
        g = m_embed(ind, e)
        c = g.frame.join(g.up(0), g.down(0))
        images.append(boo.beta.map[c])
    phi = FrameHom(frame, target, tuple(images))
    if not phi.is_iso:
        raise AssertionError("band frame is not isomorphic to the Booleanization")
    return phi


def scale_conditions(f: RieszVec, e: RieszVec) -> bool:
    return is_scale(band_scale(f, e))
