"""Finite topological spaces and the classical side of the correspondence.

Interval-valued functions on a finite space are compared with partial real
functions on its frame of opens.  Endpoints are exact ``Fraction`` values or
the float infinities ``INF`` / ``-INF``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Sequence

from .errors import (EndpointOrder, NotASpace, NotHausdorff, NotNearlyFinite,
                     NotNormalLsc, NotSemicontinuous)
from .frames import FiniteFrame, FrameHom
from .realfn import RealFn
from .steps import ANTITONE, ISOTONE, StepMap, as_fraction

INF = float("inf")


def _bits(mask: int, n: int) -> list[int]:
    return [i for i in range(n) if mask >> i & 1]


@dataclass(frozen=True)
class FiniteSpace:
    """Points ``0..n-1`` with a topology given as bitmasks of open sets."""

    points: tuple[str, ...]
    opens: tuple[int, ...]

    def __post_init__(self):
        n = len(self.points)
        full = (1 << n) - 1
        opens = tuple(sorted(set(self.opens), key=lambda m: (bin(m).count("1"), m)))
        if any(m < 0 or m > full for m in opens):
            raise NotASpace("open set mentions an unknown point")
        s = set(opens)
        if 0 not in s or full not in s:
            raise NotASpace("empty set and whole space must be open")
        for a, b in product(opens, repeat=2):
            if a | b not in s or a & b not in s:
                raise NotASpace("opens not closed under union and intersection")
        object.__setattr__(self, "opens", opens)

    @classmethod
    def from_sets(cls, points: Sequence[str], opens: Sequence[Sequence[int]]) -> "FiniteSpace":
        masks = []
        for u in opens:
            m = 0
            for i in u:
                if not 0 <= i < len(points):
                    raise NotASpace(f"unknown point index {i}")
                m |= 1 << i
            masks.append(m)
        return cls(tuple(points), tuple(masks))

    @classmethod
    def from_specialization(cls, rel: Sequence[Sequence[bool]],
                            names: Sequence[str] | None = None) -> "FiniteSpace":
        """Opens are the down-closed sets of a preorder ``rel``."""
        n = len(rel)
        opens = [m for m in range(1 << n)
                 if all(not (m >> j & 1) or all(m >> i & 1 for i in range(n) if rel[i][j])
                        for j in range(n))]
        return cls(tuple(names) if names else tuple(str(i) for i in range(n)), tuple(opens))

    @classmethod
    def discrete(cls, n: int) -> "FiniteSpace":
        return cls(tuple(str(i) for i in range(n)), tuple(range(1 << n)))

    @classmethod
    def indiscrete(cls, n: int) -> "FiniteSpace":
        return cls(tuple(str(i) for i in range(n)), (0, (1 << n) - 1))

    @classmethod
    def sierpinski(cls) -> "FiniteSpace":
        """Points ``x`` (open) and ``y`` (closed)."""
        return cls(("x", "y"), (0, 1, 3))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def min_nbhd(self) -> tuple[int, ...]:
        out = []
        for x in range(self.n):
            m = self.full
            for u in self.opens:
                if u >> x & 1:
                    m &= u
            out.append(m)
        return tuple(out)

    def is_discrete(self) -> bool:
        return len(self.opens) == 1 << self.n

    def is_t0(self) -> bool:
        return len(set(self.min_nbhd)) == self.n

    def closure(self, mask: int) -> int:
        return sum(1 << x for x in range(self.n) if self.min_nbhd[x] & mask)

    def interior(self, mask: int) -> int:
        return sum(1 << x for x in range(self.n) if self.min_nbhd[x] & ~mask == 0)

    def mask_name(self, mask: int) -> str:
        return "{" + ",".join(self.points[i] for i in _bits(mask, self.n)) + "}"


@lru_cache(maxsize=1024)
def open_frame(space: FiniteSpace) -> FiniteFrame:
    """Opens ordered by inclusion; element ``i`` is ``space.opens[i]``."""
    ops = space.opens
    return FiniteFrame([[a & b == a for b in ops] for a in ops],
                       [space.mask_name(m) for m in ops])


def open_index(space: FiniteSpace, mask: int) -> int:
    return space.opens.index(mask)


# -- functions on points ------------------------------------------------------

def _ext(v):
    if isinstance(v, float):
        if v in (INF, -INF):
            return v
        raise TypeError("only the float infinities are accepted as non-rational values")
    return as_fraction(v)


def ext_add(a, b):
    if {a, b} == {INF, -INF}:
        raise ValueError("inf + (-inf) is undefined")
    if a in (INF, -INF):
        return a
    if b in (INF, -INF):
        return b
    return a + b


def ext_scale(lam: Fraction, a):
    if lam == 0:
        return Fraction(0)
    if a in (INF, -INF):
        return a if lam > 0 else -a
    return lam * a


@dataclass(frozen=True)
class ExtRealFn:
    space: FiniteSpace
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.space.n:
            raise ValueError("one value per point is required")
        object.__setattr__(self, "values", tuple(_ext(v) for v in self.values))

    def __getitem__(self, x):
        return self.values[x]


@dataclass(frozen=True)
class IntervalValuedFn:
    space: FiniteSpace
    lower: tuple
    upper: tuple

    def __post_init__(self):
        sp = self.space
        if len(self.lower) != sp.n or len(self.upper) != sp.n:
            raise ValueError("one interval per point is required")
        lo = tuple(_ext(v) for v in self.lower)
        hi = tuple(_ext(v) for v in self.upper)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)
        for x in range(sp.n):
            if lo[x] > hi[x]:
                raise EndpointOrder(f"lower > upper at point {sp.points[x]}")
            for y in _bits(sp.min_nbhd[x], sp.n):
                if lo[y] < lo[x]:
                    raise NotSemicontinuous("lower end is not lower semicontinuous")
                if hi[y] > hi[x]:
                    raise NotSemicontinuous("upper end is not upper semicontinuous")

    def le(self, other: "IntervalValuedFn") -> bool:
        return (all(a <= b for a, b in zip(self.lower, other.lower))
                and all(a <= b for a, b in zip(self.upper, other.upper)))

    def info_le(self, other: "IntervalValuedFn") -> bool:
        return (all(a <= b for a, b in zip(self.lower, other.lower))
                and all(a >= b for a, b in zip(self.upper, other.upper)))


# -- the correspondence with partial functions on the opens ----------------------

def psi(h: RealFn, space: FiniteSpace) -> IntervalValuedFn:
    """``[sup{r : x in h(r,-)}, inf{r : x in h(-,r)}]`` at every point."""
    if h.frame != open_frame(space):
        raise ValueError("function does not live on the opens of this space")
    lower, upper = [], []
    for x in range(space.n):
        holds = [space.opens[v] >> x & 1 for v in h.up.values]
        if all(holds):
            lower.append(INF)
        elif not holds[0]:
            lower.append(-INF)
        else:
            lower.append(h.up.breakpoints[holds.index(0) - 1])
        holds = [space.opens[v] >> x & 1 for v in h.down.values]
        if all(holds):
            upper.append(-INF)
        elif not holds[-1]:
            upper.append(INF)
        else:
            upper.append(h.down.breakpoints[holds.index(1) - 1])
    return IntervalValuedFn(space, tuple(lower), tuple(upper))


def psi_inverse(f: IntervalValuedFn) -> RealFn:
    """``up(r) = {x : lower(x) > r}`` and ``down(r) = {x : upper(x) < r}``."""
    sp = f.space
    lo_bps = sorted({v for v in f.lower if v not in (INF, -INF)})
    hi_bps = sorted({v for v in f.upper if v not in (INF, -INF)})

    def up_at(r):
        return open_index(sp, sum(1 << x for x in range(sp.n) if f.lower[x] > r))

    def down_at(r):
        return open_index(sp, sum(1 << x for x in range(sp.n) if f.upper[x] < r))

    # antitone segments are [b_{i-1}, b_i); isotone ones (b_{i-1}, b_i]
    up_vals = [up_at(b) for b in lo_bps]
    up_vals.insert(0, up_at(lo_bps[0] - 1) if lo_bps else up_at(Fraction(0)))
    down_vals = [down_at(b) for b in hi_bps]
    down_vals.append(down_at(hi_bps[-1] + 1) if hi_bps else down_at(Fraction(0)))
    frame = open_frame(sp)
    return RealFn(frame, StepMap(tuple(lo_bps), tuple(up_vals), ANTITONE),
                  StepMap(tuple(hi_bps), tuple(down_vals), ISOTONE))


def is_hausdorff_spatial(f: IntervalValuedFn) -> bool:
    from .intervalfn import is_hausdorff
    return is_hausdorff(psi_inverse(f))


def nearly_finite_spatial(f: IntervalValuedFn) -> bool:
    """Points with both endpoints finite form a dense set."""
    sp = f.space
    finite = sum(1 << x for x in range(sp.n)
                 if f.lower[x] not in (INF, -INF) and f.upper[x] not in (INF, -INF))
    return sp.closure(finite) == sp.full


def spatial_extensions(f: IntervalValuedFn, grid: Sequence[Fraction]) -> list[IntervalValuedFn]:
    """Interval functions with endpoints in ``grid`` or infinite that strictly
    extend ``f`` in the information order."""
    sp = f.space
    vals = sorted(set(as_fraction(g) for g in grid))
    ends = [-INF, *vals, INF]
    per_point = []
    for x in range(sp.n):
        los = [v for v in ends if v >= f.lower[x]]
        his = [v for v in ends if v <= f.upper[x]]
        per_point.append([(a, b) for a in los for b in his if a <= b])
    out = []
    for choice in product(*per_point):
        lo = tuple(c[0] for c in choice)
        hi = tuple(c[1] for c in choice)
        if lo == f.lower and hi == f.upper:
            continue
        try:
            out.append(IntervalValuedFn(sp, lo, hi))
        except (EndpointOrder, NotSemicontinuous):
            continue
    return out


def is_maximal_spatial(f: IntervalValuedFn, grid: Sequence[Fraction]) -> bool:
    return not spatial_extensions(f, grid)


# -- Baire operators and normal lower semicontinuous functions ------------------

def baire_upper(u: ExtRealFn) -> ExtRealFn:
    sp = u.space
    return ExtRealFn(sp, tuple(max(u[y] for y in _bits(sp.min_nbhd[x], sp.n))
                               for x in range(sp.n)))


def baire_lower(u: ExtRealFn) -> ExtRealFn:
    sp = u.space
    return ExtRealFn(sp, tuple(min(u[y] for y in _bits(sp.min_nbhd[x], sp.n))
                               for x in range(sp.n)))


def is_nlsc(u: ExtRealFn) -> bool:
    return baire_lower(baire_upper(u)) == u


def _nl_precondition(*us: ExtRealFn):
    for u in us:
        if not is_nlsc(u):
            raise NotNormalLsc("function is not normal lower semicontinuous")
        if not nearly_finite_spatial(pi_inverse(u)):
            raise NotNearlyFinite("function is not nearly finite")


def nl_add(u: ExtRealFn, v: ExtRealFn) -> ExtRealFn:
    _nl_precondition(u, v)
    total = ExtRealFn(u.space, tuple(ext_add(a, b) for a, b in zip(u.values, v.values)))
    return baire_lower(baire_upper(total))


def nl_scalar(lam, u: ExtRealFn) -> ExtRealFn:
    lam = as_fraction(lam)
    _nl_precondition(u)
    scaled = ExtRealFn(u.space, tuple(ext_scale(lam, a) for a in u.values))
    return baire_lower(baire_upper(scaled))


def nl_negate(u: ExtRealFn) -> ExtRealFn:
    return nl_scalar(-1, u)


def pi(f: IntervalValuedFn) -> ExtRealFn:
    if not is_hausdorff_spatial(f):
        raise NotHausdorff("interval function is not Hausdorff")
    if not nearly_finite_spatial(f):
        raise NotNearlyFinite("interval function is not nearly finite")
    return ExtRealFn(f.space, f.lower)


def pi_inverse(u: ExtRealFn) -> IntervalValuedFn:
    """Pair the function with its upper Baire envelope."""
    return IntervalValuedFn(u.space, u.values, baire_upper(u).values)


# -- spectrum -------------------------------------------------------------------

def primes(frame: FiniteFrame) -> list[int]:
    return [p for p in frame.elements if p != frame.top
            and all(frame.le(a, p) or frame.le(b, p)
                    for a in frame.elements for b in frame.elements
                    if frame.le(frame.meet(a, b), p))]


def spectrum(frame: FiniteFrame) -> FiniteSpace:
    """Points are the prime elements; ``a`` gives the open set of primes not above it."""
    ps = primes(frame)
    opens = {sum(1 << i for i, p in enumerate(ps) if not frame.le(a, p)) for a in frame.elements}
    return FiniteSpace(tuple(frame.names[p] for p in ps), tuple(opens))


def spatial_reflection(frame: FiniteFrame) -> FrameHom:
    ps = primes(frame)
    sp = spectrum(frame)
    target = open_frame(sp)
    return FrameHom(frame, target, tuple(
        open_index(sp, sum(1 << i for i, p in enumerate(ps) if not frame.le(a, p)))
        for a in frame.elements))


def is_spatial(frame: FiniteFrame) -> bool:
    return spatial_reflection(frame).is_iso
