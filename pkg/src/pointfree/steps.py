"""Piecewise-constant maps from the rationals into frame elements.

A step map is stored as strictly increasing rational breakpoints and one
frame-element index per segment.  Two continuity conventions are used:

* ``ANTITONE`` maps are right-continuous: segment ``i`` is
  ``[b[i-1], b[i])``, so the value at a breakpoint is the value to its right.
* ``ISOTONE`` maps are left-continuous: segment ``i`` is ``(b[i-1], b[i]]``.

Most exact computations work on *cells*: the breakpoints themselves and the
open gaps between them.  Every step map is constant on each cell of any
superset of its own breakpoints, so sampling one representative per cell is
complete.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

ANTITONE = "antitone"
ISOTONE = "isotone"


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing inexact float {x!r}; pass a Fraction or string")
    return Fraction(x)


@dataclass(frozen=True)
class Cell:
    rep: Fraction
    is_open: bool


def cells(breakpoints: Sequence[Fraction]) -> list[Cell]:
    """Open gaps and breakpoints in increasing order, one representative each."""
    bps = [as_fraction(b) for b in breakpoints]
    if not bps:
        return [Cell(Fraction(0), True)]
    out = [Cell(bps[0] - 1, True)]
    for i, b in enumerate(bps):
        out.append(Cell(b, False))
        if i + 1 < len(bps):
            out.append(Cell((b + bps[i + 1]) / 2, True))
    out.append(Cell(bps[-1] + 1, True))
    return out


def merge_breakpoints(*groups: Iterable[Fraction]) -> tuple[Fraction, ...]:
    pts: set[Fraction] = set()
    for g in groups:
        pts.update(g)
    return tuple(sorted(pts))


@dataclass(frozen=True)
class StepMap:
    breakpoints: tuple[Fraction, ...]
    values: tuple[int, ...]
    orientation: str

    def __post_init__(self):
        bps = tuple(as_fraction(b) for b in self.breakpoints)
        vals = tuple(int(v) for v in self.values)
        if self.orientation not in (ANTITONE, ISOTONE):
            raise ValueError(f"unknown orientation {self.orientation!r}")
        if len(vals) != len(bps) + 1:
            raise ValueError("a step map needs exactly one more value than breakpoints")
        if any(a >= b for a, b in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        # canonical form: drop breakpoints between equal values
        keep_b, keep_v = [], [vals[0]]
        for b, v in zip(bps, vals[1:]):
            if v != keep_v[-1]:
                keep_b.append(b)
                keep_v.append(v)
        object.__setattr__(self, "breakpoints", tuple(keep_b))
        object.__setattr__(self, "values", tuple(keep_v))

    def __call__(self, x) -> int:
        x = as_fraction(x)
        if self.orientation == ANTITONE:
            return self.values[bisect_right(self.breakpoints, x)]
        return self.values[bisect_left(self.breakpoints, x)]

    @classmethod
    def constant(cls, value: int, orientation: str) -> "StepMap":
        return cls((), (value,), orientation)

    def map_values(self, fn: Callable[[int], int]) -> "StepMap":
        return StepMap(self.breakpoints, tuple(fn(v) for v in self.values), self.orientation)

    def is_monotone(self, le: Callable[[int, int], bool]) -> bool:
        pairs = zip(self.values, self.values[1:])
        if self.orientation == ANTITONE:
            return all(le(b, a) for a, b in pairs)
        return all(le(a, b) for a, b in pairs)

    def cells(self, extra: Iterable[Fraction] = ()) -> list[Cell]:
        return cells(merge_breakpoints(self.breakpoints, extra))


def from_cells(orientation: str, breakpoints: Iterable[Fraction],
               sample: Callable[[Fraction], int]) -> StepMap:
    """Build a step map by sampling every cell of ``breakpoints``.

    Raises ``ValueError`` if the samples break the continuity convention of
    ``orientation`` (a breakpoint value must match the gap on its right for
    antitone maps, on its left for isotone maps).
    """
    bps = tuple(sorted(set(as_fraction(b) for b in breakpoints)))
    cs = cells(bps)
    vals = [sample(c.rep) for c in cs]
    if not bps:
        return StepMap((), (vals[0],), orientation)
    # cs alternates open, point, open, ..., point, open
    opens = vals[0::2]
    points = vals[1::2]
    for i, pv in enumerate(points):
        neighbour = opens[i + 1] if orientation == ANTITONE else opens[i]
        if pv != neighbour:
            side = "right" if orientation == ANTITONE else "left"
            raise ValueError(
                f"sample at breakpoint {bps[i]} is not {side}-continuous "
                f"({pv} vs {neighbour})")
    return StepMap(bps, tuple(opens), orientation)


def segment_reps(sm: StepMap) -> list[Fraction]:
    """One rational inside every open segment of ``sm`` (left to right)."""
    return [c.rep for c in cells(sm.breakpoints) if c.is_open]
