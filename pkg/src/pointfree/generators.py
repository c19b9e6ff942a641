"""Seeded random instances: frames, functions, vectors."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .frames import FiniteFrame, downset_frame
from .realfn import RealFn, Scale, from_scale, positive_part
from .rieszfd import RieszVec
from .steps import ANTITONE, ISOTONE, StepMap

DEFAULT_GRID = tuple(Fraction(x) for x in ("-2", "-1", "-1/2", "0", "1/2", "1", "2"))


def random_poset(rng: random.Random, k: int) -> list[list[bool]]:
    density = rng.random()
    rel = [[i == j or (i < j and rng.random() < density) for j in range(k)] for i in range(k)]
    for m in range(k):
        for i in range(k):
            if rel[i][m]:
                for j in range(k):
                    if rel[m][j]:
                        rel[i][j] = True
    return rel


def generate_frame(seed: int, size: int) -> FiniteFrame:
    """Downset lattice of a random poset with at most ``size`` elements."""
    if size < 1:
        raise ValueError("size must be at least 1")
    rng = random.Random(seed)
    if size == 1:
        return downset_frame([])
    while True:
        k = rng.randint(1, size - 1)
        rel = random_poset(rng, k)
        if _count_downsets(rel, size) <= size:
            return downset_frame(rel)


def _count_downsets(rel: list[list[bool]], cap: int) -> int:
    k = len(rel)
    below = [sum(1 << i for i in range(k) if rel[i][j]) for j in range(k)]
    count = 0
    for mask in range(1 << k):
        if all(not (mask >> j & 1) or below[j] & ~mask == 0 for j in range(k)):
            count += 1
            if count > cap:
                break
    return count


def _breakpoints(rng: random.Random, grid: Sequence[Fraction], most: int = 3,
                 least: int = 0) -> tuple:
    k = rng.randint(least, max(least, min(most, len(grid))))
    return tuple(sorted(rng.sample(list(grid), k)))


def _descending(rng: random.Random, frame: FiniteFrame, pool: Sequence[int], length: int,
                start: int | None, end: int | None) -> list[int]:
    out: list[int] = []
    for i in range(length):
        if i == 0 and start is not None:
            v = start
        elif i == length - 1 and end is not None:
            v = end
        else:
            prev = out[-1] if out else None
            choices = [c for c in pool if (prev is None or frame.le(c, prev))
                       and (end is None or frame.le(end, c))]
            v = prev if prev is not None and rng.random() < 0.3 else rng.choice(choices)
        out.append(v)
    return out


def random_c_function(rng: random.Random, frame: FiniteFrame,
                      grid: Sequence[Fraction] = DEFAULT_GRID, most: int = 3) -> RealFn:
    """A class-C function with breakpoints drawn from ``grid``."""
    bps = _breakpoints(rng, grid, most, least=1)
    segs = _descending(rng, frame, frame.complemented, len(bps) + 1, frame.top, frame.bottom)
    return from_scale(Scale(frame, bps, tuple(segs)))


def random_nonnegative(rng: random.Random, frame: FiniteFrame,
                       grid: Sequence[Fraction] = DEFAULT_GRID, most: int = 3) -> RealFn:
    return positive_part(random_c_function(rng, frame, grid, most))


def random_hausdorff(rng: random.Random, frame: FiniteFrame,
                     grid: Sequence[Fraction] = DEFAULT_GRID, most: int = 3,
                     nearly_finite: bool = True) -> RealFn:
    """Regular antitone ``up`` paired with its pseudocomplements as ``down``.

    Nearly finite ones run from the top to the bottom.
    """
    bps = _breakpoints(rng, grid, most, least=1 if nearly_finite else 0)
    regular = [a for a in frame.elements if frame.is_regular(a)]
    if nearly_finite:
        ups = _descending(rng, frame, regular, len(bps) + 1, frame.top, frame.bottom)
    else:
        ups = _descending(rng, frame, regular, len(bps) + 1, None, None)
    downs = [frame.pc(u) for u in ups]
    return RealFn(frame, StepMap(bps, tuple(ups), ANTITONE), StepMap(bps, tuple(downs), ISOTONE))


def random_vector(rng: random.Random, n: int, grid: Sequence[Fraction] = DEFAULT_GRID) -> RieszVec:
    return RieszVec(tuple(rng.choice(grid) for _ in range(n)))


def random_unit(rng: random.Random, n: int) -> RieszVec:
    return RieszVec(tuple(Fraction(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(n)))


def random_partial(rng: random.Random, frame: FiniteFrame,
                   grid: Sequence[Fraction] = DEFAULT_GRID, most: int = 3) -> RealFn:
    """A partial function: antitone ``up`` and an isotone ``down`` disjoint from it.

    ``down`` is chosen left to right; keeping the previous value is always
    allowed, so the walk never gets stuck.
    """
    bps = _breakpoints(rng, grid, most)
    ups = _descending(rng, frame, frame.elements, len(bps) + 1, None, None)
    downs: list[int] = []
    for u in ups:
        prev = downs[-1] if downs else frame.bottom
        choices = [d for d in frame.elements
                   if frame.le(prev, d) and frame.meet(d, u) == frame.bottom]
        downs.append(rng.choice(choices))
    return RealFn(frame, StepMap(bps, tuple(ups), ANTITONE), StepMap(bps, tuple(downs), ISOTONE))


def random_ext_values(rng: random.Random, n: int, grid: Sequence[Fraction] = DEFAULT_GRID,
                      infinite: float = 0.15) -> tuple:
    inf = float("inf")
    out = []
    for _ in range(n):
        r = rng.random()
        out.append(inf if r < infinite / 2 else -inf if r < infinite else rng.choice(grid))
    return tuple(out)
