"""Brute-force enumerations used as independent oracles.

Everything here enumerates finite search spaces exhaustively: grid step
functions on a frame, all small frames up to isomorphism, all small
topologies up to homeomorphism.  Pruning only ever discards candidates that
violate a necessary condition, and every survivor is re-validated by the
full predicate.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

from .frames import FiniteFrame, downset_frame
from .realfn import C, C_EXT, IC_EXT, RealFn, leq
from .steps import ANTITONE, ISOTONE, StepMap, as_fraction, cells


def monotone_sequences(frame: FiniteFrame, length: int, antitone: bool,
                       lower: Sequence[int] | None = None,
                       allowed: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
    pool = list(allowed) if allowed is not None else list(frame.elements)

    def rec(prefix):
        i = len(prefix)
        if i == length:
            yield tuple(prefix)
            return
        for v in pool:
            if lower is not None and not frame.le(lower[i], v):
                continue
            if prefix:
                prev = prefix[-1]
                if antitone and not frame.le(v, prev):
                    continue
                if not antitone and not frame.le(prev, v):
                    continue
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def _segment_values(sm: StepMap, grid: Sequence[Fraction]) -> list[int]:
    if not set(sm.breakpoints) <= set(grid):
        raise ValueError("grid must contain the function's breakpoints")
    return [sm(c.rep) for c in cells(grid) if c.is_open]


def grid_functions(frame: FiniteFrame, grid: Sequence[Fraction],
                   kinds: Sequence[str] = (C,),
                   lower: RealFn | None = None) -> list[RealFn]:
    """Every function with breakpoints inside ``grid`` whose kind is in
    ``kinds`` (and, if given, above ``lower`` in the information order)."""
    grid = tuple(sorted(set(as_fraction(g) for g in grid)))
    return list(_grid_functions(frame, grid, tuple(kinds), lower))


def _grid_functions(frame, grid, kinds, lower):
    if lower is None:
        return _grid_functions_cached(frame, grid, kinds)
    return _grid_functions_raw(frame, grid, kinds, lower)


@lru_cache(maxsize=256)
def _grid_functions_cached(frame, grid, kinds):
    return tuple(_grid_functions_raw(frame, grid, kinds, None))


def _grid_functions_raw(frame, grid, kinds, lower):
    k = len(grid) + 1
    up_lo = _segment_values(lower.up, grid) if lower is not None else None
    down_lo = _segment_values(lower.down, grid) if lower is not None else None
    need_r2 = IC_EXT not in kinds
    # with r1 and r2 each open segment carries a complemented pair
    pool = frame.complemented if need_r2 else None
    ups = list(monotone_sequences(frame, k, True, up_lo, pool))
    downs = list(monotone_sequences(frame, k, False, down_lo, pool))
    bottom, top = frame.bottom, frame.top
    for U in ups:
        for D in downs:
            # disjointness inside each open segment is necessary
            if any(frame.meet(U[i], D[i]) != bottom for i in range(k)):
                continue
            if need_r2 and any(frame.join(U[i], D[i]) != top for i in range(k)):
                continue
            f = RealFn(frame, StepMap(grid, U, ANTITONE), StepMap(grid, D, ISOTONE))
            if f.kind in kinds:
                yield f


def hausdorff_grid_functions(frame: FiniteFrame, grid: Sequence[Fraction]) -> Iterator[RealFn]:
    """All Hausdorff partial functions with breakpoints in ``grid``."""
    from .intervalfn import is_hausdorff

    grid = tuple(sorted(set(as_fraction(g) for g in grid)))
    k = len(grid) + 1
    for U in monotone_sequences(frame, k, True):
        # inside one open segment: D disjoint from U, and both pseudocomplement bounds
        options = []
        for u in U:
            options.append([d for d in frame.elements
                            if frame.meet(u, d) == frame.bottom
                            and frame.le(frame.pc(u), d) and frame.le(frame.pc(d), u)])
        for D in product(*options):
            if any(not frame.le(a, b) for a, b in zip(D, D[1:])):
                continue
            f = RealFn(frame, StepMap(grid, U, ANTITONE), StepMap(grid, D, ISOTONE))
            if is_hausdorff(f):
                yield f


def is_maximal(f: RealFn, grid: Sequence[Fraction]) -> bool:
    """No grid partial function strictly above ``f`` in the information order."""
    grid = tuple(sorted(set(as_fraction(g) for g in grid)))
    for g in _grid_functions_raw(f.frame, grid, (C, C_EXT, IC_EXT), f):
        if g != f:
            return False
    return True


def least_upper_bound(fs: Sequence[RealFn], grid: Sequence[Fraction]) -> RealFn | None:
    """Least element among the grid C-functions above every member of ``fs``."""
    frame = fs[0].frame
    bounds = [g for g in grid_functions(frame, tuple(grid))
              if all(leq(f, g) for f in fs)]
    least = [g for g in bounds if all(leq(g, h) for h in bounds)]
    return least[0] if least else None


def cozero_set(frame: FiniteFrame, grid: Sequence[Fraction]) -> set[int]:
    return {frame.join(f.down(0), f.up(0)) for f in grid_functions(frame, tuple(grid))}


# -- small posets, frames and topologies --------------------------------------

def _extend_orders(orders: list[tuple[tuple[bool, ...], ...]], antisymmetric: bool):
    out = []
    for rel in orders:
        k = len(rel)
        for below, above in product(range(1 << k), repeat=2):
            if antisymmetric and below & above:
                continue
            ok = True
            for i in range(k):
                if below >> i & 1:
                    # below must be down-closed
                    if any(rel[j][i] and not below >> j & 1 for j in range(k)):
                        ok = False
                        break
                if above >> i & 1:
                    if any(rel[i][j] and not above >> j & 1 for j in range(k)):
                        ok = False
                        break
            if not ok:
                continue
            if any(below >> a & 1 and above >> b & 1 and not rel[a][b]
                   for a in range(k) for b in range(k)):
                continue
            new = [list(row) + [bool(below >> i & 1)] for i, row in enumerate(rel)]
            new.append([bool(above >> j & 1) for j in range(k)] + [True])
            out.append(tuple(tuple(r) for r in new))
    return out


@lru_cache(maxsize=None)
def labelled_orders(k: int, antisymmetric: bool = True) -> tuple:
    """All partial orders (or preorders) on ``k`` labelled points."""
    orders = [()]
    for _ in range(k):
        orders = _extend_orders(orders, antisymmetric)
    return tuple(orders)


def _canonical(leq: Sequence[Sequence[bool]]) -> tuple:
    n = len(leq)
    return min(tuple(tuple(leq[p[i]][p[j]] for j in range(n)) for i in range(n))
               for p in permutations(range(n)))


@lru_cache(maxsize=None)
def unlabelled_orders(k: int, antisymmetric: bool = True) -> tuple:
    """One partial order (or preorder) on ``k`` points per isomorphism type.

    Every order on ``k`` points restricts to one on ``k - 1`` points, so
    extending representatives only reaches every type.
    """
    if k == 0:
        return ((),)
    reps = {}
    for rel in _extend_orders(list(unlabelled_orders(k - 1, antisymmetric)), antisymmetric):
        reps.setdefault(_canonical(rel), rel)
    return tuple(reps.values())


@lru_cache(maxsize=None)
def all_frames(max_size: int) -> tuple[FiniteFrame, ...]:
    """Every frame with at most ``max_size`` elements, one per isomorphism type.

    Non-isomorphic posets have non-isomorphic downset lattices, so no second
    deduplication pass is needed.
    """
    out = []
    for k in range(0, max_size):
        for rel in unlabelled_orders(k):
            fr = downset_frame(rel)
            if fr.n <= max_size:
                out.append(fr)
    return tuple(sorted(out, key=lambda f: (f.n, f.names)))


@lru_cache(maxsize=None)
def all_topologies(max_points: int):
    """Every topology on ``1..max_points`` points up to homeomorphism."""
    from .spatial import FiniteSpace

    return tuple(FiniteSpace.from_specialization(rel)
                 for k in range(1, max_points + 1)
                 for rel in unlabelled_orders(k, antisymmetric=False))
