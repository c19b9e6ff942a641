"""Hausdorff continuous and nearly finite partial real functions.

Partial functions share the :class:`~pointfree.realfn.RealFn` carrier; only
disjointness of ``up`` and ``down`` is required of them.  This module adds
the information order, the Hausdorff and nearly-finite predicates, the
transfer maps to and from the Booleanization, and the Riesz operations on
nearly finite Hausdorff functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable

from .errors import FrameMismatch, NotHausdorff, NotNearlyFinite
from .frames import FiniteFrame, booleanize, classify, is_cozero
from .realfn import (C, RealFn, add, characteristic, compose_hom, constant,
                     join_above, join_below, join_op, meet_op, negate, scalar,
                     sup_convolution, _stepmap_le, _sums)
from .steps import ANTITONE, ISOTONE, StepMap, as_fraction, cells, from_cells, merge_breakpoints


def info_leq(f: RealFn, g: RealFn) -> bool:
    """Information order: both generator families of ``f`` below those of ``g``."""
    if f.frame != g.frame:
        raise FrameMismatch("functions live on different frames")
    return _stepmap_le(f.frame, f.up, g.up) and _stepmap_le(f.frame, f.down, g.down)


def hausdorff_witness(f: RealFn) -> tuple[Fraction, Fraction] | None:
    """A pair ``p < q`` breaking ``up(p)* <= down(q)`` or ``down(q)* <= up(p)``."""
    frame = f.frame
    cs = f.cells()
    for i, j in product(range(len(cs)), repeat=2):
        if i < j or (i == j and cs[i].is_open):
            u, d = f.up(cs[i].rep), f.down(cs[j].rep)
            if not frame.le(frame.pc(u), d) or not frame.le(frame.pc(d), u):
                q = cs[j].rep if i != j else cs[j].rep + Fraction(1, 10**9)
                return cs[i].rep, q
    return None


def is_hausdorff(f: RealFn) -> bool:
    return hausdorff_witness(f) is None


def nearly_finite_check(f: RealFn) -> bool:
    """Both generator joins are dense.

    The same condition read in the Booleanization (joins there equal to the
    top) is evaluated alongside and must agree.
    """
    frame = f.frame
    up_join = frame.join_all(f.up.values)
    down_join = frame.join_all(f.down.values)
    in_frame = (frame.pc(frame.pc(up_join)) == frame.top
                and frame.pc(frame.pc(down_join)) == frame.top)
    boo = booleanize(frame)
    B = boo.frame
    in_boolean = (B.join_all(boo.beta(v) for v in f.up.values) == B.top
                  and B.join_all(boo.beta(v) for v in f.down.values) == B.top)
    if in_frame != in_boolean:
        raise AssertionError("density read in the frame and in its Booleanization disagree")
    return in_frame


def is_hnf(f: RealFn) -> bool:
    return is_hausdorff(f) and nearly_finite_check(f)


# -- transfer to and from the Booleanization ---------------------------------------

def gamma(f: RealFn) -> RealFn:
    if not is_hausdorff(f):
        raise NotHausdorff(f"not Hausdorff: {f}")
    return compose_hom(booleanize(f.frame).beta, f)


def delta(frame: FiniteFrame, g: RealFn) -> RealFn:
    """``up(p)`` is the join in ``frame`` of ``g(r, -)`` over ``r > p``;
    ``down(q)`` the join of ``g(-, s)`` over ``s < q``."""
    boo = booleanize(frame)
    if g.frame != boo.frame:
        raise FrameMismatch("argument must live on the Booleanization of the frame")
    emb = boo.embed
    up = from_cells(ANTITONE, g.up.breakpoints,
                    lambda p: join_above(frame, g.up, p, lambda v: emb[v]))
    down = from_cells(ISOTONE, g.down.breakpoints,
                      lambda q: join_below(frame, g.down, q, lambda v: emb[v]))
    return RealFn(frame, up, down)


# -- Riesz operations on nearly finite Hausdorff functions ----------------------------

def _require_hnf(*fs: RealFn):
    for f in fs:
        if not is_hausdorff(f):
            raise NotHausdorff(f"not Hausdorff: {f}")
        if not nearly_finite_check(f):
            raise NotNearlyFinite(f"not nearly finite: {f}")


def _hnf_sum(f: RealFn, g: RealFn, per_term: bool) -> RealFn:
    if f.frame != g.frame:
        raise FrameMismatch("functions live on different frames")
    _require_hnf(f, g)
    frame = f.frame

    def dneg(v):
        return frame.pc(frame.pc(v))

    def inner(a, b, x):
        if per_term:
            return sup_convolution(frame, a, b, x, dneg)
        return dneg(sup_convolution(frame, a, b, x))

    up_sums = tuple(sorted(_sums(f.up, g.up)))
    down_sums = tuple(sorted(_sums(f.down, g.down)))
    # the inner joins are constant on the cells of the sum breakpoints, so
    # the outer join over t > p (t < q) is a suffix (prefix) join of them
    up_cells = cells(up_sums)
    up_vals = [inner(f.up, g.up, c.rep) for c in up_cells]
    down_cells = cells(down_sums)
    down_vals = [inner(f.down, g.down, c.rep) for c in down_cells]

    def up_at(p):
        k = next(i for i, c in enumerate(up_cells) if c.rep == p)
        start = k if up_cells[k].is_open else k + 1
        return frame.join_all(up_vals[start:])

    def down_at(q):
        k = next(i for i, c in enumerate(down_cells) if c.rep == q)
        stop = k + 1 if down_cells[k].is_open else k
        return frame.join_all(down_vals[:stop])

    return RealFn(frame, from_cells(ANTITONE, up_sums, up_at),
                  from_cells(ISOTONE, down_sums, down_at))


def hnf_add(f: RealFn, g: RealFn) -> RealFn:
    """Direct evaluation of the sum: ``up(p)`` is the join over ``r > p`` of
    ``(join over t of f(t, -) ^ g(r - t, -))**``; dually for ``down``.

    The double pseudocomplement sits on the inner join over ``t``.
    """
    return _hnf_sum(f, g, per_term=False)


def hnf_add_per_term(f: RealFn, g: RealFn) -> RealFn:
    """Variant applying ``**`` to each meet before the join over ``t``.

    Kept for comparison only: on frames with a dense non-top join of two
    disjoint regular elements it returns a function that is not Hausdorff.
    """
    return _hnf_sum(f, g, per_term=True)


def hnf_negate(f: RealFn) -> RealFn:
    _require_hnf(f)
    return negate(f)


def hnf_scalar(lam, f: RealFn) -> RealFn:
    lam = as_fraction(lam)
    _require_hnf(f)
    return scalar(lam, f)


def dual_add(f: RealFn, g: RealFn) -> RealFn:
    """The sum computed through the Booleanization."""
    return delta(f.frame, add(gamma(f), gamma(g)))


def dual_scalar(lam, f: RealFn) -> RealFn:
    return delta(f.frame, scalar(lam, gamma(f)))


def dual_negate(f: RealFn) -> RealFn:
    return delta(f.frame, negate(gamma(f)))


# -- the rescaling used for dense cozero elements --------------------------------

def alpha(p: Fraction) -> Fraction:
    """Order isomorphism from the rationals onto the rationals in ``(-1, 1)``."""
    return p / (1 + abs(p))


def alpha_inverse(y: Fraction) -> Fraction:
    if not -1 < y < 1:
        raise ValueError("alpha_inverse is only defined on (-1, 1)")
    return y / (1 - abs(y))


def alpha_rescale(f: RealFn) -> RealFn:
    """``g(p, -) = f(alpha(p), -)`` and ``g(-, q) = f(-, alpha(q))``."""
    def inside(bps):
        return [alpha_inverse(b) for b in bps if -1 < b < 1]

    up = from_cells(ANTITONE, inside(f.up.breakpoints), lambda p: f.up(alpha(p)))
    down = from_cells(ISOTONE, inside(f.down.breakpoints), lambda q: f.down(alpha(q)))
    return RealFn(f.frame, up, down)


# -- the trichotomy for C = H_nf --------------------------------------------

@dataclass
class TrichotomyReport:
    case: str                      # "certificate", "chi", or "dense_cozero"
    verified: bool
    element: int | None = None
    witness: RealFn | None = None
    enumerated: int = 0
    details: dict = field(default_factory=dict)


def chi_witness(frame: FiniteFrame, a: int) -> RealFn:
    return characteristic(frame, frame.pc(a), frame.pc(frame.pc(a)))


def cozero_generator(frame: FiniteFrame, a: int, grid: Iterable[Fraction]) -> RealFn | None:
    """Some ``f`` in C with ``0 <= f <= 1`` and ``f(-, 1) = a``, searched over
    grid functions; ``None`` if ``a`` is not a cozero on the grid."""
    from .oracles import grid_functions

    one = constant(frame, 1)
    zero = constant(frame, 0)
    for f0 in grid_functions(frame, tuple(grid)):
        if frame.join(f0.down(0), f0.up(0)) != a:
            continue
        g = add(meet_op(negate(f0), f0), one)
        g = meet_op(join_op(g, zero), one)
        if g.down(1) == a:
            return g
    return None


def prop_trichotomy(frame: FiniteFrame, grid: Iterable[Fraction]) -> TrichotomyReport:
    """Decide which way ``C(L) = H_nf(L)`` goes and produce a checked witness.

    * not extremally disconnected: ``chi(a*, a**)`` is nearly finite
      Hausdorff but not in C;
    * a dense cozero other than the top: its rescaled generator is in H̄ but
      not in C;
    * otherwise: every nearly finite Hausdorff grid function is in C.
    """
    from .oracles import hausdorff_grid_functions

    grid = tuple(sorted(as_fraction(g) for g in grid))
    cls = classify(frame)
    if not cls.extremally_disconnected:
        a = cls.witnesses["extremally_disconnected"][0]
        chi = chi_witness(frame, a)
        ok = is_hausdorff(chi) and nearly_finite_check(chi) and chi.kind != C
        return TrichotomyReport("chi", ok, element=a, witness=chi)
    dense_cozeros = [a for a in frame.elements
                     if a != frame.top and frame.is_dense(a) and is_cozero(frame, a)]
    if dense_cozeros:
        a = dense_cozeros[0]
        f = cozero_generator(frame, a, grid)
        if f is None:
            return TrichotomyReport("dense_cozero", False, element=a,
                                    details={"reason": "no grid generator found"})
        g = alpha_rescale(f)
        ok = is_hausdorff(g) and nearly_finite_check(g) and g.kind != C
        return TrichotomyReport("dense_cozero", ok, element=a, witness=g)
    count = 0
    bad = None
    for h in hausdorff_grid_functions(frame, grid):
        if not nearly_finite_check(h):
            continue
        count += 1
        if h.kind != C:
            bad = h
            break
    return TrichotomyReport("certificate", bad is None, witness=bad, enumerated=count)
