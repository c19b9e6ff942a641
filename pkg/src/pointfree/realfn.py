"""Continuous (extended, partial) real functions on a finite frame.

A function is a pair of step maps: ``up`` gives the image of the generators
``(p, -)`` and ``down`` the image of ``(-, q)``.  The continuity conventions
of :mod:`pointfree.steps` make the two join-continuity relations hold by
construction, so only the remaining relations are ever checked.

Which relations hold decides the kind:

* ``C``: all of them (continuous real functions),
* ``C_extended``: everything except the two "total" joins,
* ``IC_extended``: disjointness only (extended partial real functions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Sequence

from .errors import (FrameMismatch, MeetNotZero, NotAnExtendedScale, NotBoolean,
                     NotDiscrete, NotNonnegative, OracleNotIso, PreconditionFailed,
                     RelationViolation, NotAFrameHom)
from .frames import (FiniteFrame, FrameHom, booleanize, completely_below,
                     interpolation_chain, rather_below)
from .steps import (ANTITONE, ISOTONE, StepMap, as_fraction, cells, from_cells,
                    merge_breakpoints)

C = "C"
C_EXT = "C_extended"
IC_EXT = "IC_extended"
KINDS = (C, C_EXT, IC_EXT)


def relations(frame: FiniteFrame, up: StepMap, down: StepMap) -> dict[str, bool]:
    """Decide r1, r2, r5, r6 exactly (r3 and r4 hold structurally).

    Pairs ``p < q`` and ``p >= q`` are enumerated over cells of the merged
    breakpoints; a pair inside one open cell realises ``p < q`` as well.
    """
    cs = cells(merge_breakpoints(up.breakpoints, down.breakpoints))
    ups = [up(c.rep) for c in cs]
    downs = [down(c.rep) for c in cs]
    r1 = r2 = True
    for i, j in product(range(len(cs)), repeat=2):
        if i >= j and r1 and frame.meet(ups[i], downs[j]) != frame.bottom:
            r1 = False
        if (i < j or (i == j and cs[i].is_open)) and r2 \
                and frame.join(ups[i], downs[j]) != frame.top:
            r2 = False
    return {
        "r1": r1,
        "r2": r2,
        "r5": frame.join_all(ups) == frame.top,
        "r6": frame.join_all(downs) == frame.top,
    }


def kind_of(rel: dict[str, bool]) -> str:
    if not rel["r1"]:
        raise RelationViolation("r1 fails: up(p) and down(q) meet for some p >= q")
    if rel["r2"] and rel["r5"] and rel["r6"]:
        return C
    if rel["r2"]:
        return C_EXT
    return IC_EXT


@dataclass(frozen=True, eq=False)
class RealFn:
    frame: FiniteFrame
    up: StepMap
    down: StepMap

    def __post_init__(self):
        if self.up.orientation != ANTITONE or self.down.orientation != ISOTONE:
            raise ValueError("up must be antitone and down isotone")
        f = self.frame
        for sm in (self.up, self.down):
            if any(not 0 <= v < f.n for v in sm.values):
                raise ValueError("step value is not an element of the frame")
        if not self.up.is_monotone(f.le) or not self.down.is_monotone(f.le):
            raise RelationViolation("up must decrease and down must increase")
        rel = relations(f, self.up, self.down)
        object.__setattr__(self, "rel", rel)
        object.__setattr__(self, "kind", kind_of(rel))

    def __eq__(self, other):
        return (isinstance(other, RealFn) and self.frame == other.frame
                and self.up == other.up and self.down == other.down)

    def __hash__(self):
        return hash((self.frame, self.up, self.down))

    def __repr__(self):
        def show(sm):
            names = [self.frame.names[v] for v in sm.values]
            return f"{[str(b) for b in sm.breakpoints]}:{names}"
        return f"RealFn[{self.kind}](up={show(self.up)}, down={show(self.down)})"

    @property
    def breakpoints(self) -> tuple[Fraction, ...]:
        return merge_breakpoints(self.up.breakpoints, self.down.breakpoints)

    def cells(self, extra: Iterable[Fraction] = ()):
        return cells(merge_breakpoints(self.breakpoints, extra))


PartialRealFn = RealFn


def make(frame: FiniteFrame, up_bps, up_vals, down_bps, down_vals) -> RealFn:
    return RealFn(frame, StepMap(tuple(up_bps), tuple(up_vals), ANTITONE),
                  StepMap(tuple(down_bps), tuple(down_vals), ISOTONE))


def _same_frame(*fs: RealFn) -> FiniteFrame:
    frame = fs[0].frame
    if any(g.frame != frame for g in fs[1:]):
        raise FrameMismatch("functions live on different frames")
    return frame


# -- scales ---------------------------------------------------------------

@dataclass(frozen=True)
class Scale:
    """A piecewise-constant map from the rationals into a frame.

    ``segments[i]`` is the value on the open gap before ``breakpoints[i]``
    (the last one on the gap after the final breakpoint); ``points[i]`` is
    the value exactly at ``breakpoints[i]``.
    """

    frame: FiniteFrame
    breakpoints: tuple[Fraction, ...]
    segments: tuple[int, ...]
    points: tuple[int, ...] | None = None

    def __post_init__(self):
        bps = tuple(as_fraction(b) for b in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        if len(self.segments) != len(bps) + 1:
            raise ValueError("one segment value more than breakpoints")
        if any(a >= b for a, b in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if self.points is None:
            object.__setattr__(self, "points", tuple(self.segments[1:]))
        elif len(self.points) != len(bps):
            raise ValueError("one point value per breakpoint")

    @classmethod
    def from_stepmap(cls, frame: FiniteFrame, sm: StepMap) -> "Scale":
        if sm.orientation != ANTITONE:
            raise ValueError("scales are read from right-continuous step maps")
        return cls(frame, sm.breakpoints, sm.values)

    def __call__(self, x) -> int:
        x = as_fraction(x)
        for i, b in enumerate(self.breakpoints):
            if x < b:
                return self.segments[i]
            if x == b:
                return self.points[i]
        return self.segments[-1]

    def _cell_values(self) -> list[tuple[int, bool]]:
        out = []
        for i, s in enumerate(self.segments):
            out.append((s, True))
            if i < len(self.points):
                out.append((self.points[i], False))
        return out


def is_extended_scale(sigma: Scale) -> bool:
    """``sigma(q)`` rather below ``sigma(p)`` for all ``p < q``.

    Zero-length segments (single points) are exempt from the self-comparison
    that the open segments must pass.
    """
    f = sigma.frame
    cv = sigma._cell_values()
    for i, (vi, open_i) in enumerate(cv):
        for j in range(i, len(cv)):
            vj = cv[j][0]
            if j == i and not open_i:
                continue
            if not rather_below(f, vj, vi):
                return False
    return True


def is_scale(sigma: Scale) -> bool:
    f = sigma.frame
    vals = [v for v, _ in sigma._cell_values()]
    return (is_extended_scale(sigma) and f.join_all(vals) == f.top
            and f.join_all(f.pc(v) for v in vals) == f.top)


def from_scale(sigma: Scale) -> RealFn:
    """``up(p)`` joins ``sigma(r)`` over ``r > p``; ``down(q)`` joins the
    pseudocomplements of ``sigma(r)`` over ``r < q``."""
    if not is_extended_scale(sigma):
        raise NotAnExtendedScale("some value is not rather below an earlier one")
    f = sigma.frame
    bps = sigma.breakpoints

    def locate(x):
        cs = cells(merge_breakpoints(bps, [x]))
        return cs, [c.rep for c in cs].index(x)

    def up_at(p):
        cs, k = locate(p)
        return f.join_all(sigma(c.rep) for c in cs[k + 1:])

    def down_at(q):
        cs, k = locate(q)
        return f.join_all(f.pc(sigma(c.rep)) for c in cs[:k])

    return RealFn(f, from_cells(ANTITONE, bps, up_at), from_cells(ISOTONE, bps, down_at))


# -- constructors ---------------------------------------------------------

def constant(frame: FiniteFrame, r) -> RealFn:
    r = as_fraction(r)
    return RealFn(frame, StepMap((r,), (frame.top, frame.bottom), ANTITONE),
                  StepMap((r,), (frame.bottom, frame.top), ISOTONE))


def characteristic(frame: FiniteFrame, a: int, b: int) -> RealFn:
    """The function that is ``a`` on ``[0, 1)`` from above and ``b`` on
    ``(0, 1]`` from below; requires ``a`` and ``b`` disjoint."""
    if frame.meet(a, b) != frame.bottom:
        raise MeetNotZero(f"{frame.names[a]} and {frame.names[b]} are not disjoint")
    one = Fraction(1)
    zero = Fraction(0)
    return RealFn(frame, StepMap((zero, one), (frame.top, a, frame.bottom), ANTITONE),
                  StepMap((zero, one), (frame.bottom, b, frame.top), ISOTONE))


def indicator(frame: FiniteFrame, a: int) -> RealFn:
    """Characteristic function of a complemented element."""
    return characteristic(frame, a, frame.pc(a))


# -- order and lattice operations ------------------------------------------

def _pointwise(frame, op, orientation, *sms: StepMap) -> StepMap:
    bps = merge_breakpoints(*(s.breakpoints for s in sms))

    def sample(x):
        vals = [s(x) for s in sms]
        acc = vals[0]
        for v in vals[1:]:
            acc = op(acc, v)
        return acc

    return from_cells(orientation, bps, sample)


def _stepmap_le(frame: FiniteFrame, a: StepMap, b: StepMap) -> bool:
    bps = merge_breakpoints(a.breakpoints, b.breakpoints)
    return all(frame.le(a(c.rep), b(c.rep)) for c in cells(bps))


def leq(f: RealFn, g: RealFn) -> bool:
    """Pointwise order.  For (extended) continuous functions the up-maps
    decide it and the down-maps must agree; partial functions need both."""
    frame = _same_frame(f, g)
    by_up = _stepmap_le(frame, f.up, g.up)
    by_down = _stepmap_le(frame, g.down, f.down)
    if f.kind != IC_EXT and g.kind != IC_EXT:
        if by_up != by_down:
            raise AssertionError(f"order by up-maps and down-maps disagree: {f} vs {g}")
        return by_up
    return by_up and by_down


def join_op(f: RealFn, g: RealFn) -> RealFn:
    frame = _same_frame(f, g)
    return RealFn(frame, _pointwise(frame, frame.join, ANTITONE, f.up, g.up),
                  _pointwise(frame, frame.meet, ISOTONE, f.down, g.down))


def meet_op(f: RealFn, g: RealFn) -> RealFn:
    frame = _same_frame(f, g)
    return RealFn(frame, _pointwise(frame, frame.meet, ANTITONE, f.up, g.up),
                  _pointwise(frame, frame.join, ISOTONE, f.down, g.down))


# -- linear operations ---------------------------------------------------------

def sup_convolution(frame: FiniteFrame, a: StepMap, b: StepMap, x: Fraction,
                    post: Callable[[int], int] | None = None) -> int:
    """Join over all rationals ``r`` of ``a(r) meet b(x - r)``, each term
    optionally passed through ``post`` before joining.

    Both factors are constant on the cells cut by ``a``'s breakpoints and the
    points ``x - c`` for ``c`` a breakpoint of ``b``.
    """
    cut = merge_breakpoints(a.breakpoints, (x - c for c in b.breakpoints))
    acc = frame.bottom
    for c in cells(cut):
        term = frame.meet(a(c.rep), b(x - c.rep))
        acc = frame.join(acc, post(term) if post else term)
    return acc


def _sums(a: StepMap, b: StepMap) -> set[Fraction]:
    return {x + y for x in a.breakpoints for y in b.breakpoints}


def add(f: RealFn, g: RealFn) -> RealFn:
    frame = _same_frame(f, g)
    up = from_cells(ANTITONE, _sums(f.up, g.up),
                    lambda p: sup_convolution(frame, f.up, g.up, p))
    down = from_cells(ISOTONE, _sums(f.down, g.down),
                      lambda q: sup_convolution(frame, f.down, g.down, q))
    return RealFn(frame, up, down)


def negate(f: RealFn) -> RealFn:
    """``(-f)(p, -) = f(-, -p)`` and ``(-f)(-, q) = f(-q, -)``."""
    up = StepMap(tuple(-b for b in reversed(f.down.breakpoints)),
                 tuple(reversed(f.down.values)), ANTITONE)
    down = StepMap(tuple(-b for b in reversed(f.up.breakpoints)),
                   tuple(reversed(f.up.values)), ISOTONE)
    return RealFn(f.frame, up, down)


def _stretch(f: RealFn, lam: Fraction) -> RealFn:
    return RealFn(f.frame,
                  StepMap(tuple(b * lam for b in f.up.breakpoints), f.up.values, ANTITONE),
                  StepMap(tuple(b * lam for b in f.down.breakpoints), f.down.values, ISOTONE))


def scalar(lam, f: RealFn) -> RealFn:
    lam = as_fraction(lam)
    if lam > 0:
        return _stretch(f, lam)
    if lam == 0:
        return constant(f.frame, 0)
    return negate(_stretch(f, -lam))


def subtract(f: RealFn, g: RealFn) -> RealFn:
    return add(f, negate(g))


def positive_part(f: RealFn) -> RealFn:
    return join_op(f, constant(f.frame, 0))


# -- evaluation -----------------------------------------------------------

def coz(f: RealFn) -> int:
    return f.frame.join(f.up(0), f.down(0))


def point_value(f: RealFn, prime: int) -> tuple:
    """Interval value of ``f`` at the spectrum point given by a prime element.

    Lower end is the sup of ``r`` with ``up(r)`` not below ``prime``, upper
    end the inf of ``r`` with ``down(r)`` not below ``prime``; infinite ends
    come back as ``float('inf')`` / ``float('-inf')``.
    """
    frame = f.frame
    inf = float("inf")
    holds_up = [not frame.le(v, prime) for v in f.up.values]
    if all(holds_up):
        lo = inf
    elif not holds_up[0]:
        lo = -inf
    else:
        lo = f.up.breakpoints[holds_up.index(False) - 1]
    holds_down = [not frame.le(v, prime) for v in f.down.values]
    if all(holds_down):
        hi = -inf
    elif not holds_down[-1]:
        hi = inf
    else:
        first = holds_down.index(True)
        hi = f.down.breakpoints[first - 1]
    return lo, hi


# -- discrete families -------------------------------------------------------

def is_discrete(frame: FiniteFrame, elements: Sequence[int]) -> bool:
    """Whether some cover has every member meeting at most one of ``elements``.

    Members allowed in such a cover form a down-closed set, so a cover exists
    exactly when their join is the top.
    """
    admissible = [c for c in frame.elements
                  if sum(frame.meet(c, y) != frame.bottom for y in elements) <= 1]
    return frame.join_all(admissible) == frame.top


def discrete_sup(fs: Sequence[RealFn]) -> RealFn:
    if not fs:
        raise ValueError("need at least one function")
    frame = _same_frame(*fs)
    zero = constant(frame, 0)
    if not all(leq(zero, f) for f in fs):
        raise NotNonnegative("every function in the family must be >= 0")
    if not is_discrete(frame, [f.up(0) for f in fs]):
        raise NotDiscrete("the family f_i(0, -) is not discrete")
    sigma = _pointwise(frame, frame.join, ANTITONE, *(f.up for f in fs))
    return from_scale(Scale.from_stepmap(frame, sigma))


# -- homomorphic images and Booleanization ---------------------------------

def compose_hom(h: FrameHom, f: RealFn) -> RealFn:
    if h.source != f.frame:
        raise FrameMismatch("homomorphism source differs from the function's frame")
    return RealFn(h.target, f.up.map_values(h), f.down.map_values(h))


def upsilon(f: RealFn) -> RealFn:
    """Post-compose with the double-pseudocomplement map into the Booleanization."""
    return compose_hom(booleanize(f.frame).beta, f)


def join_above(frame: FiniteFrame, sm: StepMap, p: Fraction,
               value: Callable[[int], int] = lambda v: v) -> int:
    """Join of ``value(sm(r))`` over all rationals ``r > p``."""
    cs = cells(merge_breakpoints(sm.breakpoints, [p]))
    k = [c.rep for c in cs].index(p)
    return frame.join_all(value(sm(c.rep)) for c in cs[k + 1:])


def join_below(frame: FiniteFrame, sm: StepMap, q: Fraction,
               value: Callable[[int], int] = lambda v: v) -> int:
    """Join of ``value(sm(r))`` over all rationals ``r < q``."""
    cs = cells(merge_breakpoints(sm.breakpoints, [q]))
    k = [c.rep for c in cs].index(q)
    return frame.join_all(value(sm(c.rep)) for c in cs[:k])


def upsilon_inverse(frame: FiniteFrame, g: RealFn) -> RealFn:
    """Recover ``f`` from its image in the Booleanization.

    ``f(p, -)`` is the join in ``frame`` of ``f(r, -)**`` over ``r > p``, and
    dually for ``f(-, q)``; the double pseudocomplements are exactly the
    values of the image read back in ``frame``.
    """
    boo = booleanize(frame)
    if g.frame != boo.frame:
        raise FrameMismatch("function does not live on the Booleanization")
    emb = boo.embed
    up = from_cells(ANTITONE, g.up.breakpoints,
                    lambda p: join_above(frame, g.up, p, lambda v: emb[v]))
    down = from_cells(ISOTONE, g.down.breakpoints,
                      lambda q: join_below(frame, g.down, q, lambda v: emb[v]))
    return RealFn(frame, up, down)


def reconstruction_witness(f: RealFn) -> Fraction | None:
    """First ``p`` where ``f(p, -)`` differs from the join of
    ``f(r, -)**`` over ``r > p``; ``None`` if the identity holds everywhere."""
    frame = f.frame
    for c in f.cells():
        p = c.rep
        if f.up(p) != join_above(frame, f.up, p, lambda v: frame.pc(frame.pc(v))):
            return p
    return None


def reconstruct_double_neg(f: RealFn) -> bool:
    return reconstruction_witness(f) is None


# -- density witnesses in the Booleanization -----------------------------------

def witness_scale(frame: FiniteFrame, q, chain: Sequence[int]) -> Scale:
    """Scale that is 1 below 0, walks down ``chain`` on ``[0, q)`` and is 0 from ``q``.

    The chain is laid out on equally spaced levels, its largest member
    nearest 0 (an order-reversing relabelling of ``[0, q]``).
    """
    q = as_fraction(q)
    if q <= 0:
        return Scale(frame, (Fraction(0),), (frame.top, frame.bottom))
    k = len(chain)
    bps = [q * j / k for j in range(k + 1)]
    segs = [frame.top] + [chain[k - 1 - j] for j in range(k)] + [frame.bottom]
    return Scale(frame, tuple(bps), tuple(segs))


def density_witness(frame: FiniteFrame, h: RealFn, q, a: int,
                    chain: Sequence[int] | None = None) -> RealFn:
    """The function on ``frame`` built from a chain between ``a`` and ``h(q, -)``.

    ``h`` lives on the Booleanization of ``frame``.  The result ``f``
    satisfies ``0 <= upsilon(f) <= h``.
    """
    q = as_fraction(q)
    boo = booleanize(frame)
    if h.frame != boo.frame:
        raise FrameMismatch("h must live on the Booleanization")
    if q < 0:
        raise PreconditionFailed("q must be non-negative")
    target = boo.embed[h.up(q)]
    if chain is None:
        chain = interpolation_chain(frame, a, target)
        if chain is None:
            raise PreconditionFailed(
                f"{frame.names[a]} is not completely below {frame.names[target]}")
    chain = list(chain)
    if not chain:
        raise PreconditionFailed("empty chain")
    ok = (frame.le(a, chain[0]) and frame.le(chain[-1], target)
          and all(frame.le(x, y) for x, y in zip(chain, chain[1:]))
          and all(rather_below(frame, x, y) for i, x in enumerate(chain) for y in chain[i:]))
    if not ok:
        raise PreconditionFailed("chain does not interpolate between a and h(q, -)")
    sigma = witness_scale(frame, q, chain)
    if not is_scale(sigma):
        raise PreconditionFailed("witness map is not a scale")
    return from_scale(sigma)


def density_join(frame: FiniteFrame, h: RealFn, q) -> int:
    """Join, in the Booleanization, of ``upsilon(f)(q, -)`` over the witnesses
    ``f`` built at every level ``q' > q`` (``q' >= 0``) and every ``a``
    completely below ``h(q', -)``."""
    q = as_fraction(q)
    boo = booleanize(frame)
    B = boo.frame
    cb = completely_below(frame)
    levels = [c.rep for c in cells(merge_breakpoints(h.up.breakpoints, [q, 0]))
              if c.rep > q and c.rep >= 0]
    acc = B.bottom
    for level in levels:
        target = boo.embed[h.up(level)]
        for a in frame.elements:
            if cb[a][target]:
                w = upsilon(density_witness(frame, h, level, a))
                acc = B.join(acc, w.up(q))
    return acc


# -- recovering frame isomorphisms from function-space isomorphisms --------------

def boolean_iso_from_riesz_iso(phi: Callable[[RealFn], RealFn], L: FiniteFrame,
                               M: FiniteFrame) -> FrameHom:
    """Frame isomorphism ``a -> Phi'(chi_a)(0, -)`` with ``Phi' = Phi - Phi(0)``."""
    if not L.is_boolean or not M.is_boolean:
        raise NotBoolean("both frames must be Boolean")
    shift = negate(phi(constant(L, 0)))

    def normalised(f):
        out = add(phi(f), shift)
        if out.frame != M:
            raise OracleNotIso("oracle does not land in the target frame")
        return out

    chis = {a: indicator(L, a) for a in L.elements}
    images = {a: normalised(chis[a]) for a in L.elements}
    for a, b in product(L.elements, repeat=2):
        if normalised(meet_op(chis[a], chis[b])) != meet_op(images[a], images[b]):
            raise OracleNotIso("oracle does not preserve meets")
        if normalised(join_op(chis[a], chis[b])) != join_op(images[a], images[b]):
            raise OracleNotIso("oracle does not preserve joins")
    try:
        hom = FrameHom(L, M, tuple(images[a].up(0) for a in L.elements))
    except NotAFrameHom as exc:
        raise OracleNotIso(str(exc)) from exc
    if not hom.is_iso:
        raise OracleNotIso("induced frame map is not bijective")
    return hom


@lru_cache(maxsize=None)
def _zero(frame: FiniteFrame) -> RealFn:
    return constant(frame, 0)


def is_nonnegative(f: RealFn) -> bool:
    return leq(_zero(f.frame), f)
