"""Finite frames: validated distributive lattices with Heyting structure.

Elements are integer indices ``0..n-1``.  All tables are computed once at
construction and the object is immutable afterwards, so frames are safe to
share and to use as cache keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from .errors import (NotAFrameHom, NotALattice, NotAPartialOrder,
                     NotDistributive)


def _closure(n: int, pairs: Iterable[tuple[int, int]]) -> list[list[bool]]:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i, j in pairs:
        leq[i][j] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return leq


class FiniteFrame:
    """A finite distributive lattice, hence a frame.

    ``leq[i][j]`` is true when element ``i`` is below element ``j``.
    """

    def __init__(self, leq: Sequence[Sequence[bool]], names: Sequence[str] | None = None):
        n = len(leq)
        if n == 0:
            raise NotALattice("a frame needs at least one element")
        if any(len(row) != n for row in leq):
            raise NotAPartialOrder("order relation must be a square matrix")
        self.leq = tuple(tuple(bool(x) for x in row) for row in leq)
        self.n = n
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if len(self.names) != n:
            raise ValueError("one name per element")
        self._check_partial_order()
        self._down = tuple(sum(1 << i for i in range(n) if self.leq[i][a]) for a in range(n))
        self._up = tuple(sum(1 << j for j in range(n) if self.leq[a][j]) for a in range(n))
        self._by_down = {m: a for a, m in enumerate(self._down)}
        self._by_up = {m: a for a, m in enumerate(self._up)}
        self._meet = self._bound_table(self._down, self._by_down, "meet")
        self._join = self._bound_table(self._up, self._by_up, "join")
        self.bottom = self._by_up.get((1 << n) - 1)
        self.top = self._by_down.get((1 << n) - 1)
        if self.bottom is None or self.top is None:
            raise NotALattice("no top or no bottom element")
        self._check_distributive()
        self._arrow = tuple(tuple(self._compute_arrow(a, b) for b in range(n)) for a in range(n))
        self._pc = tuple(self._arrow[a][self.bottom] for a in range(n))
        self._key = (self.leq, self.names)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]],
                   names: Sequence[str] | None = None) -> "FiniteFrame":
        """Build from generating pairs ``(i, j)`` meaning ``i <= j``; the
        reflexive-transitive closure is taken first."""
        pairs = list(pairs)
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise NotAPartialOrder(f"pair {(i, j)} out of range")
        return cls(_closure(n, pairs), names)

    def _check_partial_order(self):
        n, leq = self.n, self.leq
        for i in range(n):
            if not leq[i][i]:
                raise NotAPartialOrder(f"not reflexive at {i}")
        for i, j in product(range(n), repeat=2):
            if i != j and leq[i][j] and leq[j][i]:
                raise NotAPartialOrder(f"not antisymmetric: {i} and {j}")
        for i, j, k in product(range(n), repeat=3):
            if leq[i][j] and leq[j][k] and not leq[i][k]:
                raise NotAPartialOrder(f"not transitive: {i} <= {j} <= {k}")

    def _bound_table(self, masks, by_mask, what):
        n = self.n
        table = []
        for a in range(n):
            row = []
            for b in range(n):
                common = masks[a] & masks[b]
                # the bound is the common element whose own mask equals the intersection
                best = by_mask.get(common)
                if best is None:
                    raise NotALattice(f"{self.names[a]} and {self.names[b]} have no {what}")
                row.append(best)
            table.append(tuple(row))
        return tuple(table)

    def _check_distributive(self):
        m, j = self._meet, self._join
        for a, b, c in product(range(self.n), repeat=3):
            if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
                raise NotDistributive(
                    f"a^(b v c) != (a^b) v (a^c) for a={self.names[a]}, "
                    f"b={self.names[b]}, c={self.names[c]}")

    def _compute_arrow(self, a, b):
        acc = self.bottom
        for x in range(self.n):
            if self.leq[self._meet[a][x]][b]:
                acc = self._join[acc][x]
        return acc

    # -- basic structure --------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FiniteFrame) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"FiniteFrame(n={self.n}, names={list(self.names)})"

    @property
    def elements(self) -> range:
        return range(self.n)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def meet(self, a: int, b: int) -> int:
        return self._meet[a][b]

    def join(self, a: int, b: int) -> int:
        return self._join[a][b]

    def meet_all(self, xs: Iterable[int]) -> int:
        acc = self.top
        for x in xs:
            acc = self._meet[acc][x]
        return acc

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.bottom
        for x in xs:
            acc = self._join[acc][x]
        return acc

    def arrow(self, a: int, b: int) -> int:
        return self._arrow[a][b]

    def pc(self, a: int) -> int:
        return self._pc[a]

    def is_complemented(self, a: int) -> bool:
        return self._join[a][self._pc[a]] == self.top

    def is_regular(self, a: int) -> bool:
        return self._pc[self._pc[a]] == a

    def is_dense(self, a: int) -> bool:
        return self._pc[a] == self.bottom

    def index(self, name: str) -> int:
        return self.names.index(name)

    @cached_property
    def complemented(self) -> tuple[int, ...]:
        return tuple(a for a in self.elements if self.is_complemented(a))

    @cached_property
    def is_boolean(self) -> bool:
        return len(self.complemented) == self.n


def build_frame(leq: Sequence[Sequence[bool]], names: Sequence[str] | None = None) -> FiniteFrame:
    return FiniteFrame(leq, names)


@dataclass(frozen=True, eq=False)
class FrameHom:
    """A map between finite frames preserving 0, 1 and binary meets and joins."""

    source: FiniteFrame
    target: FiniteFrame
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(x) for x in self.map))
        s, t, h = self.source, self.target, self.map
        if len(h) != s.n or any(not 0 <= x < t.n for x in h):
            raise NotAFrameHom("map has the wrong shape")
        if h[s.top] != t.top or h[s.bottom] != t.bottom:
            raise NotAFrameHom("top or bottom not preserved")
        for a, b in product(s.elements, repeat=2):
            if h[s.meet(a, b)] != t.meet(h[a], h[b]):
                raise NotAFrameHom(f"meet of {s.names[a]}, {s.names[b]} not preserved")
            if h[s.join(a, b)] != t.join(h[a], h[b]):
                raise NotAFrameHom(f"join of {s.names[a]}, {s.names[b]} not preserved")

    def __call__(self, a: int) -> int:
        return self.map[a]

    def __eq__(self, other):
        return (isinstance(other, FrameHom) and self.source == other.source
                and self.target == other.target and self.map == other.map)

    def __hash__(self):
        return hash((self.source, self.target, self.map))

    @property
    def is_iso(self) -> bool:
        # a bijective lattice homomorphism between finite lattices is an isomorphism
        return self.source.n == self.target.n and len(set(self.map)) == self.source.n

    def compose(self, other: "FrameHom") -> "FrameHom":
        """``self`` after ``other``."""
        if other.target != self.source:
            raise NotAFrameHom("cannot compose: frames do not match")
        return FrameHom(other.source, self.target, tuple(self.map[x] for x in other.map))


def identity_hom(frame: FiniteFrame) -> FrameHom:
    return FrameHom(frame, frame, tuple(frame.elements))


# -- order-theoretic relations ---------------------------------------------

def heyting(frame: FiniteFrame, a: int, b: int) -> int:
    return frame.arrow(a, b)


def pseudocomplement(frame: FiniteFrame, a: int) -> int:
    return frame.pc(a)


def rather_below(frame: FiniteFrame, b: int, a: int) -> bool:
    return frame.join(frame.pc(b), a) == frame.top


@lru_cache(maxsize=512)
def completely_below(frame: FiniteFrame) -> tuple[tuple[bool, ...], ...]:
    """Largest interpolative relation inside the rather-below relation.

    Greatest fixpoint of ``R -> R & (R o R)`` started from rather-below.
    """
    n = frame.n
    rel = [[rather_below(frame, b, a) for a in range(n)] for b in range(n)]
    while True:
        nxt = [[rel[b][a] and any(rel[b][c] and rel[c][a] for c in range(n))
                for a in range(n)] for b in range(n)]
        if nxt == rel:
            return tuple(tuple(row) for row in rel)
        rel = nxt


def is_completely_below(frame: FiniteFrame, b: int, a: int) -> bool:
    return completely_below(frame)[b][a]


def is_cozero(frame: FiniteFrame, a: int) -> bool:
    """Cozero test for finite frames: ``a`` is completely below itself.

    The defining existential over continuous functions stabilises in a finite
    frame; agreement with that definition is checked against a grid
    enumeration in the test suite.
    """
    return completely_below(frame)[a][a]


def interpolation_chain(frame: FiniteFrame, b: int, a: int) -> list[int] | None:
    """A finite chain ``b <= c0 <= ... <= a`` whose members are rather below
    themselves, or ``None`` when ``b`` is not completely below ``a``.

    Any rational-indexed family witnessing complete-belowness takes finitely
    many values here, each on a non-degenerate interval, so each value is
    complemented; one complemented element between ``b`` and ``a`` suffices.
    """
    if not completely_below(frame)[b][a]:
        return None
    between = [c for c in frame.complemented if frame.le(b, c) and frame.le(c, a)]
    return [max(between, key=lambda c: bin(frame._down[c]).count("1"))]


# -- classification ----------------------------------------------------------

PREDICATES = ("regular", "completely_regular", "extremally_disconnected", "boolean",
              "p_frame", "almost_p_frame", "almost_boolean")


@dataclass(frozen=True)
class Classification:
    flags: dict[str, bool]
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __getattr__(self, name):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name]
        raise AttributeError(name)


def classify(frame: FiniteFrame) -> Classification:
    f = frame
    cb = completely_below(f)
    wit: dict[str, tuple[int, ...]] = {}
    wit["regular"] = tuple(
        a for a in f.elements
        if f.join_all(b for b in f.elements if rather_below(f, b, a)) != a)
    wit["completely_regular"] = tuple(
        a for a in f.elements
        if f.join_all(b for b in f.elements if cb[b][a]) != a)
    wit["extremally_disconnected"] = tuple(
        a for a in f.elements if f.join(f.pc(a), f.pc(f.pc(a))) != f.top)
    wit["boolean"] = tuple(a for a in f.elements if not f.is_complemented(a))
    cozeros = [a for a in f.elements if is_cozero(f, a)]
    wit["p_frame"] = tuple(a for a in cozeros if not f.is_complemented(a))
    wit["almost_p_frame"] = tuple(a for a in cozeros if not f.is_regular(a))
    wit["almost_boolean"] = tuple(sorted(set(
        wit["regular"] + wit["extremally_disconnected"] + wit["p_frame"])))
    flags = {k: not wit[k] for k in PREDICATES}
    return Classification(flags, wit)


# -- Booleanization ---------------------------------------------------------

class Booleanization(NamedTuple):
    frame: FiniteFrame
    beta: FrameHom
    embed: tuple[int, ...]  # index in the Boolean frame -> index in the source


@lru_cache(maxsize=512)
def booleanize(frame: FiniteFrame) -> Booleanization:
    """Regular elements with inherited meets; joins are double pseudocomplements."""
    regular = [a for a in frame.elements if frame.is_regular(a)]
    pos = {a: i for i, a in enumerate(regular)}
    leq = [[frame.le(a, b) for b in regular] for a in regular]
    boolean = FiniteFrame(leq, [frame.names[a] for a in regular])
    beta = FrameHom(frame, boolean, tuple(pos[frame.pc(frame.pc(a))] for a in frame.elements))
    return Booleanization(boolean, beta, tuple(regular))


# -- standard frames ----------------------------------------------------------

def chain_frame(n: int) -> FiniteFrame:
    """The n-element chain ``0 < 1 < ... < n-1``."""
    names = [str(i) for i in range(n)]
    if n == 3:
        names = ["0", "m", "1"]
    return FiniteFrame([[i <= j for j in range(n)] for i in range(n)], names)


def powerset_frame(n: int) -> FiniteFrame:
    """The Boolean frame of subsets of ``{0..n-1}``; element index = bitmask."""
    size = 1 << n

    def name(mask):
        return "{" + ",".join(str(i) for i in range(n) if mask >> i & 1) + "}"

    return FiniteFrame([[a & b == a for b in range(size)] for a in range(size)],
                       [name(m) for m in range(size)])


def downset_frame(poset_leq: Sequence[Sequence[bool]],
                  names: Sequence[str] | None = None) -> FiniteFrame:
    """Frame of down-closed subsets of a finite poset (or preorder)."""
    k = len(poset_leq)
    sets = []
    for mask in range(1 << k):
        if all(not (mask >> j & 1) or all(mask >> i & 1 for i in range(k) if poset_leq[i][j])
               for j in range(k)):
            sets.append(mask)
    sets.sort(key=lambda m: (bin(m).count("1"), m))
    leq = [[a & b == a for b in sets] for a in sets]
    labels = list(names) if names is not None else list(range(k))
    return FiniteFrame(leq, ["{" + ",".join(str(labels[i]) for i in range(k) if m >> i & 1) + "}"
                             for m in sets])
