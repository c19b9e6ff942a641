"""JSON-shaped serialization for frames, functions, spaces and vectors.

Rationals are written as ``"num/den"`` strings; infinite endpoints as
``"inf"`` / ``"-inf"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import ParseError
from .frames import FiniteFrame
from .intervalfn import is_hausdorff, nearly_finite_check
from .realfn import IC_EXT, RealFn
from .rieszfd import BandFD, RieszVec
from .spatial import INF, FiniteSpace, IntervalValuedFn
from .steps import ANTITONE, ISOTONE, StepMap


def fmt_rational(x) -> str:
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s, allow_inf: bool = False):
    if isinstance(s, bool):
        raise ParseError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ParseError(f"rationals are written as strings, got {s!r}")
    t = s.strip()
    if allow_inf and t in ("inf", "+inf", "-inf"):
        return -INF if t.startswith("-") else INF
    try:
        return Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational: {s!r}") from None


def _need(obj: Any, key: str, kind: type):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing field {key!r}")
    val = obj[key]
    if not isinstance(val, kind):
        raise ParseError(f"field {key!r} has the wrong type")
    return val


# -- frames ---------------------------------------------------------------------

def frame_to_dict(frame: FiniteFrame) -> dict:
    return {"elements": list(frame.names),
            "leq": [[i, j] for i in frame.elements for j in frame.elements
                    if i != j and frame.le(i, j)]}


def frame_from_dict(obj: Any) -> FiniteFrame:
    names = _need(obj, "elements", list)
    pairs = _need(obj, "leq", list)
    n = len(names)
    clean = []
    for p in pairs:
        if (not isinstance(p, list) or len(p) != 2
                or not all(isinstance(i, int) and not isinstance(i, bool) for i in p)):
            raise ParseError(f"bad order pair {p!r}")
        if not all(0 <= i < n for i in p):
            raise ParseError(f"order pair {p!r} mentions an unknown element")
        clean.append((p[0], p[1]))
    return FiniteFrame.from_pairs(n, clean, [str(x) for x in names])


# -- functions --------------------------------------------------------------------

def _stepmap_to_list(sm: StepMap) -> list:
    return [[fmt_rational(b) for b in sm.breakpoints], list(sm.values)]


def _stepmap_from_list(obj: Any, orientation: str) -> StepMap:
    if not isinstance(obj, list) or len(obj) != 2 or not all(isinstance(x, list) for x in obj):
        raise ParseError("a step map is written as [[breakpoints], [values]]")
    bps = tuple(parse_rational(b) for b in obj[0])
    vals = obj[1]
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in vals):
        raise ParseError("step values are element indices")
    try:
        return StepMap(bps, tuple(vals), orientation)
    except ValueError as e:
        raise ParseError(str(e)) from None


def function_to_dict(f: RealFn) -> dict:
    out = {"frame": frame_to_dict(f.frame), "up": _stepmap_to_list(f.up),
           "down": _stepmap_to_list(f.down), "class": f.kind}
    if f.kind == IC_EXT:
        out["class"] = "partial"
        out["hausdorff"] = is_hausdorff(f)
        out["nearly_finite"] = nearly_finite_check(f)
    return out


def function_from_dict(obj: Any) -> RealFn:
    frame = frame_from_dict(_need(obj, "frame", dict))
    up = _stepmap_from_list(_need(obj, "up", list), ANTITONE)
    down = _stepmap_from_list(_need(obj, "down", list), ISOTONE)
    return RealFn(frame, up, down)


# -- spaces and interval functions -------------------------------------------------

def space_to_dict(space: FiniteSpace) -> dict:
    return {"points": list(space.points),
            "opens": [[i for i in range(space.n) if m >> i & 1] for m in space.opens]}


def space_from_dict(obj: Any) -> FiniteSpace:
    points = _need(obj, "points", list)
    opens = _need(obj, "opens", list)
    for u in opens:
        if not isinstance(u, list) or not all(isinstance(i, int) for i in u):
            raise ParseError(f"bad open set {u!r}")
    return FiniteSpace.from_sets([str(p) for p in points], opens)


def interval_fn_to_dict(f: IntervalValuedFn) -> dict:
    return {"space": space_to_dict(f.space),
            "lower": [fmt_rational(v) for v in f.lower],
            "upper": [fmt_rational(v) for v in f.upper]}


def interval_fn_from_dict(obj: Any) -> IntervalValuedFn:
    space = space_from_dict(_need(obj, "space", dict))
    lower = tuple(parse_rational(v, True) for v in _need(obj, "lower", list))
    upper = tuple(parse_rational(v, True) for v in _need(obj, "upper", list))
    return IntervalValuedFn(space, lower, upper)


# -- vectors ------------------------------------------------------------------------

def vector_to_dict(v: RieszVec) -> dict:
    return {"dim": v.dim, "coords": [fmt_rational(c) for c in v.coords]}


def vector_from_dict(obj: Any) -> RieszVec:
    dim = _need(obj, "dim", int)
    coords = [parse_rational(c) for c in _need(obj, "coords", list)]
    if len(coords) != dim:
        raise ParseError("dim does not match the number of coordinates")
    return RieszVec(tuple(coords))


def band_to_list(b: BandFD) -> list[int]:
    return sorted(b.support)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
