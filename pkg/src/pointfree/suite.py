"""Law checks over generated and enumerated instances, and their report.

Every check owns a ``random.Random`` seeded from the run seed and the check
id, so a check's outcome does not depend on which other checks run.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Any, Callable, Iterable

from . import io
from .errors import ConfigError, PointfreeError
from .frames import (FiniteFrame, FrameHom, booleanize, build_frame, classify,
                     completely_below, interpolation_chain, is_cozero, powerset_frame,
                     rather_below)
from .generators import (DEFAULT_GRID, generate_frame, random_c_function,
                         random_ext_values, random_hausdorff, random_nonnegative,
                         random_partial, random_unit, random_vector)
from .intervalfn import (chi_witness, delta, dual_add, dual_negate, dual_scalar, gamma,
                         hnf_add, hnf_negate, hnf_scalar, info_leq, is_hausdorff,
                         is_hnf, nearly_finite_check, prop_trichotomy)
from .oracles import (all_frames, all_topologies, cozero_set, grid_functions,
                      hausdorff_grid_functions, is_maximal, least_upper_bound)
from .realfn import (C, C_EXT, IC_EXT, RealFn, _stepmap_le, add, boolean_iso_from_riesz_iso,
                     compose_hom, constant, density_join, density_witness, discrete_sup,
                     from_scale, indicator, is_discrete, is_nonnegative, is_scale, join_op,
                     leq, meet_op, negate, positive_part, reconstruct_double_neg, scalar,
                     upsilon, upsilon_inverse, witness_scale)
from .rieszfd import (RieszVec, band_generated, band_membership_oracle, band_scale,
                      bands_booleanization_check, evaluate_at_atoms, is_weak_unit, m_embed, sandwich_check)
from .spatial import (ExtRealFn, FiniteSpace, baire_lower, baire_upper, is_maximal_spatial,
                      is_nlsc, is_spatial, nearly_finite_spatial, nl_add, nl_scalar,
                      open_frame, pi, pi_inverse, psi, psi_inverse)
from .steps import cells

SUITES = ("core", "realfn", "intervalfn", "spatial", "rieszfd", "universal")
LAMBDAS = tuple(Fraction(x) for x in ("1/2", "1", "2", "3"))


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    max_frame_size: int = 8
    samples_per_law: int = 200
    breakpoint_grid: tuple[Fraction, ...] = DEFAULT_GRID
    suites: tuple[str, ...] = SUITES
    # bounds for the exhaustive oracles
    oracle_grid: tuple[Fraction, ...] = (Fraction(-1), Fraction(0), Fraction(1))
    exhaustive_frame_size: int = 6
    max_space_points: int = 5
    discrete_space_points: int = 4
    maximality_space_points: int = 3
    boolean_atoms: int = 4
    riesz_dim: int = 4
    pairs_per_space: int = 60

    def __post_init__(self):
        for name in ("breakpoint_grid", "oracle_grid"):
            g = tuple(Fraction(x) for x in getattr(self, name))
            if not g:
                raise ConfigError(f"{name} must be nonempty")
            if any(a >= b for a, b in zip(g, g[1:])):
                raise ConfigError(f"{name} must be strictly increasing")
            object.__setattr__(self, name, g)
        if self.samples_per_law < 1:
            raise ConfigError("samples_per_law must be at least 1")
        if self.max_frame_size < 2:
            raise ConfigError("max_frame_size must be at least 2")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ConfigError(f"unknown suites: {sorted(unknown)}")
        object.__setattr__(self, "suites", tuple(s for s in SUITES if s in self.suites))


@dataclass
class CheckRecord:
    check_id: str
    anchor: str
    instances: int = 0
    failures: int = 0
    counterexample: Any = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        out = {"check": self.check_id, "anchor": self.anchor, "instances": self.instances,
               "failures": self.failures, "counterexample": self.counterexample}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    config: SuiteConfig
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_dict(self) -> dict:
        c = self.config
        return {"config": {"seed": c.seed, "max_frame_size": c.max_frame_size,
                           "samples_per_law": c.samples_per_law,
                           "breakpoint_grid": [io.fmt_rational(g) for g in c.breakpoint_grid],
                           "oracle_grid": [io.fmt_rational(g) for g in c.oracle_grid],
                           "suites": list(c.suites)},
                "passed": self.passed,
                "checks": [r.to_dict() for r in self.records]}

    def to_text(self) -> str:
        lines = []
        for r in self.records:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status} {r.check_id} [{r.anchor}] "
                         f"instances={r.instances} failures={r.failures}")
            if r.note:
                lines.append(f"    note: {r.note}")
            if not r.passed:
                lines.append("    counterexample: " + io.json.dumps(r.counterexample, sort_keys=True))
        ok = sum(r.passed for r in self.records)
        lines.append(f"{ok}/{len(self.records)} checks passed")
        return "\n".join(lines)


class Tally:
    """Counts instances and keeps the first counterexample."""

    def __init__(self, record: CheckRecord):
        self.record = record

    def check(self, ok: bool, example: Callable[[], Any] | Any = None):
        self.record.instances += 1
        if not ok:
            self.record.failures += 1
            if self.record.counterexample is None:
                ex = example() if callable(example) else example
                self.record.counterexample = describe(ex) if ex is not None else "no detail"

    def guard(self, thunk: Callable[[], bool], example: Callable[[], Any] | Any = None):
        """Like ``check`` but a raised library error counts as a failure."""
        try:
            ok = bool(thunk())
        except (PointfreeError, ValueError, AssertionError) as exc:
            self.check(False, lambda: {"error": f"{type(exc).__name__}: {exc}",
                                       "instance": describe(example() if callable(example)
                                                            else example)})
            return
        self.check(ok, example)


def describe(obj: Any) -> Any:
    if isinstance(obj, RealFn):
        return io.function_to_dict(obj)
    if isinstance(obj, FiniteFrame):
        return io.frame_to_dict(obj)
    if isinstance(obj, FiniteSpace):
        return io.space_to_dict(obj)
    if isinstance(obj, RieszVec):
        return io.vector_to_dict(obj)
    if isinstance(obj, ExtRealFn):
        return [io.fmt_rational(v) for v in obj.values]
    if isinstance(obj, (Fraction, float)):
        return io.fmt_rational(obj)
    if isinstance(obj, dict):
        return {str(k): describe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [describe(x) for x in obj]
    return obj


@dataclass(frozen=True)
class Check:
    check_id: str
    suite: str
    anchor: str
    run: Callable[[SuiteConfig, random.Random, Tally], None]
    note: str = ""


REGISTRY: dict[str, Check] = {}


def check(check_id: str, anchor: str, note: str = ""):
    def register(fn):
        REGISTRY[check_id] = Check(check_id, check_id.split(".")[0], anchor, fn, note)
        return fn
    return register


def check_seed(seed: int, check_id: str) -> int:
    return (seed * 1_000_003 + zlib.crc32(check_id.encode())) % (2 ** 32)


def run_check(c: Check, config: SuiteConfig) -> CheckRecord:
    rec = CheckRecord(c.check_id, c.anchor, note=c.note)
    c.run(config, random.Random(check_seed(config.seed, c.check_id)), Tally(rec))
    return rec


def run(config: SuiteConfig, only: Iterable[str] | None = None) -> Report:
    wanted = set(only) if only is not None else None
    report = Report(config)
    for cid in sorted(REGISTRY):
        c = REGISTRY[cid]
        if c.suite not in config.suites or (wanted is not None and cid not in wanted):
            continue
        report.records.append(run_check(c, config))
    return report


# -- helpers --------------------------------------------------------------------------

def _frame(cfg: SuiteConfig, rng: random.Random, size: int | None = None) -> FiniteFrame:
    return generate_frame(rng.randrange(2 ** 31), size or cfg.max_frame_size)


def _small_frames(cfg: SuiteConfig) -> tuple[FiniteFrame, ...]:
    return all_frames(min(cfg.exhaustive_frame_size, cfg.max_frame_size))


def _boolean(rng: random.Random, atoms: int) -> FiniteFrame:
    return powerset_frame(rng.randint(1, atoms))


def _spaces(cfg: SuiteConfig, points: int) -> tuple[FiniteSpace, ...]:
    return all_topologies(points)


def _space_functions(cfg, rng, space, kinds=(C, C_EXT, IC_EXT), cap=None):
    """Exhaustive grid functions on small open frames, a seeded sample otherwise."""
    L = open_frame(space)
    if L.n <= cfg.exhaustive_frame_size:
        return grid_functions(L, cfg.oracle_grid, kinds)
    count = cap or min(cfg.samples_per_law, 40)
    out = []
    for _ in range(count):
        r = rng.random()
        if C in kinds and r < 0.4:
            out.append(random_c_function(rng, L, cfg.oracle_grid))
        elif IC_EXT in kinds and r < 0.7:
            out.append(random_partial(rng, L, cfg.oracle_grid))
        else:
            out.append(random_hausdorff(rng, L, cfg.oracle_grid,
                                        nearly_finite=rng.random() < 0.7))
    return [f for f in out if f.kind in kinds]


def _pairs(cfg, rng, fs):
    pairs = list(product(fs, repeat=2))
    if len(pairs) > cfg.pairs_per_space:
        pairs = rng.sample(pairs, cfg.pairs_per_space)
    return pairs


def _space_hnf(cfg, rng, space):
    L = open_frame(space)
    if L.n <= cfg.exhaustive_frame_size:
        return [h for h in hausdorff_grid_functions(L, cfg.oracle_grid) if nearly_finite_check(h)]
    return [random_hausdorff(rng, L, cfg.oracle_grid) for _ in range(min(cfg.samples_per_law, 30))]


# -- core --------------------------------------------------------------------------------

@check("core.frame_validation", "finite frames are distributive lattices")
def _core_frames(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        L = _frame(cfg, rng)
        t.guard(lambda: build_frame(L.leq, L.names) == L and L.n <= cfg.max_frame_size, L)
    for L in _small_frames(cfg):
        t.guard(lambda: build_frame(L.leq, L.names) == L, L)


@check("core.heyting_adjunction", "heyting adjunction")
def _core_heyting(cfg, rng, t):
    for _ in range(max(1, cfg.samples_per_law // 10)):
        L = _frame(cfg, rng)
        ok = all(L.le(L.meet(a, c), b) == L.le(c, L.arrow(a, b))
                 for a, b, c in product(L.elements, repeat=3))
        t.check(ok, L)


@check("core.booleanization", "booleanization is boolean with dense beta")
def _core_boolean(cfg, rng, t):
    frames = list(_small_frames(cfg)) + [_frame(cfg, rng) for _ in range(cfg.samples_per_law // 4)]
    for L in frames:
        boo = booleanize(L)
        B, beta = boo.frame, boo.beta
        ok = (B.is_boolean and beta.source == L
              and all(beta(a) != B.bottom or a == L.bottom for a in L.elements)
              and all(B.join(a, B.pc(a)) == B.top for a in B.elements)
              and all(beta(L.join(a, b)) == B.join(beta(a), beta(b))
                      for a, b in product(L.elements, repeat=2)))
        t.check(ok, L)


@check("core.below_relations", "completely below inside rather below and interpolative")
def _core_below(cfg, rng, t):
    frames = list(_small_frames(cfg)) + [_frame(cfg, rng) for _ in range(cfg.samples_per_law // 4)]
    for L in frames:
        cb = completely_below(L)
        ok = True
        for b, a in product(L.elements, repeat=2):
            rb = rather_below(L, b, a)
            if cb[b][a] and not rb or rb and not L.le(b, a):
                ok = False
            if cb[b][a] and not any(cb[b][c] and cb[c][a] for c in L.elements):
                ok = False
            if cb[b][a] != (interpolation_chain(L, b, a) is not None):
                ok = False
        t.check(ok, L)


@check("core.cozero_oracle", "cozero elements against grid functions")
def _core_cozero(cfg, rng, t):
    for L in _small_frames(cfg):
        oracle = cozero_set(L, cfg.oracle_grid)
        for a in L.elements:
            t.check(is_cozero(L, a) == (a in oracle), {"frame": L, "element": a})


@check("core.spatial", "finite frames are spatial")
def _core_spatial(cfg, rng, t):
    frames = list(_small_frames(cfg)) + [_frame(cfg, rng) for _ in range(cfg.samples_per_law // 4)]
    for L in frames:
        t.guard(lambda: is_spatial(L), L)


@check("core.classification", "classification of boolean frames and relabelling invariance")
def _core_classify(cfg, rng, t):
    for n in range(0, 4):
        t.check(all(classify(powerset_frame(n)).flags.values()), n)
    for _ in range(max(1, cfg.samples_per_law // 10)):
        L = _frame(cfg, rng)
        perm = list(L.elements)
        rng.shuffle(perm)
        inv = {p: i for i, p in enumerate(perm)}
        M = FiniteFrame([[L.le(perm[i], perm[j]) for j in L.elements] for i in L.elements],
                        [L.names[p] for p in perm])
        a, b = classify(L), classify(M)
        same = a.flags == b.flags and all(
            sorted(a.witnesses[k]) == sorted(perm[i] for i in b.witnesses[k])
            for k in a.flags)
        t.check(same and all(inv[perm[i]] == i for i in L.elements), L)


# -- realfn -------------------------------------------------------------------------------

@check("realfn.upsilon_laws", "upsilon riesz embedding")
def _realfn_upsilon(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        L = _frame(cfg, rng)
        f = random_c_function(rng, L, cfg.breakpoint_grid)
        g = random_c_function(rng, L, cfg.breakpoint_grid)
        lam = rng.choice(LAMBDAS)
        ex = lambda: {"f": f, "g": g, "lambda": lam}
        t.guard(lambda: (upsilon(add(f, g)) == add(upsilon(f), upsilon(g))
                         and upsilon(scalar(lam, f)) == scalar(lam, upsilon(f))
                         and upsilon(join_op(f, g)) == join_op(upsilon(f), upsilon(g))
                         and upsilon(meet_op(f, g)) == meet_op(upsilon(f), upsilon(g))), ex)
        t.guard(lambda: reconstruct_double_neg(f) and upsilon_inverse(L, upsilon(f)) == f, ex)
        t.guard(lambda: (upsilon(f) == upsilon(g)) == (f == g), ex)


@check("realfn.algebra_laws", "riesz space laws on continuous functions")
def _realfn_algebra(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        L = _frame(cfg, rng)
        f, g, h = (random_c_function(rng, L, cfg.breakpoint_grid) for _ in range(3))
        lam = rng.choice(LAMBDAS + (Fraction(-2), Fraction(0)))
        zero = constant(L, 0)
        ex = lambda: {"f": f, "g": g, "h": h, "lambda": lam}
        t.guard(lambda: add(f, g) == add(g, f) and add(add(f, g), h) == add(f, add(g, h)), ex)
        t.guard(lambda: add(join_op(f, g), h) == join_op(add(f, h), add(g, h)), ex)
        t.guard(lambda: scalar(lam, add(f, g)) == add(scalar(lam, f), scalar(lam, g)), ex)
        t.guard(lambda: add(f, negate(f)) == zero and negate(negate(f)) == f, ex)
        t.guard(lambda: (not leq(f, g)) or leq(add(f, h), add(g, h)), ex)
        t.guard(lambda: leq(f, g) == _stepmap_le(L, g.down, f.down), ex)
        t.guard(lambda: join_op(f, meet_op(f, g)) == f and meet_op(f, join_op(f, g)) == f, ex)


@check("realfn.constants", "constant functions")
def _realfn_constants(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        L = _frame(cfg, rng)
        r, s = rng.choice(cfg.breakpoint_grid), rng.choice(cfg.breakpoint_grid)
        ex = {"frame": L, "r": r, "s": s}
        t.guard(lambda: add(constant(L, r), constant(L, s)) == constant(L, r + s)
                and leq(constant(L, r), constant(L, s)) == (r <= s)
                and constant(L, r).kind == C, ex)


@check("realfn.complemented_values", "complemented values on constancy intervals")
def _realfn_complemented(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        L = _frame(cfg, rng)
        f = random_c_function(rng, L, cfg.breakpoint_grid)
        ok = all(L.is_complemented(f.up(c.rep)) and L.pc(f.up(c.rep)) == f.down(c.rep)
                 for c in f.cells() if c.is_open)
        t.check(ok, f)


@check("realfn.discrete_sup", "discrete joins exist and are least upper bounds")
def _realfn_discrete(cfg, rng, t):
    for L in _small_frames(cfg):
        fs = [f for f in grid_functions(L, cfg.oracle_grid) if is_nonnegative(f)]
        families = [(f,) for f in fs] + list(combinations(fs, 2))
        for fam in families:
            if not is_discrete(L, [f.up(0) for f in fam]):
                continue
            ex = lambda: list(fam)
            t.guard(lambda: discrete_sup(list(fam)) == least_upper_bound(list(fam), cfg.oracle_grid), ex)
    for n in range(1, 4):
        B = powerset_frame(n)
        for ys in combinations(B.elements, 3):
            disjoint = all(B.meet(a, b) == B.bottom for a, b in combinations(ys, 2))
            t.check(is_discrete(B, ys) == disjoint, {"n": n, "elements": list(ys)})


@check("realfn.boolean_iso", "frame isomorphism recovered from a riesz isomorphism")
def _realfn_boolean_iso(cfg, rng, t):
    for _ in range(max(1, cfg.samples_per_law // 20)):
        n = rng.randint(1, 3)
        B = powerset_frame(n)
        perm = list(range(n))
        rng.shuffle(perm)
        psi_map = tuple(sum(1 << perm[i] for i in range(n) if m >> i & 1) for m in B.elements)
        psi_hom = FrameHom(B, B, psi_map)
        shift = constant(B, rng.choice(cfg.breakpoint_grid))
        t.guard(lambda: boolean_iso_from_riesz_iso(
            lambda f: add(compose_hom(psi_hom, f), shift), B, B) == psi_hom, {"perm": perm})


# -- universal completion ---------------------------------------------------------------

@check("universal.density", "positive functions are joins of embedded witnesses",
       note="full statement on boolean frames only: finite completely regular frames are boolean")
def _universal_density(cfg, rng, t):
    for _ in range(max(50, cfg.samples_per_law // 4)):
        L = _boolean(rng, cfg.boolean_atoms)
        h = random_nonnegative(rng, L, cfg.breakpoint_grid)
        probes = [c.rep for c in cells(tuple(b for b in h.up.breakpoints if b >= 0) or (0,))
                  if c.rep >= 0]
        t.guard(lambda: all(density_join(L, h, q) == h.up(q) for q in probes), h)


@check("universal.witness_ingredients", "witness maps are scales bounded by h")
def _universal_ingredients(cfg, rng, t):
    for _ in range(max(1, cfg.samples_per_law // 4)):
        L = _frame(cfg, rng)
        boo = booleanize(L)
        h = random_nonnegative(rng, boo.frame, cfg.breakpoint_grid)
        cb = completely_below(L)
        zero = constant(boo.frame, 0)
        for q in [b for b in h.up.breakpoints if b >= 0] + [Fraction(0)]:
            target = boo.embed[h.up(q)]
            for a in L.elements:
                if not cb[a][target]:
                    continue
                chain = interpolation_chain(L, a, target)
                ex = lambda: {"h": h, "q": q, "a": a}
                t.guard(lambda: is_scale(witness_scale(L, q, chain))
                        and leq(zero, upsilon(density_witness(L, h, q, a)))
                        and leq(upsilon(density_witness(L, h, q, a)), h), ex)


# -- intervalfn -----------------------------------------------------------------------------

@check("intervalfn.gamma_delta", "gamma and delta are inverse order isomorphisms")
def _interval_gamma_delta(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        L = _frame(cfg, rng)
        nf = rng.random() < 0.5
        f = random_hausdorff(rng, L, cfg.breakpoint_grid, nearly_finite=nf)
        g = random_hausdorff(rng, L, cfg.breakpoint_grid, nearly_finite=rng.random() < 0.5)
        B = booleanize(L).frame
        k = random_hausdorff(rng, B, cfg.breakpoint_grid, nearly_finite=rng.random() < 0.5)
        ex = lambda: {"f": f, "g": g, "k": k}
        t.guard(lambda: delta(L, gamma(f)) == f and gamma(delta(L, k)) == k, ex)
        t.guard(lambda: info_leq(f, g) == info_leq(gamma(f), gamma(g))
                and _stepmap_le(L, f.up, g.up) == _stepmap_le(B, gamma(f).up, gamma(g).up)
                and _stepmap_le(L, g.down, f.down) == _stepmap_le(B, gamma(g).down, gamma(f).down), ex)
        t.guard(lambda: (not nf) or gamma(f).kind == C, ex)


@check("intervalfn.dual_path", "direct sum formula equals the booleanization path")
def _interval_dual(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        L = _frame(cfg, rng)
        f = random_hausdorff(rng, L, cfg.breakpoint_grid)
        g = random_hausdorff(rng, L, cfg.breakpoint_grid)
        lam = rng.choice((Fraction(0), Fraction(-1), Fraction(-1, 2)) + LAMBDAS)
        ex = lambda: {"f": f, "g": g, "lambda": lam}
        t.guard(lambda: hnf_add(f, g) == dual_add(f, g), ex)
        t.guard(lambda: hnf_scalar(lam, f) == dual_scalar(lam, f), ex)
        t.guard(lambda: hnf_negate(f) == dual_negate(f), ex)


@check("intervalfn.hnf_laws", "riesz laws on nearly finite hausdorff functions")
def _interval_laws(cfg, rng, t):
    for _ in range(max(1, cfg.samples_per_law // 2)):
        L = _frame(cfg, rng)
        f, g, h = (random_hausdorff(rng, L, cfg.breakpoint_grid) for _ in range(3))
        zero = constant(L, 0)
        ex = lambda: {"f": f, "g": g, "h": h}
        t.guard(lambda: hnf_add(f, g) == hnf_add(g, f)
                and hnf_add(hnf_add(f, g), h) == hnf_add(f, hnf_add(g, h))
                and hnf_add(f, zero) == f and hnf_add(f, hnf_negate(f)) == zero
                and is_hnf(hnf_add(f, g)), ex)


@check("intervalfn.pseudocomplement_chain", "pseudocomplement chain for hausdorff functions")
def _interval_pc_chain(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        L = _frame(cfg, rng)
        f = random_hausdorff(rng, L, cfg.breakpoint_grid, nearly_finite=rng.random() < 0.5)
        reps = [c.rep for c in f.cells()]
        ok = all(L.le(L.pc(L.pc(f.up(r))), L.pc(f.down(r))) and L.le(L.pc(f.down(r)), f.up(p))
                 for p in reps for r in reps if r > p)
        t.check(ok and reconstruct_double_neg(f), f)


@check("intervalfn.hausdorff_maximal", "hausdorff iff maximal")
def _interval_maximal(cfg, rng, t):
    for L in _small_frames(cfg):
        for f in grid_functions(L, cfg.oracle_grid, (C, C_EXT, IC_EXT)):
            t.check(is_hausdorff(f) == is_maximal(f, cfg.oracle_grid), f)


@check("intervalfn.chi_witnesses", "characteristic pairs of pseudocomplements")
def _interval_chi(cfg, rng, t):
    for L in _small_frames(cfg):
        for a in L.elements:
            chi = chi_witness(L, a)
            ok = (is_hausdorff(chi) and nearly_finite_check(chi)
                  and (chi.kind == C) == (L.join(L.pc(a), L.pc(L.pc(a))) == L.top))
            t.check(ok, {"frame": L, "element": a})


@check("intervalfn.trichotomy", "continuous equals nearly finite hausdorff trichotomy")
def _interval_trichotomy(cfg, rng, t):
    frames = list(_small_frames(cfg))
    frames += [_frame(cfg, rng, min(cfg.max_frame_size, 7))
               for _ in range(max(1, cfg.samples_per_law // 20))]
    for L in frames:
        rep = prop_trichotomy(L, cfg.oracle_grid)
        cls = classify(L)
        expected = "certificate" if cls.extremally_disconnected else "chi"
        t.check(rep.verified and rep.case == expected,
                lambda: {"frame": L, "case": rep.case, "witness": rep.witness})


# -- spatial ---------------------------------------------------------------------------------

@check("spatial.psi_roundtrip", "psi correspondence round trips")
def _spatial_psi(cfg, rng, t):
    for X in _spaces(cfg, cfg.max_space_points):
        for h in _space_functions(cfg, rng, X):
            t.guard(lambda: psi_inverse(psi(h, X)) == h, lambda: {"space": X, "h": h})


@check("spatial.psi_orders", "psi is an order isomorphism for both orders")
def _spatial_orders(cfg, rng, t):
    for X in _spaces(cfg, cfg.max_space_points):
        fs = _space_functions(cfg, rng, X)
        images = {}
        for f, g in _pairs(cfg, rng, fs):
            F = images.setdefault(f, psi(f, X))
            G = images.setdefault(g, psi(g, X))
            L = f.frame
            ok = (_stepmap_le(L, f.up, g.up) == all(a <= b for a, b in zip(F.lower, G.lower))
                  and _stepmap_le(L, f.down, g.down) == all(a >= b for a, b in zip(F.upper, G.upper))
                  and info_leq(f, g) == F.info_le(G))
            t.check(ok, lambda: {"space": X, "f": f, "g": g})


@check("spatial.maximality", "hausdorff iff maximal on points")
def _spatial_maximal(cfg, rng, t):
    for X in _spaces(cfg, cfg.maximality_space_points):
        for h in _space_functions(cfg, rng, X):
            t.check(is_hausdorff(h) == is_maximal_spatial(psi(h, X), cfg.oracle_grid),
                    lambda: {"space": X, "h": h})
            t.check(nearly_finite_check(h) == nearly_finite_spatial(psi(h, X)),
                    lambda: {"space": X, "h": h})


@check("spatial.baire_identities", "lower part of sums and multiples via baire operators")
def _spatial_baire_identities(cfg, rng, t):
    lams = (Fraction(0),) + LAMBDAS
    for X in _spaces(cfg, cfg.max_space_points):
        hs = _space_hnf(cfg, rng, X)
        singles = hs if len(hs) <= cfg.pairs_per_space else rng.sample(hs, cfg.pairs_per_space)
        for h in singles:
            u = ExtRealFn(X, psi(h, X).lower)
            for lam in lams:
                t.guard(lambda: pi(psi(hnf_scalar(lam, h), X)) == nl_scalar(lam, u),
                        lambda: {"space": X, "h": h, "lambda": lam})
        for h, k in _pairs(cfg, rng, hs):
            t.guard(lambda: pi(psi(hnf_add(h, k), X))
                    == nl_add(pi(psi(h, X)), pi(psi(k, X))),
                    lambda: {"space": X, "h": h, "k": k})


@check("spatial.pi_roundtrip", "pi bijection onto normal lower semicontinuous functions")
def _spatial_pi(cfg, rng, t):
    for X in _spaces(cfg, cfg.max_space_points):
        for h in _space_hnf(cfg, rng, X):
            F = psi(h, X)
            t.guard(lambda: pi_inverse(pi(F)) == F and is_nlsc(pi(F))
                    and (h.kind != C or pi(F).values == F.upper),
                    lambda: {"space": X, "h": h})


@check("spatial.baire_laws", "baire operators are idempotent envelopes")
def _spatial_baire(cfg, rng, t):
    for X in _spaces(cfg, cfg.max_space_points):
        for _ in range(max(1, cfg.samples_per_law // 20)):
            u = ExtRealFn(X, random_ext_values(rng, X.n, cfg.breakpoint_grid))
            S, I = baire_upper(u), baire_lower(u)
            ok = (baire_upper(S) == S and baire_lower(I) == I
                  and all(a <= b <= c for a, b, c in zip(I.values, u.values, S.values))
                  and baire_lower(baire_upper(baire_lower(baire_upper(u))))
                  == baire_lower(baire_upper(u)))
            t.check(ok, lambda: {"space": X, "u": u})
        if X.is_discrete():
            u = ExtRealFn(X, random_ext_values(rng, X.n, cfg.breakpoint_grid))
            t.check(baire_upper(u) == u and baire_lower(u) == u, lambda: {"space": X, "u": u})


def _c_equals_hnf(cfg, X: FiniteSpace) -> bool:
    L = open_frame(X)
    cs = set(grid_functions(L, cfg.oracle_grid))
    hn = {h for h in hausdorff_grid_functions(L, cfg.oracle_grid) if nearly_finite_check(h)}
    return cs == hn


@check("spatial.discrete_iff", "continuous equals nearly finite hausdorff iff discrete",
       note="stated over all finite topologies; fails without complete regularity "
            "(e.g. the Sierpinski space)")
def _spatial_discrete(cfg, rng, t):
    for X in _spaces(cfg, cfg.discrete_space_points):
        t.check(_c_equals_hnf(cfg, X) == X.is_discrete(),
                lambda: {"space": X, "discrete": X.is_discrete(),
                         "c_equals_hnf": _c_equals_hnf(cfg, X)})


@check("spatial.extremal_iff", "continuous equals nearly finite hausdorff iff extremally disconnected")
def _spatial_extremal(cfg, rng, t):
    for X in _spaces(cfg, cfg.discrete_space_points):
        ed = classify(open_frame(X)).extremally_disconnected
        t.check(_c_equals_hnf(cfg, X) == ed, lambda: {"space": X})


@check("spatial.tychonoff_discrete", "completely regular T0 instances are discrete")
def _spatial_tychonoff(cfg, rng, t):
    for X in _spaces(cfg, cfg.discrete_space_points):
        if not (X.is_t0() and classify(open_frame(X)).completely_regular):
            continue
        t.check(X.is_discrete() and _c_equals_hnf(cfg, X), lambda: {"space": X})


# -- rieszfd ------------------------------------------------------------------------------

def _vec_pair(cfg, rng):
    n = rng.randint(1, cfg.riesz_dim)
    return (random_vector(rng, n, cfg.breakpoint_grid), random_vector(rng, n, cfg.breakpoint_grid),
            random_unit(rng, n))


@check("rieszfd.scale_conditions", "band scale is a scale")
def _riesz_scale(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        f, _, e = _vec_pair(cfg, rng)
        t.check(is_scale(band_scale(f, e)), {"f": f, "e": e})


@check("rieszfd.embedding_laws", "band scale embedding is a riesz embedding")
def _riesz_laws(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        f, g, e = _vec_pair(cfg, rng)
        lam = rng.choice(LAMBDAS + (Fraction(-3, 2),))
        m = lambda v: m_embed(v, e)
        ex = {"f": f, "g": g, "e": e, "lambda": lam}
        t.guard(lambda: m(f + g) == add(m(f), m(g)) and m(f.scale(lam)) == scalar(lam, m(f))
                and m(f.join(g)) == join_op(m(f), m(g)) and m(f.meet(g)) == meet_op(m(f), m(g))
                and m(f.pos()) == positive_part(m(f))
                and m(e) == constant(powerset_frame(e.dim), 1), ex)
        t.guard(lambda: (m(f) == m(g)) == (f == g) and (m(f) == m(f.scale(1))), ex)


@check("rieszfd.atom_evaluation", "embedded functions evaluate to coordinate ratios")
def _riesz_atoms(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        f, _, e = _vec_pair(cfg, rng)
        vals = evaluate_at_atoms(m_embed(f, e), f.dim)
        t.check(all(lo == hi == a / b for (lo, hi), a, b in zip(vals, f.coords, e.coords)),
                {"f": f, "e": e})


@check("rieszfd.sandwich", "positive functions are sandwiched by embedded vectors")
def _riesz_sandwich(cfg, rng, t):
    for n in range(1, min(cfg.riesz_dim, 3) + 1):
        B = powerset_frame(n)
        zero = constant(B, 0)
        for g in grid_functions(B, cfg.oracle_grid):
            if g == zero or not is_nonnegative(g):
                continue
            e = random_unit(rng, n)
            t.guard(lambda: sandwich_check(g, e) is not None, {"g": g, "e": e})
    for _ in range(cfg.samples_per_law):
        n = rng.randint(1, cfg.riesz_dim)
        g = random_nonnegative(rng, powerset_frame(n), cfg.breakpoint_grid)
        if g == constant(g.frame, 0):
            continue
        e = random_unit(rng, n)
        t.guard(lambda: sandwich_check(g, e) is not None, {"g": g, "e": e})


@check("rieszfd.bands_booleanization", "bands of C(L) match the booleanization")
def _riesz_cor(cfg, rng, t):
    for n in range(1, cfg.riesz_dim + 1):
        t.guard(lambda: bands_booleanization_check(n).is_iso and len(bands_booleanization_check(n).map) == 2 ** n, n)


@check("rieszfd.lateral", "disjoint positive families have embedded suprema")
def _riesz_lateral(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        f, g, e = _vec_pair(cfg, rng)
        f, g = f.pos(), g.pos()
        g = RieszVec(tuple(b if a == 0 else Fraction(0) for a, b in zip(f.coords, g.coords)))
        t.guard(lambda: discrete_sup([m_embed(f, e), m_embed(g, e)]) == m_embed(f.join(g), e),
                {"f": f, "g": g, "e": e})


@check("rieszfd.bands", "bands generated by vectors and weak units")
def _riesz_bands(cfg, rng, t):
    for _ in range(cfg.samples_per_law):
        f, g, _ = _vec_pair(cfg, rng)
        t.check(band_membership_oracle(g, f) == (g.support <= band_generated(f).support),
                {"f": f, "g": g})
        joined = band_generated(f.abs() + g.abs()).support
        t.check(joined == band_generated(f).support | band_generated(g).support, {"f": f, "g": g})
        e = f.abs()
        if e.is_zero():
            continue
        probes = [RieszVec(tuple(Fraction(int(i == j)) for j in range(e.dim))) for i in range(e.dim)]
        by_def = all(not e.meet(p.abs()).is_zero() for p in probes)
        t.check(is_weak_unit(e) == by_def, {"e": e})
