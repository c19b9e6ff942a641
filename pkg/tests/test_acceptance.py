"""Acceptance criteria 1-10: each test runs the matching registered checks
under the stated bounds and prints one PASS/FAIL line."""

import time

import pytest

from pointfree import suite


def _run(check_ids, config, limit=None, min_instances=None):
    start = time.perf_counter()
    records = [suite.run_check(suite.REGISTRY[c], config) for c in check_ids]
    elapsed = time.perf_counter() - start
    problems = [f"{r.check_id}: {r.failures}/{r.instances} failed, first {r.counterexample}"
                for r in records if not r.passed]
    if min_instances:
        problems += [f"{r.check_id}: only {r.instances} instances"
                     for r in records if r.instances < min_instances.get(r.check_id, 0)]
    if limit is not None and elapsed >= limit:
        problems.append(f"took {elapsed:.1f}s, limit {limit}s")
    return records, elapsed, problems


@pytest.fixture
def report_line(request, capsys):
    lines = []
    yield lines.append
    with capsys.disabled():
        for line in lines:
            print(f"\n{line}", end="")


def _finish(report_line, name, elapsed, problems):
    status = "PASS" if not problems else "FAIL"
    report_line(f"[{status}] {name} ({elapsed:.1f}s)")
    assert not problems, "\n".join(problems)


def test_criterion_01_riesz_embedding(report_line):
    cfg = suite.SuiteConfig(seed=0, max_frame_size=10, samples_per_law=200)
    _, t, bad = _run(["realfn.upsilon_laws"], cfg, limit=60,
                     min_instances={"realfn.upsilon_laws": 600})
    _finish(report_line, "1 upsilon embedding laws, frames <= 10", t, bad)


def test_criterion_02_universal_density(report_line):
    cfg = suite.SuiteConfig(seed=0, samples_per_law=200, boolean_atoms=4)
    _, t, bad = _run(["universal.density", "universal.witness_ingredients"], cfg,
                     min_instances={"universal.density": 50})
    _finish(report_line, "2 density on boolean frames <= 2^4, ingredients everywhere", t, bad)


def test_criterion_03_gamma_delta(report_line):
    cfg = suite.SuiteConfig(seed=0, max_frame_size=8, samples_per_law=200)
    _, t, bad = _run(["intervalfn.gamma_delta"], cfg,
                     min_instances={"intervalfn.gamma_delta": 600})
    _finish(report_line, "3 gamma/delta inverse order isomorphisms", t, bad)


def test_criterion_04_dual_path(report_line):
    cfg = suite.SuiteConfig(seed=0, max_frame_size=8, samples_per_law=200)
    _, t, bad = _run(["intervalfn.dual_path"], cfg,
                     min_instances={"intervalfn.dual_path": 600})
    _finish(report_line, "4 direct operations equal the booleanization path", t, bad)


def test_criterion_05_discrete_joins(report_line):
    cfg = suite.SuiteConfig(seed=0, exhaustive_frame_size=6)
    _, t, bad = _run(["realfn.discrete_sup"], cfg, limit=120)
    _finish(report_line, "5 discrete joins are least upper bounds, frames <= 6", t, bad)


def test_criterion_06_trichotomy(report_line):
    cfg = suite.SuiteConfig(seed=0, max_frame_size=8, samples_per_law=200)
    _, t, bad = _run(["intervalfn.trichotomy", "intervalfn.chi_witnesses"], cfg)
    _finish(report_line, "6 trichotomy witnesses verified", t, bad)


def test_criterion_07_hausdorff_maximal(report_line):
    cfg = suite.SuiteConfig(seed=0, exhaustive_frame_size=6)
    _, t, bad = _run(["intervalfn.hausdorff_maximal"], cfg)
    _finish(report_line, "7 hausdorff iff maximal, frames <= 6", t, bad)


def test_criterion_08_spatial(report_line):
    cfg = suite.SuiteConfig(seed=0, max_space_points=5, discrete_space_points=4)
    _, t, bad = _run(["spatial.psi_roundtrip", "spatial.psi_orders",
                      "spatial.baire_identities", "spatial.pi_roundtrip",
                      "spatial.discrete_iff"], cfg)
    _finish(report_line, "8 spatial correspondences, spaces <= 5 points; "
                         "discrete criterion on <= 4 points", t, bad)


def test_criterion_09_riesz_fd(report_line):
    cfg = suite.SuiteConfig(seed=0, samples_per_law=200, riesz_dim=4)
    ids = sorted(c for c in suite.REGISTRY if c.startswith("rieszfd."))
    _, t, bad = _run(ids, cfg, limit=60)
    _finish(report_line, "9 band embedding of Q^n", t, bad)


def test_criterion_10_structural(report_line):
    cfg = suite.SuiteConfig(seed=0, max_frame_size=8, samples_per_law=200)
    _, t, bad = _run(["core.frame_validation", "core.booleanization", "core.cozero_oracle"], cfg)
    _finish(report_line, "10 generated frames, booleanization, cozero oracle", t, bad)
