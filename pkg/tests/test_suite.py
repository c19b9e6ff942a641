import pytest

from pointfree import suite
from pointfree.errors import ConfigError


def test_config_validation():
    with pytest.raises(ConfigError):
        suite.SuiteConfig(breakpoint_grid=())
    with pytest.raises(ConfigError):
        suite.SuiteConfig(breakpoint_grid=(1, 0))
    with pytest.raises(ConfigError):
        suite.SuiteConfig(samples_per_law=0)
    with pytest.raises(ConfigError):
        suite.SuiteConfig(suites=("core", "bogus"))
    cfg = suite.SuiteConfig(suites=("rieszfd", "core"))
    assert cfg.suites == ("core", "rieszfd")


def test_every_suite_has_checks():
    assert {c.suite for c in suite.REGISTRY.values()} == set(suite.SUITES)
    assert all(c.anchor for c in suite.REGISTRY.values())


def test_report_is_deterministic():
    cfg = suite.SuiteConfig(samples_per_law=10, suites=("core", "realfn"))
    a, b = suite.run(cfg), suite.run(cfg)
    assert a.to_text() == b.to_text()
    assert a.to_dict() == b.to_dict()
    assert [r.check_id for r in a.records] == sorted(r.check_id for r in a.records)


def test_check_outcome_independent_of_selection():
    cfg = suite.SuiteConfig(samples_per_law=10, suites=("realfn",))
    alone = suite.run(cfg, ["realfn.constants"]).records[0]
    together = [r for r in suite.run(cfg).records if r.check_id == "realfn.constants"][0]
    assert alone.to_dict() == together.to_dict()


def test_counterexample_iff_failure():
    cfg = suite.SuiteConfig(samples_per_law=10, suites=("spatial",))
    rec = suite.run(cfg, ["spatial.discrete_iff", "spatial.extremal_iff"]).records
    by_id = {r.check_id: r for r in rec}
    assert by_id["spatial.discrete_iff"].failures > 0
    assert by_id["spatial.discrete_iff"].counterexample is not None
    assert by_id["spatial.extremal_iff"].passed
    assert by_id["spatial.extremal_iff"].counterexample is None


def test_tally_guard_counts_errors():
    rec = suite.CheckRecord("x", "y")
    t = suite.Tally(rec)
    t.guard(lambda: True)
    t.guard(lambda: (_ for _ in ()).throw(ValueError("boom")), "instance")
    assert rec.instances == 2 and rec.failures == 1
    assert "boom" in rec.counterexample["error"]
