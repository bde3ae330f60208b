import random

from wfusion.catalog import parse_algebra
from wfusion.extension import E, Sector, sector
from wfusion.verify import (
    NUMERIC,
    Constraints,
    Suite,
    SuiteConfig,
    random_label,
    run_suite,
)

B2 = parse_algebra("Bp:2")
B3 = parse_algebra("Bp:3")


def test_random_label_deterministic():
    a = [random_label(random.Random(1), B2.ext) for _ in range(3)]
    b = [random_label(random.Random(1), B2.ext) for _ in range(3)]
    assert a == b


def test_random_label_respects_constraints():
    gen = random.Random(5)
    for _ in range(300):
        lab = random_label(gen, B3.ext, NUMERIC)
        assert not (isinstance(lab, E) and lab.w.g)
        lab = random_label(gen, B3.ext, Constraints(sector=Sector.LOCAL))
        assert sector(B3.ext, lab) is Sector.LOCAL


def test_examples():
    rep = run_suite(SuiteConfig(Suite.ASSOCIATIVITY_CLASS, 1000, 7, B3))
    assert (rep.passed, rep.failed) == (1000, 0)
    rep = run_suite(SuiteConfig(Suite.COUNTS, 1, 123, parse_algebra("B2orb:2")))
    assert rep.ok and rep.cases == 1
    rep = run_suite(SuiteConfig(Suite.BORDER_WEIGHT, 20, 3, parse_algebra("Bp:4")))
    assert (rep.passed, rep.failed) == (20, 0)


def test_reports_are_reproducible():
    for suite in (Suite.COMMUTATIVITY, Suite.DUAL_HOM, Suite.PEEL_ROUNDTRIP):
        cfg = SuiteConfig(suite, 60, 11, parse_algebra("Sp:3"))
        assert run_suite(cfg).to_dict() == run_suite(cfg).to_dict()


def test_sharded_equals_serial():
    cfg = SuiteConfig(Suite.SPECTRAL_FLOW, 40, 2, B3)
    assert run_suite(cfg, workers=2).to_dict() == run_suite(cfg).to_dict()


def test_failures_are_reported_not_raised(monkeypatch):
    from wfusion import verify

    def broken(gen, spec, i):
        return "x", 1, 2 if i % 2 else 1

    monkeypatch.setitem(verify.CASES, Suite.UNIT, broken)
    rep = run_suite(SuiteConfig(Suite.UNIT, 10, 0, B2))
    assert (rep.passed, rep.failed) == (5, 5)
    assert rep.first_failure.case == 1


def test_not_applicable_suites_are_noted():
    rep = run_suite(SuiteConfig(Suite.BORDER_WEIGHT, 10, 0, parse_algebra("Sp:3")))
    assert rep.cases == 0 and rep.note
