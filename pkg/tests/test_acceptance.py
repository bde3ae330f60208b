"""One line per acceptance criterion, exact equality throughout."""

import random
import time

import pytest

from wfusion.catalog import parse_algebra, reproduce_literature
from wfusion.exactnum import HalfInt
from wfusion.extension import Sector, W, canonicalize, fuse, sector
from wfusion.formal import FormalSum
from wfusion.grading import Predicate, classify, enumerate_simples
from wfusion.verify import (
    PROPERTY_SUITES,
    Suite,
    SuiteConfig,
    _border_cases,
    local_counts,
    random_label,
    run_suite,
)

PROPERTY_ALGEBRAS = [
    "Bp:2", "Bp:3", "Bp:4", "Bp:5",
    "B2orb:1", "B2orb:2", "B2orb:3", "B2orb:4",
    "Sp:3", "Sp:4", "Sp:5",
    "S2orb:2", "S2orb:3", "S2orb:4",
]


@pytest.fixture
def report(capsys):
    def emit(n, ok, elapsed, budget, detail):
        ok = ok and elapsed < budget
        with capsys.disabled():
            print(f"\nACCEPTANCE {n} {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s < {budget}s): {detail}")
        assert ok, detail

    return emit


def families(checks):
    """Group sampled checks by the identity they instantiate."""
    out = {}
    for c in checks:
        key = c.name.split(" (")[0]
        out[key] = out.get(key, True) and c.passed
    return out


def test_criterion_1_b3_literature(report):
    t = time.perf_counter()
    fam = families(reproduce_literature("sl2_fourthirds"))
    ok = len(fam) == 8 and all(fam.values())
    report(1, ok, time.perf_counter() - t, 1, f"B_3 identities {sum(fam.values())}/8 exact")


def test_criterion_2_betagamma(report):
    t = time.perf_counter()
    checks = [c for c in reproduce_literature("betagamma") if c.name.startswith("W_lam.W_mu")]
    int_branch = [c for c in checks if "in Z" in c.name]
    gen_branch = [c for c in checks if "generic" in c.name]
    ok = bool(int_branch) and bool(gen_branch) and all(c.passed for c in checks)
    report(2, ok, time.perf_counter() - t, 1,
           f"beta-gamma W_lam.W_mu: {len(int_branch)} integral + {len(gen_branch)} generic cases exact")


def test_criterion_3_b23_and_b4(report):
    t = time.perf_counter()
    b23 = families(reproduce_literature("BP_53"))
    z3 = [k for k in b23 if k.startswith("X_")]
    ee = [k for k in b23 if k.startswith("E_lam")]
    b4 = families(reproduce_literature("BP_94"))
    ok = len(z3) == 9 and len(ee) == 2 and len(b4) == 6 and all(b23.values()) and all(b4.values())
    report(3, ok, time.perf_counter() - t, 1,
           f"Z/3 table {len(z3)}/9, B_2^3 E.E branches {len(ee)}/2, B_4 correspondences {sum(b4.values())}/6")


def test_criterion_4_counts(report):
    t = time.perf_counter()
    bad = []
    for alg in [f"Bp:{p}" for p in range(2, 8)] + [f"B2orb:{m}" for m in range(1, 6)]:
        spec = parse_algebra(alg)
        ext = spec.ext
        p, rJ = ext.p, ext.r_J
        hw = enumerate_simples(ext, Predicate.HIGHEST_WEIGHT)
        gr = enumerate_simples(ext, Predicate.GRADING_RESTRICTED)
        got = {
            "hw": len(hw),
            "gr": len(gr),
            "hw_local": sum(sector(ext, x) is Sector.LOCAL for x in hw),
            "gr_local": sum(sector(ext, x) is Sector.LOCAL for x in gr),
        }
        want = {"hw": rJ * rJ * p * (p - 1), "gr": rJ * (p - 1) * (rJ * p - 1), **local_counts(spec)}
        if got != want:
            bad.append((alg, got, want))
    b4_local = sum(
        sector(parse_algebra("Bp:4").ext, x) is Sector.LOCAL
        for x in enumerate_simples(parse_algebra("Bp:4").ext, Predicate.GRADING_RESTRICTED)
    )
    report(4, not bad and b4_local == 6, time.perf_counter() - t, 1,
           f"11 algebras, mismatches {bad}; B_4 local GR = {b4_local}")


def test_criterion_5_border_weight(report):
    t = time.perf_counter()
    total = failed = 0
    for alg in ["Bp:2", "Bp:3", "Bp:4", "Bp:5", "B2orb:1", "B2orb:2", "B2orb:3", "B2orb:4"]:
        spec = parse_algebra(alg)
        n = len(_border_cases(spec.ext)) + 20
        rep = run_suite(SuiteConfig(Suite.BORDER_WEIGHT, n, 5, spec))
        total += rep.cases
        failed += rep.failed
    report(5, failed == 0 and total > 0, time.perf_counter() - t, 5,
           f"{total} border and E(lam,0) weights equal -(p-1)^2/(4p), {failed} failures")


def test_criterion_6_kappa_one(report):
    t = time.perf_counter()
    cases = failed = 0
    lit = lit_failed = 0
    for alg in ["Sp:3", "Sp:4", "Sp:5", "S2orb:2", "S2orb:3", "S2orb:4"]:
        spec = parse_algebra(alg)
        gen = random.Random(f"kappa1:{alg}")
        for _ in range(200):
            rep = classify(spec.ext, random_label(gen, spec.ext))
            cases += 1
            failed += not (rep.grading_restricted and rep.c1_cofinite)
        checks = reproduce_literature(spec)
        lit += len(checks)
        lit_failed += sum(not c.passed for c in checks)
    ok = failed == 0 and lit_failed == 0 and lit > 0
    report(6, ok, time.perf_counter() - t, 5,
           f"{cases - failed}/{cases} simples GR and C1-cofinite; {lit - lit_failed}/{lit} S-dictionary products exact")


def test_criterion_7_property_suites(report):
    t = time.perf_counter()
    bad = []
    runs = 0
    for alg in PROPERTY_ALGEBRAS:
        spec = parse_algebra(alg)
        for suite in PROPERTY_SUITES:
            rep = run_suite(SuiteConfig(suite, 1000, 20261014, spec))
            runs += 1
            if rep.failed or rep.passed < 1000:
                bad.append((alg, suite.value, rep.passed, rep.failed, rep.first_failure))
    report(7, not bad, time.perf_counter() - t, 120,
           f"{len(PROPERTY_SUITES)} suites x {len(PROPERTY_ALGEBRAS)} algebras x 1000 cases, bad runs {bad}")


def test_criterion_8_c1_subring(report):
    t = time.perf_counter()
    bad = []
    for m in range(1, 6):
        ext = parse_algebra(f"B2orb:{m}").ext
        simples = enumerate_simples(ext, Predicate.C1)
        index = {x: x.r - 1 for x in simples}
        if len(simples) != m:
            bad.append((m, "count"))
        for x in simples:
            for y in simples:
                want = canonicalize(ext, W((index[x] + index[y]) % m + 1, 1, HalfInt(0)))
                if fuse(ext, x, y) != FormalSum.of(want):
                    bad.append((m, str(x), str(y)))
    report(8, not bad, time.perf_counter() - t, 1, f"B_2^m C1 simples realize Z/m for m=1..5, mismatches {bad}")
