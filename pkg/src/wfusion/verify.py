"""Seeded invariant suites over catalog algebras.

Case i of a suite draws from ``random.Random(f"{seed}:{suite}:{i}")``, so a
report depends only on (suite, samples, seed, algebra) and splitting the
index range across worker processes merges to the serial report.
"""

from __future__ import annotations

import gc
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable

from . import singlet
from .catalog import AlgebraSpec, parse_algebra, reproduce_literature
from .errors import Infinite, WFusionError
from .exactnum import HalfInt, QAlpha, WeightValue, alpha_rs, decompose_alpha
from .extension import (
    E,
    ExtensionData,
    Q,
    Sector,
    W,
    a_class,
    a_dual,
    a_peel,
    canonicalize,
    clear_caches,
    dual_object,
    e_label,
    fuse,
    induce,
    restrict_top,
    sector,
    shift,
    shift_object,
    unit,
)
from .formal import FormalSum
from .grading import Predicate, enumerate_simples, lowest_weight, monodromy_exponent


class Suite(str, Enum):
    COMMUTATIVITY = "Commutativity"
    ASSOCIATIVITY_CLASS = "AssociativityClass"
    ASSOCIATIVITY_OBJECT = "AssociativityObject"
    UNIT = "Unit"
    DUAL_INVOLUTION = "DualInvolution"
    DUAL_HOM = "DualHom"
    SPECTRAL_FLOW = "SpectralFlow"
    SECTOR_ADDITIVITY = "SectorAdditivity"
    MONOIDAL_INDUCTION = "MonoidalInduction"
    PEEL_ROUNDTRIP = "PeelRoundtrip"
    COUNTS = "Counts"
    BORDER_WEIGHT = "BorderWeight"
    MONODROMY_SECTOR = "MonodromySector"
    C1_SUBRING = "C1Subring"
    LITERATURE_ALL = "LiteratureAll"


PROPERTY_SUITES = (
    Suite.COMMUTATIVITY,
    Suite.UNIT,
    Suite.DUAL_INVOLUTION,
    Suite.DUAL_HOM,
    Suite.SPECTRAL_FLOW,
    Suite.SECTOR_ADDITIVITY,
    Suite.ASSOCIATIVITY_CLASS,
    Suite.ASSOCIATIVITY_OBJECT,
    Suite.MONODROMY_SECTOR,
    Suite.MONOIDAL_INDUCTION,
    Suite.PEEL_ROUNDTRIP,
)


@dataclass(frozen=True)
class SuiteConfig:
    suite: Suite
    samples: int
    seed: int
    algebra: AlgebraSpec

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError("samples must be positive")


@dataclass(frozen=True)
class Failure:
    case: int
    inputs: str
    expected: str
    got: str

    def to_dict(self) -> dict:
        return {"case": self.case, "inputs": self.inputs, "expected": self.expected, "got": self.got}


@dataclass(frozen=True)
class SuiteReport:
    suite: Suite
    algebra: str
    passed: int
    failed: int
    first_failure: Failure | None = None
    note: str = ""

    @property
    def cases(self) -> int:
        return self.passed + self.failed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite.value,
            "algebra": self.algebra,
            "passed": self.passed,
            "failed": self.failed,
            "first_failure": self.first_failure.to_dict() if self.first_failure else None,
            "note": self.note,
        }


# sampling


@dataclass(frozen=True)
class Constraints:
    generic: bool = True
    sector: Sector | None = None
    kinds: tuple[str, ...] = ("W", "E")


NUMERIC = Constraints(generic=False)


def _small_rational(gen: random.Random) -> Fraction:
    return Fraction(gen.randint(-6, 6), gen.choice((1, 2, 3, 4, 5, 7)))


def random_weight(gen: random.Random, ext: ExtensionData, generic: bool = True) -> WeightValue:
    """A weight off the lattice of atypical s < p weights."""
    while True:
        g = gen.randint(0, 1) if generic else 0
        w = WeightValue(g, QAlpha(_small_rational(gen), _small_rational(gen), ext.p))
        d = decompose_alpha(w)
        if d is None or d[1] == ext.p:
            return w


def random_label(gen: random.Random, ext: ExtensionData, constraints: Constraints = Constraints()):
    p, rJ = ext.p, ext.r_J
    bound = 2 * rJ * p + 4
    for _ in range(1000):
        kind = gen.choice(constraints.kinds)
        ell = HalfInt(gen.randint(-bound, bound))
        if kind == "W":
            lab = W(gen.randint(1, max(rJ, 3)), gen.randint(1, p), ell)
        elif kind == "Q":
            lab = canonicalize(ext, Q(gen.randint(1, max(rJ, 3)), gen.randint(1, p), ell))
        else:
            lab = e_label(ext, random_weight(gen, ext, constraints.generic), ell)
        lab = canonicalize(ext, lab)
        if constraints.sector is None or sector(ext, lab) == constraints.sector:
            return lab
    raise RuntimeError("sector constraint could not be met")


def random_pair(gen: random.Random, ext: ExtensionData, constraints: Constraints = Constraints()):
    """Two simple labels; 10% of typical pairs are forced onto the atypical locus."""
    x = random_label(gen, ext, constraints)
    y = random_label(gen, ext, constraints)
    if isinstance(x, E) and isinstance(y, E) and gen.random() < 0.1:
        target = QAlpha.alpha_zero(ext.p) + alpha_rs(gen.randint(-2, 3), gen.randint(1, ext.p), ext.p)
        w = WeightValue(-x.w.g, target) - WeightValue(0, x.w.body)
        y = canonicalize(ext, e_label(ext, w, y.ell))
    return x, y


def random_projective(gen: random.Random, ext: ExtensionData):
    """A projective label: Q(r, s, l), W(r, p, l) or a typical E."""
    kind = gen.choice(("Q", "Q", "E"))
    if kind == "E":
        return random_label(gen, ext, Constraints(kinds=("E",)))
    return random_label(gen, ext, Constraints(kinds=("Q",)))


# cases: each returns (inputs, expected, got)

Case = Callable[[random.Random, AlgebraSpec, int], tuple[str, object, object]]


def _commutativity(gen, spec, i):
    ext = spec.ext
    x, y = random_pair(gen, ext)
    if gen.random() < 0.3:
        y = random_projective(gen, ext)
    return f"{x} ; {y}", fuse(ext, x, y), fuse(ext, y, x)


def _assoc_class(gen, spec, i):
    ext = spec.ext
    x, y = random_pair(gen, ext)
    z = random_label(gen, ext)
    left = a_class(ext, fuse(ext, fuse(ext, x, y), z))
    right = a_class(ext, fuse(ext, x, fuse(ext, y, z)))
    return f"{x} ; {y} ; {z}", left, right


def _assoc_object(gen, spec, i):
    ext = spec.ext
    x, y = random_pair(gen, ext)
    z = random_label(gen, ext) if gen.random() < 0.7 else random_projective(gen, ext)
    return f"{x} ; {y} ; {z}", fuse(ext, fuse(ext, x, y), z), fuse(ext, x, fuse(ext, y, z))


def _unit(gen, spec, i):
    ext = spec.ext
    x = random_label(gen, ext) if gen.random() < 0.7 else random_projective(gen, ext)
    return str(x), FormalSum.of(x), fuse(ext, unit(ext), x)


def _dual_involution(gen, spec, i):
    ext = spec.ext
    x = random_label(gen, ext) if gen.random() < 0.6 else random_projective(gen, ext)
    return str(x), x, a_dual(ext, a_dual(ext, x))


def _dual_hom(gen, spec, i):
    ext = spec.ext
    x, y = random_pair(gen, ext)
    left = dual_object(ext, fuse(ext, x, y))
    right = fuse(ext, a_dual(ext, x), a_dual(ext, y))
    return f"{x} ; {y}", left, right


def _spectral_flow(gen, spec, i):
    ext = spec.ext
    x, y = random_pair(gen, ext)
    a = HalfInt(gen.randint(-6, 6))
    return f"{x} ; {y} ; a={a}", shift_object(ext, fuse(ext, x, y), a), fuse(ext, shift(ext, x, a), y)


def _sector_sum(a: Sector, b: Sector) -> Sector:
    return Sector.LOCAL if (a == b) else Sector.TWISTED


def _sector_additivity(gen, spec, i):
    ext = spec.ext
    x, y = random_pair(gen, ext)
    want = _sector_sum(sector(ext, x), sector(ext, y))
    got = sorted({sector(ext, lab).value for lab in fuse(ext, x, y).labels()})
    return f"{x} ; {y}", [want.value], got


def _monodromy_sector(gen, spec, i):
    ext = spec.ext
    x = random_label(gen, ext, NUMERIC)
    want = Fraction(0) if sector(ext, x) is Sector.LOCAL else Fraction(1, 2)
    return str(x), want, monodromy_exponent(ext, x)


def _monoidal_induction(gen, spec, i):
    ext = spec.ext
    x, y = random_pair(gen, ext, NUMERIC)
    g1, m1 = restrict_top(ext, x)
    g2, m2 = restrict_top(ext, y)
    g = WeightValue.of(g1 + g2)
    induced = singlet.singlet_fuse(ext.p, m1, m2).map(lambda m: induce(ext, g, m))
    roundtrip = induce(ext, g1, m1) == x
    return f"{x} ; {y}", (True, fuse(ext, x, y)), (roundtrip, induced)


def _peel_roundtrip(gen, spec, i):
    ext = spec.ext
    obj = FormalSum()
    for _ in range(gen.randint(1, 4)):
        obj = obj + FormalSum([(random_projective(gen, ext), gen.randint(1, 3))])
    return str(obj), obj, a_peel(ext, a_class(ext, obj))


def _border_cases(ext: ExtensionData) -> list:
    out = []
    for r in range(1, max(ext.r_J, 1) + 1):
        for s in range(1, ext.p):
            width = ext.r_J * (ext.p - s)
            for d in sorted({width, -width}):
                out.append(W(r, s, HalfInt(d)))
    return out


def _border_weight(gen, spec, i):
    ext = spec.ext
    cases = _border_cases(ext)
    if i < len(cases):
        x = canonicalize(ext, cases[i])
    else:
        x = e_label(ext, random_weight(gen, ext, generic=False), HalfInt(0))
    want = QAlpha(-Fraction((ext.p - 1) ** 2, 4 * ext.p), 0, ext.p)
    return str(x), want, lowest_weight(ext, x)


def _c1_subring(gen, spec, i):
    ext = spec.ext
    simples = enumerate_simples(ext, Predicate.C1)
    n = len(simples)
    x, y = simples[i % n], simples[(i // n) % n]
    want = canonicalize(ext, W((x.r + y.r - 2) % n + 1, 1, HalfInt(0)))
    return f"{x} ; {y}", FormalSum.of(want), fuse(ext, x, y)


CASES: dict[Suite, Case] = {
    Suite.COMMUTATIVITY: _commutativity,
    Suite.ASSOCIATIVITY_CLASS: _assoc_class,
    Suite.ASSOCIATIVITY_OBJECT: _assoc_object,
    Suite.UNIT: _unit,
    Suite.DUAL_INVOLUTION: _dual_involution,
    Suite.DUAL_HOM: _dual_hom,
    Suite.SPECTRAL_FLOW: _spectral_flow,
    Suite.SECTOR_ADDITIVITY: _sector_additivity,
    Suite.MONOIDAL_INDUCTION: _monoidal_induction,
    Suite.PEEL_ROUNDTRIP: _peel_roundtrip,
    Suite.BORDER_WEIGHT: _border_weight,
    Suite.MONODROMY_SECTOR: _monodromy_sector,
    Suite.C1_SUBRING: _c1_subring,
}


def _render(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(_render(v) for v in x) + ")"
    if isinstance(x, list):
        return "[" + ", ".join(_render(v) for v in x) + "]"
    return str(x)


def _run_range(suite: Suite, spec_text: str, seed: int, lo: int, hi: int) -> tuple[int, int, Failure | None]:
    spec = parse_algebra(spec_text)
    case = CASES[suite]
    # the core builds no reference cycles; cyclic collection only rescans the fusion caches
    paused = gc.isenabled()
    gc.disable()
    try:
        return _cases(case, suite, spec, seed, lo, hi)
    finally:
        clear_caches()
        if paused:
            gc.enable()


def _cases(case, suite: Suite, spec: AlgebraSpec, seed: int, lo: int, hi: int):
    passed = failed = 0
    first = None
    for i in range(lo, hi):
        gen = random.Random(f"{seed}:{suite.value}:{i}")
        try:
            inputs, expected, got = case(gen, spec, i)
            ok = expected == got
        except WFusionError as exc:
            inputs, expected, got, ok = f"case {i}", "no error", f"{exc.code}: {exc}", False
        if ok:
            passed += 1
        else:
            failed += 1
            if first is None:
                first = Failure(i, inputs, _render(expected), _render(got))
    return passed, failed, first


def _counts(spec: AlgebraSpec) -> tuple[bool, str, str]:
    ext = spec.ext
    if ext.kappa > 0:
        try:
            enumerate_simples(ext, Predicate.HIGHEST_WEIGHT)
        except Infinite:
            return True, "infinite", "infinite"
        return False, "infinite", "finite"
    p, rJ = ext.p, ext.r_J
    hw = enumerate_simples(ext, Predicate.HIGHEST_WEIGHT)
    gr = enumerate_simples(ext, Predicate.GRADING_RESTRICTED)
    got = {"hw": len(hw), "gr": len(gr)}
    want = {"hw": rJ * rJ * p * (p - 1), "gr": rJ * (p - 1) * (rJ * p - 1)}
    local = local_counts(spec)
    if local is not None:
        got["hw_local"] = sum(sector(ext, x) is Sector.LOCAL for x in hw)
        got["gr_local"] = sum(sector(ext, x) is Sector.LOCAL for x in gr)
        want.update(local)
    return got == want, json.dumps(want, sort_keys=True), json.dumps(got, sort_keys=True)


def local_counts(spec: AlgebraSpec) -> dict[str, int] | None:
    """Local-sector counts of highest-weight and grading-restricted simples."""
    if spec.family == "Bp":
        p = spec.parameter
        gr = p * (p - 1) // 2 if p % 2 == 0 else (p - 1) * (p - 2) // 2
        return {"hw_local": p * (p - 1) // 2, "gr_local": gr}
    if spec.family == "B2orb":
        m = spec.parameter
        return {"hw_local": m * m, "gr_local": m * (m - 1) if m % 2 == 0 else m * m}
    return None


def _single_count(cfg: SuiteConfig) -> SuiteReport:
    ok, want, got = _counts(cfg.algebra)
    first = None if ok else Failure(0, str(cfg.algebra), want, got)
    return SuiteReport(cfg.suite, str(cfg.algebra), int(ok), int(not ok), first)


def _literature(cfg: SuiteConfig) -> SuiteReport:
    checks = reproduce_literature(cfg.algebra)
    bad = [c for c in checks if not c.passed]
    first = None
    if bad:
        c = bad[0]
        first = Failure(checks.index(c), f"{c.name}: {c.lhs[0]} . {c.lhs[1]}", c.expected, c.got)
    note = "" if checks else "no literature dictionary"
    return SuiteReport(cfg.suite, str(cfg.algebra), len(checks) - len(bad), len(bad), first, note)


def _not_applicable(cfg: SuiteConfig) -> str:
    ext = cfg.algebra.ext
    if cfg.suite is Suite.BORDER_WEIGHT and ext.kappa > 0:
        return "lowest weights are not at the border when kappa > 0"
    if cfg.suite is Suite.C1_SUBRING and (ext.kappa > 0 or ext.r_J == 0):
        return "no finite set of C1-cofinite simples"
    return ""


def run_suite(cfg: SuiteConfig, workers: int = 1) -> SuiteReport:
    """Counts runs once; LiteratureAll runs each printed identity once."""
    if cfg.suite is Suite.COUNTS:
        return _single_count(cfg)
    if cfg.suite is Suite.LITERATURE_ALL:
        return _literature(cfg)
    note = _not_applicable(cfg)
    if note:
        return SuiteReport(cfg.suite, str(cfg.algebra), 0, 0, None, note)
    n = cfg.samples
    spec_text = str(cfg.algebra)
    if workers <= 1 or n < 2 * workers:
        parts = [_run_range(cfg.suite, spec_text, cfg.seed, 0, n)]
    else:
        bounds = [n * k // workers for k in range(workers + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_range, cfg.suite, spec_text, cfg.seed, bounds[k], bounds[k + 1])
                for k in range(workers)
            ]
            parts = [f.result() for f in futures]
    passed = sum(p for p, _, _ in parts)
    failed = sum(f for _, f, _ in parts)
    first = next((ff for _, _, ff in parts if ff is not None), None)
    return SuiteReport(cfg.suite, spec_text, passed, failed, first)


DEFAULT_ALGEBRAS = (
    "Bp:2", "Bp:3", "Bp:4", "Bp:5",
    "B2orb:1", "B2orb:2", "B2orb:3", "B2orb:4",
    "Sp:3", "Sp:4", "Sp:5",
    "S2orb:2", "S2orb:3", "S2orb:4",
)


@dataclass
class Matrix:
    reports: list[SuiteReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)


def run_matrix(
    suites: tuple[Suite, ...] = tuple(Suite),
    algebras: tuple[str, ...] = DEFAULT_ALGEBRAS,
    samples: int = 1000,
    seed: int = 0,
    workers: int = 1,
) -> Matrix:
    out = Matrix()
    for alg in algebras:
        spec = parse_algebra(alg)
        for suite in suites:
            out.reports.append(run_suite(SuiteConfig(suite, samples, seed, spec), workers))
    return out
