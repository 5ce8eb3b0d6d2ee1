"""Seeded property suites shared by the CLI and the test-suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .burau import GENERATORS, burau, burau_mod_p, fox_unreduced_burau, reduce_unreduced
from .conjugacy import are_conjugate, word_problem_equal
from .harness import iter_all_words, iter_pure_words, random_braid, walk_reduced
from .laurent import LAURENT_IDENTITY, LaurentPoly, laurent_mod_p, mat2_mod_p
from .moody import has_unit_coefficient, moody, validate_turning_points
from .words import BraidWord, exponent_sum, invert, is_identity

PRIMES = (2, 3, 5, 7)
SUITES = ("burau", "moody", "conjugacy")


@dataclass
class SuiteResult:
    suite: str
    seed: int
    max_len: int
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    checks: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, check: str, message: str) -> None:
        self.checks[check] = self.checks.get(check, 0) + 1
        if len(self.failures) < 50:
            self.failures.append(f"[{check}] {message}")

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "max_len": self.max_len,
            "cases": self.cases,
            "ok": self.ok,
            "failed_checks": dict(self.checks),
            "failures": list(self.failures),
        }


def _mul_burau(m, c):
    return m * GENERATORS[c]


def burau_suite(max_len: int, seed: int, random_cases: int = 200) -> SuiteResult:
    res = SuiteResult("burau", seed, max_len)
    for word, m in walk_reduced(max_len, LAURENT_IDENTITY, _mul_burau):
        res.cases += 1
        w = BraidWord._trusted(word)
        if word and not is_identity(w):
            if m.is_identity():
                res.fail("faithful", f"burau({w}) is the identity")
            for p in PRIMES:
                if mat2_mod_p(m, p).is_identity():
                    res.fail("faithful_mod_p", f"burau_mod_p({w}, {p}) is the identity")
        e = exponent_sum(w)
        expected = LaurentPoly.monomial((-1) ** (e % 2), e)
        if m.det() != expected:
            res.fail("determinant", f"det burau({w}) = {m.det()}, expected {expected}")
    rng = random.Random(seed)
    for _ in range(random_cases):
        res.cases += 1
        u = random_braid(rng.randrange(0, 33), rng.randrange(1 << 30))
        v = random_braid(rng.randrange(0, 33), rng.randrange(1 << 30))
        if burau(u * v) != burau(u) * burau(v):
            res.fail("multiplicative", f"u={u} v={v}")
        if reduce_unreduced(fox_unreduced_burau(u)) != burau(u):
            res.fail("fox_oracle", f"w={u}")
        if burau(u) * burau(invert(u)) != LAURENT_IDENTITY:
            res.fail("inverse", f"w={u}")
        p = rng.choice(PRIMES)
        if burau_mod_p(u, p) != mat2_mod_p(burau(u), p):
            res.fail("mod_p", f"w={u} p={p}")
    return res


def moody_suite(max_len: int, seed: int) -> SuiteResult:
    """Exhaustive over pure freely reduced words; ``seed`` is recorded only."""
    res = SuiteResult("moody", seed, max_len)
    for w in iter_pure_words(max_len):
        res.cases += 1
        r = moody(w)
        if r.crossings == 0:
            continue
        if r.polynomial.is_zero():
            res.fail("nonzero", f"moody({w}) = 0")
        if not has_unit_coefficient(r.polynomial):
            res.fail("unit_coefficient", f"moody({w}) = {r.polynomial}")
        for p in (2, 3, 5):
            if laurent_mod_p(r.polynomial, p).is_zero():
                res.fail("nonzero_mod_p", f"moody({w}) vanishes mod {p}")
        report = validate_turning_points(r.cp_sequence)
        if not report.valid:
            res.fail("turning_points", f"{w}: cp={r.cp_sequence} {report.violations}")
    return res


def conjugacy_suite(max_len: int, seed: int, random_cases: int = 300) -> SuiteResult:
    res = SuiteResult("conjugacy", seed, max_len)
    for word in iter_all_words(max_len):
        res.cases += 1
        w = BraidWord._trusted(word)
        if word_problem_equal(w, BraidWord()) != is_identity(w):
            res.fail("word_problem", f"w={w}")
    rng = random.Random(seed)
    for _ in range(random_cases):
        res.cases += 1
        phi = random_braid(rng.randrange(0, 25), rng.randrange(1 << 30))
        g = random_braid(rng.randrange(0, 13), rng.randrange(1 << 30))
        target = g * phi * invert(g)
        verdict = are_conjugate(target, phi)
        if not verdict.conjugate:
            res.fail("conjugation_invariance", f"g={g} phi={phi}")
        elif not is_identity(verdict.witness * phi * invert(verdict.witness) * invert(target)):
            res.fail("witness", f"g={g} phi={phi} witness={verdict.witness}")
        psi = random_braid(len(phi), rng.randrange(1 << 30))
        v2 = are_conjugate(phi, psi)
        if v2.conjugate and not is_identity(v2.witness * psi * invert(v2.witness) * invert(phi)):
            res.fail("witness", f"phi={phi} psi={psi}")
    return res


def run_suite(name: str, max_len: int, seed: int) -> list[SuiteResult]:
    names = SUITES if name == "all" else (name,)
    runners = {"burau": burau_suite, "moody": moody_suite, "conjugacy": conjugacy_suite}
    out = []
    for n in names:
        if n not in runners:
            raise ValueError(f"unknown suite {n!r}")
        out.append(runners[n](max_len, seed))
    return out
