"""Seeded generators, word enumeration, brute-force oracles and benchmarks."""

from __future__ import annotations

import gc
import math
import random
import statistics
import time
import tracemalloc
from dataclasses import dataclass
from typing import Iterator, Sequence

from .conjugacy import are_conjugate, word_problem_equal
from .modular import ModularWord, braid_to_modular
from .words import BraidWord, as_braid, exponent_sum, invert, permutation

CODES = (1, -1, 2, -2)


# -- random words ----------------------------------------------------------------

def _random_reduced(rng: random.Random, length: int) -> list[int]:
    out: list[int] = []
    for _ in range(length):
        choices = [c for c in CODES if not out or c != -out[-1]]
        out.append(rng.choice(choices))
    return out


# unsigned suffixes realizing each permutation (in the (pi(1), pi(2), pi(3)) form)
_PADDING = {
    (2, 1, 3): (1,),
    (1, 3, 2): (2,),
    (3, 2, 1): (1, 2, 1),
    (2, 3, 1): (1, 2),
    (3, 1, 2): (2, 1),
}


def _pad_to_pure(codes: list[int]) -> list[int]:
    """Append at most three letters that undo the permutation without cancelling."""
    pi = permutation(BraidWord._trusted(tuple(codes)))
    if pi == (1, 2, 3):
        return codes
    inverse = [0, 0, 0]
    for s, p in enumerate(pi, start=1):
        inverse[p - 1] = s
    suffix = _PADDING[tuple(inverse)]
    out = list(codes)
    for g in suffix:
        # keep the sign of a neighbouring equal generator so nothing cancels
        out.append(out[-1] if out and abs(out[-1]) == g else g)
    return out


def random_braid(length: int, seed: int, pure_only: bool = False) -> BraidWord:
    """Deterministic freely reduced random word.

    With ``pure_only``, up to 64 words are drawn until one is pure; failing
    that, the last draw is padded with at most three letters (chosen so no
    cancellation occurs) to undo its permutation.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    rng = random.Random(seed)
    codes = _random_reduced(rng, length)
    if pure_only:
        for _ in range(63):
            if permutation(BraidWord._trusted(tuple(codes))) == (1, 2, 3):
                break
            codes = _random_reduced(rng, length)
        codes = _pad_to_pure(codes)
    return BraidWord._trusted(tuple(codes))


# -- enumeration -------------------------------------------------------------------

def iter_reduced_words(max_len: int, min_len: int = 0) -> Iterator[tuple[int, ...]]:
    """Freely reduced code tuples, by length, each length in a fixed order."""
    level: list[tuple[int, ...]] = [()]
    for length in range(max_len + 1):
        if length >= min_len:
            yield from level
        if length == max_len:
            break
        level = [w + (c,) for w in level for c in CODES if not w or c != -w[-1]]


def count_reduced_words(length: int) -> int:
    return 1 if length == 0 else 4 * 3 ** (length - 1)


def iter_all_words(max_len: int) -> Iterator[tuple[int, ...]]:
    """Every word over the four letters, reduced or not."""
    level: list[tuple[int, ...]] = [()]
    for length in range(max_len + 1):
        yield from level
        if length == max_len:
            break
        level = [w + (c,) for w in level for c in CODES]


def walk_reduced(max_len: int, init, step) -> Iterator[tuple[tuple[int, ...], object]]:
    """Depth-first walk over freely reduced words carrying a per-prefix state.

    ``step(state, code)`` gives the state of the word extended by ``code``, so
    e.g. a Burau product costs one matrix multiplication per word rather than
    one per letter.  Words come out in depth-first order, prefixes first.
    """
    stack = [((), init)]
    while stack:
        word, state = stack.pop()
        yield word, state
        if len(word) == max_len:
            continue
        for c in reversed(CODES):
            if word and c == -word[-1]:
                continue
            stack.append((word + (c,), step(state, c)))


def iter_pure_words(max_len: int) -> Iterator[BraidWord]:
    for w in iter_reduced_words(max_len):
        bw = BraidWord._trusted(w)
        if permutation(bw) == (1, 2, 3):
            yield bw


# -- brute-force conjugacy ----------------------------------------------------------

def brute_force_conjugate(phi, psi, max_conjugator_length: int) -> BraidWord | None:
    """First ``g`` (breadth first over freely reduced words) with ``g psi g^-1 = phi``."""
    phi, psi = as_braid(phi), as_braid(psi)
    for g in iter_reduced_words(max_conjugator_length):
        gw = BraidWord._trusted(g)
        if word_problem_equal(gw * psi * invert(gw), phi):
            return gw
    return None


class ConjugatorOrbit:
    """All ``g psi g^-1`` for ``|g| <= bound``, keyed by element.

    Equivalent to running ``brute_force_conjugate(., psi, bound)`` against
    many targets at once: the first conjugator in breadth-first order is
    kept for each element reached.
    """

    def __init__(self, psi, bound: int, conjugators: Sequence[tuple[ModularWord, tuple]] | None = None):
        self.psi = as_braid(psi)
        self.bound = bound
        e = exponent_sum(self.psi)
        m = braid_to_modular(self.psi)
        if conjugators is None:
            conjugators = conjugator_table(bound)
        first: dict[tuple, tuple] = {}
        for mg, g in conjugators:
            key = (mg * m * mg.inverse()).syllables
            if key not in first:
                first[key] = g
        self._first = first
        self._e = e

    def witness(self, phi) -> BraidWord | None:
        phi = as_braid(phi)
        if exponent_sum(phi) != self._e:
            return None
        g = self._first.get(braid_to_modular(phi).syllables)
        if g is None:
            return None
        gw = BraidWord._trusted(g)
        if not word_problem_equal(gw * self.psi * invert(gw), phi):
            raise AssertionError("orbit table out of step with the word problem")
        return gw


def conjugator_table(bound: int) -> list[tuple[ModularWord, tuple]]:
    """``(image in PSL(2,Z), word)`` for every freely reduced word up to ``bound``."""
    return [(braid_to_modular(BraidWord._trusted(g)), g) for g in iter_reduced_words(bound)]


# -- benchmark --------------------------------------------------------------------

@dataclass(frozen=True)
class BenchReport:
    lengths: tuple[int, ...]
    times: tuple[float, ...]
    slope: float | None
    peak_bytes: tuple[int, ...] = ()

    @property
    def bytes_per_letter(self) -> tuple[float, ...]:
        return tuple(p / n for p, n in zip(self.peak_bytes, self.lengths))

    @property
    def memory_spread(self) -> float | None:
        """Largest over smallest bytes-per-letter; 1.0 means perfectly linear."""
        per = self.bytes_per_letter
        return max(per) / min(per) if per else None

    def to_json(self) -> dict:
        return {
            "lengths": list(self.lengths),
            "times": list(self.times),
            "slope": self.slope,
            "peak_bytes": list(self.peak_bytes),
        }


def bench_inputs(length: int, seed: int) -> tuple[BraidWord, BraidWord]:
    """A conjugate pair ``(g w g^-1, w)`` with ``|w| = length`` and ``|g| = length // 4``."""
    w = random_braid(length, seed)
    g = random_braid(length // 4, seed + 1)
    return g * w * invert(g), w


def fit_slope(lengths: Sequence[int], times: Sequence[float]) -> float | None:
    if len(lengths) < 2:
        return None
    xs = [math.log(n) for n in lengths]
    ys = [math.log(t) for t in times]
    return statistics.linear_regression(xs, ys).slope


def bench_conjugacy(
    lengths: Sequence[int], seed: int, repeats: int = 3, measure_memory: bool = True
) -> BenchReport:
    """Time ``are_conjugate`` on seeded conjugate pairs; best of ``repeats``."""
    lengths = tuple(lengths)
    if not lengths or any(b <= a for a, b in zip(lengths, lengths[1:])):
        raise ValueError("lengths must be nonempty and strictly increasing")
    times = []
    peaks = []
    for n in lengths:
        phi, psi = bench_inputs(n, seed)
        best = math.inf
        for _ in range(repeats):
            gc.collect()
            t0 = time.perf_counter()
            verdict = are_conjugate(phi, psi)
            best = min(best, time.perf_counter() - t0)
        if not verdict.conjugate:
            raise AssertionError("benchmark pair was not recognized as conjugate")
        times.append(best)
        if measure_memory:
            # a separate pass: tracing slows the decision down considerably
            gc.collect()
            tracemalloc.start()
            are_conjugate(phi, psi)
            _, peak = tracemalloc.get_traced_memory()
            tracemalloc.stop()
            peaks.append(peak)
    return BenchReport(lengths, tuple(times), fit_slope(lengths, times), tuple(peaks))
