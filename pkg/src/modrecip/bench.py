"""Timing harness comparing the two inversion routes on wide operands.

Correctness gates the numbers: every trial's reciprocity-route result is
compared against the extended-gcd route, and a report should only be
shown when they agreed on all of them.  Timings are comparative
instrumentation, not an acceptance threshold.
"""

from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import dataclass

from .core import DomainError, mod_inverse
from .recip import inverse_via_reciprocity

MIN_BITS = 64
MAX_BITS = 4096


@dataclass(frozen=True)
class BenchReport:
    bit_width: int
    iterations: int
    seed: int  # reprinting with this seed reproduces the operand stream
    median_ns_reciprocity: int
    median_ns_ext_gcd: int
    agreement_count: int

    @property
    def all_agreed(self) -> bool:
        return self.agreement_count == self.iterations


def _random_coprime_pair(rng: random.Random, bits: int) -> tuple[int, int]:
    while True:
        a = rng.getrandbits(bits) | (1 << (bits - 1))
        m = rng.getrandbits(bits) | (1 << (bits - 1))
        if math.gcd(a, m) == 1:
            return a, m


def run_bench(bit_width: int, iterations: int, seed: int | None = None) -> BenchReport:
    """Time both inversion routes on random coprime pairs of one width."""
    if not MIN_BITS <= bit_width <= MAX_BITS:
        raise DomainError(f"bit_width must be in [{MIN_BITS}, {MAX_BITS}]")
    if iterations < 1:
        raise DomainError("iterations must be at least 1")
    if seed is None:
        seed = random.SystemRandom().getrandbits(64)
    rng = random.Random(seed)

    recip_ns: list[int] = []
    gcd_ns: list[int] = []
    agreement = 0
    for _ in range(iterations):
        a, m = _random_coprime_pair(rng, bit_width)
        t0 = time.perf_counter_ns()
        via_recip = inverse_via_reciprocity(a, m)
        t1 = time.perf_counter_ns()
        via_gcd = mod_inverse(a, m)
        t2 = time.perf_counter_ns()
        recip_ns.append(t1 - t0)
        gcd_ns.append(t2 - t1)
        agreement += via_recip.result == via_gcd.result

    return BenchReport(
        bit_width=bit_width,
        iterations=iterations,
        seed=seed,
        median_ns_reciprocity=int(statistics.median(recip_ns)),
        median_ns_ext_gcd=int(statistics.median(gcd_ns)),
        agreement_count=agreement,
    )
