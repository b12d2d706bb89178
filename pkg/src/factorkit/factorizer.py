"""Instrumented factorization engines: plain trial division and KNJ descent.

Both engines count the candidate divisors they examine so that runs can be
compared on iteration count, independent of hardware.

Trial division tries 2, 3, 4, ... up to floor(sqrt(n)).  KNJ starts at
floor(sqrt(n)) bumped to the next odd number and walks down through the
odd numbers to 3, accepting the first candidate that is prime and divides
n.  Every odd candidate visited counts as one iteration, composite or not.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .natnum import isqrt
from .primality import is_prime


class Outcome(enum.Enum):
    FACTORED = "Factored"
    PRIME = "Prime"
    INVALID = "Invalid"


class Engine(enum.Enum):
    TRIAL = "trial"
    KNJ = "knj"


@dataclass(frozen=True)
class KnjTraceEntry:
    x: int
    x_prime: bool
    # only meaningful when x_prime; False otherwise
    y_integral: bool


@dataclass(frozen=True)
class FactorReport:
    n: int
    outcome: Outcome
    method: Engine
    iterations: int
    p: int | None = None
    q: int | None = None
    trace: tuple[KnjTraceEntry, ...] | None = None

    @property
    def factored(self) -> bool:
        return self.outcome is Outcome.FACTORED


_VECTOR_MIN = 1 << 14
_CHUNK_MAX = 1 << 20


def first_divisor(n: int, candidates: range) -> int | None:
    """First member of ``candidates`` (in order) that divides ``n``, or None.

    Every candidate before the hit is tested.  Moduli below 2**64 are
    scanned in uint64 blocks; anything else uses a plain loop.
    """
    if len(candidates) < _VECTOR_MIN or n >= 1 << 64 or candidates[-1] < 1:
        for c in candidates:
            if n % c == 0:
                return c
        return None
    modulus = np.uint64(n)
    chunk = 1 << 12
    pos = 0
    while pos < len(candidates):
        block = candidates[pos : pos + chunk]
        values = np.arange(block.start, block.stop, block.step, dtype=np.int64).astype(np.uint64)
        hits = np.flatnonzero(modulus % values == 0)
        if hits.size:
            return block[int(hits[0])]
        pos += chunk
        chunk = min(chunk * 2, _CHUNK_MAX)
    return None


def trial_division(n: int) -> FactorReport:
    if n < 2:
        return FactorReport(n, Outcome.INVALID, Engine.TRIAL, 0)
    limit = isqrt(n)
    c = first_divisor(n, range(2, limit + 1))
    if c is None:
        return FactorReport(n, Outcome.PRIME, Engine.TRIAL, max(limit - 1, 0))
    return FactorReport(n, Outcome.FACTORED, Engine.TRIAL, c - 1, c, n // c)


def knj_start(n: int) -> int:
    """floor(sqrt(n)), moved up to the next odd number when even."""
    x = isqrt(n)
    return x + 1 if x % 2 == 0 else x


def knj_factorize(n: int, trace: bool = False) -> FactorReport:
    """Factor odd ``n`` by descending over odd candidates from ``knj_start(n)``.

    The first candidate that is prime and divides ``n`` becomes ``p``.  When
    ``trace`` is set, every visited candidate is recorded with its
    primality verdict and whether it divides ``n``.
    """
    if n < 3 or n % 2 == 0:
        return FactorReport(n, Outcome.INVALID, Engine.KNJ, 0, trace=() if trace else None)

    start = knj_start(n)
    if trace:
        return _knj_traced(n, start)

    # Divisibility is tested before primality: far cheaper, and the first
    # candidate passing both is the same in either order.
    remaining = range(start, 2, -2)
    while True:
        x = first_divisor(n, remaining)
        if x is None:
            return FactorReport(n, Outcome.PRIME, Engine.KNJ, len(range(start, 2, -2)))
        if is_prime(x):
            return FactorReport(n, Outcome.FACTORED, Engine.KNJ, (start - x) // 2 + 1, x, n // x)
        remaining = range(x - 2, 2, -2)


def _knj_traced(n: int, start: int) -> FactorReport:
    entries = []
    for x in range(start, 2, -2):
        x_prime = bool(is_prime(x))
        hit = x_prime and n % x == 0
        entries.append(KnjTraceEntry(x, x_prime, hit))
        if hit:
            return FactorReport(n, Outcome.FACTORED, Engine.KNJ, len(entries), x, n // x, tuple(entries))
    return FactorReport(n, Outcome.PRIME, Engine.KNJ, len(entries), trace=tuple(entries))


def factorize(n: int, method: Engine | str, trace: bool = False) -> FactorReport:
    method = Engine(method)
    if method is Engine.TRIAL:
        return trial_division(n)
    return knj_factorize(n, trace=trace)


def verify(report: FactorReport) -> bool:
    """Re-check every structural claim a report makes."""
    n = report.n
    if report.iterations < 0:
        return False
    if report.outcome is Outcome.INVALID:
        if report.method is Engine.TRIAL:
            return n < 2
        return n < 3 or n % 2 == 0

    if report.outcome is Outcome.PRIME:
        if report.p is not None or report.q is not None or not is_prime(n):
            return False
    else:
        p, q = report.p, report.q
        if p is None or q is None or report.iterations < 1:
            return False
        if p * q != n or not 1 < p <= q < n or not is_prime(p):
            return False

    if report.trace is not None:
        if report.method is not Engine.KNJ or len(report.trace) != report.iterations:
            return False
        for i, entry in enumerate(report.trace):
            if entry.x < 3 or entry.x % 2 == 0:
                return False
            if i and report.trace[i - 1].x - entry.x != 2:
                return False
            if entry.y_integral and not entry.x_prime:
                return False
        if report.trace and report.trace[0].x != knj_start(n):
            return False
        if report.outcome is Outcome.FACTORED:
            if not report.trace or report.trace[-1].x != report.p or not report.trace[-1].y_integral:
                return False
    return True
