"""Primality verdicts and random prime generation.

Small inputs are answered from a precomputed sieve.  Everything else goes
through Miller-Rabin with a fixed witness set that is known to be exact
below ``DETERMINISTIC_LIMIT``.  Above that bound the witnesses are
followed by a strong Lucas probable-prime test and the verdict is flagged
as probabilistic.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .natnum import isqrt

SIEVE_LIMIT = 1 << 16

# primes 2..41: no strong pseudoprime to all of them exists below this bound
WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
DETERMINISTIC_LIMIT = 3317044064679887385961981


class Method(enum.Enum):
    SMALL_SIEVE = "SmallSieve"
    DETERMINISTIC_WITNESS_SET = "DeterministicWitnessSet"
    PROBABILISTIC_FALLBACK = "ProbabilisticFallback"


@dataclass(frozen=True)
class PrimalityVerdict:
    n: int
    is_prime: bool
    method: Method

    def __bool__(self) -> bool:
        return self.is_prime


def _sieve(limit: int) -> bytearray:
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit - 1) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit, i)))
    return flags


_SIEVE = _sieve(SIEVE_LIMIT)
_SCREEN_PRIMES = [p for p in range(3, 256) if _SIEVE[p]]


def is_prime(n: int) -> PrimalityVerdict:
    if n < SIEVE_LIMIT:
        return PrimalityVerdict(n, bool(_SIEVE[n]) if n >= 0 else False, Method.SMALL_SIEVE)
    if not n & 1:
        return PrimalityVerdict(n, False, Method.SMALL_SIEVE)
    for p in _SCREEN_PRIMES:
        if n % p == 0:
            return PrimalityVerdict(n, False, Method.SMALL_SIEVE)

    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for a in WITNESSES:
        if not _strong_probable_prime(n, a, d, s):
            return PrimalityVerdict(n, False, Method.DETERMINISTIC_WITNESS_SET)
    if n < DETERMINISTIC_LIMIT:
        return PrimalityVerdict(n, True, Method.DETERMINISTIC_WITNESS_SET)
    return PrimalityVerdict(n, _strong_lucas_probable_prime(n), Method.PROBABILISTIC_FALLBACK)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or not n & 1:
        raise ValueError("n must be odd and positive")
    a %= n
    result = 1
    while a:
        while not a & 1:
            a >>= 1
            if n & 7 in (3, 5):
                result = -result
        a, n = n, a
        if a & 3 == 3 and n & 3 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    """Strong Lucas test with Selfridge's parameter choice (odd n > 41)."""
    r = isqrt(n)
    if r * r == n:
        return False
    D = 5
    while True:
        j = jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4

    d, s = n + 1, 0
    while not d & 1:
        d >>= 1
        s += 1

    def half(x: int) -> int:
        return (x + n if x & 1 else x) // 2 % n

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def gen_prime(bits: int, rng: random.Random | None = None) -> int:
    """Random odd prime with exactly ``bits`` significant bits."""
    if bits < 3:
        raise ValueError("gen_prime needs bits >= 3")
    rng = rng or random.SystemRandom()
    top = 1 << (bits - 1)
    while True:
        candidate = rng.getrandbits(bits) | top | 1
        if is_prime(candidate):
            return candidate
