"""Exact arithmetic on nonnegative integers of unbounded size.

Python's ``int`` is the carrier for every natural number in the toolkit.
This module adds the handful of primitives the factorization engines and
the RSA layer need, all computed without floating point.
"""

from __future__ import annotations

import re

from .errors import InvalidModulus, InvalidNatural, NotInvertible

_CANONICAL = re.compile(r"0|[1-9][0-9]*", re.ASCII)

# CPython refuses str<->int conversions above ~4300 digits; stay below that
# and split larger values recursively.
_CHUNK_DIGITS = 2000


def parse_natural(text: str) -> int:
    """Parse canonical decimal text (ASCII digits, no sign, no leading zeros)."""
    if not isinstance(text, str) or not _CANONICAL.fullmatch(text):
        raise InvalidNatural(f"not a canonical decimal natural: {text!r}")
    return _parse_digits(text)


def _parse_digits(digits: str) -> int:
    if len(digits) <= _CHUNK_DIGITS:
        return int(digits)
    low_len = len(digits) // 2
    high = _parse_digits(digits[:-low_len])
    low = _parse_digits(digits[-low_len:])
    return high * 10**low_len + low


def format_natural(n: int) -> str:
    if n < 0:
        raise InvalidNatural(f"negative value: {n}")
    return _format_digits(n, 0)


def _format_digits(n: int, width: int) -> str:
    # width > 0 means zero-pad to exactly that many digits
    if n.bit_length() <= _CHUNK_DIGITS * 3:
        s = str(n)
        return s.zfill(width) if width else s
    # log10(2) ~ 30103/100000; only needs to land near the midpoint
    low_len = (n.bit_length() * 30103 // 100000 + 1) // 2
    high, low = divmod(n, 10**low_len)
    high_width = width - low_len if width else 0
    return _format_digits(high, high_width) + _format_digits(low, low_len)


def isqrt(n: int) -> int:
    """Largest r with r*r <= n, by Newton's iteration on integers."""
    if n < 0:
        raise ValueError("isqrt of a negative number")
    if n < 2:
        return n
    # initial guess is a power of two at or above sqrt(n)
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) >> 1
        if y >= x:
            return x
        x = y


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """Right-to-left square-and-multiply."""
    if modulus <= 0:
        raise InvalidModulus("modulus must be at least 1")
    if modulus == 1:
        return 0
    result = 1
    base %= modulus
    while exp:
        if exp & 1:
            result = result * base % modulus
        base = base * base % modulus
        exp >>= 1
    return result


def mod_inverse(a: int, m: int) -> int:
    """Return d in [1, m) with a*d = 1 (mod m), by the extended Euclidean algorithm.

    Raises NotInvertible when a and m share a factor.
    """
    if m < 2:
        raise InvalidModulus("modulus must be at least 2")
    old_r, r = a % m, m
    old_s, s = 1, 0
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
    if old_r != 1:
        raise NotInvertible(f"gcd({a}, {m}) = {old_r}")
    return old_s % m
