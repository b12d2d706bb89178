"""Independent oracles shared across the suite.

Nothing here imports factorkit: the helpers are deliberately naive so
they can check the package rather than echo it.
"""

import functools

import pytest


@functools.lru_cache(maxsize=None)
def sieve_flags(limit):
    """Sieve of Eratosthenes: flags[i] is True iff i is prime, for 0 <= i <= limit."""
    flags = [True] * (limit + 1)
    flags[0] = False
    if limit >= 1:
        flags[1] = False
    i = 2
    while i * i <= limit:
        if flags[i]:
            for j in range(i * i, limit + 1, i):
                flags[j] = False
        i += 1
    return tuple(flags)


@functools.lru_cache(maxsize=None)
def primes_upto(limit):
    return tuple(i for i, f in enumerate(sieve_flags(limit)) if f)


def smallest_factor(n):
    """Smallest divisor > 1 of n >= 2, found by incrementing d while d*d <= n."""
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def prime_factors(n):
    out = []
    while n > 1:
        d = smallest_factor(n)
        out.append(d)
        n //= d
    return out


def naive_pow(base, exp, modulus):
    acc = 1 % modulus
    for _ in range(exp):
        acc = acc * base % modulus
    return acc


def floor_sqrt_by_search(n):
    """Largest r with r*r <= n, by bisection on integers."""
    lo, hi = 0, n + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid * mid <= n:
            lo = mid
        else:
            hi = mid
    return lo


TABLE1 = [
    # digits, N, trial iterations, KNJ iterations (published values)
    (2, 55, 4, 2),
    (4, 1943, 28, 9),
    (6, 998299, 822, 89),
    (8, 85928201, 8752, 259),
    (10, 1323172573, 27802, 4287),
]


@pytest.fixture(scope="session")
def table1():
    return TABLE1


# -- acceptance summary ------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion gate")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            number, title = value
            prev = _criteria.get(number, (title, True))
            _criteria[number] = (title, prev[1] and report.passed)


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker:
        item.user_properties.append(("criterion", tuple(marker.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")
