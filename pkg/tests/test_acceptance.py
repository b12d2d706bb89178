"""Exit criteria.  Each test carries a ``criterion`` marker; a PASS/FAIL line
per criterion is printed in the terminal summary."""

import random
import time
from pathlib import Path

import pytest

from conftest import TABLE1, floor_sqrt_by_search, primes_upto, sieve_flags
from factorkit.bench import render, run_benchmark
from factorkit.factorizer import Engine, Outcome, knj_factorize, trial_division, verify
from factorkit.primality import is_prime
from factorkit.rsa import crack, decrypt, encrypt, keygen_from_primes, keygen_random

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.mark.criterion(1, "Table 1 iteration counts, all ten cells exact")
def test_table1_exact():
    started = time.perf_counter()
    for _, n, trial_iters, knj_iters in TABLE1:
        assert trial_division(n).iterations == trial_iters, n
        assert knj_factorize(n).iterations == knj_iters, n
    assert time.perf_counter() - started < 5.0


@pytest.mark.criterion(2, "worked examples 55 and 2097491441")
def test_worked_examples():
    r = knj_factorize(55)
    assert (r.p, r.q) == (5, 11)

    r = knj_factorize(2097491441, trace=True)
    assert (r.p, r.q) == (9973, 210317)
    assert r.trace[0].x == 45799
    assert r.trace[0].x - r.trace[-1].x == 35826
    assert r.trace[-1].x_prime and r.trace[-1].y_integral
    assert verify(r)


@pytest.mark.criterion(3, "KNJ beats trial on Table 1; reverses when p is far below sqrt(N)")
def test_comparative_claim_and_counterexamples():
    for _, n, _, _ in TABLE1:
        assert knj_factorize(n).iterations < trial_division(n).iterations, n

    # n = 3q: trial stops at its second candidate, KNJ walks all the way down
    for q in (101, 1009, 10007, 100003, 1000003):
        n = 3 * q
        trial, knj = trial_division(n), knj_factorize(n)
        assert (trial.p, knj.p) == (3, 3)
        assert knj.iterations > trial.iterations == 2


@pytest.mark.criterion(4, "engines agree on every odd n in [3, 1e5]; factored reports verify")
def test_engine_agreement():
    started = time.perf_counter()
    for n in range(3, 10**5 + 1, 2):
        trial, knj = trial_division(n), knj_factorize(n)
        assert trial.outcome is knj.outcome, n
        assert trial.outcome in (Outcome.FACTORED, Outcome.PRIME)
        if trial.factored:
            assert verify(trial) and verify(knj), n
    assert time.perf_counter() - started < 30.0


@pytest.mark.criterion(5, "closed-form iteration counts on 1000 random odd semiprimes")
def test_iteration_closed_forms():
    odd_primes = primes_upto(1 << 20)[1:]
    rng = random.Random(20)
    for _ in range(1000):
        p, q = sorted((rng.choice(odd_primes), rng.choice(odd_primes)))
        n = p * q
        x0 = floor_sqrt_by_search(n)
        if x0 % 2 == 0:
            x0 += 1
        trial, knj = trial_division(n), knj_factorize(n)
        assert (trial.p, knj.p) == (p, p)
        assert trial.iterations == p - 1
        assert knj.iterations == (x0 - p) // 2 + 1


@pytest.mark.criterion(6, "is_prime matches a sieve for every n <= 1e6")
def test_primality_exhaustive():
    flags = sieve_flags(10**6)
    assert all(bool(is_prime(n)) == flags[n] for n in range(10**6 + 1))


@pytest.mark.criterion(7, "RSA round trip: all 55 residues; 20 keypairs x 1000 messages at 32-bit primes")
def test_rsa_round_trip():
    keys = keygen_from_primes(5, 11, 3)
    assert [decrypt(encrypt(m, keys.public), keys.private) for m in range(55)] == list(range(55))

    rng = random.Random(7)
    for _ in range(20):
        keys = keygen_random(32, 65537, rng)
        assert keys.p.bit_length() == keys.q.bit_length() == 32
        for _ in range(1000):
            m = rng.randrange(keys.n)
            assert decrypt(encrypt(m, keys.public), keys.private) == m


def _attack_corpus():
    rng = random.Random(8)
    for bits in range(8, 33):
        e = 3 if bits < 10 else 65537
        yield keygen_random(bits, e, rng)
    for _ in range(50):
        yield keygen_random(rng.randint(8, 16), 3, rng)


@pytest.mark.criterion(8, "crack recovers d for generated keypairs with primes up to 32 bits, both engines")
def test_attack_soundness():
    rng = random.Random(80)
    for keys in _attack_corpus():
        for method in Engine:
            got = crack(keys.public, method).keys
            assert got.d == keys.d, (keys.n, method)
            assert {got.p, got.q} == {keys.p, keys.q}
            m = rng.randrange(keys.n)
            c = encrypt(m, keys.public)
            assert decrypt(c, got.private) == decrypt(c, keys.private) == m


@pytest.mark.criterion(9, "Table 1 bench CSV with timing zeroed equals the golden fixture byte for byte")
def test_golden_csv():
    rows = run_benchmark([row[1] for row in TABLE1])
    expected = (FIXTURES / "table1_golden.csv").read_bytes()
    assert render(rows, "csv", timing=False).encode() == expected
