"""Trial division and KNJ factorization, textbook RSA, and a benchmark harness."""

from .errors import (
    BadExponent,
    CiphertextOutOfRange,
    DegenerateModulus,
    FactorkitError,
    InvalidModulus,
    InvalidNatural,
    MessageOutOfRange,
    NotASemiprime,
    NotInvertible,
    NotPrime,
)
from .factorizer import Engine, FactorReport, KnjTraceEntry, Outcome, knj_factorize, trial_division, verify
from .natnum import format_natural, gcd, isqrt, mod_inverse, mod_pow, parse_natural
from .primality import Method, PrimalityVerdict, gen_prime, is_prime
from .rsa import (
    CrackResult,
    RsaKeyPair,
    RsaPrivateKey,
    RsaPublicKey,
    crack,
    decrypt,
    encrypt,
    keygen_from_primes,
    keygen_random,
)

__version__ = "0.1.0"
