"""Textbook RSA (no padding) and key recovery by factoring the modulus."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    BadExponent,
    CiphertextOutOfRange,
    DegenerateModulus,
    InvalidNatural,
    MessageOutOfRange,
    NotASemiprime,
    NotInvertible,
    NotPrime,
)
from .factorizer import Engine, FactorReport, factorize
from .natnum import format_natural, gcd, mod_inverse, mod_pow, parse_natural
from .primality import gen_prime, is_prime

DEFAULT_E = 65537


@dataclass(frozen=True)
class RsaPublicKey:
    n: int
    e: int


@dataclass(frozen=True)
class RsaPrivateKey:
    n: int
    d: int


@dataclass(frozen=True)
class RsaKeyPair:
    public: RsaPublicKey
    private: RsaPrivateKey
    p: int
    q: int
    phi: int

    @property
    def n(self) -> int:
        return self.public.n

    @property
    def e(self) -> int:
        return self.public.e

    @property
    def d(self) -> int:
        return self.private.d


@dataclass(frozen=True)
class CrackResult:
    """Key pair rebuilt from a public key, plus the factorization that produced it."""

    keys: RsaKeyPair
    report: FactorReport

    @property
    def iterations(self) -> int:
        return self.report.iterations


def keygen_from_primes(p: int, q: int, e: int) -> RsaKeyPair:
    if not is_prime(p):
        raise NotPrime(f"p = {p} is not prime")
    if not is_prime(q):
        raise NotPrime(f"q = {q} is not prime")
    if p == q:
        raise DegenerateModulus("p and q must differ")
    n = p * q
    phi = (p - 1) * (q - 1)
    if not 1 < e < phi:
        raise BadExponent(f"e = {e} outside (1, {phi})")
    try:
        d = mod_inverse(e, phi)
    except NotInvertible:
        raise BadExponent(f"gcd(e, phi) = {gcd(e, phi)}") from None
    return RsaKeyPair(RsaPublicKey(n, e), RsaPrivateKey(n, d), p, q, phi)


def keygen_random(bits: int, e: int = DEFAULT_E, rng: random.Random | None = None) -> RsaKeyPair:
    """Draw two distinct ``bits``-bit primes and build a key pair around ``e``.

    Draws are repeated until the primes differ and ``e`` is invertible
    modulo phi.
    """
    if bits < 8:
        raise ValueError("keygen_random needs bits >= 8 per prime")
    if e < 3 or e % 2 == 0:
        raise ValueError("public exponent must be odd and >= 3")
    largest_phi = ((1 << bits) - 2) ** 2
    if e >= largest_phi:
        raise ValueError(f"e = {e} cannot be below phi for {bits}-bit primes")
    rng = rng or random.SystemRandom()
    while True:
        p = gen_prime(bits, rng)
        q = gen_prime(bits, rng)
        if p == q:
            continue
        phi = (p - 1) * (q - 1)
        if e < phi and gcd(e, phi) == 1:
            return keygen_from_primes(p, q, e)


def encrypt(m: int, key: RsaPublicKey) -> int:
    if not 0 <= m < key.n:
        raise MessageOutOfRange(f"message must lie in [0, {key.n})")
    return mod_pow(m, key.e, key.n)


def decrypt(c: int, key: RsaPrivateKey) -> int:
    if not 0 <= c < key.n:
        raise CiphertextOutOfRange(f"ciphertext must lie in [0, {key.n})")
    return mod_pow(c, key.d, key.n)


def crack(key: RsaPublicKey, method: Engine | str = Engine.KNJ) -> CrackResult:
    """Recover the private exponent by factoring the public modulus."""
    report = factorize(key.n, method)
    if not report.factored:
        raise NotASemiprime(f"{report.method.value} engine reports {report.outcome.value} for n = {key.n}")
    p, q = report.p, report.q
    if not is_prime(q):
        raise NotASemiprime(f"n = {key.n} has cofactor {q}, which is composite")
    return CrackResult(keygen_from_primes(p, q, key.e), report)


KEY_FIELDS = ("n", "e", "d", "p", "q", "phi")


def format_key_record(keys: RsaKeyPair) -> str:
    values = {"n": keys.n, "e": keys.e, "d": keys.d, "p": keys.p, "q": keys.q, "phi": keys.phi}
    return "".join(f"{name}={format_natural(values[name])}\n" for name in KEY_FIELDS)


def parse_key_record(text: str) -> dict[str, int]:
    """Read ``name=value`` lines; blank lines and ``#`` comments are skipped."""
    fields: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, value = line.partition("=")
        name = name.strip()
        if not sep or name not in KEY_FIELDS:
            raise InvalidNatural(f"line {lineno}: expected one of {', '.join(KEY_FIELDS)} as name=value")
        if name in fields:
            raise InvalidNatural(f"line {lineno}: duplicate field {name}")
        fields[name] = parse_natural(value.strip())
    return fields


def public_key_from_record(fields: dict[str, int]) -> RsaPublicKey:
    try:
        return RsaPublicKey(fields["n"], fields["e"])
    except KeyError as exc:
        raise InvalidNatural(f"key record lacks field {exc.args[0]}") from None


def private_key_from_record(fields: dict[str, int]) -> RsaPrivateKey:
    try:
        return RsaPrivateKey(fields["n"], fields["d"])
    except KeyError as exc:
        raise InvalidNatural(f"key record lacks field {exc.args[0]}") from None


def keypair_from_record(fields: dict[str, int]) -> RsaKeyPair:
    """Rebuild a full key pair and check it against the stored exponent."""
    missing = [name for name in KEY_FIELDS if name not in fields]
    if missing:
        raise InvalidNatural(f"key record lacks {', '.join(missing)}")
    keys = keygen_from_primes(fields["p"], fields["q"], fields["e"])
    if (keys.n, keys.d, keys.phi) != (fields["n"], fields["d"], fields["phi"]):
        raise BadExponent("key record fields are inconsistent")
    return keys
