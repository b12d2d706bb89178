"""Exception hierarchy shared by every factorkit module."""


class FactorkitError(ValueError):
    pass


class InvalidNatural(FactorkitError):
    """Text is not a canonical decimal natural number."""


class InvalidModulus(FactorkitError):
    pass


class NotInvertible(FactorkitError):
    pass


class RsaError(FactorkitError):
    pass


class NotPrime(RsaError):
    pass


class DegenerateModulus(RsaError):
    pass


class BadExponent(RsaError):
    pass


class MessageOutOfRange(RsaError):
    pass


class CiphertextOutOfRange(RsaError):
    pass


class NotASemiprime(RsaError):
    pass
