"""Scalar arithmetic of the max-plus semifield.

The carrier set is the reals extended with a tropical zero (conventionally
written -inf).  Addition ``oplus`` is max, multiplication ``otimes`` is
ordinary addition, the multiplicative unit ``ONE`` is the number 0, and
exponentiation with a real exponent is ordinary multiplication.

The tropical zero is a tagged singleton, never a floating -inf: keeping it
out of float arithmetic makes absorption and inversion errors exact and
avoids NaN from (-inf) + (+inf).  IEEE -inf appears only at the
serialization boundary (``from_float`` / ``to_float``).
"""

from __future__ import annotations

import math
from typing import Union


class DomainError(ValueError):
    """Operation applied outside its tropical domain (e.g. inverting zero)."""


class _TropicalZero:
    """Singleton tag for the tropical zero (additive identity, -inf)."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "ZERO"

    def __reduce__(self):
        return (_restore_zero, ())


def _restore_zero():
    return ZERO


ZERO = _TropicalZero()
ONE = 0.0

MaxPlusScalar = Union[float, _TropicalZero]


def is_zero(a: MaxPlusScalar) -> bool:
    return a is ZERO


def oplus(a: MaxPlusScalar, b: MaxPlusScalar) -> MaxPlusScalar:
    """Tropical addition: max under the total order with ZERO at the bottom."""
    if a is ZERO:
        return b
    if b is ZERO:
        return a
    return a if a >= b else b


def otimes(a: MaxPlusScalar, b: MaxPlusScalar) -> MaxPlusScalar:
    """Tropical multiplication: real addition; ZERO is absorbing."""
    if a is ZERO or b is ZERO:
        return ZERO
    return a + b


def inv(a: MaxPlusScalar) -> MaxPlusScalar:
    """Multiplicative inverse (real negation)."""
    if a is ZERO:
        raise DomainError("tropical zero has no multiplicative inverse")
    return -a


def tpow(a: MaxPlusScalar, r: float) -> MaxPlusScalar:
    """Exponentiation with a real exponent: a**r is the real product r*a.

    ZERO**r is ZERO for r > 0 and undefined otherwise.
    """
    if a is ZERO:
        if r > 0:
            return ZERO
        raise DomainError("non-positive power of tropical zero")
    return r * a


def tmin(a: MaxPlusScalar, b: MaxPlusScalar) -> MaxPlusScalar:
    """Dual minimum: inv(inv(a) oplus inv(b)) on nonzeros, else ZERO."""
    if a is ZERO or b is ZERO:
        return ZERO
    return a if a <= b else b


def leq(a: MaxPlusScalar, b: MaxPlusScalar) -> bool:
    """Total order induced by oplus: a <= b iff a oplus b == b."""
    if a is ZERO:
        return True
    if b is ZERO:
        return False
    return a <= b


def maxtimes_to_maxplus(v: float) -> MaxPlusScalar:
    """Natural log, mapping the max-times semifield onto max-plus (0 -> ZERO)."""
    if v < 0 or math.isnan(v):
        raise DomainError(f"max-times values are nonnegative reals, got {v!r}")
    if v == 0:
        return ZERO
    return math.log(v)


def maxplus_to_maxtimes(a: MaxPlusScalar) -> float:
    """Exponential, inverse of maxtimes_to_maxplus."""
    if a is ZERO:
        return 0.0
    return math.exp(a)


def from_float(v: float) -> MaxPlusScalar:
    """Deserialize an IEEE float: -inf becomes the tagged ZERO."""
    if math.isnan(v):
        raise DomainError("NaN is not a max-plus scalar")
    if v == -math.inf:
        return ZERO
    if v == math.inf:
        raise DomainError("+inf is not a max-plus scalar")
    return v


def to_float(a: MaxPlusScalar) -> float:
    """Serialize to an IEEE float: ZERO becomes -inf."""
    if a is ZERO:
        return -math.inf
    return a


def ensure_scalar(a: MaxPlusScalar) -> MaxPlusScalar:
    """Validate a value as a max-plus scalar, coercing ints to float."""
    if a is ZERO:
        return a
    if isinstance(a, bool) or not isinstance(a, (int, float)):
        raise TypeError(f"not a max-plus scalar: {a!r}")
    a = float(a)
    if math.isnan(a) or math.isinf(a):
        raise DomainError(f"finite value or ZERO required, got {a!r}")
    return a
