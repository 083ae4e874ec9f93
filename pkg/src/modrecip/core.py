"""Signed floor arithmetic and the extended modular inverse.

The inverse used throughout this package places its result in a window
that follows the sign of the modulus: [1, m-1] for m > 1 and [m+1, -1]
for m < -1. For a unit modulus (|m| = 1) it takes a signed closed-form
value instead of the conventional 0, which is what makes the reciprocity
identity in :mod:`modrecip.recip` hold without exceptions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class ZeroOperandError(ValueError):
    """An operand is zero where the operation needs it nonzero."""


class NotCoprimeError(ValueError):
    """The operands share a common factor, so no inverse exists."""


class DomainError(ValueError):
    """Inputs fall outside an operation's stated hypotheses."""


class InverseFailure(Enum):
    """Why an inverse is undefined.  Values are the CLI reason tokens."""

    ZERO_OPERAND = "ZeroOperand"
    NOT_COPRIME = "NotCoprime"


_FAILURE_EXC = {
    InverseFailure.ZERO_OPERAND: ZeroOperandError,
    InverseFailure.NOT_COPRIME: NotCoprimeError,
}


@dataclass(frozen=True)
class InverseOutcome:
    """Either an inverse value or a typed reason why none exists."""

    result: int | None = None
    failure: InverseFailure | None = None

    def __post_init__(self) -> None:
        if (self.result is None) == (self.failure is None):
            raise ValueError("exactly one of result/failure must be set")

    @property
    def ok(self) -> bool:
        return self.failure is None

    def expect(self) -> int:
        """Return the inverse, raising the matching error on failure."""
        if self.failure is not None:
            raise _FAILURE_EXC[self.failure](self.failure.value)
        assert self.result is not None
        return self.result


def sign(n: int) -> int:
    """-1, 0 or 1."""
    return (n > 0) - (n < 0)


# Python's // and % already round toward -inf, so the two floor
# operations only add the typed zero check.

def floor_div(a: int, m: int) -> int:
    """Floor quotient: the unique q with q <= a/m < q + 1."""
    if m == 0:
        raise ZeroOperandError("floor_div: modulus is zero")
    return a // m


def floor_mod(a: int, m: int) -> int:
    """Remainder a - m*floor(a/m); 0 <= r < m for m > 0, m < r <= 0 for m < 0."""
    if m == 0:
        raise ZeroOperandError("floor_mod: modulus is zero")
    return a % m


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) > 0 and a*x + b*y = g.

    Works for any signs; the Bezout certificate is the independent
    oracle the inverse routines are checked against.
    """
    if a == 0 and b == 0:
        raise ZeroOperandError("gcd(0, 0) is undefined")
    r0, r1 = abs(a), abs(b)
    x0, x1 = 1, 0
    y0, y1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return r0, x0 * sign(a), y0 * sign(b)


def unit_inverse(a: int, m: int) -> int:
    """Closed-form inverse for |m| = 1: |m|(sgn(m) - sgn(a))/2 + sgn(a)."""
    if abs(m) != 1:
        raise DomainError("unit_inverse needs |m| = 1")
    if a == 0:
        raise ZeroOperandError("unit_inverse: a is zero")
    # sgn(m) - sgn(a) is -2, 0 or 2, so the halving is exact
    return (sign(m) - sign(a)) // 2 + sign(a)


def mod_inverse(a: int, m: int) -> InverseOutcome:
    """Inverse of a modulo m in the sign-following window.

    For |m| > 1 the result x satisfies a*x = 1 (mod m) with x in
    [1, m-1] (m positive) or [m+1, -1] (m negative).  For |m| = 1 the
    signed closed form is returned.  Failures come back as an outcome
    rather than an exception: ZeroOperand when a*m = 0, NotCoprime when
    gcd(a, m) != 1.
    """
    if a == 0 or m == 0:
        return InverseOutcome(failure=InverseFailure.ZERO_OPERAND)
    if math.gcd(a, m) != 1:
        return InverseOutcome(failure=InverseFailure.NOT_COPRIME)
    if abs(m) == 1:
        return InverseOutcome(result=unit_inverse(a, m))
    _, x, _ = extended_gcd(a, m)
    return InverseOutcome(result=x % m)


def classical_inverse(a: int, m: int) -> InverseOutcome:
    """Conventional inverse: canonical residue in [0, |m|-1], 0 when |m| = 1.

    Negative moduli are normalized to the residue system of |m|.
    """
    if a == 0 or m == 0:
        return InverseOutcome(failure=InverseFailure.ZERO_OPERAND)
    if math.gcd(a, m) != 1:
        return InverseOutcome(failure=InverseFailure.NOT_COPRIME)
    n = abs(m)
    if n == 1:
        return InverseOutcome(result=0)
    _, x, _ = extended_gcd(a, n)
    return InverseOutcome(result=x % n)


def brute_force_inverse(a: int, m: int) -> InverseOutcome:
    """Exhaustive-search oracle over the signed window; needs |m| > 1.

    A test oracle, not a production path: O(|m|) per call.
    """
    if abs(m) <= 1:
        raise DomainError("brute_force_inverse needs |m| > 1")
    if a == 0:
        return InverseOutcome(failure=InverseFailure.ZERO_OPERAND)
    if math.gcd(a, m) != 1:
        return InverseOutcome(failure=InverseFailure.NOT_COPRIME)
    one = 1 % m
    window = range(1, m) if m > 0 else range(m + 1, 0)
    for x in window:
        if a * x % m == one:
            return InverseOutcome(result=x)
    raise AssertionError("coprime inverse must exist in the window")
