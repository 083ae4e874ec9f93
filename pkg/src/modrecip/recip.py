"""The reciprocity identity and the inversion algorithm built on it.

For coprime nonzero a, b the identity reads

    a * inv(a mod b) + b * inv(b mod a) = 1 + a*b

and it stays exact for unit operands because of the signed closed form
in :func:`modrecip.core.unit_inverse`.  Rearranged, it inverts one
operand from the inverse of the other, which yields a full inversion
algorithm that never runs the extended Euclidean algorithm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    InverseFailure,
    InverseOutcome,
    NotCoprimeError,
    ZeroOperandError,
    mod_inverse,
    unit_inverse,
)

# Euclid needs about 1.44 * bits reduction steps in the Fibonacci worst
# case; 3 * bits plus slack for the initial reduction is a safe ceiling.
_STEP_SLACK = 4


@dataclass(frozen=True)
class ReciprocityReport:
    """Both inverses and both sides of the identity for one pair."""

    a: int
    b: int
    inv_a_mod_b: int
    inv_b_mod_a: int
    lhs: int  # a*inv_a_mod_b + b*inv_b_mod_a
    rhs: int  # 1 + a*b
    k: int  # multiplier with lhs = 1 + k*a*b
    holds: bool


def reciprocity_check(a: int, b: int) -> ReciprocityReport:
    """Recompute both inverses and report whether lhs = 1 + a*b exactly."""
    if a == 0 or b == 0:
        raise ZeroOperandError("reciprocity needs nonzero operands")
    if math.gcd(a, b) != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) != 1")
    inv_a = mod_inverse(a, b).expect()
    inv_b = mod_inverse(b, a).expect()
    lhs = a * inv_a + b * inv_b
    rhs = 1 + a * b
    k, rem = divmod(lhs - 1, a * b)
    assert rem == 0, "lhs - 1 must be a multiple of a*b"
    return ReciprocityReport(
        a=a,
        b=b,
        inv_a_mod_b=inv_a,
        inv_b_mod_a=inv_b,
        lhs=lhs,
        rhs=rhs,
        k=k,
        holds=lhs == rhs,
    )


def inverse_via_reciprocity(a: int, m: int) -> InverseOutcome:
    """Invert a modulo m by reduce-and-swap, with no extended gcd anywhere.

    Each step replaces the argument by its floor remainder (which has the
    same inverse), swaps the roles, and finally back-substitutes through
    the identity with one exact division per level.  Implemented as a loop
    with an explicit frame stack so very wide operands cannot exhaust the
    call stack.
    """
    if a == 0 or m == 0:
        return InverseOutcome(failure=InverseFailure.ZERO_OPERAND)
    max_steps = 3 * min(abs(a), abs(m)).bit_length() + _STEP_SLACK
    frames: list[tuple[int, int]] = []  # (residue, modulus), outermost first
    x, y = a, m
    while abs(y) != 1:
        r = x % y
        if r == 0:
            return InverseOutcome(failure=InverseFailure.NOT_COPRIME)
        frames.append((r, y))
        x, y = y, r
        assert len(frames) <= max_steps, "reduction exceeded the Euclid step bound"
    inv = unit_inverse(x, y)
    for r, b in reversed(frames):
        # r*inv(r mod b) + b*inv(b mod r) = 1 + r*b, solved for the first term
        q, rem = divmod(1 + r * b - b * inv, r)
        assert rem == 0, "back-substitution division must be exact"
        inv = q
    return InverseOutcome(result=inv)


def solve_diophantine(a: int, m: int) -> tuple[int, int]:
    """Solve a*x - k*m = 1; x is the windowed inverse, k the cofactor."""
    if a == 0 or m == 0:
        raise ZeroOperandError("solve_diophantine needs nonzero operands")
    if math.gcd(a, m) != 1:
        raise NotCoprimeError(f"gcd({a}, {m}) != 1")
    x = mod_inverse(a, m).expect()
    k, rem = divmod(a * x - 1, m)
    assert rem == 0
    return x, k
