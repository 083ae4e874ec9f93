"""Closed-form identities that move an inverse to a related modulus.

Every operation here computes its result from previously known inverses
(never by running a fresh gcd on the target modulus) and is designed to
be swept against :func:`modrecip.core.mod_inverse` exhaustively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    DomainError,
    NotCoprimeError,
    ZeroOperandError,
    floor_mod,
    mod_inverse,
    sign,
)


def shift_invariance(a: int, b: int, k: int) -> int:
    """Inverse of k*a + b modulo a, from the inverse of b alone.

    For |a| > 1 the shift changes nothing; for |a| = 1 a sign correction
    (sgn(k*a+b) - sgn(b)) / 2 applies.
    """
    if a == 0 or b == 0 or k * a + b == 0:
        raise ZeroOperandError("shift_invariance needs a, b and k*a+b nonzero")
    if math.gcd(a, b) != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) != 1")
    inv_b = mod_inverse(b, a).expect()
    if abs(a) > 1:
        return inv_b
    return inv_b + (sign(k * a + b) - sign(b)) // 2


def reduce_inverse_plus(a: int, b: int, k: int) -> int:
    """Inverse of a modulo k*a + b, as k*(a - inv(b mod a)) + inv(a mod b)."""
    return _reduce_inverse(a, b, k, plus=True)


def reduce_inverse_minus(a: int, b: int, k: int) -> int:
    """Inverse of a modulo k*a - b, as k*inv(b mod a) - (b - inv(a mod b))."""
    return _reduce_inverse(a, b, k, plus=False)


def _reduce_inverse(a: int, b: int, k: int, plus: bool) -> int:
    if abs(a) == 1:
        raise DomainError("|a| = 1 is excluded from the reduction identities")
    if a == 0 or b == 0:
        raise ZeroOperandError("reduce_inverse needs nonzero a and b")
    target = k * a + b if plus else k * a - b
    if target == 0:
        raise ZeroOperandError("target modulus is zero")
    if math.gcd(a, b) != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) != 1")
    inv_b_mod_a = mod_inverse(b, a).expect()
    inv_a_mod_b = mod_inverse(a, b).expect()
    if plus:
        return k * (a - inv_b_mod_a) + inv_a_mod_b
    return k * inv_b_mod_a - (b - inv_a_mod_b)


def square_inverse(a: int, b: int) -> int:
    """Inverse of b**2 modulo a**2, evaluated two ways and cross-checked.

    Both forms are polynomial in inv(b mod a):
      ((b*i - 2) * i)**2  and  (3 - 2*b*i) * i**2,  reduced mod a**2.
    """
    if abs(a) <= 1:
        raise DomainError("square_inverse needs |a| > 1")
    if b == 0:
        raise ZeroOperandError("square_inverse needs b nonzero")
    if math.gcd(a, b) != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) != 1")
    i = mod_inverse(b, a).expect()
    mm = a * a
    form1 = ((b * i - 2) * i) ** 2 % mm
    form2 = (3 - 2 * b * i) * i * i % mm
    assert form1 == form2, "the two square-inverse forms must agree"
    return form1


@dataclass(frozen=True)
class QuadPairReport:
    """Cross-pair inverse identities for a coprime quadruple (a,b,c,d).

    u = a*c + b*d, v = a*d - b*c, s = a*a + b*b, t = c*c + d*d.  The x
    values are inverses of each other's y values: x[0], x[1] modulo u and
    x[2], x[3] modulo v.  When gcd(u, v) = 1 the report also certifies the
    inverses of s and t modulo u and v, plus the four exact integer
    identities (s*y1 = v + u*z1 and friends) behind them.
    """

    a: int
    b: int
    c: int
    d: int
    u: int
    v: int
    s: int
    t: int
    x: tuple[int, int, int, int]
    y: tuple[int, int, int, int]
    z: tuple[int, int, int]
    pair_inverse_ok: tuple[bool, bool, bool, bool]
    sum_inverse_ok: tuple[bool, bool, bool, bool] | None
    proof_identity_ok: tuple[bool, bool, bool, bool] | None

    @property
    def all_ok(self) -> bool:
        flags = self.pair_inverse_ok + (self.sum_inverse_ok or ()) + (
            self.proof_identity_ok or ()
        )
        return all(flags)


def quad_pair_inverses(a: int, b: int, c: int, d: int) -> QuadPairReport:
    """Build and verify the full cross-pair report for one quadruple.

    Needs gcd(a,b) = gcd(c,d) = 1 and |u| > 1, |v| > 1.  The sum and
    proof-identity flags stay None unless gcd(u, v) = 1.
    """
    if math.gcd(a, b) != 1 or math.gcd(c, d) != 1:
        raise NotCoprimeError("both (a,b) and (c,d) must be coprime pairs")
    u = a * c + b * d
    v = a * d - b * c
    if abs(u) <= 1 or abs(v) <= 1:
        raise DomainError("|u| and |v| must both exceed 1")
    s = a * a + b * b
    t = c * c + d * d

    inv_ab = mod_inverse(a, b).expect()  # inverse of a modulo b
    inv_ba = mod_inverse(b, a).expect()
    inv_cd = mod_inverse(c, d).expect()
    inv_dc = mod_inverse(d, c).expect()

    x1 = a * inv_dc + b * (d - inv_cd)
    x2 = a * (c - inv_dc) + b * inv_cd
    x3 = a * (d - inv_cd) - b * inv_dc
    x4 = a * inv_cd - b * (c - inv_dc)
    y1 = c * (a - inv_ba) + d * inv_ab
    y2 = c * inv_ba + d * (b - inv_ab)
    y3 = c * (b - inv_ab) - d * inv_ba
    y4 = c * inv_ab - d * (a - inv_ba)
    z1 = a * (a - inv_ba) + b * inv_ab
    z2 = c * inv_dc + d * (d - inv_cd)
    z3 = c * (c - inv_dc) + d * inv_cd

    pair_ok = (
        mod_inverse(x1, u).expect() == floor_mod(y1, u),
        mod_inverse(x2, u).expect() == floor_mod(y2, u),
        mod_inverse(x3, v).expect() == floor_mod(y3, v),
        mod_inverse(x4, v).expect() == floor_mod(y4, v),
    )

    sum_ok = None
    proof_ok = None
    if math.gcd(u, v) == 1:
        inv_vu = mod_inverse(v, u).expect()
        inv_uv = mod_inverse(u, v).expect()
        sum_ok = (
            floor_mod(y1 * inv_vu, u) == mod_inverse(s, u).expect(),
            floor_mod(x1 * inv_vu, u) == mod_inverse(t, u).expect(),
            floor_mod(y4 * inv_uv, v) == mod_inverse(s, v).expect(),
            floor_mod(x4 * inv_uv, v) == mod_inverse(t, v).expect(),
        )
        proof_ok = (
            s * y1 == v + u * z1,
            t * x1 == v + u * z2,
            s * y4 == u - v * z1,
            t * x4 == u + v * z3,
        )

    return QuadPairReport(
        a=a,
        b=b,
        c=c,
        d=d,
        u=u,
        v=v,
        s=s,
        t=t,
        x=(x1, x2, x3, x4),
        y=(y1, y2, y3, y4),
        z=(z1, z2, z3),
        pair_inverse_ok=pair_ok,
        sum_inverse_ok=sum_ok,
        proof_identity_ok=proof_ok,
    )


def sum_of_squares_inverses(a: int, b: int, c: int, d: int) -> QuadPairReport:
    """Quad report with the sum-of-squares identities required present."""
    report = quad_pair_inverses(a, b, c, d)
    if report.sum_inverse_ok is None:
        raise NotCoprimeError(f"gcd(u, v) = gcd({report.u}, {report.v}) != 1")
    return report


def positive_case_exact(a: int, b: int, c: int, d: int) -> int:
    """y1 as the exact windowed inverse of x1 modulo u, for positive inputs.

    With a, b, c, d > 0 the value y1 already lies in (0, u), so no modular
    reduction is needed; the function asserts that before returning.
    """
    if min(a, b, c, d) <= 0:
        raise DomainError("all of a, b, c, d must be positive")
    if math.gcd(a, b) != 1 or math.gcd(c, d) != 1:
        raise NotCoprimeError("both (a,b) and (c,d) must be coprime pairs")
    if a * d == b * c:
        raise DomainError("a*d = b*c makes v zero")
    u = a * c + b * d
    inv_ab = mod_inverse(a, b).expect()
    inv_ba = mod_inverse(b, a).expect()
    inv_cd = mod_inverse(c, d).expect()
    inv_dc = mod_inverse(d, c).expect()
    x1 = a * inv_dc + b * (d - inv_cd)
    y1 = c * (a - inv_ba) + d * inv_ab
    assert 0 < y1 < u, "positivity bound 0 < y1 < u failed"
    assert mod_inverse(x1, u).expect() == y1
    return y1
