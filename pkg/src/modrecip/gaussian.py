"""Gaussian integers with just enough structure for modular inversion.

Division uses nearest-integer rounding on each component with halves
rounded toward minus infinity, giving a remainder of norm at most half
the divisor's norm.  That fixed tie rule makes the canonical residue of
an inverse deterministic and representative-independent.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import NamedTuple

from .core import DomainError, NotCoprimeError, ZeroOperandError, mod_inverse


@dataclass(frozen=True)
class GaussianInteger:
    re: int
    im: int

    def norm(self) -> int:
        """a*a + b*b; zero only for the zero element."""
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianInteger":
        return GaussianInteger(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def _coerce(self, other: "GaussianInteger | int") -> "GaussianInteger | None":
        if isinstance(other, GaussianInteger):
            return other
        if isinstance(other, int):
            return GaussianInteger(other, 0)
        return None

    def __add__(self, other: "GaussianInteger | int") -> "GaussianInteger":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInteger(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: "GaussianInteger | int") -> "GaussianInteger":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInteger(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: "GaussianInteger | int") -> "GaussianInteger":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: "GaussianInteger | int") -> "GaussianInteger":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInteger(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "GaussianInteger":
        return GaussianInteger(-self.re, -self.im)

    def __str__(self) -> str:
        return format_gaussian(self)


class GaussianDivMod(NamedTuple):
    quotient: GaussianInteger
    remainder: GaussianInteger


def _round_half_down(num: int, den: int) -> int:
    # nearest integer to num/den for den > 0, halves toward -inf
    return (2 * num + den - 1) // (2 * den)


def gaussian_divmod(n: GaussianInteger, d: GaussianInteger) -> GaussianDivMod:
    """Euclidean division: n = d*q + r with norm(r) <= norm(d)/2."""
    nd = d.norm()
    if nd == 0:
        raise ZeroOperandError("gaussian division by zero")
    w = n * d.conjugate()
    q = GaussianInteger(_round_half_down(w.re, nd), _round_half_down(w.im, nd))
    r = n - d * q
    assert 2 * r.norm() <= nd, "remainder norm bound failed"
    return GaussianDivMod(q, r)


def divides(d: GaussianInteger, n: GaussianInteger) -> bool:
    """True when n is an exact Gaussian multiple of d."""
    if d.is_zero():
        return n.is_zero()
    w = n * d.conjugate()
    nd = d.norm()
    return w.re % nd == 0 and w.im % nd == 0


def _check_inverse_hypotheses(z: GaussianInteger, w: GaussianInteger) -> tuple[int, int]:
    if z.re == 0 or z.im == 0 or w.re == 0 or w.im == 0:
        raise DomainError("all four components must be nonzero")
    s, t = z.norm(), w.norm()
    if s <= 1 or t <= 1:
        raise DomainError("both norms must exceed 1")
    if math.gcd(s, t) != 1:
        raise NotCoprimeError(f"norms {s} and {t} share a factor")
    return s, t


def gaussian_inverse(
    z: GaussianInteger, w: GaussianInteger
) -> tuple[GaussianInteger, GaussianInteger]:
    """Invert z modulo w: returns (representative, canonical residue).

    The representative is conj(z) scaled by the inverse of norm(z) modulo
    norm(w); the canonical form is its division remainder by w.  Both
    satisfy z*value = 1 (mod w).
    """
    s, t = _check_inverse_hypotheses(z, w)
    representative = z.conjugate() * mod_inverse(s, t).expect()
    canonical = gaussian_divmod(representative, w).remainder
    return representative, canonical


def gaussian_bezout_identity(a: int, b: int, c: int, d: int) -> bool:
    """Exact check of (a+ib)u + (c+id)v = 1 + (a+ib)(c+id)(a-ib)(c-id)."""
    z = GaussianInteger(a, b)
    w = GaussianInteger(c, d)
    s, t = _check_inverse_hypotheses(z, w)
    u = z.conjugate() * mod_inverse(s, t).expect()
    v = w.conjugate() * mod_inverse(t, s).expect()
    lhs = z * u + w * v
    rhs = 1 + z * w * z.conjugate() * w.conjugate()
    return lhs == rhs


def inverse_mod_gaussian_linear(a: int, b: int) -> GaussianInteger:
    """Inverse of the integer a modulo the Gaussian modulus a*i + b.

    The value is inv(a mod b) + i*(a - inv(b mod a)), the reduction
    identity evaluated at a purely imaginary shift.
    """
    if abs(a) <= 1:
        raise DomainError("inverse_mod_gaussian_linear needs |a| > 1")
    if b == 0:
        raise ZeroOperandError("b must be nonzero")
    if math.gcd(a, b) != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) != 1")
    value = GaussianInteger(
        mod_inverse(a, b).expect(),
        a - mod_inverse(b, a).expect(),
    )
    assert divides(GaussianInteger(b, a), value * a - 1)
    return value


def format_gaussian(z: GaussianInteger) -> str:
    """Render as 'a+bi' / 'a-bi', dropping whichever part is zero."""
    if z.im == 0:
        return str(z.re)
    if z.re == 0:
        return f"{z.im}i"
    return f"{z.re}{z.im:+d}i"


_BOTH = re.compile(r"([+-]?\d+)([+-]\d*)i\Z")
_IMAG = re.compile(r"([+-]?\d*)i\Z")
_REAL = re.compile(r"([+-]?\d+)\Z")


def _imag_coeff(text: str) -> int:
    if text in ("", "+"):
        return 1
    if text == "-":
        return -1
    return int(text)


def parse_gaussian(text: str) -> GaussianInteger:
    """Parse 'a+bi' style text; bare reals, bare imaginaries and spaces are fine."""
    s = text.replace(" ", "")
    m = _BOTH.fullmatch(s)
    if m:
        return GaussianInteger(int(m.group(1)), _imag_coeff(m.group(2)))
    m = _IMAG.fullmatch(s)
    if m:
        return GaussianInteger(0, _imag_coeff(m.group(1)))
    m = _REAL.fullmatch(s)
    if m:
        return GaussianInteger(int(m.group(1)), 0)
    raise ValueError(f"not a Gaussian integer: {text!r}")
