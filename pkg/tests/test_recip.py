import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from modrecip.core import InverseFailure, NotCoprimeError, ZeroOperandError, mod_inverse
from modrecip.recip import (
    inverse_via_reciprocity,
    reciprocity_check,
    solve_diophantine,
)

small = st.integers(min_value=-64, max_value=64).filter(lambda n: n != 0)
wide = st.integers(min_value=-(2**256), max_value=2**256).filter(lambda n: n != 0)


def test_reciprocity_worked_examples():
    r = reciprocity_check(3, 5)
    assert (r.inv_a_mod_b, r.inv_b_mod_a) == (2, 2)
    assert r.lhs == 16 == r.rhs
    assert r.k == 1 and r.holds

    # unit operand: a*1 + 1*1 = 1 + a
    r = reciprocity_check(5, 1)
    assert r.lhs == 6 == r.rhs

    r = reciprocity_check(3, -5)
    assert (r.inv_a_mod_b, r.inv_b_mod_a) == (-3, 1)
    assert r.lhs == -14 == r.rhs and r.k == 1

    r = reciprocity_check(-3, -5)
    assert (r.inv_a_mod_b, r.inv_b_mod_a) == (-2, -2)
    assert r.lhs == 16 == r.rhs and r.k == 1


def test_reciprocity_rejects_bad_pairs():
    with pytest.raises(ZeroOperandError):
        reciprocity_check(0, 5)
    with pytest.raises(ZeroOperandError):
        reciprocity_check(5, 0)
    with pytest.raises(NotCoprimeError):
        reciprocity_check(6, 9)


@given(small, small)
def test_reciprocity_holds_on_all_sign_combinations(a, b):
    assume(math.gcd(a, b) == 1)
    r = reciprocity_check(a, b)
    assert r.holds and r.k == 1
    assert a * r.inv_a_mod_b + b * r.inv_b_mod_a == 1 + a * b


@pytest.mark.parametrize(
    "a,m,expected",
    [(7, 22, 19), (3, 5, 2), (1, 7, 1), (1, 97, 1), (3, -5, -3), (-2, -5, -3)],
)
def test_inverse_via_reciprocity_examples(a, m, expected):
    assert inverse_via_reciprocity(a, m).expect() == expected


def test_inverse_via_reciprocity_failures():
    assert inverse_via_reciprocity(2, 4).failure is InverseFailure.NOT_COPRIME
    assert inverse_via_reciprocity(0, 4).failure is InverseFailure.ZERO_OPERAND
    assert inverse_via_reciprocity(4, 0).failure is InverseFailure.ZERO_OPERAND


@given(wide, wide)
def test_inverse_via_reciprocity_matches_extended_gcd(a, m):
    assume(math.gcd(a, m) == 1)
    assert inverse_via_reciprocity(a, m).result == mod_inverse(a, m).result


def test_recursion_survives_fibonacci_worst_case():
    # consecutive Fibonacci numbers maximize the reduction step count
    f0, f1 = 1, 1
    for _ in range(500):
        f0, f1 = f1, f0 + f1
    got = inverse_via_reciprocity(f0, f1).expect()
    assert got == mod_inverse(f0, f1).expect()


def test_recursion_handles_huge_asymmetric_operands():
    a = 3**700 + 1
    m = 2**1024 + 1
    assume_ok = math.gcd(a, m) == 1
    assert assume_ok
    assert inverse_via_reciprocity(a, m).result == mod_inverse(a, m).result


def test_solve_diophantine_examples():
    assert solve_diophantine(3, 5) == (2, 1)
    assert solve_diophantine(7, 22) == (19, 6)
    assert solve_diophantine(1, 9) == (1, 0)


def test_solve_diophantine_rejects_bad_pairs():
    with pytest.raises(ZeroOperandError):
        solve_diophantine(0, 5)
    with pytest.raises(NotCoprimeError):
        solve_diophantine(4, 6)


@given(small, small)
def test_solve_diophantine_certificate(a, m):
    assume(math.gcd(a, m) == 1)
    x, k = solve_diophantine(a, m)
    assert a * x - k * m == 1
    assert x == mod_inverse(a, m).expect()
