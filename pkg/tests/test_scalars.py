"""Field arithmetic: canonical forms, axioms, q-constants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from braidhodge.scalars import (
    Cyc,
    CyclotomicField,
    DivisionByZero,
    FieldMismatch,
    RatFun,
    RatFunField,
    RationalField,
    UnsupportedField,
    cyclotomic_poly,
    q_factorial,
    q_int,
    q_lambda,
    scalar_from_json,
    scalar_to_json,
    sym_int,
)

QS = RatFunField()
C3 = CyclotomicField(3)


def test_rational_add():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_lambda_times_q():
    # (1 - s^-4) * s^2 = s^2 - s^-2 as a reduced rational function
    lam = QS.one - QS.s ** -4
    val = lam * QS.q
    assert val == QS.s ** 2 - QS.s ** -2


def test_cyclotomic_cube_root():
    q = C3.q
    assert q * (q * q) == C3.one
    assert C3.one + q + q * q == C3.zero


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == [-1, 1]
    assert cyclotomic_poly(2) == [1, 1]
    assert cyclotomic_poly(3) == [1, 1, 1]
    assert cyclotomic_poly(6) == [1, -1, 1]


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QS.one / QS.zero
    with pytest.raises(DivisionByZero):
        C3.one / C3.zero


def test_field_mismatch():
    other = CyclotomicField(5)
    with pytest.raises(FieldMismatch):
        C3.q + other.q


ratfuns = st.builds(
    lambda n_c, n_e, d_c, d_e: RatFun(((n_e, n_c),) if n_c else (), ((d_e, d_c),))
    + RatFun(1) * 0,
    st.integers(-9, 9),
    st.integers(0, 5),
    st.integers(1, 9),
    st.integers(0, 5),
)
cycs = st.builds(
    lambda a, b: Cyc(C3, [Fraction(a), Fraction(b)]),
    st.integers(-9, 9),
    st.integers(-9, 9),
)


@settings(max_examples=200)
@given(ratfuns, ratfuns, ratfuns)
def test_ratfun_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a


@settings(max_examples=200)
@given(cycs, cycs, cycs)
def test_cyclotomic_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a


@given(ratfuns)
def test_ratfun_canonical_idempotent(a):
    again = RatFun(a.num, a.den)
    assert again.num == a.num and again.den == a.den
    # denominator positive leading coefficient, reduced
    assert a.den[-1][1] > 0


def test_ratfun_reduction():
    # (s^4 - 1)/(s^2 - 1) reduces to s^2 + 1
    x = RatFun(((0, -1), (4, 1)), ((0, -1), (2, 1)))
    assert x == QS.q + 1


def test_q_symbols_ratfun():
    assert q_lambda(QS) == QS.one - QS.q ** -2
    assert sym_int(QS, 2) == QS.q + QS.q ** -1
    assert q_int(QS, 3) == 1 + QS.q + QS.q ** 2
    assert q_factorial(QS, 3) == (1 + QS.q) * (1 + QS.q + QS.q ** 2)
    # half-integer symmetric q-integer exists thanks to q = s^2
    half = sym_int(QS, Fraction(1, 2))
    assert half * (QS.q_power(Fraction(1, 2)) + QS.q_power(Fraction(-1, 2))) == sym_int(QS, 1)


def test_q_symbols_cyclotomic():
    assert q_int(C3, 3) == C3.zero
    assert sym_int(C3, 2) == C3.q + C3.q ** -1


def test_q_symbols_need_q():
    with pytest.raises(UnsupportedField):
        q_lambda(RationalField())


def test_serialization_roundtrip():
    assert scalar_to_json(Fraction(-3, 7)) == "-3/7"
    assert scalar_from_json(RationalField(), "-3/7") == Fraction(-3, 7)
    x = (QS.q - 1) / (QS.s ** 3 + 2)
    j = scalar_to_json(x)
    assert j["num"] and j["den"]
    assert scalar_from_json(QS, j) == x
    y = C3.q / 2
    assert scalar_from_json(C3, scalar_to_json(y)) == y
