"""Lifts, braided integers/binomials/factorials and the factorisation theorem."""

import pytest

from braidhodge.braiding import BraidedSpace, IndexOutOfRange, super_cable
from braidhodge.linalg import LinMap, Space, power_space, tensor_space
from braidhodge.scalars import RatFunField, RationalField, q_int

QQ = RationalField()
QS = RatFunField()


def basis_vec(space, label):
    return {space.labels.index(label): QQ.one}


def test_lift_of_flip_is_flip(flip3):
    assert flip3.lift(1, 2) == flip3.psi


def test_lift_slots(s3_braiding):
    b = s3_braiding
    v3 = b.space(3)
    # Psi in slots (1,2) of V^3 applied to e_u (x) e_v (x) e_w
    out = b.lift(1, 3).apply(basis_vec(v3, ("u", "v", "w")))
    assert out == basis_vec(v3, ("w", "u", "w"))


def test_disjoint_lifts_commute(s3_braiding):
    b = s3_braiding
    l1, l3 = b.lift(1, 4), b.lift(3, 4)
    assert l1 @ l3 == l3 @ l1


def test_braid_relation_checked():
    # invertible map that is not a braiding: flip plus a nilpotent correction
    v = Space(2, ("x", "y"))
    vv = tensor_space(v, v)
    one = QQ.one
    bad = LinMap.from_entries(
        vv, vv,
        # x(x)x -> x(x)x, x(x)y -> y(x)x, y(x)x -> x(x)y + y(x)y, y(x)y -> y(x)y
        [(0, 0, one), (2, 1, one), (1, 2, one), (3, 2, one), (3, 3, one)],
        QQ,
    )
    from braidhodge.braiding import BraidRelationFailure

    with pytest.raises(BraidRelationFailure):
        BraidedSpace(v, bad)


def test_qline_binomials_are_q_integers(qline):
    # on the braided line, [n r] acts by the q-binomial coefficient
    two_one = qline.braided_binomial(2, 1)
    assert two_one.entry(0, 0) == 1 + QS.q
    fact3 = qline.braided_factorial(3)
    assert fact3.entry(0, 0) == (1 + QS.q) * (1 + QS.q + QS.q ** 2)
    assert fact3.entry(0, 0) == q_int(QS, 2) * q_int(QS, 3)


def test_flip_antisymmetrizer(flip3):
    f2 = flip3.braided_factorial(2, sign=-1)
    assert f2 == LinMap.identity(flip3.space(2), QQ) - flip3.psi
    from braidhodge.linalg import kernel, rank

    assert rank(f2) == 3  # Lambda^2 of a 3-dim space
    assert kernel(f2).dim == 6


def test_s3_degree2_kernel(s3_braiding):
    from braidhodge.linalg import kernel

    f2 = s3_braiding.braided_factorial(2, sign=-1)
    assert kernel(f2).dim == 5  # 9 - dim Lambda^2, Lambda^2 is 4-dim


def test_primed_integer_forms(flip3):
    b = flip3
    n = 3
    # [n]' = 1 + Psi_2 + Psi_1 Psi_2 for n = 3
    expect = (
        LinMap.identity(b.space(3), QQ)
        + b.lift(2, 3)
        + b.lift(1, 3) @ b.lift(2, 3)
    )
    assert b.braided_integer_primed(n) == expect
    # [2]' = [2]
    assert b.braided_integer_primed(2) == b.braided_integer(2)


def test_primed_factorial_equals_factorial(s3_braiding, flip3, qline):
    for b in (s3_braiding, flip3, qline):
        for n in (2, 3, 4):
            for sign in (1, -1):
                assert b.braided_factorial_primed(n, sign) == b.braided_factorial(n, sign)


def test_factorisation_theorem_small(s3_braiding, flip3, qline):
    for b in (s3_braiding, flip3, qline):
        for n in range(2, 5):
            for r in range(n + 1):
                for sign in (1, -1):
                    assert b.verify_factorisation(n, r, sign)


def test_functoriality(s3_braiding):
    for n in (3, 4):
        for r in range(1, n):
            assert s3_braiding.verify_functoriality(n, r, -1)


def test_lift_range_errors(s3_braiding):
    with pytest.raises(IndexOutOfRange):
        s3_braiding.lift(3, 3)
    with pytest.raises(IndexOutOfRange):
        s3_braiding.lift(0, 3)


def test_super_cable_basic(s3_braiding):
    b = s3_braiding
    # p = q = 1 reduces to -Psi
    c11 = super_cable(b.psi, b.v, b.v, 1, 1)
    assert c11 == -b.psi
    # p = 0 gives the identity
    c02 = super_cable(b.psi, b.v, b.v, 0, 2)
    assert c02 == LinMap.identity(b.space(2), b.ctx)
    # forward then inverse is the identity
    c22 = super_cable(b.psi, b.v, b.v, 2, 2)
    c22_inv = super_cable(b.psi, b.v, b.v, 2, 2, inverse=True, psi_inv=b.psi_inv)
    assert c22_inv @ c22 == LinMap.identity(power_space(b.v, 4), b.ctx)
    c12 = super_cable(b.psi, b.v, b.v, 1, 2)
    c12_inv = super_cable(b.psi, b.v, b.v, 1, 2, inverse=True, psi_inv=b.psi_inv)
    assert c12_inv @ c12 == LinMap.identity(power_space(b.v, 3), b.ctx)
