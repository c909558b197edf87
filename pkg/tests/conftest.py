"""Shared small braidings used across the test suite."""

import pytest

from braidhodge.braiding import BraidedSpace
from braidhodge.linalg import LinMap, Space, tensor_space
from braidhodge.scalars import RatFunField, RationalField

QQ = RationalField()
QS = RatFunField()


def conjugation_braiding(names, conj):
    """Psi(e_a (x) e_b) = e_{aba^-1} (x) e_a for a finite quandle."""
    v = Space(len(names), tuple(names))
    vv = tensor_space(v, v)
    n = len(names)
    entries = []
    for a in range(n):
        for b in range(n):
            entries.append(((conj[a][b]) * n + a, a * n + b, QQ.one))
    psi = LinMap.from_entries(vv, vv, entries, QQ)
    return BraidedSpace(v, psi)


@pytest.fixture(scope="session")
def s3_braiding():
    # 2-cycles u=(12), v=(23), w=(13); conj[a][b] = index of a b a^-1
    #   u v u = w,  u w u = v,  v u v = w ... tabulated directly
    names = ("u", "v", "w")
    conj = {
        0: {0: 0, 1: 2, 2: 1},
        1: {0: 2, 1: 1, 2: 0},
        2: {0: 1, 1: 0, 2: 2},
    }
    return conjugation_braiding(names, conj)


@pytest.fixture(scope="session")
def flip3():
    v = Space(3, ("x", "y", "z"))
    vv = tensor_space(v, v)
    entries = [((b * 3 + a), (a * 3 + b), QQ.one) for a in range(3) for b in range(3)]
    return BraidedSpace(v, LinMap.from_entries(vv, vv, entries, QQ))


@pytest.fixture(scope="session")
def qline():
    # one-dimensional V with psi = multiplication by q
    v = Space(1, ("x",))
    vv = tensor_space(v, v)
    psi = LinMap.from_entries(vv, vv, [(0, 0, QS.q)], QS)
    return BraidedSpace(v, psi)
