"""Shared fixtures: the worked filling permutations used across the suite."""

from __future__ import annotations

import pytest

from fillperm import Permutation, validate

# genus-2 piece with 6 crossings (two octagons, two rectangles)
ZETA = "(1,10,15,20,17,22,3,12)(24,5,18,11)(23,16,9,6,7,4,21,14)(2,19,8,13)"
# genus-3 piece with 8 crossings (two rectangles, two 12-gons)
SIGMA_Z = "(1,6,25,18)(2,23,28,5,14,27,22,3,12,21,26,15)(31,24,11,16)(32,13,10,19,20,9,8,29,30,7,4,17)"
# minimal genus-3 pair
SIGMA_F = "(1,2,13,20,7,6,19,14,5,10,11,16,9,8,15,12,3,4,17,18)"
# minimal genus-6 pair assembled as SIGMA_F # SIGMA_Z at site (3, 2)
SIGMA_F6 = (
    "(1,2,11,28,25,44,19,18,43,38,35,8,17,22,23,40,21,20,39,10,7,"
    "34,27,6,13,36,29,12,9,24,3,26,31,14,15,30,33,4,5,32,37,16,41,42)"
)
# minimal genus-4 pair
F4 = "(1,16,27,10,7,18,15,2,3,20,21,12,11,22,17,4,9,26,19,8,13,28,23,6,5,24,25,14)"
# the genus-2 piece split off SIGMA_F; not homeomorphic to ZETA
ZETA_PRIME = "(1,20,17,12)(24,15,10,5,18,21,4,11)(23,6,7,14)(2,9,16,19,8,3,22,13)"
# the genus-5 piece split off SIGMA_F6
Z5 = (
    "(1,32,41,40,13,24)(48,15,18,29,36,11,16,39,46,9,12,27,10,33,44,7,22,37,"
    "38,5,20,31,42,17,30,45,4,23)(47,6,19,26)(2,21,28,43,8,3,14,35,34,25)"
)
# SIGMA_F6 disassembled along the k=5 witness and reassembled on a torus host
SIGMA_PRIME = (
    "(1,10,11,36,25,30,19,4,43,24,35,16,17,8,23,26,21,6,39,18,7,42,27,14,"
    "13,44,29,20,9,32,3,34,31,22,15,38,33,12,5,40,37,2,41,28)"
)

FIXTURE_TEXTS = {
    "zeta": (ZETA, 6),
    "sigma_z": (SIGMA_Z, 8),
    "sigma_f": (SIGMA_F, 5),
    "sigma_f6": (SIGMA_F6, 11),
    "f4": (F4, 7),
    "zeta_prime": (ZETA_PRIME, 6),
    "z5": (Z5, 12),
}


def perm(text: str, size: int) -> Permutation:
    return Permutation.from_cycle_string(text, size)


@pytest.fixture(scope="session")
def zeta():
    return validate(perm(ZETA, 24))


@pytest.fixture(scope="session")
def sigma_z():
    return validate(perm(SIGMA_Z, 32))


@pytest.fixture(scope="session")
def sigma_f():
    return validate(perm(SIGMA_F, 20))


@pytest.fixture(scope="session")
def sigma_f6():
    return validate(perm(SIGMA_F6, 44))


@pytest.fixture(scope="session")
def f4():
    return validate(perm(F4, 28))


@pytest.fixture(scope="session")
def zeta_prime():
    return validate(perm(ZETA_PRIME, 24))


@pytest.fixture(scope="session")
def z5():
    return validate(perm(Z5, 48))


@pytest.fixture(scope="session")
def f1():
    return validate(perm("(1,2,3,4)", 4))
