import random

import pytest

from bianchi.arith import CycloNum
from bianchi.basechange import bc_pair
from bianchi.characters import CharPair, HeckeChar
from bianchi.corpus import find_pairs, gaussian_character
from bianchi.eigensystem import TypeTag, Weight
from bianchi.quadfield import QuadField, QuadIdeal
from bianchi.recovery import SearchSpace, search_candidates

SEED = 20240601


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture(scope="session")
def gaussian() -> QuadField:
    return QuadField(-1)


@pytest.fixture(scope="session")
def eisenstein_field() -> QuadField:
    return QuadField(-3)


@pytest.fixture(scope="session")
def sqrt_m2() -> QuadField:
    return QuadField(-2)


@pytest.fixture(scope="session")
def zeta4() -> CycloNum:
    return CycloNum.root_of_unity(4)


@pytest.fixture(scope="session")
def phi() -> HeckeChar:
    """Q(i) 上导子 (2+i)、无穷型 (−1, 0) 的特征"""
    return gaussian_character()


@pytest.fixture(scope="session")
def bc(phi: HeckeChar) -> CharPair:
    return bc_pair(phi)


@pytest.fixture(scope="session")
def p13(gaussian: QuadField) -> QuadIdeal:
    """(3+2i)"""
    return QuadIdeal.generated_by(gaussian, gaussian.element(3, 2))


@pytest.fixture(scope="session")
def p13_bar(gaussian: QuadField) -> QuadIdeal:
    return QuadIdeal.generated_by(gaussian, gaussian.element(3, -2))


@pytest.fixture(scope="session")
def norm_pair(gaussian: QuadField) -> CharPair:
    """(|·|², |·|^{−1})，水平为 (1)"""
    return CharPair(HeckeChar.norm_power(gaussian, 2), HeckeChar.norm_power(gaussian, -1))


@pytest.fixture(scope="session")
def type_a_pair(gaussian: QuadField) -> CharPair:
    return find_pairs(gaussian, TypeTag.TYPE_A, Weight(2, 1))[0]


@pytest.fixture(scope="session")
def type_b_pair(gaussian: QuadField) -> CharPair:
    return find_pairs(gaussian, TypeTag.TYPE_B, Weight(1, 1))[0]


@pytest.fixture(scope="session")
def pair_pool() -> list[CharPair]:
    """三个域上导子范数乘积不超过 20、四个允许类别的全部特征对"""
    pool: list[CharPair] = []
    for d in (-1, -2, -3):
        for weight in (Weight(0, 0), Weight(1, 1), Weight(2, 1), Weight(0, 2)):
            pairs, _ = search_candidates(QuadField(d), SearchSpace(20, weight))
            pool.extend(pairs)
    return pool


@pytest.fixture(scope="session")
def char_pool(pair_pool: list[CharPair]) -> list[HeckeChar]:
    return list(dict.fromkeys(c for pair in pair_pool for c in (pair.phi1, pair.phi2)))
