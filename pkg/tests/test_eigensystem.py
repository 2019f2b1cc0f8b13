import pytest

from bianchi.characters import CharPair, HeckeChar, eval_char
from bianchi.eigensystem import (
    CSV_COLUMNS,
    Eigensystem,
    HeckeEigenvalues,
    LevelCase,
    TypeTag,
    UEigenvalue,
    Weight,
    classify,
    classify_types,
    eis_eigensystem,
    hecke_polynomial,
    involution,
    iwahori_u_eigenvalues,
    level_case,
    local_dim_oracle,
    local_invariant_dim,
    pair_type,
)
from bianchi.exception import EigensystemError
from bianchi.quadfield import QuadField, prime_ideals
from bianchi.utils import read_csv

from .helpers import PROPERTY_CASES, ideal


def test_norm_power_pair(gaussian):
    pair = CharPair(HeckeChar.norm_power(gaussian, 2), HeckeChar.norm_power(gaussian, -1))
    values = eis_eigensystem(pair, ideal(gaussian, 2, 1))
    assert isinstance(values, HeckeEigenvalues)
    assert values.a == 26
    assert values.d == 5


def test_base_change_pair_at_split_prime(bc, p13, zeta4):
    values = eis_eigensystem(bc, p13)
    assert values.a == -1 + zeta4
    assert values.d == -zeta4


def test_inert_prime(bc, gaussian, zeta4):
    values = eis_eigensystem(bc, ideal(gaussian, 7))
    assert values.a == 14 * zeta4


def test_u_eigenvalues_at_level(bc, gaussian, zeta4):
    first = eis_eigensystem(bc, ideal(gaussian, 2, 1))
    assert isinstance(first, UEigenvalue)
    assert first.case is LevelCase.DIVIDES_N1
    q = first.prime
    assert first.value == eval_char(bc.phi2, q).inv() * q.norm
    assert first.value == -2 + zeta4

    second = eis_eigensystem(bc, ideal(gaussian, 2, -1))
    assert second.case is LevelCase.DIVIDES_N2
    assert second.value == eval_char(bc.phi1, second.prime).inv()

    system = Eigensystem(bc)
    assert {u.case for u in system.u_eigenvalues()} == {LevelCase.DIVIDES_N1, LevelCase.DIVIDES_N2}


def test_level_case(bc, gaussian):
    assert level_case(bc, ideal(gaussian, 1, 1)) is LevelCase.COPRIME


def test_non_prime_rejected(bc, gaussian):
    with pytest.raises(EigensystemError):
        eis_eigensystem(bc, ideal(gaussian, 13))


def _random_cases(rng, pair_pool):
    # 随机特征对与一个和其水平互素的素理想
    primes = {d: prime_ideals(QuadField(d), 150) for d in (-1, -2, -3)}
    checked = 0
    while checked < PROPERTY_CASES:
        pair = rng.choice(pair_pool)
        q = rng.choice(primes[pair.field.d])
        if q.is_coprime(pair.level):
            checked += 1
            yield pair, q


def test_hecke_polynomial_roots(rng, pair_pool):
    for pair, q in _random_cases(rng, pair_pool):
        poly = hecke_polynomial(pair, q)
        assert poly.check_vieta()
        assert poly.evaluate(poly.alpha).is_zero()
        assert poly.evaluate(poly.beta).is_zero()


def test_iwahori_eigenvalues_are_swapped_roots(bc, p13):
    poly = hecke_polynomial(bc, p13)
    assert iwahori_u_eigenvalues(bc, p13) == (poly.beta, poly.alpha)
    with pytest.raises(EigensystemError):
        iwahori_u_eigenvalues(bc, bc.n1)


def test_involution_is_an_involution(rng, pair_pool):
    for pair, q in _random_cases(rng, pair_pool):
        dual = involution(pair)
        assert involution(dual) == pair
        assert eis_eigensystem(dual, q) == eis_eigensystem(pair, q)
        assert classify(dual).tag is classify(pair).tag.dual


def test_involution_preserves_eigensystem(bc, type_a_pair, type_b_pair):
    for pair in (bc, type_a_pair, type_b_pair):
        system, dual = Eigensystem(pair), Eigensystem(involution(pair))
        assert dual.level == system.level
        assert system.agrees_with(dual, system.primes(200))


def test_involution_exchanges_type_classes(bc, type_b_pair):
    assert classify(bc).tag is TypeTag.TYPE_A
    assert classify(involution(bc)).tag is TypeTag.TYPE_A_DUAL
    assert classify(type_b_pair).tag is TypeTag.TYPE_B
    assert classify(involution(type_b_pair)).tag is TypeTag.TYPE_B_DUAL
    assert classify(involution(bc)).weight == classify(bc).weight


def test_classification(bc):
    cls = classify(bc)
    assert cls.tag is TypeTag.TYPE_A
    assert cls.weight == Weight(0, 0)
    assert classify_types(((1, 1), (0, 0))).tag is TypeTag.OTHER


@pytest.mark.parametrize("tag", [TypeTag.TYPE_A, TypeTag.TYPE_B, TypeTag.TYPE_A_DUAL, TypeTag.TYPE_B_DUAL])
@pytest.mark.parametrize("weight", [Weight(0, 0), Weight(2, 1), Weight(3, 3)])
def test_pair_type_classification_roundtrip(tag, weight):
    cls = classify_types(pair_type(tag, weight))
    assert cls.tag is tag
    assert cls.weight == weight
    assert tag.dual.dual is tag
    assert tag.primary in (TypeTag.TYPE_A, TypeTag.TYPE_B)


def test_negative_weight_rejected():
    with pytest.raises(EigensystemError):
        Weight(-1, 0)


def test_eigensystem_csv(bc):
    system = Eigensystem(bc)
    primes = system.primes(50, degree_one=True)
    rows = read_csv(system.to_csv(primes))
    assert list(rows[0]) == CSV_COLUMNS
    assert len(rows) == len(primes)
    assert all(int(row["norm"]) == q.norm for row, q in zip(rows, primes))


def test_eigensystem_skips_level(bc, gaussian):
    system = Eigensystem(bc)
    assert ideal(gaussian, 2, 1) not in system.primes(50)
    with pytest.raises(EigensystemError):
        system.eigenvalues(ideal(gaussian, 2, 1))


def test_eigensystem_with_extra_level(bc, p13, p13_bar):
    system = Eigensystem(bc, (p13, p13_bar))
    assert p13 not in system.primes(50)
    assert not system.is_unramified_at(p13_bar)


@pytest.mark.parametrize(
    ("c1", "c2", "n", "expected"),
    [(0, 0, 0, 1), (0, 0, 1, 2), (1, 1, 2, 1), (1, 0, 0, 0), (0, 1, 3, 3), (2, 1, 2, 0)],
)
def test_local_invariant_dim(c1, c2, n, expected):
    assert local_invariant_dim(c1, c2, n) == expected


def test_local_invariant_dim_iwahori():
    assert local_invariant_dim(0, 0, 0, iwahori_extra=True) == 2
    with pytest.raises(EigensystemError):
        local_invariant_dim(1, 0, 0, iwahori_extra=True)


@pytest.mark.parametrize(("c1", "c2", "n"), [(0, 0, 0), (0, 0, 1), (1, 0, 1), (0, 1, 2), (1, 1, 2)])
def test_local_oracle_small(gaussian, c1, c2, n):
    q = ideal(gaussian, 2, 1)
    assert local_dim_oracle(q, c1, c2, n) == local_invariant_dim(c1, c2, n)


def test_local_oracle_missing_character(gaussian):
    # (O/(1+i))^× 平凡，不存在导子恰为 (1+i) 的特征
    assert local_dim_oracle(ideal(gaussian, 1, 1), 1, 0, 1) is None


@pytest.mark.slow
def test_local_oracle_grid(gaussian, eisenstein_field, sqrt_m2):
    checked = 0
    for field in (gaussian, sqrt_m2, eisenstein_field):
        for q in prime_ideals(field, 5):
            for n in range(5):
                for c1 in range(4):
                    for c2 in range(4 - c1):
                        if q.norm ** max(n, c1, c2, 1) > 625:
                            continue
                        found = local_dim_oracle(q, c1, c2, n)
                        if found is None:
                            continue
                        assert found == local_invariant_dim(c1, c2, n), (q, c1, c2, n)
                        checked += 1
    assert checked > 0
