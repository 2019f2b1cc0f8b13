import pytest
from pydantic import ValidationError

from bianchi.characters import CharPair, HeckeChar
from bianchi.eigensystem import (
    DimMode,
    DimReport,
    Flavor,
    LevelDescriptor,
    TypeTag,
    Weight,
    boundary_dims_bruteforce,
    classify,
    compare_boundary,
    hecke_polynomial,
    involution,
    predict_dims,
)
from bianchi.exception import (
    EigensystemError,
    ExcludedWeightError,
    MismatchError,
    UnsupportedPrimeError,
    UnsupportedTypeError,
)
from bianchi.quadfield import prime_ideals, split_prime

from .helpers import ideal

TYPE_A_TABLE = {
    Flavor.BOUNDARY: [0, 2, 0, 0],
    Flavor.EISENSTEIN: [0, 1, 0, 0],
    Flavor.FULL: [0, 1, 0, 0],
    Flavor.COMPACT: [0, 0, 1, 0],
}
TYPE_B_TABLE = {
    Flavor.BOUNDARY: [1, 0, 1, 0],
    Flavor.EISENSTEIN: [0, 0, 1, 0],
    Flavor.FULL: [0, 0, 1, 0],
    Flavor.COMPACT: [0, 1, 0, 0],
}


@pytest.fixture(scope="module")
def samples(gaussian):
    return prime_ideals(gaussian, 200, degree_one=True)


def test_predict_type_a(type_a_pair):
    report = predict_dims(type_a_pair, Weight(2, 1), LevelDescriptor(type_a_pair.level))
    assert report.mode == DimMode.PREDICTED.value
    for flavor, dims in TYPE_A_TABLE.items():
        assert report.get(flavor) == dims
    assert report.check_exactness()
    assert report.flags["cuspidal_assumption"] is False


def test_predict_type_b(type_b_pair):
    report = predict_dims(type_b_pair, Weight(1, 1), LevelDescriptor(type_b_pair.level))
    for flavor, dims in TYPE_B_TABLE.items():
        assert report.get(flavor) == dims
    assert report.alternating_sum() == 0
    assert report.flags["cuspidal_assumption"] is True


def test_predict_via_involution(type_b_pair):
    dual = involution(type_b_pair)
    report = predict_dims(dual, Weight(1, 1), LevelDescriptor(dual.level))
    assert report.tag == TypeTag.TYPE_B_DUAL.value
    assert report.get(Flavor.BOUNDARY) == TYPE_B_TABLE[Flavor.BOUNDARY]
    assert report.flags["via_involution"] is True


def test_type_b_trivial_weight_excluded(gaussian):
    pair = CharPair(HeckeChar.norm_power(gaussian, 1), HeckeChar.norm_power(gaussian, -1))
    assert classify(pair).tag is TypeTag.TYPE_B
    with pytest.raises(ExcludedWeightError):
        predict_dims(pair, Weight(0, 0), LevelDescriptor(pair.level))


def test_unsupported_type(gaussian):
    pair = CharPair(HeckeChar.norm_power(gaussian, 1), HeckeChar.norm_power(gaussian, 0))
    with pytest.raises(UnsupportedTypeError):
        predict_dims(pair, Weight(0, 0), LevelDescriptor(pair.level))


def test_weight_mismatch(bc):
    with pytest.raises(EigensystemError):
        predict_dims(bc, Weight(1, 1), LevelDescriptor(bc.level))


def test_level_with_p_without_stabilization(bc):
    report = predict_dims(bc, Weight(0, 0), LevelDescriptor(bc.level, 13))
    assert report.get(Flavor.BOUNDARY) == [0, 8, 0, 0]
    assert report.check_exactness()
    chosen = predict_dims(bc, Weight(0, 0), LevelDescriptor(bc.level, 13), "alpha-beta")
    assert chosen.get(Flavor.BOUNDARY) == [0, 2, 0, 0]


@pytest.mark.parametrize("p", [3, 5, 2])
def test_level_descriptor_rejects_p(bc, p):
    # 3 惰性，5 整除水平，2 分歧
    with pytest.raises(UnsupportedPrimeError):
        LevelDescriptor(bc.level, p)


def test_report_rejects_boundary_top_degree():
    with pytest.raises(ValidationError):
        DimReport(
            level="K1([1,0,1])",
            weight=(0, 0),
            mode=DimMode.PREDICTED,
            tag="type_a",
            dims={"boundary": [0, 2, 0, 1]},
        )


def test_bruteforce_type_a(bc, samples):
    report = boundary_dims_bruteforce(bc, Weight(0, 0), LevelDescriptor(bc.level), samples)
    assert report.get(Flavor.BOUNDARY) == TYPE_A_TABLE[Flavor.BOUNDARY]
    predicted = predict_dims(bc, Weight(0, 0), LevelDescriptor(bc.level))
    compare_boundary(predicted, report)


def test_bruteforce_type_b(type_b_pair, samples):
    level = LevelDescriptor(type_b_pair.level)
    report = boundary_dims_bruteforce(type_b_pair, Weight(1, 1), level, samples)
    assert report.get(Flavor.BOUNDARY) == TYPE_B_TABLE[Flavor.BOUNDARY]


def test_bruteforce_with_p(bc, samples):
    level = LevelDescriptor(bc.level, 13)
    report = boundary_dims_bruteforce(bc, Weight(0, 0), level, samples)
    assert report.get(Flavor.BOUNDARY) == [0, 8, 0, 0]
    assert report.flags["skipped_samples"] > 0

    # 选定 (α_𝔭, β_𝔭̄) 后只剩一份
    p, pbar = split_prime(bc.field, 13).primes
    choice = {p: hecke_polynomial(bc, p).alpha, pbar: hecke_polynomial(bc, pbar).beta}
    chosen = boundary_dims_bruteforce(bc, Weight(0, 0), level, samples, stabilization=choice)
    assert chosen.get(Flavor.BOUNDARY) == [0, 2, 0, 0]


def test_bruteforce_at_larger_level(bc, samples):
    # 水平 n·(2+i) 处 φ 的局部因子变为 2
    level = LevelDescriptor(bc.level * bc.n1)
    report = boundary_dims_bruteforce(bc, Weight(0, 0), level, samples)
    assert report.get(Flavor.BOUNDARY) == [0, 4, 0, 0]
    predicted = predict_dims(bc, Weight(0, 0), level)
    with pytest.raises(MismatchError) as info:
        compare_boundary(predicted, report)
    assert info.value.diff["bruteforced"] == [0, 4, 0, 0]


def test_bruteforce_requires_dividing_level(bc, gaussian, samples):
    with pytest.raises(EigensystemError):
        boundary_dims_bruteforce(bc, Weight(0, 0), LevelDescriptor(ideal(gaussian, 3)), samples)


def test_empty_sample_set_is_an_upper_bound(bc, samples):
    level = LevelDescriptor(bc.level)
    full = boundary_dims_bruteforce(bc, Weight(0, 0), level, samples)
    loose = boundary_dims_bruteforce(bc, Weight(0, 0), level, [])
    assert all(x >= y for x, y in zip(loose.get(Flavor.BOUNDARY), full.get(Flavor.BOUNDARY)))
