from fractions import Fraction

import pytest

from bianchi.arith import CycloNum
from bianchi.eigensystem import TypeTag, Weight
from bianchi.exception import (
    InfiniteValuationError,
    PrecisionError,
    RamifiedEmbeddingError,
    UnsupportedPrimeError,
)
from bianchi.padic import (
    CHOICES,
    Root,
    Valuation,
    build_embedding,
    eigenvariety_report,
    expected_slopes,
    pair_embedding,
    stabilization_label,
    stabilize,
    valuation,
)
from bianchi.quadfield import QuadIdeal, ideal_valuation


@pytest.fixture(scope="module")
def emb13(gaussian, p13):
    return build_embedding(gaussian, 13, 4, prime=p13)


def test_embedding_matches_chosen_prime(emb13, p13, p13_bar, zeta4):
    assert emb13.residue_factor == (8, 1)
    assert emb13.conj_prime == p13_bar
    assert valuation(CycloNum.rational(13), emb13) == Valuation(Fraction(1))
    assert valuation(2 + 3 * zeta4, emb13) == Valuation(Fraction(0))
    assert valuation(-3 - 2 * zeta4, emb13) == Valuation(Fraction(1))


def test_default_prime_is_first_in_order(gaussian):
    emb = build_embedding(gaussian, 5, 4)
    assert emb.residue_factor == (2, 1)
    assert emb.prime == QuadIdeal.generated_by(gaussian, gaussian.element(2, 1))


def test_precision_extension_is_consistent(gaussian):
    low = build_embedding(gaussian, 5, 4, precision=8)
    high = build_embedding(gaussian, 5, 4, precision=16)
    assert tuple(c % 5**8 for c in high.modulus) == low.modulus
    assert high.residue_factor == low.residue_factor


@pytest.mark.parametrize("p", [3, 2])
def test_non_split_prime_rejected(gaussian, p):
    with pytest.raises(UnsupportedPrimeError):
        build_embedding(gaussian, p, 4)


def test_ramified_embedding(gaussian):
    with pytest.raises(RamifiedEmbeddingError):
        build_embedding(gaussian, 5, 5)


@pytest.mark.parametrize("precision", [0, 513])
def test_precision_bounds(gaussian, precision):
    with pytest.raises(PrecisionError):
        build_embedding(gaussian, 5, 4, precision=precision)


def test_zero_has_infinite_valuation(emb13):
    with pytest.raises(InfiniteValuationError):
        valuation(CycloNum.zero(4), emb13)


def test_valuation_detects_prime(rng, gaussian, emb13, p13, p13_bar):
    emb_bar = build_embedding(gaussian, 13, 4, prime=p13_bar)
    for _ in range(100):
        alpha = gaussian.element(rng.randint(-60, 60), rng.randint(-60, 60))
        if alpha.is_zero():
            continue
        principal = QuadIdeal.generated_by(gaussian, alpha)
        x = alpha.to_cyclo()
        assert emb13.valuation(x) == Valuation(Fraction(ideal_valuation(principal, p13)))
        assert emb_bar.valuation(x) == Valuation(Fraction(ideal_valuation(principal, p13_bar)))


def test_valuation_axioms(rng, emb13):
    def sample():
        return CycloNum(4, [Fraction(rng.randint(-99, 99), rng.choice([1, 2, 13])) for _ in range(2)])

    for _ in range(200):
        x, y = sample(), sample()
        if x.is_zero() or y.is_zero():
            continue
        vx, vy = emb13.valuation(x), emb13.valuation(y)
        assert emb13.valuation(x * y).value == vx.value + vy.value
        if not (x + y).is_zero():
            assert emb13.valuation(x + y).value >= min(vx.value, vy.value)


def test_stabilizations_of_type_a(bc, p13):
    emb = pair_embedding(bc, 13, prime=p13)
    stabilizations, report = stabilize(bc, 13, emb)
    assert [s.choice for s in stabilizations] == list(CHOICES)
    slopes = {s.label: s.slopes for s in stabilizations}
    assert slopes == {
        "alpha-alpha": (0, 1),
        "alpha-beta": (0, 0),
        "beta-alpha": (1, 1),
        "beta-beta": (1, 0),
    }
    assert report.ordinary == ["alpha-beta"]
    assert report.table_verified is True
    assert report.tag == TypeTag.TYPE_A.value


def test_ordinary_choice_independent_of_prime(bc):
    _, report = stabilize(bc, 13)
    assert report.ordinary == ["alpha-beta"]


def test_stabilizations_of_type_b(type_b_pair):
    stabilizations, report = stabilize(type_b_pair, 13)
    assert report.ordinary == ["alpha-alpha"]
    top = next(s for s in stabilizations if s.label == "beta-beta")
    assert top.slopes == (2, 2)


def test_stabilize_rejects_level_prime(bc):
    with pytest.raises(UnsupportedPrimeError):
        stabilize(bc, 5)


def test_expected_slopes_tables():
    a = expected_slopes(TypeTag.TYPE_A, Weight(2, 1))
    assert a[(Root.BETA, 0)] == 3
    assert a[(Root.ALPHA, 1)] == 2
    b = expected_slopes(TypeTag.TYPE_B, Weight(2, 1))
    assert b[(Root.BETA, 1)] == 2
    dual = expected_slopes(TypeTag.TYPE_B_DUAL, Weight(2, 1))
    assert dual[(Root.ALPHA, 0)] == 3
    assert expected_slopes(TypeTag.OTHER, Weight(0, 0)) is None


def test_stabilization_label():
    assert stabilization_label((Root.ALPHA, Root.BETA)) == "alpha-beta"


def test_eigenvariety_type_a(bc):
    report = eigenvariety_report(bc, 13)
    assert report.ordinary == "alpha-beta"
    assert report.one_dim_degrees == {"full": [1], "compact": [2]}
    assert report.etale_at_x and report.etale_at_x_c and report.rank_one
    assert len(report.critical) == 3


def test_eigenvariety_type_b(type_b_pair):
    report = eigenvariety_report(type_b_pair, 13)
    assert report.ordinary == "alpha-alpha"
    assert report.one_dim_degrees == {"full": [2], "compact": [1]}
    assert report.rank_one
