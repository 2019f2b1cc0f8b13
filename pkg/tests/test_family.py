import pytest

from bianchi.exception import (
    InsufficientPrecisionError,
    PadicError,
    UnsupportedTypeError,
)
from bianchi.padic import (
    build_embedding,
    family_congruence,
    family_congruence_report,
    family_shift,
    pair_embedding,
    twist_pair,
)
from bianchi.quadfield import prime_ideals


@pytest.mark.parametrize(
    ("p", "w", "m", "t", "delta"),
    [(13, 4, 0, 1, 12), (13, 4, 1, 1, 156), (7, 6, 0, 1, 6), (5, 2, 2, -3, -300), (13, 4, 0, 0, 0)],
)
def test_family_shift(p, w, m, t, delta):
    assert family_shift(p, w, m, t) == delta


def test_negative_power_rejected():
    with pytest.raises(PadicError):
        family_shift(13, 4, -1, 1)


def test_twist_changes_only_first_type(type_b_pair):
    twisted = twist_pair(type_b_pair, 12)
    assert twisted.infinity_types == ((14, 2), (-1, -1))
    assert twisted.phi2 == type_b_pair.phi2
    assert twist_pair(type_b_pair, 12, "ell").infinity_types == ((2, 14), (-1, -1))


@pytest.mark.parametrize("direction", ["k", "ell"])
@pytest.mark.parametrize(("m", "required"), [(0, 1), (1, 2)])
def test_congruence_holds(gaussian, type_b_pair, direction, m, required):
    primes = prime_ideals(gaussian, 60)
    report = family_congruence_report(type_b_pair, primes, 13, m, 1, direction=direction)
    assert report.holds
    assert report.delta == 12 * 13**m
    assert report.required == required
    assert len(report.witnesses) == len(primes) - 2


def test_zero_shift_is_infinitely_congruent(gaussian, type_b_pair):
    emb = pair_embedding(type_b_pair, 13)
    witness = family_congruence(type_b_pair, prime_ideals(gaussian, 5)[0], 0, 0, emb)
    assert witness.delta == 0
    assert witness.valuation == "inf"
    assert witness.holds


def test_precision_must_exceed_power(gaussian, type_b_pair):
    emb = build_embedding(gaussian, 13, 4, precision=2)
    q = prime_ideals(gaussian, 5)[-1]
    with pytest.raises(InsufficientPrecisionError):
        family_congruence(type_b_pair, q, 1, 1, emb)


def test_type_a_rejected(bc, gaussian):
    emb = pair_embedding(bc, 13)
    q = prime_ideals(gaussian, 2)[0]
    with pytest.raises(UnsupportedTypeError):
        family_congruence(bc, q, 0, 1, emb)
