import pytest

from bianchi.arith import CycloNum
from bianchi.basechange import (
    BaseChangeInput,
    bc_pair,
    bc_stabilizations,
    bc_verify,
    bianchi_bc_eigenvalue,
    classical_label,
    dirichlet_from_hecke,
    theta_data,
    within_eisenstein_bound,
)
from bianchi.characters import HeckeChar, chars_of_conductor
from bianchi.corpus import bc_characters
from bianchi.eigensystem import TypeTag, Weight, classify
from bianchi.exception import BadPrimeError, BaseChangeError
from bianchi.padic import pair_embedding

from .helpers import ideal


@pytest.fixture(scope="module")
def inp(phi):
    return BaseChangeInput(phi)


def test_input(inp):
    assert inp.k == 0
    assert inp.M == 5
    assert inp.flags["p_coprime_to_m"] is None
    assert BaseChangeInput(inp.phi, p=13).flags["p_coprime_to_m"] is True
    assert inp.to_json()["flags"]["m_coprime_to_conjugate"] is True


def test_input_rejects_bad_type(gaussian):
    with pytest.raises(BaseChangeError):
        BaseChangeInput(HeckeChar.norm_power(gaussian, 0))


def test_input_rejects_self_conjugate_conductor(gaussian):
    phi = chars_of_conductor(gaussian, ideal(gaussian, 3), (-1, 0))[0]
    with pytest.raises(BaseChangeError):
        BaseChangeInput(phi)


def test_input_rejects_p_dividing_conductor(phi):
    with pytest.raises(BaseChangeError):
        BaseChangeInput(phi, p=5)


def test_dirichlet_values(inp, zeta4):
    dirichlet = dirichlet_from_hecke(inp)
    assert dirichlet.phi_z(1) == CycloNum.one()
    assert dirichlet.phi_z(13) == -zeta4
    assert dirichlet.nebentypus(13) == -zeta4
    assert dirichlet.nebentypus(3) == zeta4
    assert dirichlet.phi_z(5).is_zero()
    assert dirichlet.chi_k(7) == -1


def test_dirichlet_is_periodic(rng, inp):
    dirichlet = dirichlet_from_hecke(inp)
    for _ in range(50):
        a = rng.randint(1, 500)
        assert dirichlet.phi_z(a) == dirichlet.phi_z(a + 5 * rng.randint(1, 20))


def test_bianchi_eigenvalues(phi, gaussian, p13, zeta4):
    assert bianchi_bc_eigenvalue(phi, p13) == zeta4 - 1
    assert bianchi_bc_eigenvalue(phi, ideal(gaussian, 7)) == 14 * zeta4
    assert bianchi_bc_eigenvalue(phi, ideal(gaussian, 1, 1)) == -1 - zeta4
    with pytest.raises(BadPrimeError):
        bianchi_bc_eigenvalue(phi, ideal(gaussian, 2, 1))


def test_bc_pair_is_type_a(phi):
    pair = bc_pair(phi)
    assert pair.infinity_types == ((1, 0), (-1, 0))
    klass = classify(pair)
    assert klass.tag is TypeTag.TYPE_A
    assert klass.weight == Weight(0, 0)


def test_verify(inp):
    report = bc_verify(inp, 200, theta_terms=13)
    assert report.all_match
    assert report.pair_tag == TypeTag.TYPE_A.value
    assert all(row["match"] and row["within_bound"] for row in report.rows)
    inert = [row for row in report.rows if row["kind"] == "inert"]
    assert inert and all(row["inert_identity"] for row in inert)
    assert all(row.get("determinant_identity", True) for row in report.rows)
    # (1+i) 处表值 φ(𝔮) 与公式 2φ(𝔮) 不同
    assert [row["agree"] for row in report.ramified] == [False]
    assert len(report.theta_coefficients) == 13


def test_verify_with_p_skips_primes_above_p(phi):
    with_p = bc_verify(BaseChangeInput(phi, p=13), 100)
    without = bc_verify(BaseChangeInput(phi), 100)
    assert len(without.rows) - len(with_p.rows) == 2


def test_theta_coefficients(inp, zeta4):
    a = theta_data(inp).coefficients(65)
    assert a[0] == CycloNum.one()
    assert a[1] == -1 - zeta4
    assert a[2].is_zero()
    assert a[3] == 2 * zeta4
    assert a[4] == zeta4 - 2
    assert a[8] == -3 * zeta4
    assert a[12] == zeta4 - 1
    assert a[64] == a[4] * a[12]


def test_theta_data(inp):
    theta = theta_data(inp)
    assert theta.weight == 2
    assert theta.level == 20


def test_stabilizations(inp, phi, p13, zeta4):
    emb = pair_embedding(bc_pair(phi), 13, prime=p13)
    report = bc_stabilizations(inp, 13, emb)
    assert CycloNum.from_json(report.alpha) == 2 + 3 * zeta4
    assert CycloNum.from_json(report.beta) == -3 - 2 * zeta4
    assert (report.slope_alpha, report.slope_beta) == ("0", "1")
    assert report.vieta
    assert report.ordinary == classical_label("alpha", "alpha")
    rows = {row["label"]: row for row in report.stabilizations}
    assert rows["F^{αα}"]["choice"] == "alpha-beta"
    assert (rows["F^{ββ}"]["slope_p"], rows["F^{ββ}"]["slope_pbar"]) == ("1", "1")


def test_stabilizations_reject_level_prime(inp):
    with pytest.raises(BaseChangeError):
        bc_stabilizations(inp, 5)


def test_eisenstein_bound(zeta4):
    assert within_eisenstein_bound(zeta4 - 1, 13, 0)
    assert not within_eisenstein_bound(CycloNum.rational(100), 13, 0)
    assert within_eisenstein_bound(CycloNum.rational(26), 13, 1)


@pytest.mark.slow
@pytest.mark.parametrize("entry", bc_characters(), ids=lambda e: e.name)
def test_corpus_characters(entry):
    report = bc_verify(BaseChangeInput(entry.phi), 150)
    assert report.all_match
    assert report.rows
