import pytest

from bianchi.basechange import BaseChangeInput
from bianchi.corpus import (
    CORPUS_BOUND,
    bc_characters,
    corpus,
    find_pairs,
    get_character,
    get_entry,
)
from bianchi.eigensystem import (
    Flavor,
    LevelDescriptor,
    TypeTag,
    boundary_dims_bruteforce,
    classify,
    compare_boundary,
    involution,
    predict_dims,
)
from bianchi.exception import ConfigError
from bianchi.padic import family_congruence_report, pair_value_order, stabilize
from bianchi.quadfield import prime_ideals
from bianchi.recovery import (
    SampleSet,
    SearchSpace,
    density_modulus,
    density_report,
    recover_chars,
    sufficient_density,
)

from .helpers import split_primes

ENTRIES = corpus()


def test_corpus_size():
    assert len(ENTRIES) >= 20
    assert len({e.name for e in ENTRIES}) == len(ENTRIES)
    assert {e.pair.field.d for e in ENTRIES} == {-1, -2, -3}


def test_corpus_is_deterministic():
    assert [e.name for e in ENTRIES] == [e.name for e in corpus()]
    assert ENTRIES[0].name.startswith("d1-a-w00-")


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_entry_matches_its_class(entry):
    klass = classify(entry.pair)
    assert klass.tag is entry.tag
    assert klass.weight == entry.weight
    assert entry.pair.phi1.conductor.norm * entry.pair.phi2.conductor.norm <= CORPUS_BOUND
    assert entry.to_json()["tag"] == entry.tag.value


def test_lookup():
    assert get_entry(ENTRIES[0].name) == ENTRIES[0]
    with pytest.raises(ConfigError):
        get_entry("d7-a-w00-0")
    with pytest.raises(ConfigError):
        get_character("d1-bc-nothing")


def test_find_pairs_limit(gaussian):
    assert len(find_pairs(gaussian, TypeTag.TYPE_A, ENTRIES[0].weight, 3)) == 3


def test_bc_characters():
    chars = bc_characters()
    assert chars[0].name == "d1-bc-2+i"
    assert get_character("d1-bc-2+i") == chars[0].phi
    assert len({c.phi for c in chars}) == len(chars)
    for entry in chars:
        BaseChangeInput(entry.phi)


@pytest.mark.slow
@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_predicted_matches_bruteforce(entry):
    level = LevelDescriptor(entry.pair.level)
    samples = prime_ideals(entry.pair.field, 200, degree_one=True)
    predicted = predict_dims(entry.pair, entry.weight, level)
    bruteforced = boundary_dims_bruteforce(entry.pair, entry.weight, level, samples)
    compare_boundary(predicted, bruteforced)
    assert predicted.get(Flavor.BOUNDARY) == bruteforced.get(Flavor.BOUNDARY)


@pytest.mark.slow
@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_recovery_is_exact(entry):
    samples = SampleSet.from_pair(entry.pair, 200)
    space = SearchSpace(CORPUS_BOUND, entry.weight)
    recovered = {c.pair for c in recover_chars(samples, space)}
    assert recovered == {entry.pair, involution(entry.pair)}


@pytest.mark.slow
@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_density_exceeds_half(entry):
    report = sufficient_density(entry.pair)
    assert report.exceeds_half
    # 范数上限 200 处的覆盖与加倍的起点一致
    fixed = density_report(SampleSet.from_pair(entry.pair, 200), density_modulus(entry.pair))
    assert fixed.exceeds_half == (report.sample_bound == 200)


def _slope_cases():
    for entry in ENTRIES:
        # p 整除取值的分圆阶时嵌入分歧，不在检验范围内
        avoid = entry.pair.level.norm * pair_value_order(entry.pair)
        for p in split_primes(entry.pair.field, 50, avoid=avoid):
            yield pytest.param(entry, p, id=f"{entry.name}-p{p}")


@pytest.mark.slow
@pytest.mark.parametrize(("entry", "p"), list(_slope_cases()))
def test_slopes_match_table(entry, p):
    _, report = stabilize(entry.pair, p)
    assert report.table_verified
    assert len(report.ordinary) == 1


FAMILY_PRIMES = {-1: 13, -3: 7}


def _family_cases():
    for entry in ENTRIES:
        p = FAMILY_PRIMES.get(entry.pair.field.d)
        if entry.tag is not TypeTag.TYPE_B or p is None:
            continue
        for m in (0, 1, 2):
            for t in (1, 2):
                yield pytest.param(entry, p, m, t, id=f"{entry.name}-p{p}-m{m}-t{t}")


@pytest.mark.slow
@pytest.mark.parametrize(("entry", "p", "m", "t"), list(_family_cases()))
def test_family_congruence(entry, p, m, t):
    primes = prime_ideals(entry.pair.field, 100)
    report = family_congruence_report(entry.pair, primes, p, m, t, precision=32)
    assert report.precision == 32
    assert report.required == m + 1
    assert report.witnesses
    assert report.holds
