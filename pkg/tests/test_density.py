from bianchi.characters import ray_classes
from bianchi.recovery import SampleSet, density_modulus, density_report, sufficient_density

from .helpers import ideal


def test_full_coverage(norm_pair, gaussian):
    samples = SampleSet.from_pair(norm_pair, 50, degree_one=False)
    report = density_report(samples, ideal(gaussian, 3))
    assert report.total == 2
    assert report.covered == 2
    assert report.proportion == "1"
    assert report.exceeds_half
    # (3) 本身与模不互素
    assert report.skipped == 1


def test_half_coverage_does_not_exceed_half(norm_pair, gaussian):
    modulus = ideal(gaussian, 3)
    group = ray_classes(gaussian, modulus)
    samples = SampleSet.from_pair(norm_pair, 50, degree_one=False)
    kept = tuple(
        s for s in samples.samples
        if s.prime.is_coprime(modulus) and group.class_of(s.prime) == 0
    )
    report = density_report(SampleSet(gaussian, kept, degree_one=False), modulus)
    assert report.covered == 1
    assert report.proportion == "1/2"
    assert not report.exceeds_half


def test_trivial_modulus(norm_pair, gaussian):
    samples = SampleSet.from_pair(norm_pair, 10)
    report = density_report(samples, ideal(gaussian, 1))
    assert report.total == 1
    assert report.exceeds_half


def test_density_modulus(bc, gaussian):
    assert density_modulus(bc) == ideal(gaussian, 25)


def test_sufficient_density(bc):
    report = sufficient_density(bc)
    assert report.exceeds_half
    assert report.modulus == str(density_modulus(bc))
    assert report.sample_bound >= 200
    if report.sample_bound > 200:
        # 上一个范数上限处覆盖还不够
        previous = report.sample_bound // 2
        assert not sufficient_density(bc, start=previous, limit=previous).exceeds_half


def test_sufficient_density_stops_at_limit(bc):
    report = sufficient_density(bc, start=10, limit=10)
    assert report.sample_bound == 10
    assert not report.exceeds_half


def test_sufficient_density_agrees_with_samples(bc):
    samples = SampleSet.from_pair(bc, 200)
    fixed = density_report(samples, density_modulus(bc))
    report = sufficient_density(bc, start=200, limit=200)
    assert (report.covered, report.total) == (fixed.covered, fixed.total)
    assert fixed.sample_bound is None
