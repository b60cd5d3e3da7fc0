import math

import numpy as np
import pytest

from cubedensity.analytic import zeta_real
from cubedensity.arith import Q, V, W, CongruenceSelector
from cubedensity.zetadist import (SampleReport, ZetaSampler, divisibility_test, membership_probability,
                                  membership_frequency_test, standard_suite,
                                  valuation_independence_test, z_score)

N = 10**6


@pytest.fixture(scope="module")
def sample_s2():
    return np.array(ZetaSampler(2.0, 12345).draw(N), dtype=np.int64)


def test_same_seed_same_stream():
    a = ZetaSampler(2.0, 99).draw(20_000)
    b = ZetaSampler(2.0, 99)
    assert a == b.draw(7) + b.draw(19_993)
    assert a != ZetaSampler(2.0, 100).draw(20_000)


def test_frozen_stream_prefix():
    # pins the generator (PCG64) and the rejection step
    assert ZetaSampler(2.0, 0).draw(12) == [2, 1, 1, 1, 2, 3, 2, 15, 1, 7, 1, 3]


def test_rejects_s_le_1():
    for s in (1.0, 0.5):
        with pytest.raises(ValueError):
            ZetaSampler(s)


def test_samples_are_positive_integers(sample_s2):
    assert sample_s2.min() >= 1


def test_point_mass_at_one(sample_s2):
    p = 6 / math.pi**2
    hits = int(np.count_nonzero(sample_s2 == 1))
    assert abs(z_score(hits, N, p)) <= 4


def test_large_s_concentrates_on_one():
    ks = ZetaSampler(60.0, 3).draw(10**4)
    assert set(ks) == {1}


def test_heavy_tail_near_one():
    # s = 1.1 has astronomically large draws; they must still be exact integers
    ks = ZetaSampler(1.1, 5).draw(50_000)
    assert all(isinstance(k, int) and k >= 1 for k in ks)
    assert max(ks) > 10**18
    p1 = 1 / zeta_real(1.1)
    assert abs(z_score(ks.count(1), len(ks), p1)) <= 4


@pytest.mark.parametrize("k", range(1, 11))
def test_point_masses(sample_s2, k):
    p = k**-2.0 / zeta_real(2.0)
    assert abs(z_score(int(np.count_nonzero(sample_s2 == k)), N, p)) <= 4


def test_divisibility_examples(sample_s2):
    s = ZetaSampler(2.0, 12345)
    r1 = divisibility_test(s, 1, N, sample_s2)
    assert r1.frequency == 1.0 and r1.expected == 1.0 and r1.z_score == 0.0
    r2 = divisibility_test(s, 2, N, sample_s2)
    assert r2.expected == 0.25 and r2.passed
    assert abs(r2.frequency - 0.25) < 0.002


def test_divisibility_s3():
    r = divisibility_test(ZetaSampler(3.0, 8), 6, N)
    assert r.expected == pytest.approx(1 / 216)
    assert r.passed


def test_divisibility_rejects_small_runs():
    with pytest.raises(ValueError):
        divisibility_test(ZetaSampler(2.0), 2, 100)
    with pytest.raises(ValueError):
        divisibility_test(ZetaSampler(2.0), 0, 10**4)


def test_valuation_independence(sample_s2):
    s = ZetaSampler(2.0, 12345)
    reports = valuation_independence_test(s, [2, 3], [1, 1], N, ks=sample_s2)
    assert reports[0].expected == pytest.approx(1 / 36)
    assert all(r.passed for r in reports)
    trivial = valuation_independence_test(s, [2], [0], N, ks=sample_s2)[0]
    assert trivial.expected == 1 and trivial.frequency == 1
    five = valuation_independence_test(s, [5], [1], N, marginal=(1,), ks=sample_s2)
    assert five[1].expected == pytest.approx(0.0384)
    assert five[1].passed


def test_valuation_preconditions():
    s = ZetaSampler(2.0)
    with pytest.raises(ValueError):
        valuation_independence_test(s, [2, 2], [1, 1], 10**4)
    with pytest.raises(ValueError):
        valuation_independence_test(s, [2, 3], [1], 10**4)
    with pytest.raises(ValueError):
        valuation_independence_test(s, [97], [3], 10**4)


def test_membership_probabilities():
    assert membership_probability(V, 2.0) == pytest.approx(0.96710407561337, abs=1e-6)
    assert membership_probability(Q, 2.0) == pytest.approx(90 / math.pi**4, rel=1e-12)
    assert membership_probability(CongruenceSelector(1), 2.0) == 1.0
    # W: no p = 1 (3), square-free elsewhere
    # prod_{p=2 (3)} (1 - p^-4) truncated at 1e7
    expected = 0.96710407561337 * (1 - 3**-4) * 0.9359193688437367
    assert membership_probability(W, 2.0) == pytest.approx(expected, rel=2e-6)


@pytest.mark.parametrize("sel", [V, W, Q, CongruenceSelector(1), CongruenceSelector(4, frozenset({3}), True)],
                         ids=lambda s: s.describe())
def test_membership_frequency(sample_s2, sel):
    r = membership_frequency_test(ZetaSampler(2.0, 12345), sel, N, sample_s2)
    assert r.passed, r


def test_membership_everything_has_frequency_one(sample_s2):
    r = membership_frequency_test(ZetaSampler(2.0), CongruenceSelector(1), N, sample_s2)
    assert r.frequency == 1.0 and r.z_score == 0.0


def test_standard_suite_passes():
    reports = standard_suite(2.0, N, seed=0)
    assert len(reports) >= 25
    bad = [r for r in reports if not r.passed]
    assert not bad, bad


def test_report_json_shape():
    r = SampleReport("x", 100, 0.3, 0.25, z_score(30, 100, 0.25))
    rec = r.to_json()
    assert list(rec) == ["name", "value", "method", "tolerance_or_prime_limit", "tail_bound",
                         "expected", "z_score"]
    assert rec["z_score"] == pytest.approx((0.3 - 0.25) / math.sqrt(0.25 * 0.75 / 100))
    assert 0 <= r.frequency <= 1
