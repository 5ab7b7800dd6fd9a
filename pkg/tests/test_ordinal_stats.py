import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ordfuzz import (Dataset, OrdinalScale, RankError, ScaleMismatch, ZeroFrequencyRank,
                     compute_centers, compute_frequencies, table_from_frequencies)

GRADES = ("Poor", "Fair", "Good", "Excellent")


def one_dim(ranks, m=4):
    scale = OrdinalScale(tuple(f"r{j}" for j in range(1, m + 1)))
    return Dataset(np.array(ranks)[:, None], (scale,))


def test_scale_basics():
    s = OrdinalScale(GRADES)
    assert s.m == 4
    assert s.rank_of("Fair") == 2
    assert s.label_of(4) == "Excellent"
    with pytest.raises(RankError):
        s.rank_of("Awesome")
    with pytest.raises(RankError):
        s.label_of(0)


@pytest.mark.parametrize("labels", [("a",), ("a", "b", "a")])
def test_scale_rejects_bad_labels(labels):
    with pytest.raises(ScaleMismatch):
        OrdinalScale(labels)


def test_dataset_validates_ranks_and_scales():
    s4, s3 = OrdinalScale(GRADES), OrdinalScale(("a", "b", "c"))
    with pytest.raises(ScaleMismatch):
        Dataset(np.array([[1, 1]]), (s4, s3))
    with pytest.raises(RankError):
        Dataset(np.array([[5]]), (s4,))
    with pytest.raises(RankError):
        Dataset(np.array([[0]]), (s4,))
    d = Dataset.from_labels([("Fair", "Excellent")], (s4, s4))
    assert d.ranks.tolist() == [[2, 4]]
    assert d.labels() == [["Fair", "Excellent"]]
    assert not d.ranks.flags.writeable


def test_frequencies_counting_example():
    t = compute_frequencies(one_dim([1, 1, 2, 2, 2, 3, 3, 3, 3, 4]), 0)
    assert t.counts.tolist() == [2, 3, 4, 1]
    np.testing.assert_allclose(t.rel_freq, [0.2, 0.3, 0.4, 0.1], atol=1e-12)


def test_frequencies_uniform():
    t = compute_frequencies(one_dim([1, 2, 3, 4] * 5), 0)
    np.testing.assert_allclose(t.rel_freq, [0.25] * 4, atol=1e-12)


def test_zero_frequency_rank_is_an_error():
    with pytest.raises(ZeroFrequencyRank) as exc:
        compute_frequencies(one_dim([1, 1, 1], m=2), 0)
    assert exc.value.rank == 2
    assert exc.value.dim == 1


def test_smoothing_fills_missing_ranks():
    t = compute_frequencies(one_dim([1, 1, 1], m=2), 0, smoothing=1.0)
    assert t.counts.tolist() == [3, 0]
    np.testing.assert_allclose(t.rel_freq, [0.8, 0.2])


@pytest.mark.parametrize("f, centers", [
    ((0.2, 0.3, 0.4, 0.1), (0.10, 0.35, 0.70, 0.95)),
    ((0.25, 0.25, 0.25, 0.25), (0.125, 0.375, 0.625, 0.875)),
    ((0.5, 0.5), (0.25, 0.75)),
])
def test_center_examples(f, centers):
    t = table_from_frequencies(f)
    np.testing.assert_allclose(t.centers, centers, atol=1e-12)
    np.testing.assert_allclose(t.cumulative, t.centers, atol=1e-12)


def test_compute_centers_rejects_zero_frequency():
    from ordfuzz import FrequencyTable
    with pytest.raises(ZeroFrequencyRank):
        compute_centers(FrequencyTable([1, 0], [1.0, 0.0]))


rank_lists = st.integers(2, 8).flatmap(
    lambda m: st.lists(st.integers(1, m), min_size=m, max_size=200)
    .filter(lambda r, m=m: len(set(r)) == m)
    .map(lambda r, m=m: (m, r)))


@given(rank_lists)
@settings(max_examples=150, deadline=None)
def test_table_invariants(case):
    m, ranks = case
    t = compute_centers(compute_frequencies(one_dim(ranks, m), 0))
    f, c = t.rel_freq, t.centers
    assert t.counts.sum() == len(ranks)
    assert abs(f.sum() - 1) <= 1e-12
    assert abs(c[0] - 0.5 * f[0]) <= 1e-12
    np.testing.assert_allclose(np.diff(c), 0.5 * (f[:-1] + f[1:]), atol=1e-12, rtol=0)
    np.testing.assert_allclose(t.cumulative, c, atol=1e-12, rtol=0)
    assert abs(c[-1] + 0.5 * f[-1] - 1) <= 1e-12
    assert np.all(np.diff(c) > 0)


@given(rank_lists, st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_permutation_and_duplication_invariance(case, rnd):
    m, ranks = case
    base = compute_centers(compute_frequencies(one_dim(ranks, m), 0))
    shuffled = list(ranks)
    rnd.shuffle(shuffled)
    for other in (shuffled, ranks + ranks):
        t = compute_centers(compute_frequencies(one_dim(other, m), 0))
        np.testing.assert_allclose(t.rel_freq, base.rel_freq, atol=1e-12, rtol=0)
        np.testing.assert_allclose(t.centers, base.centers, atol=1e-12, rtol=0)
        np.testing.assert_allclose(t.cumulative, base.cumulative, atol=1e-12, rtol=0)
