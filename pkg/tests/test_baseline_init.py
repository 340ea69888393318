import numpy as np
import pytest
from scipy import stats

from unckm import (
    Dataset,
    InsufficientDistinctPoints,
    kmeanspp_init,
    maxmin_init,
    random_init,
    rng_stream,
)

from helpers import random_instance

LINE = Dataset([0.0, 1.0, 10.0])


def test_rng_stream_reproducible():
    a = rng_stream(42, 3).random(5)
    assert np.array_equal(a, rng_stream(42, 3).random(5))
    assert not np.array_equal(a, rng_stream(42, 4).random(5))
    with pytest.raises(ValueError):
        rng_stream(-1)


def test_rng_stream_pinned_values():
    # guards against a silent change of generator
    assert rng_stream(0, 0).integers(2**32, size=3).tolist() == [
        int(v) for v in np.random.Generator(
            np.random.PCG64(np.random.SeedSequence([0, 0]))
        ).integers(2**32, size=3)
    ]


class TestRandomInit:
    def test_n_equals_k(self):
        seeds = random_init(LINE, 3, rng_stream(5))
        assert sorted(seeds.source_indices) == [0, 1, 2]
        assert seeds.method == "random"

    def test_uniform_k1(self):
        rng = rng_stream(123)
        ds = Dataset(np.arange(8.0))
        counts = np.bincount([random_init(ds, 1, rng).source_indices[0] for _ in range(10_000)], minlength=8)
        assert stats.chisquare(counts).pvalue > 0.001

    def test_degenerate(self):
        with pytest.raises(InsufficientDistinctPoints):
            random_init(Dataset([2.0, 2.0, 2.0]), 2, rng_stream(0))

    def test_skips_duplicate_positions(self):
        ds = Dataset([1.0, 1.0, 1.0, 1.0, 2.0])
        for r in range(30):
            seeds = random_init(ds, 2, rng_stream(9, r))
            assert sorted(seeds.centers[:, 0]) == [1.0, 2.0]


class TestKmeansPP:
    def test_d2_probabilities_small(self):
        # first center at 0; D^2 = 1 and 4 for the remaining points
        ds = Dataset([0.0, 1.0, 2.0])
        rng = rng_stream(77)
        picks = [kmeanspp_init(ds, 2, rng, first_index=0).source_indices[1] for _ in range(5000)]
        counts = np.bincount(picks, minlength=3)
        assert counts[0] == 0
        assert stats.chisquare(counts[1:], 5000 * np.array([1, 4]) / 5).pvalue > 0.001

    def test_line_probability(self):
        rng = rng_stream(1)
        picks = [kmeanspp_init(LINE, 2, rng, first_index=0).source_indices[1] for _ in range(4000)]
        frac = np.mean(np.array(picks) == 2)
        assert abs(frac - 100 / 101) < 0.01

    def test_duplicate_of_center_never_chosen(self):
        ds = Dataset([0.0, 0.0, 0.0, 3.0])
        rng = rng_stream(2)
        for _ in range(500):
            assert kmeanspp_init(ds, 2, rng, first_index=0).source_indices[1] == 3

    def test_first_center_uniform(self):
        rng = rng_stream(4)
        ds = Dataset(np.arange(5.0))
        firsts = np.bincount([kmeanspp_init(ds, 1, rng).source_indices[0] for _ in range(5000)], minlength=5)
        assert stats.chisquare(firsts).pvalue > 0.001


class TestMaxmin:
    def test_farthest(self):
        assert maxmin_init(LINE, 2, None, first_index=0).source_indices == (0, 2)

    def test_only_candidate(self):
        assert maxmin_init(LINE, 3, None, first_index=0).source_indices == (0, 2, 1)

    def test_all_points(self):
        seeds = maxmin_init(LINE, 3, rng_stream(8))
        assert sorted(seeds.source_indices) == [0, 1, 2]

    def test_tie_lowest_index(self):
        ds = Dataset([0.0, -1.0, 1.0])
        assert maxmin_init(ds, 2, None, first_index=0).source_indices == (0, 1)

    def test_permutation_invariant(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            X = rng.normal(size=(25, 3))
            perm = rng.permutation(25)
            inv = np.argsort(perm)
            a = maxmin_init(Dataset(X), 5, None, first_index=0)
            b = maxmin_init(Dataset(X[perm]), 5, None, first_index=int(inv[0]))
            np.testing.assert_array_equal(a.centers, b.centers)


@pytest.mark.parametrize("init", [random_init, kmeanspp_init, maxmin_init])
def test_distinct_positions(init):
    rng = np.random.default_rng(21)
    for trial in range(50):
        X, k = random_instance(rng, n_max=30)
        X[: len(X) // 3] = X[0]  # force duplicates
        ds = Dataset(X)
        if ds.distinct_count() < k:
            with pytest.raises(InsufficientDistinctPoints):
                init(ds, k, rng_stream(trial))
            continue
        seeds = init(ds, k, rng_stream(trial))
        assert len(set(seeds.source_indices)) == k
        assert len({tuple(c) for c in seeds.centers}) == k
        np.testing.assert_array_equal(seeds.centers, X[list(seeds.source_indices)])


def test_incremental_min_matches_recompute():
    rng = np.random.default_rng(0)
    X = rng.normal(size=(40, 3))
    order = rng.permutation(40)[:8]
    d2 = np.full(40, np.inf)
    for j, i in enumerate(order):
        d2 = np.minimum(d2, ((X - X[i]) ** 2).sum(axis=1))
        full = np.min([((X - X[c]) ** 2).sum(axis=1) for c in order[: j + 1]], axis=0)
        np.testing.assert_array_equal(d2, full)
