"""Independent oracles used across the test suite.

Nothing here calls into the code paths being checked beyond constructing
inputs; distances are recomputed with plain Python arithmetic.
"""

import itertools
import math

import numpy as np


def py_dist(a, b):
    return math.sqrt(sum((float(x) - float(y)) ** 2 for x, y in zip(a, b)))


def naive_ssedm(points, labels):
    """Two-pass SSEDM: explicit per-cluster means, then explicit squared sums."""
    clusters = {}
    for p, l in zip(points, labels):
        clusters.setdefault(int(l), []).append([float(v) for v in p])
    total = []
    for members in clusters.values():
        m = len(members[0])
        mean = [math.fsum(p[j] for p in members) / len(members) for j in range(m)]
        for p in members:
            total.append(math.fsum((p[j] - mean[j]) ** 2 for j in range(m)))
    return math.fsum(total)


def restricted_growth_strings(n, k):
    """All set partitions of range(n) into at most k non-empty blocks, as label lists."""
    def rec(prefix, maxlabel):
        if len(prefix) == n:
            yield list(prefix)
            return
        for l in range(min(maxlabel + 2, k)):
            prefix.append(l)
            yield from rec(prefix, max(maxlabel, l))
            prefix.pop()
    yield from rec([], -1)


def optimal_ssedm(points, k):
    """Exact optimum over all partitions into <= k clusters."""
    return min(naive_ssedm(points, labels) for labels in restricted_growth_strings(len(points), k))


def exact_useful(P, centers):
    """Definition-level useful set, quantified over every chosen center."""
    out = set()
    for i, c in enumerate(centers):
        dpc = py_dist(P, c)
        if not any(
            py_dist(P, cx) < dpc and py_dist(c, cx) < dpc
            for j, cx in enumerate(centers) if j != i
        ):
            out.add(i)
    return out


def check_unc_state(state, points, centers):
    """Assert the UncState invariants for every point. Returns the useful sets."""
    sets = state.useful_sets()
    for i, P in enumerate(points):
        S = sets[i]
        assert S, f"point {i} has an empty useful set"
        d = [py_dist(P, c) for c in centers]
        cached = state.dist[i, : len(centers)]
        for j in range(len(centers)):
            assert math.isclose(cached[j], d[j], rel_tol=1e-12, abs_tol=1e-12)
        for j in range(len(centers)):
            if cached[j] == cached.min():
                assert j in S, f"point {i}: nearest center {j} missing"
        for a, b in itertools.permutations(S, 2):
            dominated = cached[b] < cached[a] and state.center_distance(a, b) < cached[a]
            assert not dominated, f"point {i}: member {a} dominated by member {b}"
    return sets


def random_instance(rng, n_max=100, m_max=5, k_max=10):
    n = int(rng.integers(2, n_max + 1))
    m = int(rng.integers(1, m_max + 1))
    X = rng.normal(size=(n, m)) * rng.uniform(0.2, 5.0)
    if rng.random() < 0.3:  # clustered data
        centers = rng.normal(scale=5.0, size=(int(rng.integers(2, 6)), m))
        X = centers[rng.integers(len(centers), size=n)] + rng.normal(scale=0.5, size=(n, m))
    k = int(rng.integers(1, min(k_max, n) + 1))
    return X, k
