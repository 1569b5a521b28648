import itertools

import pytest

import iki


def brute_colorful(n, edges, weights, colors):
    adj = {frozenset(e) for e in edges}
    best = 0
    for r in range(n + 1):
        for s in itertools.combinations(range(n), r):
            if len({colors[v] for v in s}) != len(s):
                continue
            if any(frozenset((u, v)) in adj for u, v in itertools.combinations(s, 2)):
                continue
            best = max(best, sum(weights[v] for v in s))
    return best


def test_recognizers():
    cycle4 = [(0, 1), (1, 2), (2, 3), (3, 0)]
    assert iki.is_chordal(4, cycle4) is None
    assert iki.is_chordal(4, cycle4 + [(0, 2)]) is not None
    assert iki.is_cluster(3, [(0, 1)])
    assert not iki.is_cluster(3, [(0, 1), (1, 2)])
    k33 = [(a, b) for a in range(3) for b in range(3, 6)]
    assert iki.hamiltonian_cubic_triangle_free(6, k33)
    assert iki.two_simplicial_ordering(6, k33) is None


def test_colorful_dp_matches_brute_force():
    for seed in range(20):
        n = 8
        edges = iki.random_chordal(n, 3, seed)
        weights = [(seed * 7 + v * 3) % 11 for v in range(n)]
        colors = [1 + (v * (seed + 1)) % 3 for v in range(n)]
        sol = iki.colorful_is(n, edges, weights, colors)
        assert sol["weight"] == brute_colorful(n, edges, weights, colors)


def test_pipeline_and_determinism():
    text = iki.random_overlay(10, 3, 3, 20, 4)
    exact = iki.brute_mwccs(text, 2, 4)
    assert iki.mwccs(text, 2, 4)["weight"] == exact["weight"]
    a = iki.mwccs(text, 2, 4, mode="randomized", seed=9)
    b = iki.mwccs(text, 2, 4, mode="randomized", seed=9, jobs=2)
    assert a == b


def test_construction():
    # Two classes of one vertex joined by an edge.
    out = iki.construction(2, [(0, 1)], [[0], [1]])
    assert out["ell"] == 5
    assert len(iki.brute_mwis(out["n"], out["edges"], [1] * out["n"])["vertices"]) == 5
    assert iki.is_k_mino(out["n"], out["edges"], 3)


def test_errors():
    with pytest.raises(ValueError):
        iki.mwis_chordal(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [1] * 4)
    with pytest.raises(ValueError):
        iki.mwccs("p iki 2 1\ne 1 5\n", 1, 1)
