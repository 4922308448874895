import random

import pytest

from flipdist.distance import (
    decompose,
    decompose_cells,
    fan_route,
    fan_upper_bound,
    flip_distance,
    path_to_fan,
    reduce_forced,
)
from flipdist.errors import ResourceBudgetError
from flipdist.families import family_a
from flipdist.flipgraph import pair_distance, tables
from flipdist.polygon import (
    Triangulation,
    apply_flips,
    fan,
    uniform_random,
)


class TestDecompose:
    def test_identical_pair_is_trivial(self):
        t = uniform_random(9, 4)
        parts = decompose(t, t)
        assert sum(pair_distance(p.first, p.second) for p in parts) == 0

    def test_single_shared_edge_cell_sizes(self):
        rng = random.Random(31)
        found = 0
        while found < 25:
            n = rng.randrange(6, 11)
            u = uniform_random(n, rng.randrange(1 << 30))
            v = uniform_random(n, rng.randrange(1 << 30))
            shared = u.interior & v.interior
            if len(shared) != 1:
                continue
            found += 1
            cells = decompose_cells(u, v)
            assert len(cells) == 2
            assert sum(len(c.vertices) for c in cells) == n + 2

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_component_sum_matches_bfs(self, n):
        tab = tables(n)
        tris = [Triangulation.from_key(n, k) for k in tab.keys]
        for i, u in enumerate(tris):
            for v in tris[i + 1 :]:
                total = pair_distance(u, v)
                parts = decompose(u, v)
                assert sum(pair_distance(p.first, p.second) for p in parts) == total


class TestReduceForced:
    def test_fan_to_fan_applies_at_least_one(self):
        for n in (5, 6, 8):
            u, v = fan(n, 0), fan(n, 1)
            u2, applied = reduce_forced(u, v)
            assert applied >= 1
            assert pair_distance(u2, v) + applied == pair_distance(u, v)

    def test_one_forced_flip_finishes_smallest_pair(self):
        pair = family_a(4)
        u2, applied = reduce_forced(pair.first, pair.second)
        assert applied == 1 and u2 == pair.second

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_distance_identity_exhaustive(self, n):
        tab = tables(n)
        tris = [Triangulation.from_key(n, k) for k in tab.keys]
        for u in tris:
            for v in tris:
                u2, applied = reduce_forced(u, v)
                assert pair_distance(u2, v) + applied == pair_distance(u, v)


class TestFanUpperBound:
    @pytest.mark.parametrize("n", range(9, 15))
    def test_asymmetric_pair_bound(self, n):
        pair = family_a(n)
        assert fan_upper_bound(pair.first, pair.second) <= 2 * n - 10

    def test_fan_source_bound(self):
        for n in (6, 8, 10):
            u = fan(n, 2)
            v = uniform_random(n, 17)
            bound = fan_upper_bound(u, v)
            assert bound <= n - 3 - v.degree(2) <= n - 3

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_bound_dominates_distance_exhaustive(self, n):
        tab = tables(n)
        tris = [Triangulation.from_key(n, k) for k in tab.keys]
        for i, u in enumerate(tris):
            for v in tris[i + 1 :]:
                assert fan_upper_bound(u, v) >= pair_distance(u, v)

    def test_route_realizes_bound(self):
        rng = random.Random(12)
        for _ in range(40):
            n = rng.randrange(5, 10)
            u = uniform_random(n, rng.randrange(1 << 30))
            v = uniform_random(n, rng.randrange(1 << 30))
            edges = fan_route(u, v)
            path = apply_flips(u, edges)
            assert path.end == v
            assert len(path) == fan_upper_bound(u, v)

    def test_path_to_fan_length(self):
        t = uniform_random(10, 3)
        path = path_to_fan(t, 4)
        assert path.end == fan(10, 4)
        assert len(path) == 10 - 3 - t.degree(4)


class TestFlipDistance:
    @pytest.mark.parametrize("n,want", [(3, 0), (4, 1), (5, 2), (6, 4), (7, 5), (8, 7)])
    def test_small_family_distances(self, n, want):
        pair = family_a(n)
        assert flip_distance(pair.first, pair.second).distance == want

    def test_identical_pair(self):
        t = uniform_random(11, 9)
        report = flip_distance(t, t)
        assert report.distance == 0
        assert len(report.witness) == 0

    def test_witness_replays_and_keeps_shared_edges(self):
        rng = random.Random(41)
        for _ in range(60):
            n = rng.randrange(5, 11)
            u = uniform_random(n, rng.randrange(1 << 30))
            v = uniform_random(n, rng.randrange(1 << 30))
            report = flip_distance(u, v)
            assert report.witness.start == u and report.witness.end == v
            shared = u.interior & v.interior
            assert all(shared <= step.interior for step in report.witness.steps)

    def test_symmetric(self):
        rng = random.Random(42)
        for _ in range(30):
            n = rng.randrange(5, 11)
            u = uniform_random(n, rng.randrange(1 << 30))
            v = uniform_random(n, rng.randrange(1 << 30))
            assert flip_distance(u, v).distance == flip_distance(v, u).distance

    def test_matches_bfs_sampled(self):
        rng = random.Random(43)
        for n in (8, 9, 10):
            for _ in range(60):
                u = uniform_random(n, rng.randrange(1 << 30))
                v = uniform_random(n, rng.randrange(1 << 30))
                assert flip_distance(u, v).distance == pair_distance(u, v)

    def test_admissible_lower_bound(self):
        rng = random.Random(44)
        for _ in range(50):
            n = rng.randrange(5, 11)
            u = uniform_random(n, rng.randrange(1 << 30))
            v = uniform_random(n, rng.randrange(1 << 30))
            assert flip_distance(u, v).distance >= len(u.interior - v.interior)

    def test_budget_error_carries_bracket(self):
        pair = family_a(12)
        with pytest.raises(ResourceBudgetError) as err:
            flip_distance(pair.first, pair.second, budget=5)
        assert err.value.lower is not None and err.value.upper is not None
        assert err.value.lower <= 14 <= err.value.upper

    def test_deterministic_expansion_count(self):
        pair = family_a(10)
        a = flip_distance(pair.first, pair.second)
        b = flip_distance(pair.first, pair.second)
        assert (a.distance, a.expanded) == (b.distance, b.expanded)
