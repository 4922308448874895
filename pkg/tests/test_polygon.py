import itertools

import pytest
from hypothesis import given, settings, strategies as st

from flipdist.errors import FlipSequenceError, InvalidInputError
from flipdist.families import family_a
from flipdist.polygon import (
    Triangulation,
    apply_flips,
    canonical_key,
    crosses,
    dihedral_class_key,
    edge,
    fan,
    flip,
    link,
    pair_dihedral_class,
    rotate,
    triangulation_count,
    uniform_random,
    TriangulationPair,
)


def brute_force_triangulations(n):
    """Independent oracle: filter all (n-3)-subsets of diagonals for crossings."""
    diags = [(a, b) for a in range(n) for b in range(a + 2, n) if not (a == 0 and b == n - 1)]

    def cross(e, f):
        a, b = e
        c, d = f
        if len({a, b, c, d}) < 4:
            return False
        return (a < c < b) != (a < d < b)

    out = []
    for subset in itertools.combinations(diags, n - 3):
        if all(not cross(e, f) for e, f in itertools.combinations(subset, 2)):
            out.append(frozenset(subset))
    return out


class TestCrosses:
    def test_square_diagonals(self):
        assert crosses(4, (0, 2), (1, 3)) is True

    def test_disjoint_boundary_edges(self):
        assert crosses(4, (0, 1), (2, 3)) is False

    def test_shared_vertex_never_crosses(self):
        assert crosses(6, (0, 2), (0, 3)) is False

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidInputError):
            crosses(4, (0, 2), (1, 4))

    @given(st.integers(4, 12), st.data())
    @settings(max_examples=100, deadline=None)
    def test_symmetric_irreflexive(self, n, data):
        a, b = data.draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
        c, d = data.draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
        e, f = edge(a, b), edge(c, d)
        assert crosses(n, e, f) == crosses(n, f, e)
        assert crosses(n, e, e) is False


class TestLink:
    def test_hexagon_fan(self):
        assert link(fan(6, 0), (1, 2)) == 0

    @pytest.mark.parametrize("n", [9, 10, 11, 12])
    def test_asymmetric_pair_links(self, n):
        pair = family_a(n)
        assert link(pair.first, (1, 2)) == 6
        assert link(pair.second, (1, 2)) == 3

    def test_interior_edge_rejected(self):
        with pytest.raises(InvalidInputError):
            link(fan(6, 0), (0, 2))


class TestFlip:
    def test_hexagon_fan_flip(self):
        result, introduced = flip(fan(6, 0), (0, 2))
        assert introduced == (1, 3)
        assert (1, 3) in result.interior

    def test_square_involution(self):
        t = fan(4, 0)
        t2, intro = flip(t, (0, 2))
        assert intro == (1, 3)
        back, back_intro = flip(t2, (1, 3))
        assert back == t and back_intro == (0, 2)

    @pytest.mark.parametrize("n", [8, 9, 12])
    def test_asymmetric_pair_flips(self, n):
        t = family_a(n).first
        assert flip(t, (2, 4))[1] == (3, 5)
        assert flip(t, (2, 5))[1] == (4, 6)

    def test_flip_not_interior_rejected(self):
        with pytest.raises(InvalidInputError):
            flip(fan(6, 0), (1, 3))

    @given(st.integers(4, 11), st.integers(0, 2**30))
    @settings(max_examples=100, deadline=None)
    def test_involution_and_crossing(self, n, seed):
        t = uniform_random(n, seed)
        for e in sorted(t.interior):
            t2, intro = flip(t, e)
            assert crosses(n, e, intro)
            assert all(not crosses(n, intro, f) for f in t2.interior if f != intro)
            assert flip(t2, intro)[0] == t


class TestApplyFlips:
    def test_empty_path(self):
        t = fan(7, 0)
        path = apply_flips(t, [])
        assert len(path) == 0 and path.start == path.end == t

    def test_four_flip_witness_small(self):
        pair = family_a(6)
        path = apply_flips(pair.first, [(1, 5), (2, 5), (2, 4), (0, 2)])
        assert path.end == pair.second

    def test_seven_flip_witness(self):
        pair = family_a(8)
        path = apply_flips(pair.first, [(2, 4), (2, 5), (2, 6), (1, 6), (0, 6), (3, 6), (3, 5)])
        assert path.end == pair.second

    def test_failing_index_reported(self):
        with pytest.raises(FlipSequenceError) as err:
            apply_flips(fan(6, 0), [(0, 2), (0, 2)])
        assert err.value.index == 1


class TestKeys:
    def test_key_identity(self):
        t = fan(6, 0)
        assert canonical_key(t) == canonical_key(Triangulation(6, t.interior))

    def test_different_fans_differ(self):
        assert canonical_key(fan(6, 0)) != canonical_key(fan(6, 1))

    def test_flip_inverse_same_key(self):
        t = fan(6, 0)
        t2, intro = flip(t, (0, 3))
        back, _ = flip(t2, intro)
        assert canonical_key(back) == canonical_key(t)

    def test_from_key_round_trip(self):
        for seed in range(20):
            t = uniform_random(9, seed)
            assert Triangulation.from_key(9, t.key()) == t


class TestDihedralClasses:
    def test_self_pair_rotation_invariant(self):
        t = uniform_random(8, 5)
        p = TriangulationPair(t, t)
        for r in range(8):
            q = TriangulationPair(rotate(t, r), rotate(t, r))
            assert pair_dihedral_class(p) == pair_dihedral_class(q)

    def test_member_swap_invariant(self):
        pair = family_a(7)
        assert pair_dihedral_class(pair) == pair_dihedral_class(pair.swapped())

    def test_distinct_pairs_distinct_class(self):
        p1 = TriangulationPair(fan(6, 0), fan(6, 1))
        p2 = TriangulationPair(fan(6, 0), fan(6, 3))
        assert pair_dihedral_class(p1) != pair_dihedral_class(p2)

    def test_triangulation_class_key(self):
        assert dihedral_class_key(fan(7, 0)) == dihedral_class_key(fan(7, 4))


class TestFan:
    def test_square(self):
        assert fan(4, 0).interior == frozenset({(0, 2)})

    def test_hexagon(self):
        assert fan(6, 0).interior == frozenset({(0, 2), (0, 3), (0, 4)})

    @pytest.mark.parametrize("n", [6, 7, 10, 13])
    def test_comb_size(self, n):
        t = fan(n, 2)
        assert t.degree(2) == n - 3


class TestUniformRandom:
    def test_square_frequencies(self):
        counts = {}
        for seed in range(10_000):
            key = uniform_random(4, seed).key()
            counts[key] = counts.get(key, 0) + 1
        assert len(counts) == 2
        for c in counts.values():
            assert abs(c / 10_000 - 0.5) <= 0.02

    def test_hexagon_hits_all_fourteen(self):
        oracle = brute_force_triangulations(6)
        assert len(oracle) == 14
        seen = {uniform_random(6, seed).interior for seed in range(3000)}
        assert seen == set(oracle)

    def test_deterministic_in_seed(self):
        assert uniform_random(10, 77) == uniform_random(10, 77)

    def test_catalan_counts(self):
        # independent recurrence
        cat = [1, 1]
        for k in range(2, 14):
            cat.append(sum(cat[i] * cat[k - 1 - i] for i in range(k)))
        for n in range(3, 16):
            assert triangulation_count(n) == cat[n - 2]


class TestValidator:
    def test_wrong_count_rejected(self):
        with pytest.raises(InvalidInputError):
            Triangulation(6, [(0, 2)])

    def test_crossing_rejected(self):
        with pytest.raises(InvalidInputError):
            Triangulation(6, [(0, 2), (1, 3), (0, 4)])

    def test_boundary_as_interior_rejected(self):
        with pytest.raises(InvalidInputError):
            Triangulation(6, [(0, 1), (0, 3), (0, 4)])

    def test_triangle_has_no_interior(self):
        assert Triangulation(3, []).interior == frozenset()

    def test_matches_brute_force_for_heptagon(self):
        oracle = {frozenset(s) for s in brute_force_triangulations(7)}
        for interior in oracle:
            Triangulation(7, interior)
        assert len(oracle) == triangulation_count(7)
