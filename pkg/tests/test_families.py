import pytest

from flipdist.deletion import delete_many, delete_seq
from flipdist.errors import SizeError
from flipdist.families import (
    FamilyId,
    comb_teeth,
    family_a,
    family_b,
    family_c,
    family_d,
    family_member,
    family_pair,
    is_zigzag,
    zigzag,
)
from flipdist.polygon import apply_flips, edge, fan, link, pair_dihedral_class


class TestZigzag:
    def test_hexagon(self):
        assert zigzag(6).interior == frozenset({(2, 4), (1, 4), (1, 5)})

    def test_octagon(self):
        assert zigzag(8).interior == frozenset({(2, 4), (1, 4), (1, 5), (0, 5), (0, 6)})

    @pytest.mark.parametrize("n", range(5, 21))
    def test_alternating_turns(self, n):
        assert is_zigzag(zigzag(n))

    def test_small_sizes(self):
        assert zigzag(4).interior == frozenset({(0, 2)})
        assert zigzag(3).interior == frozenset()


class TestFamilyA:
    def test_shrinks_to_triangle(self):
        pair = family_a(3)
        assert pair.first.interior == frozenset()
        assert pair.second.interior == frozenset()

    @pytest.mark.parametrize("n", range(9, 17))
    def test_combs(self, n):
        pair = family_a(n)
        assert comb_teeth(pair.first, 2) == 3
        assert comb_teeth(pair.second, 3) == 4

    @pytest.mark.parametrize("n", range(8, 16))
    def test_links(self, n):
        pair = family_a(n)
        assert link(pair.first, (1, 2)) == 6
        assert link(pair.second, (1, 2)) == 3

    @pytest.mark.parametrize(
        "n,flips",
        [
            (6, [(1, 5), (2, 5), (2, 4), (0, 2)]),
            (7, [(2, 4), (2, 5), (1, 5), (0, 5), (3, 5)]),
            (8, [(2, 4), (2, 5), (2, 6), (1, 6), (0, 6), (3, 6), (3, 5)]),
        ],
    )
    def test_explicit_witness_paths(self, n, flips):
        pair = family_a(n)
        assert apply_flips(pair.first, flips).end == pair.second

    @pytest.mark.parametrize("n", range(4, 15))
    def test_one_deletion_shrinks_family(self, n):
        assert pair_dihedral_class(delete_seq(family_a(n), [1])) == pair_dihedral_class(
            family_a(n - 1)
        )

    @pytest.mark.parametrize("n", range(6, 15))
    def test_two_deletions_shrink_family(self, n):
        assert pair_dihedral_class(delete_seq(family_a(n), [3, 1])) == pair_dihedral_class(
            family_a(n - 2)
        )

    @pytest.mark.parametrize("n", range(6, 16))
    def test_links_after_deleting_three(self, n):
        # labels above 3 shift down one after the deletion
        want_minus = 4 if n <= 7 else 5
        pair = family_a(n)
        assert link(delete_many(pair.first, [3]), (1, 2)) == want_minus
        assert link(delete_many(pair.second, [3]), (1, 2)) == 3


class TestFamilyBC:
    def test_minimum_size(self):
        with pytest.raises(SizeError):
            family_b(6)
        with pytest.raises(SizeError):
            family_c(6)

    @pytest.mark.parametrize("n", range(12, 17))
    def test_links(self, n):
        pair = family_b(n)
        assert link(pair.first, (3, 4)) == 6
        assert link(pair.second, (3, 4)) == n - 1
        assert link(pair.second, (4, 5)) == n - 2
        assert link(pair.second, (5, 6)) == n - 3

    @pytest.mark.parametrize("n", range(9, 17))
    def test_comb_at_six(self, n):
        assert comb_teeth(family_b(n).first, 6) == 3

    def test_c_differs_by_one_flip(self):
        for n in (8, 10, 13):
            b, c = family_b(n), family_c(n)
            assert b.second == c.second
            assert len(b.first.interior - c.first.interior) == 1
            assert (4, 6) in b.first.interior and (3, 5) in c.first.interior

    @pytest.mark.parametrize("n", range(12, 16))
    def test_reductions_to_family_a(self, n):
        assert pair_dihedral_class(delete_seq(family_b(n), [4, 5, 0, 1, 2])) == \
            pair_dihedral_class(family_a(n - 5))
        assert pair_dihedral_class(delete_seq(family_c(n), [4, 0, 1, 2])) == \
            pair_dihedral_class(family_a(n - 4))

    @pytest.mark.parametrize("n", range(12, 17))
    def test_links_after_deletions(self, n):
        # expected labels 8,7,6 shift through the deleted sets {4,5} and {4}
        bm = delete_many(family_b(n).first, [4, 5])
        for e, want in (((0, 1), 6), ((1, 2), 5), ((2, 3), 4)):
            assert link(bm, e) == want
        cm = delete_many(family_c(n).first, [4])
        for e, want in (((0, 1), 7), ((1, 2), 6), ((2, 3), 5)):
            assert link(cm, e) == want


REDUCTION31_MINUS = [(2, -1), (1, -1), (4, -2), (4, -3), (5, -3), (5, -4), (6, -4),
                (7, -5), (6, -5), (7, -6), (8, -6), (10, -8), (9, -8), (9, -7)]
REDUCTION31_PLUS = [(2, -6), (2, -5), (1, -5), (1, -4), (0, -4), (0, -3), (0, -2),
               (4, -8), (4, -7), (5, -8), (5, -9), (5, -7), (3, -7), (7, -11),
               (7, -10), (6, -10), (6, -9)]


def _resolve(entries, n):
    return [edge(p if p >= 0 else n + p, q if q >= 0 else n + q) for p, q in entries]


class TestFamilyD:
    @pytest.mark.parametrize("n", range(6, 23))
    def test_unique_three_tooth_comb(self, n):
        pair = family_d(n)
        for t in (pair.first, pair.second):
            combs = [v for v in range(n) if comb_teeth(t, v) >= 3]
            assert len(combs) == 1
            assert comb_teeth(t, combs[0]) == 3

    @pytest.mark.parametrize("n", [20, 21, 22])
    def test_fourteen_edges_interior(self, n):
        t = family_d(n).first
        for e in _resolve(REDUCTION31_MINUS, n):
            assert e in t.interior

    @pytest.mark.parametrize("n", [20, 21, 22])
    def test_seventeen_edge_list_executes(self, n):
        # the twelfth listed edge {5, n-7} only appears after the eighth flip
        t = family_d(n).second
        edges = _resolve(REDUCTION31_PLUS, n)
        present = [e for e in edges if e in t.interior]
        assert len(present) == 16
        assert set(edges) - set(present) == {edge(5, n - 7)}
        path = apply_flips(t, edges)
        assert len(path) == 17


class TestPredicates:
    def test_fan_teeth(self):
        assert comb_teeth(fan(8, 0), 0) == 5

    def test_fan_not_zigzag(self):
        assert not is_zigzag(fan(6, 0))
        assert comb_teeth(fan(6, 0), 0) == 3

    def test_zigzag_predicate_on_construction(self):
        assert is_zigzag(zigzag(10))


class TestFamilyApi:
    def test_family_id_bounds(self):
        with pytest.raises(SizeError):
            FamilyId("B", 6)
        FamilyId("Z", 3)

    def test_member_lookup(self):
        assert family_member("A", "-", 8) == family_a(8).first
        assert family_member("A", "+", 8) == family_a(8).second
        assert family_member("C", "+", 9) == family_b(9).second

    def test_pair_lookup_z(self):
        pair = family_pair("Z", 8)
        assert pair.first == pair.second == zigzag(8)
