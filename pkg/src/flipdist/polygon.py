"""Triangulations of a convex polygon, flips, and canonical forms.

Vertices of an n-gon are labeled 0..n-1 clockwise and all arithmetic on
labels is mod n. An edge is an unordered pair of distinct labels, stored as
a tuple (a, b) with a < b. Boundary edges (consecutive labels) are implicit:
a Triangulation stores only its n-3 interior edges, pairwise non-crossing.
No coordinates exist anywhere; crossing is cyclic betweenness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import FlipSequenceError, InvalidInputError, SizeError

Edge = tuple[int, int]


def edge(a: int, b: int) -> Edge:
    """Normalized edge (a, b) with a < b."""
    if a == b:
        raise InvalidInputError(f"degenerate edge ({a},{b})")
    return (a, b) if a < b else (b, a)


def norm_vertex(v: int, n: int) -> int:
    return v % n


def is_boundary(n: int, e: Edge) -> bool:
    d = (e[1] - e[0]) % n
    return d == 1 or d == n - 1


def boundary_edges(n: int) -> list[Edge]:
    return [edge(i, (i + 1) % n) for i in range(n)]


def crosses(n: int, e: Edge, f: Edge) -> bool:
    """True iff chords e and f cross strictly inside the n-gon.

    Two edges cross iff they are vertex-disjoint and exactly one endpoint
    of f lies strictly between the endpoints of e in cyclic order.
    """
    for v in (*e, *f):
        if not 0 <= v < n:
            raise InvalidInputError(f"vertex {v} out of range for n={n}")
    a, b = edge(*e)
    c, d = edge(*f)
    if a == c or a == d or b == c or b == d:
        return False
    return (a < c < b) != (a < d < b)


@lru_cache(maxsize=None)
def diagonals(n: int) -> tuple[Edge, ...]:
    """All n(n-3)/2 diagonals of the n-gon in lexicographic order."""
    out = []
    for a in range(n):
        for b in range(a + 2, n):
            if a == 0 and b == n - 1:
                continue
            out.append((a, b))
    return tuple(out)


@lru_cache(maxsize=None)
def diagonal_index(n: int) -> dict[Edge, int]:
    return {e: i for i, e in enumerate(diagonals(n))}


class Triangulation:
    """Immutable triangulation of the n-gon, validated at construction."""

    __slots__ = ("n", "interior", "_adj", "_key")

    def __init__(self, n: int, interior: Iterable[Edge]):
        if n < 3:
            raise SizeError(f"polygon needs at least 3 vertices, got {n}")
        edges = frozenset(edge(*e) for e in interior)
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidInputError(f"edge ({a},{b}) out of range for n={n}")
            if is_boundary(n, (a, b)):
                raise InvalidInputError(f"edge ({a},{b}) is not a diagonal of the {n}-gon")
        if len(edges) != n - 3:
            raise InvalidInputError(
                f"expected {n - 3} interior edges for n={n}, got {len(edges)}"
            )
        es = sorted(edges)
        for i, e in enumerate(es):
            for f in es[i + 1 :]:
                if f[0] > e[1]:
                    break
                if crosses(n, e, f):
                    raise InvalidInputError(f"edges {e} and {f} cross")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "interior", edges)
        object.__setattr__(self, "_adj", None)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("Triangulation is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Triangulation)
            and self.n == other.n
            and self.interior == other.interior
        )

    def __hash__(self):
        return hash((self.n, self.interior))

    def __repr__(self):
        inner = ",".join(f"{a}-{b}" for a, b in sorted(self.interior))
        return f"Triangulation(n={self.n}; {inner})"

    # -- structure ---------------------------------------------------------

    def adjacency(self) -> dict[int, set[int]]:
        """Vertex -> neighbors over boundary plus interior edges."""
        if self._adj is None:
            adj: dict[int, set[int]] = {v: set() for v in range(self.n)}
            for v in range(self.n):
                adj[v].add((v + 1) % self.n)
                adj[v].add((v - 1) % self.n)
            for a, b in self.interior:
                adj[a].add(b)
                adj[b].add(a)
            object.__setattr__(self, "_adj", adj)
        return self._adj

    def has_edge(self, e: Edge) -> bool:
        e = edge(*e)
        return e in self.interior or is_boundary(self.n, e)

    def degree(self, v: int) -> int:
        """Number of interior edges at v."""
        v = norm_vertex(v, self.n)
        return sum(1 for e in self.interior if v in e)

    def key(self) -> int:
        """Bitset over the diagonals of the n-gon in lexicographic order."""
        if self._key is None:
            idx = diagonal_index(self.n)
            k = 0
            for e in self.interior:
                k |= 1 << idx[e]
            object.__setattr__(self, "_key", k)
        return self._key

    @classmethod
    def from_key(cls, n: int, key: int) -> "Triangulation":
        diags = diagonals(n)
        interior = []
        k = key
        while k:
            low = k & -k
            interior.append(diags[low.bit_length() - 1])
            k ^= low
        return cls(n, interior)


def link(t: Triangulation, e: Edge) -> int:
    """The unique vertex c with {a,c} and {b,c} both in t, for boundary {a,b}."""
    a, b = edge(*e)
    if not (0 <= a < t.n and 0 <= b < t.n):
        raise InvalidInputError(f"edge ({a},{b}) out of range for n={t.n}")
    if not is_boundary(t.n, (a, b)):
        raise InvalidInputError(f"link is defined for boundary edges only, got ({a},{b})")
    adj = t.adjacency()
    common = adj[a] & adj[b]
    common.discard(a)
    common.discard(b)
    if len(common) != 1:
        raise InvalidInputError(f"no unique link for ({a},{b})")
    return next(iter(common))


def flip_quad(t: Triangulation, e: Edge) -> tuple[int, int]:
    """The two apexes of the quadrilateral around interior edge e."""
    a, b = edge(*e)
    if (a, b) not in t.interior:
        raise InvalidInputError(f"edge ({a},{b}) is not an interior edge")
    adj = t.adjacency()
    side1 = [c for c in adj[a] & adj[b] if a < c < b]
    side2 = [c for c in adj[a] & adj[b] if not a < c < b and c != a and c != b]
    if len(side1) != 1 or len(side2) != 1:
        raise InvalidInputError(f"malformed quadrilateral around ({a},{b})")
    return side1[0], side2[0]


def flip(t: Triangulation, e: Edge) -> tuple[Triangulation, Edge]:
    """Exchange interior edge e for the other diagonal of its quadrilateral."""
    e = edge(*e)
    c1, c2 = flip_quad(t, e)
    introduced = edge(c1, c2)
    result = Triangulation(t.n, (t.interior - {e}) | {introduced})
    return result, introduced


@dataclass(frozen=True)
class FlipPath:
    """A validated walk in the flip graph.

    steps[i+1] is steps[i] with flips[i][0] exchanged for flips[i][1].
    """

    steps: tuple[Triangulation, ...]
    flips: tuple[tuple[Edge, Edge], ...]

    def __post_init__(self):
        if len(self.flips) != len(self.steps) - 1:
            raise InvalidInputError("flip count must be step count minus one")

    def __len__(self) -> int:
        return len(self.flips)

    @property
    def start(self) -> Triangulation:
        return self.steps[0]

    @property
    def end(self) -> Triangulation:
        return self.steps[-1]


def apply_flips(t: Triangulation, edges: Sequence[Edge]) -> FlipPath:
    """Flip the listed edges in order, failing with the first bad index."""
    steps = [t]
    flips: list[tuple[Edge, Edge]] = []
    current = t
    for i, e in enumerate(edges):
        e = edge(*e)
        if e not in current.interior:
            raise FlipSequenceError(i, e)
        current, introduced = flip(current, e)
        steps.append(current)
        flips.append((e, introduced))
    return FlipPath(tuple(steps), tuple(flips))


def reverse_path(p: FlipPath) -> FlipPath:
    return FlipPath(
        tuple(reversed(p.steps)),
        tuple((intro, rem) for rem, intro in reversed(p.flips)),
    )


@dataclass(frozen=True)
class TriangulationPair:
    """Two triangulations of the same labeled polygon."""

    first: Triangulation
    second: Triangulation

    def __post_init__(self):
        if self.first.n != self.second.n:
            raise InvalidInputError("pair members must share the same polygon size")

    @property
    def n(self) -> int:
        return self.first.n

    def swapped(self) -> "TriangulationPair":
        return TriangulationPair(self.second, self.first)


def canonical_key(t: Triangulation) -> tuple[int, int]:
    """Opaque key equal iff the interior edge sets are identical."""
    return (t.n, t.key())


# -- dihedral relabelings --------------------------------------------------


@lru_cache(maxsize=None)
def dihedral_maps(n: int) -> tuple[tuple[int, ...], ...]:
    """The 2n relabelings v -> (v+r) mod n and v -> (r-v) mod n."""
    maps = []
    for r in range(n):
        maps.append(tuple((v + r) % n for v in range(n)))
        maps.append(tuple((r - v) % n for v in range(n)))
    return tuple(maps)


@lru_cache(maxsize=None)
def dihedral_bit_perms(n: int) -> tuple[tuple[int, ...], ...]:
    """Per relabeling, the induced permutation of diagonal bit positions."""
    idx = diagonal_index(n)
    diags = diagonals(n)
    perms = []
    for m in dihedral_maps(n):
        perms.append(tuple(idx[edge(m[a], m[b])] for a, b in diags))
    return tuple(perms)


def _permute_key(key: int, perm: tuple[int, ...]) -> int:
    out = 0
    k = key
    while k:
        low = k & -k
        out |= 1 << perm[low.bit_length() - 1]
        k ^= low
    return out


def dihedral_class_key(t: Triangulation) -> tuple[int, int]:
    """Canonical key of t under the 2n polygon relabelings."""
    key = t.key()
    best = min(_permute_key(key, p) for p in dihedral_bit_perms(t.n))
    return (t.n, best)


def relabel(t: Triangulation, mapping: Sequence[int]) -> Triangulation:
    """Apply a vertex relabeling; the mapping must preserve the cycle."""
    return Triangulation(t.n, [edge(mapping[a], mapping[b]) for a, b in t.interior])


def rotate(t: Triangulation, r: int) -> Triangulation:
    """Relabel v -> (v+r) mod n."""
    n = t.n
    return relabel(t, [(v + r) % n for v in range(n)])


def pair_dihedral_class(p: TriangulationPair) -> tuple[int, int, int]:
    """Canonical representative of the pair under relabelings and member swap.

    Equal keys exactly when one pair maps onto the other by a rotation or
    reflection of the polygon applied to both members at once, in either
    member order.
    """
    k1, k2 = p.first.key(), p.second.key()
    best = None
    for perm in dihedral_bit_perms(p.n):
        a = _permute_key(k1, perm)
        b = _permute_key(k2, perm)
        cand = (a, b) if a <= b else (b, a)
        if best is None or cand < best:
            best = cand
    return (p.n, best[0], best[1])


# -- constructions ---------------------------------------------------------


def fan(n: int, x: int) -> Triangulation:
    """Triangulation whose interior edges all contain x."""
    if n < 3:
        raise SizeError(f"polygon needs at least 3 vertices, got {n}")
    x = norm_vertex(x, n)
    interior = [edge(x, (x + k) % n) for k in range(2, n - 1)]
    return Triangulation(n, interior)


@lru_cache(maxsize=None)
def catalan(k: int) -> int:
    if k <= 1:
        return 1
    return sum(catalan(i) * catalan(k - 1 - i) for i in range(k))


def triangulation_count(n: int) -> int:
    """Number of triangulations of the n-gon."""
    return catalan(n - 2)


def uniform_random(n: int, seed: int) -> Triangulation:
    """Uniform triangulation of the n-gon, deterministic in (n, seed).

    Samples the apex of the triangle over each sub-polygon's base chord with
    exact Catalan weights, so every one of the catalan(n-2) triangulations
    has equal probability.
    """
    if n < 3:
        raise SizeError(f"polygon needs at least 3 vertices, got {n}")
    rng = random.Random(seed)
    interior: list[Edge] = []

    def sample(i: int, j: int) -> None:
        # vertices i..j in convex position, chord (i, j) as the base
        if j - i < 2:
            return
        total = catalan(j - i - 1)
        r = rng.randrange(total)
        acc = 0
        for k in range(i + 1, j):
            w = catalan(k - i - 1) * catalan(j - k - 1)
            acc += w
            if r < acc:
                break
        if k > i + 1:
            interior.append((i, k))
        if j > k + 1:
            interior.append((k, j))
        sample(i, k)
        sample(k, j)

    sample(0, n - 1)
    return Triangulation(n, interior)


def validate(t: Triangulation) -> None:
    """Re-run the construction invariants; raises on violation."""
    Triangulation(t.n, t.interior)


def all_interior_flips(t: Triangulation) -> Iterator[tuple[Edge, Triangulation, Edge]]:
    for e in sorted(t.interior):
        res, intro = flip(t, e)
        yield e, res, intro
