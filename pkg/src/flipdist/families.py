"""Named triangulation families and their structure predicates.

The base object is a zigzag whose interior edges snake across the polygon
starting at vertex 2; all other families arise from it by vertex deletions,
flips and edge removals, followed by fixed clockwise relabelings so that
downstream code sees the exact labels the constructions are stated in.
"""

from __future__ import annotations

from dataclasses import dataclass

from .deletion import delete_many, shifted_label
from .errors import InvalidInputError, SizeError
from .polygon import (
    Triangulation,
    TriangulationPair,
    edge,
    flip,
    is_boundary,
    relabel,
    rotate,
)

FAMILY_TAGS = ("Z", "A", "B", "C", "D")


@dataclass(frozen=True)
class FamilyId:
    tag: str
    n: int

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise InvalidInputError(f"unknown family tag {self.tag!r}")
        minimum = 7 if self.tag in ("B", "C") else 3
        if self.n < minimum:
            raise SizeError(f"family {self.tag} needs n >= {minimum}, got {self.n}")


def zigzag(n: int) -> Triangulation:
    """Interior edges along the walk 2, 4, 1, 5, 0, 6, n-1, 7, n-2, 8, ...

    The walk alternates the run descending from n-1 with the run ascending
    from 6 until n-3 edges exist; labels are taken mod n so small polygons
    truncate the prefix.
    """
    if n < 3:
        raise SizeError(f"polygon needs at least 3 vertices, got {n}")
    walk = [2, 4, 1, 5, 0, 6]
    lo, hi = 7, n - 1
    while len(walk) < n - 1:
        walk.append(hi)
        walk.append(lo)
        lo, hi = lo + 1, hi - 1
    interior = [edge(walk[i] % n, walk[i + 1] % n) for i in range(n - 3)]
    return Triangulation(n, interior)


def _bar(k: int, n: int) -> int:
    return (k + n // 2) % n


def _rotate_so(t: Triangulation, current: int, target: int) -> Triangulation:
    return rotate(t, (target - current) % t.n)


def family_a(n: int) -> TriangulationPair:
    """The asymmetric pair: a zigzag with combs at both ends, two ways."""
    FamilyId("A", n)
    m = n + 4
    z = zigzag(m)
    low = [0, 1, _bar(0, m), _bar(1, m)]
    minus = _rotate_so(delete_many(z, low), shifted_label(2, low), 2)
    high = [4 % m, 5 % m, _bar(4, m), _bar(5, m)]
    plus = _rotate_so(delete_many(z, high), shifted_label(2, high), 1)
    return TriangulationPair(minus, plus)


_B_EDGE_FLIPS = [edge(2, 5), edge(2, 4), edge(2, 6)]


def _strip_vertex_two(t: Triangulation) -> Triangulation:
    """Drop vertex 2 (no interior edges there) and relabel so 3 keeps its label."""
    n = t.n
    if any(2 in e for e in t.interior):
        raise InvalidInputError("vertex 2 still carries interior edges")
    m = n - 1
    mapping = {}
    for v in range(n):
        if v == 2:
            continue
        if v >= 3:
            mapping[v] = v if v <= n - 2 else 0
        else:
            mapping[v] = v + 1
    interior = []
    for a, b in t.interior:
        e = edge(mapping[a], mapping[b])
        if not is_boundary(m, e):
            interior.append(e)
    return Triangulation(m, interior)


def family_b(n: int) -> TriangulationPair:
    """Pair built from the next asymmetric pair by three flips and a vertex drop."""
    FamilyId("B", n)
    base = family_a(n + 1)
    t = base.first
    for e in _B_EDGE_FLIPS:
        t, _ = flip(t, e)
    return TriangulationPair(_strip_vertex_two(t), _strip_vertex_two(base.second))


def family_c(n: int) -> TriangulationPair:
    """Variant of family_b with the {4,6} diagonal flipped in the first member."""
    FamilyId("C", n)
    b = family_b(n)
    cminus, _ = flip(b.first, edge(4, 6))
    return TriangulationPair(cminus, b.second)


def family_d(n: int) -> TriangulationPair:
    """Symmetric single-comb zigzag pair."""
    FamilyId("D", n)
    minus = _rotate_so(delete_many(zigzag(n + 2), [0, 1]), shifted_label(2, [0, 1]), n - 1)
    dropped = [4 % (n + 1)]
    plus = _rotate_so(delete_many(zigzag(n + 1), dropped), shifted_label(2, dropped), n - 2)
    return TriangulationPair(minus, plus)


def family_pair(tag: str, n: int) -> TriangulationPair:
    tag = tag.upper()
    FamilyId(tag, n)
    if tag == "Z":
        z = zigzag(n)
        return TriangulationPair(z, z)
    if tag == "A":
        return family_a(n)
    if tag == "B":
        return family_b(n)
    if tag == "C":
        return family_c(n)
    return family_d(n)


def family_member(tag: str, sign: str, n: int) -> Triangulation:
    """Member lookup; '-' is the first member, '+' the second."""
    pair = family_pair(tag, n)
    if sign in ("", "-"):
        return pair.first
    if sign == "+":
        return pair.second
    raise InvalidInputError(f"member must be '-' or '+', got {sign!r}")


# -- structure predicates ----------------------------------------------------


def comb_teeth(t: Triangulation, v: int) -> int:
    """Number of interior edges at v; a comb needs at least 3."""
    return t.degree(v)


def _turn_clockwise(n: int, p: int, q: int, r: int) -> bool:
    return (q - p) % n + (r - q) % n < n


def is_zigzag(t: Triangulation) -> bool:
    """Interior edges form a simple path whose turns alternate orientation."""
    n = t.n
    if len(t.interior) <= 1:
        return True
    deg: dict[int, list[int]] = {}
    for a, b in t.interior:
        deg.setdefault(a, []).append(b)
        deg.setdefault(b, []).append(a)
    ends = [v for v, nb in deg.items() if len(nb) == 1]
    if len(ends) != 2 or any(len(nb) > 2 for nb in deg.values()):
        return False
    walk = [min(ends)]
    prev = None
    while True:
        nxt = [w for w in deg[walk[-1]] if w != prev]
        if not nxt:
            break
        prev = walk[-1]
        walk.append(nxt[0])
    if len(walk) != len(t.interior) + 1:
        return False
    turns = [
        _turn_clockwise(n, walk[i], walk[i + 1], walk[i + 2])
        for i in range(len(walk) - 2)
    ]
    return all(turns[i] != turns[i + 1] for i in range(len(turns) - 1))
