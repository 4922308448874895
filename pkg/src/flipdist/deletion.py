"""Vertex deletion, flip incidence, path projection and the theta statistic.

Deleting vertex a displaces it onto its clockwise successor b = a+1: the
boundary edge {a,b} disappears, a is substituted by b in every other edge,
and the duplicated pair {a,c},{b,c} merges. The result is a triangulation
of the (n-1)-gon, relabeled immediately so labels above a drop by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInputError, ResourceBudgetError, SizeError
from .polygon import (
    Edge,
    FlipPath,
    Triangulation,
    TriangulationPair,
    boundary_edges,
    edge,
    is_boundary,
    link,
    norm_vertex,
)


@dataclass(frozen=True)
class DeletionRecord:
    deleted: int
    successor: int
    merged_link: int


def delete_vertex(t: Triangulation, a: int) -> tuple[Triangulation, DeletionRecord]:
    """T with vertex a deleted, on the (n-1)-gon with labels > a shifted down."""
    n = t.n
    if n < 4:
        raise SizeError("cannot delete a vertex from a triangle")
    a = norm_vertex(a, n)
    b = (a + 1) % n
    c = link(t, edge(a, b))

    full = set(t.interior) | set(boundary_edges(n))
    full.discard(edge(a, b))
    substituted = set()
    for u, v in full:
        if u == a:
            u = b
        if v == a:
            v = b
        substituted.add(edge(u, v))

    m = n - 1
    relabeled = set()
    for u, v in substituted:
        relabeled.add(edge(u - 1 if u > a else u, v - 1 if v > a else v))
    interior = [e for e in relabeled if not is_boundary(m, e)]
    result = Triangulation(m, interior)
    return result, DeletionRecord(deleted=a, successor=b, merged_link=c)


def shifted_label(v: int, deleted: Sequence[int]) -> int:
    """Label of original vertex v after deleting the listed original vertices."""
    if v in deleted:
        raise InvalidInputError(f"vertex {v} was deleted")
    return v - sum(1 for d in deleted if d < v)


def delete_many(t: Triangulation, vs: Sequence[int]) -> Triangulation:
    """Sequential deletion; vertex ids are in the original labeling of t."""
    seen: list[int] = []
    current = t
    for v in vs:
        v = norm_vertex(v, t.n)
        current, _ = delete_vertex(current, shifted_label(v, seen))
        seen.append(v)
    return current


def delete_seq(p: TriangulationPair, vs: Sequence[int]) -> TriangulationPair:
    """Memberwise sequential deletion in the original labeling of p."""
    return TriangulationPair(delete_many(p.first, vs), delete_many(p.second, vs))


# -- flip incidence --------------------------------------------------------


def _single_flip(t_prev: Triangulation, t_next: Triangulation) -> tuple[Edge, Edge]:
    if t_prev.n != t_next.n:
        raise InvalidInputError("triangulations live on different polygons")
    removed = t_prev.interior - t_next.interior
    introduced = t_next.interior - t_prev.interior
    if len(removed) != 1 or len(introduced) != 1:
        raise InvalidInputError("triangulations are not one flip apart")
    return next(iter(removed)), next(iter(introduced))


def is_incident(t_prev: Triangulation, t_next: Triangulation, e: Edge) -> bool:
    """True iff the flip from t_prev to t_next changes the link of boundary e.

    The link changes exactly when both ends of e are corners of the flip
    quadrilateral, so no link recomputation is needed.
    """
    a, b = edge(*e)
    if not is_boundary(t_prev.n, (a, b)):
        raise InvalidInputError(f"({a},{b}) is not a boundary edge")
    removed, introduced = _single_flip(t_prev, t_next)
    corners = set(removed) | set(introduced)
    return a in corners and b in corners


def incident_flip_count(p: FlipPath, a: int) -> int:
    """Flips along p incident to the boundary edge {a, a+1}."""
    n = p.start.n
    e = edge(a % n, (a + 1) % n)
    count = 0
    for removed, introduced in p.flips:
        corners = set(removed) | set(introduced)
        if e[0] in corners and e[1] in corners:
            count += 1
    return count


def project_path(p: FlipPath, a: int) -> FlipPath:
    """Delete a from every step of p and drop the stalled transitions.

    The result connects the deletions of p's endpoints and is shorter than p
    by exactly the number of flips incident to {a, a+1}.
    """
    n = p.start.n
    if n < 4:
        raise SizeError("cannot project a path on triangles")
    a = norm_vertex(a, n)
    steps = [delete_vertex(t, a)[0] for t in p.steps]
    out_steps = [steps[0]]
    out_flips: list[tuple[Edge, Edge]] = []
    for t in steps[1:]:
        if t == out_steps[-1]:
            continue
        removed, introduced = _single_flip(out_steps[-1], t)
        out_steps.append(t)
        out_flips.append((removed, introduced))
    return FlipPath(tuple(out_steps), tuple(out_flips))


# -- theta: maximal incident flips over geodesics --------------------------


def theta(p: TriangulationPair, a: int, budget: int | None = None) -> int:
    """Maximum number of flips incident to {a, a+1} over all geodesics of p.

    Computed exactly as a longest path in the geodesic DAG with arc weight 1
    on incident flips; raises ResourceBudgetError rather than approximating.
    """
    from .flipgraph import geodesic_dag

    dag = geodesic_dag(p.first, p.second, budget=budget)
    return dag.max_incident_flips(a)


def theta_all(p: TriangulationPair, budget: int | None = None) -> list[int]:
    """theta(p, a) for every vertex a, sharing one DAG construction."""
    from .flipgraph import geodesic_dag

    dag = geodesic_dag(p.first, p.second, budget=budget)
    return [dag.max_incident_flips(a) for a in range(p.n)]


# -- quotient of the flip graph by the deletion equivalence ----------------


@dataclass(frozen=True)
class Graph:
    """Adjacency-set graph over opaque hashable node keys."""

    nodes: frozenset
    adj: dict

    def edge_count(self) -> int:
        return sum(len(v) for v in self.adj.values()) // 2

    def degrees(self) -> list[int]:
        return sorted(len(self.adj[u]) for u in self.nodes)

    def export_adjacency(self) -> str:
        lines = []
        for u in sorted(self.nodes):
            lines.append(f"{u:x}: " + ",".join(f"{v:x}" for v in sorted(self.adj[u])))
        return "\n".join(lines) + "\n"


def flip_graph(n: int, budget: int | None = None) -> Graph:
    """The full flip graph of the n-gon over bitset keys."""
    from .flipgraph import adjacency_lists, enumerate_keys

    keys = enumerate_keys(n, budget=budget)
    adj = {k: set(adjacency_lists(n, k)) for k in keys}
    return Graph(frozenset(keys), adj)


def quotient_graph(n: int, a: int, budget: int | None = None) -> Graph:
    """Flip graph of the n-gon with same-deletion classes contracted.

    Nodes are keyed by the (n-1)-gon triangulation each class deletes to,
    so the contraction is directly comparable with flip_graph(n-1).
    """
    from .flipgraph import enumerate_keys

    if n < 4:
        raise SizeError("quotient needs at least a square")
    a = norm_vertex(a, n)
    keys = enumerate_keys(n, budget=budget)
    cls: dict[int, int] = {}
    for k in keys:
        t = Triangulation.from_key(n, k)
        cls[k] = delete_vertex(t, a)[0].key()
    adj: dict[int, set] = {c: set() for c in cls.values()}
    from .flipgraph import adjacency_lists

    for k in keys:
        cu = cls[k]
        for nb in adjacency_lists(n, k):
            cv = cls[nb]
            if cu != cv:
                adj[cu].add(cv)
                adj[cv].add(cu)
    return Graph(frozenset(adj), adj)
