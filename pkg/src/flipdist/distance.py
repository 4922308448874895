"""Scalable exact single-pair flip distance.

Pipeline: split the polygon along interior edges the two triangulations
share (geodesics never touch them), apply forced flips that immediately
introduce a target edge, then run a bidirectional level-synchronized search
with an admissible remaining-edge-count bound and a fan-route upper bound
for pruning. The answer is always exact; running out of budget raises with
the best bracket established so far.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import InvalidInputError, ResourceBudgetError
from .polygon import (
    Edge,
    FlipPath,
    Triangulation,
    TriangulationPair,
    apply_flips,
    diagonals,
    edge,
    fan,
    flip,
    flip_quad,
    is_boundary,
)
from .flipgraph import adjacency_lists


def search_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("FLIPDIST_SEARCH_BUDGET", 20_000_000))


@dataclass(frozen=True)
class SearchReport:
    distance: int
    expanded: int
    witness: FlipPath
    reductions: tuple[str, ...]


@dataclass(frozen=True)
class Cell:
    """A sub-polygon cut out by shared interior edges, with induced pair."""

    vertices: tuple[int, ...]
    pair: TriangulationPair

    def to_parent_edge(self, e: Edge) -> Edge:
        return edge(self.vertices[e[0]], self.vertices[e[1]])


def _induced(t: Triangulation, verts: tuple[int, ...]) -> Triangulation:
    inside = set(verts)
    pos = {v: i for i, v in enumerate(verts)}
    m = len(verts)
    interior = []
    for a, b in t.interior:
        if a in inside and b in inside:
            e = edge(pos[a], pos[b])
            if not is_boundary(m, e):
                interior.append(e)
    return Triangulation(m, interior)


def decompose_cells(u: Triangulation, v: Triangulation) -> list[Cell]:
    if u.n != v.n:
        raise InvalidInputError("pair members live on different polygons")
    common = sorted(u.interior & v.interior)

    def split(verts: tuple[int, ...], inner: list[Edge]) -> list[tuple[int, ...]]:
        if not inner:
            return [verts]
        a, b = inner[0]
        ia, ib = verts.index(a), verts.index(b)
        left = verts[ia : ib + 1]
        right = tuple(sorted(verts[ib:] + verts[: ia + 1]))
        lset, rest = set(left), inner[1:]
        linner = [e for e in rest if e[0] in lset and e[1] in lset]
        rinner = [e for e in rest if not (e[0] in lset and e[1] in lset)]
        return split(left, linner) + split(right, rinner)

    cells = []
    for verts in split(tuple(range(u.n)), common):
        if len(verts) < 3:
            continue
        cells.append(Cell(verts, TriangulationPair(_induced(u, verts), _induced(v, verts))))
    return cells


def decompose(u: Triangulation, v: Triangulation) -> list[TriangulationPair]:
    """Independent sub-pairs whose distances sum to the pair's distance."""
    return [c.pair for c in decompose_cells(u, v)]


def reduce_forced(u: Triangulation, v: Triangulation) -> tuple[Triangulation, int]:
    """Fixpoint of flips in u that introduce an edge of v; distance drops one per flip."""
    u2, flips = _forced_flips(u, v)
    return u2, len(flips)


def _forced_flips(u: Triangulation, v: Triangulation) -> tuple[Triangulation, list[Edge]]:
    current = u
    applied: list[Edge] = []
    progress = True
    while progress:
        progress = False
        for e in sorted(current.interior):
            c1, c2 = flip_quad(current, e)
            if edge(c1, c2) in v.interior:
                current, _ = flip(current, e)
                applied.append(e)
                progress = True
                break
    return current, applied


# -- fan routing upper bound ------------------------------------------------


def fan_upper_bound(u: Triangulation, v: Triangulation) -> int:
    """min over x of the flips needed to route u -> fan(x) -> v."""
    if u.n != v.n:
        raise InvalidInputError("pair members live on different polygons")
    n = u.n
    best = None
    for x in range(n):
        cost = (n - 3 - u.degree(x)) + (n - 3 - v.degree(x))
        if best is None or cost < best:
            best = cost
    return best


def path_to_fan(t: Triangulation, x: int) -> FlipPath:
    """Greedy flips, each raising the interior degree of x by one."""
    n = t.n
    x %= n
    target = fan(n, x)
    edges: list[Edge] = []
    current = t
    while current != target:
        for e in sorted(current.interior):
            if x in e:
                continue
            c1, c2 = flip_quad(current, e)
            if x == c1 or x == c2:
                current, _ = flip(current, e)
                edges.append(e)
                break
        else:
            raise InvalidInputError("no degree-raising flip found; invalid state")
    return apply_flips(t, edges)


def fan_route(u: Triangulation, v: Triangulation) -> list[Edge]:
    """Witness flip sequence realizing fan_upper_bound(u, v)."""
    n = u.n
    best_x = min(
        range(n), key=lambda x: (2 * (n - 3) - u.degree(x) - v.degree(x), x)
    )
    first = path_to_fan(u, best_x)
    second = path_to_fan(v, best_x)
    back = [intro for _, intro in reversed(second.flips)]
    return [rem for rem, _ in first.flips] + back


# -- bidirectional search ---------------------------------------------------


def _step_edge(n: int, cur: int, nxt: int) -> Edge:
    bit = cur & ~nxt
    return diagonals(n)[bit.bit_length() - 1]


def _bidi_search(u: Triangulation, v: Triangulation, limit: int) -> tuple[int, list[Edge], int]:
    """Exact distance and witness flips between u and v on one component."""
    n = u.n
    uk, vk = u.key(), v.key()
    if uk == vk:
        return 0, [], 0
    ub = fan_upper_bound(u, v)
    lower_floor = (uk & ~vk).bit_count()

    dist_f: dict[int, int] = {uk: 0}
    dist_b: dict[int, int] = {vk: 0}
    parent_f: dict[int, int] = {}
    parent_b: dict[int, int] = {}
    frontier_f, frontier_b = [uk], [vk]
    df = db = 0
    best = ub + 1
    meet = None
    expanded = 0

    while df + db < best and frontier_f and frontier_b:
        if len(frontier_f) <= len(frontier_b):
            frontier, dist, parent = frontier_f, dist_f, parent_f
            other, depth, target = dist_b, df, vk
            forward = True
        else:
            frontier, dist, parent = frontier_b, dist_b, parent_b
            other, depth, target = dist_f, db, uk
            forward = False
        nxt = []
        for x in sorted(frontier):
            expanded += 1
            if expanded > limit:
                raise ResourceBudgetError(
                    f"search budget {limit} exhausted between depths {df} and {db}",
                    lower=max(lower_floor, df + db + 1),
                    upper=ub if meet is None else min(ub, best),
                )
            for y in adjacency_lists(n, x):
                if y in dist:
                    continue
                if depth + 1 + (y & ~target).bit_count() > ub:
                    continue
                dist[y] = depth + 1
                parent[y] = x
                nxt.append(y)
                dy = other.get(y)
                if dy is not None and depth + 1 + dy < best:
                    best = depth + 1 + dy
                    meet = y
        if forward:
            frontier_f, df = nxt, df + 1
        else:
            frontier_b, db = nxt, db + 1

    if meet is None:
        raise InvalidInputError("search ended without meeting; invalid input pair")

    chain: list[int] = []
    x = meet
    while x != uk:
        chain.append(x)
        x = parent_f[x]
    chain.append(uk)
    chain.reverse()
    x = meet
    while x != vk:
        x = parent_b[x]
        chain.append(x)
    edges = [_step_edge(n, chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    return best, edges, expanded


# -- full pipeline -----------------------------------------------------------


def _solve(u: Triangulation, v: Triangulation, limit: int, log: list[str],
           counters: list[int]) -> list[Edge]:
    """Flip edges transforming u into v along some geodesic."""
    if u == v:
        return []
    cells = decompose_cells(u, v)
    if len(cells) > 1 or cells[0].vertices != tuple(range(u.n)):
        sizes = ",".join(str(len(c.vertices)) for c in cells)
        log.append(f"split on {len(u.interior & v.interior)} shared edges into cells of size {sizes}")
        out: list[Edge] = []
        for cell in cells:
            sub = _solve(cell.pair.first, cell.pair.second, limit, log, counters)
            out.extend(cell.to_parent_edge(e) for e in sub)
        return out

    u2, forced_u = _forced_flips(u, v)
    if forced_u:
        log.append(f"forced {len(forced_u)} flips from the first endpoint")
        return forced_u + _solve(u2, v, limit, log, counters)
    v2, forced_v = _forced_flips(v, u)
    if forced_v:
        log.append(f"forced {len(forced_v)} flips from the second endpoint")
        mid = _solve(u, v2, limit, log, counters)
        tail_path = apply_flips(v, forced_v)
        tail = [intro for _, intro in reversed(tail_path.flips)]
        return mid + tail

    _, edges, expanded = _bidi_search(u, v, limit)
    counters[0] += expanded
    return edges


def flip_distance(u: Triangulation, v: Triangulation, budget: int | None = None) -> SearchReport:
    """Exact flip distance with a validated witness path."""
    if u.n != v.n:
        raise InvalidInputError("pair members live on different polygons")
    log: list[str] = []
    counters = [0]
    try:
        edges = _solve(u, v, search_budget(budget), log, counters)
    except ResourceBudgetError as err:
        lower = max(len(u.interior - v.interior), err.lower or 0)
        raise ResourceBudgetError(str(err), lower=lower, upper=fan_upper_bound(u, v)) from None
    witness = apply_flips(u, edges)
    if witness.end != v:
        raise AssertionError("witness replay did not reach the target")
    shared = u.interior & v.interior
    for step in witness.steps:
        if not shared <= step.interior:
            raise AssertionError("witness dropped a shared edge")
    return SearchReport(
        distance=len(witness),
        expanded=counters[0],
        witness=witness,
        reductions=tuple(log),
    )


def pair_flip_distance(p: TriangulationPair, budget: int | None = None) -> SearchReport:
    return flip_distance(p.first, p.second, budget)
