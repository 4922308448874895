"""Exhaustive flip-graph machinery for small polygons.

Triangulations are keyed by a bitset over the n(n-3)/2 diagonals in
lexicographic order. Enumeration, BFS distances and the diameter live here;
budgets are explicit and a budget miss raises instead of degrading.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidInputError, ResourceBudgetError
from .polygon import (
    FlipPath,
    Triangulation,
    diagonal_index,
    diagonals,
    dihedral_bit_perms,
    edge,
    triangulation_count,
    _permute_key,
)


def state_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("FLIPDIST_STATE_BUDGET", 1_000_000))


def dag_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("FLIPDIST_DAG_BUDGET", 250_000))


def _require_states(n: int, budget: int | None) -> int:
    count = triangulation_count(n)
    limit = state_budget(budget)
    if count > limit:
        raise ResourceBudgetError(
            f"{count} triangulations for n={n} exceed the state budget {limit}"
        )
    return count


@lru_cache(maxsize=None)
def _boundary_masks(n: int) -> tuple[int, ...]:
    masks = []
    for v in range(n):
        masks.append((1 << ((v + 1) % n)) | (1 << ((v - 1) % n)))
    return tuple(masks)


def _vertex_masks(n: int, key: int) -> list[int]:
    """Per-vertex neighbor bitmasks for the triangulation with this key."""
    adj = list(_boundary_masks(n))
    diags = diagonals(n)
    k = key
    while k:
        low = k & -k
        a, b = diags[low.bit_length() - 1]
        adj[a] |= 1 << b
        adj[b] |= 1 << a
        k ^= low
    return adj


def flip_on_key(n: int, key: int, diag_idx: int) -> tuple[int, int]:
    """Flip one diagonal on a bitset key; returns (new key, introduced index)."""
    diags = diagonals(n)
    idx = diagonal_index(n)
    adj = _vertex_masks(n, key)
    a, b = diags[diag_idx]
    common = adj[a] & adj[b]
    low = common & -common
    c1 = low.bit_length() - 1
    c2 = (common ^ low).bit_length() - 1
    j = idx[edge(c1, c2)]
    return (key ^ (1 << diag_idx)) | (1 << j), j


def adjacency_lists(n: int, key: int) -> list[int]:
    """Keys of the n-3 triangulations one flip away."""
    diags = diagonals(n)
    idx = diagonal_index(n)
    adj = _vertex_masks(n, key)
    out = []
    k = key
    while k:
        low = k & -k
        i = low.bit_length() - 1
        a, b = diags[i]
        common = adj[a] & adj[b]
        lowc = common & -common
        c1 = lowc.bit_length() - 1
        c2 = (common ^ lowc).bit_length() - 1
        out.append((key ^ low) | (1 << idx[edge(c1, c2)]))
        k ^= low
    return out


def flip_arc_corners(n: int, u: int, v: int) -> tuple[int, int, int, int]:
    """Corners of the quadrilateral of the flip between adjacent keys u, v."""
    diags = diagonals(n)
    removed = u & ~v
    introduced = v & ~u
    if removed.bit_count() != 1 or introduced.bit_count() != 1:
        raise InvalidInputError("keys are not one flip apart")
    a, b = diags[removed.bit_length() - 1]
    c, d = diags[introduced.bit_length() - 1]
    return a, b, c, d


# -- enumeration -----------------------------------------------------------

_ENUM_CACHE: dict[int, list[int]] = {}


def enumerate_keys(n: int, budget: int | None = None) -> list[int]:
    """Sorted bitset keys of every triangulation of the n-gon."""
    _require_states(n, budget)
    cached = _ENUM_CACHE.get(n)
    if cached is not None:
        return cached
    idx = diagonal_index(n)

    def chord_bit(a: int, b: int) -> int:
        e = edge(a, b)
        return 1 << idx[e] if e in idx else 0

    memo: dict[tuple[int, int], list[int]] = {}

    def span(i: int, j: int) -> list[int]:
        # triangulations of the sub-polygon i..j, base chord (i, j) excluded
        if j - i < 2:
            return [0]
        got = memo.get((i, j))
        if got is not None:
            return got
        out = []
        for k in range(i + 1, j):
            lbit = chord_bit(i, k) if k > i + 1 else 0
            rbit = chord_bit(k, j) if j > k + 1 else 0
            base = lbit | rbit
            for left in span(i, k):
                lb = left | base
                for right in span(k, j):
                    out.append(lb | right)
        memo[(i, j)] = out
        return out

    keys = sorted(span(0, n - 1))
    _ENUM_CACHE[n] = keys
    return keys


def enumerate_triangulations(n: int, budget: int | None = None) -> list[Triangulation]:
    """Every triangulation of the n-gon, each exactly once."""
    return [Triangulation.from_key(n, k) for k in enumerate_keys(n, budget)]


# -- BFS tables ------------------------------------------------------------


class _Tables:
    __slots__ = ("n", "keys", "index", "nbr")

    def __init__(self, n: int, budget: int | None):
        keys = enumerate_keys(n, budget)
        index = {k: i for i, k in enumerate(keys)}
        deg = max(n - 3, 1)
        nbr = np.empty((len(keys), deg), dtype=np.int32)
        if n == 3:
            nbr[:] = 0
        else:
            for i, k in enumerate(keys):
                nbr[i] = [index[m] for m in adjacency_lists(n, k)]
        self.n = n
        self.keys = keys
        self.index = index
        self.nbr = nbr


_TABLES: dict[int, _Tables] = {}


def tables(n: int, budget: int | None = None) -> _Tables:
    t = _TABLES.get(n)
    if t is None:
        t = _Tables(n, budget)
        _TABLES[n] = t
    return t


def _bfs_row(tab: _Tables, src: int) -> np.ndarray:
    dist = np.full(len(tab.keys), 255, dtype=np.uint8)
    dist[src] = 0
    frontier = np.array([src], dtype=np.int32)
    d = 0
    if tab.n == 3:
        return dist
    while frontier.size:
        cand = tab.nbr[frontier].reshape(-1)
        cand = cand[dist[cand] == 255]
        if cand.size == 0:
            break
        cand = np.unique(cand)
        d += 1
        dist[cand] = d
        frontier = cand
    return dist


def bfs_distances(n: int, source: Triangulation, budget: int | None = None) -> dict[int, int]:
    """Exact flip distance from source to every triangulation, keyed by bitset."""
    if source.n != n:
        raise InvalidInputError("source polygon size mismatch")
    tab = tables(n, budget)
    row = _bfs_row(tab, tab.index[source.key()])
    return {k: int(row[i]) for i, k in enumerate(tab.keys)}


def pair_distance(u: Triangulation, v: Triangulation, budget: int | None = None) -> int:
    """BFS-oracle flip distance, for cross-checking the search engine."""
    tab = tables(u.n, budget)
    row = _bfs_row(tab, tab.index[u.key()])
    return int(row[tab.index[v.key()]])


@lru_cache(maxsize=8)
def distance_matrix(n: int) -> np.ndarray:
    """All-pairs flip distances; small n only (memory is count squared)."""
    tab = tables(n)
    count = len(tab.keys)
    if count * count > 8_000_000:
        raise ResourceBudgetError(f"distance matrix for n={n} would need {count}^2 bytes")
    out = np.empty((count, count), dtype=np.uint8)
    for i in range(count):
        out[i] = _bfs_row(tab, i)
    return out


# -- diameter --------------------------------------------------------------


@dataclass(frozen=True)
class DiameterRow:
    n: int
    count: int
    diameter: int

    @property
    def dim(self) -> int:
        return self.n - 3

    @property
    def bound(self) -> int:
        return 2 * self.dim - 4


def _class_representatives(tab: _Tables) -> list[int]:
    """Indices of triangulations that are minimal in their dihedral class."""
    perms = dihedral_bit_perms(tab.n)
    reps = []
    for i, k in enumerate(tab.keys):
        if all(_permute_key(k, p) >= k for p in perms):
            reps.append(i)
    return reps


def diameter(n: int, budget: int | None = None, threads: int = 1) -> DiameterRow:
    """Largest pairwise flip distance over the n-gon's flip graph.

    Eccentricity is constant on dihedral classes, so BFS runs only from one
    representative per class.
    """
    tab = tables(n, budget)
    count = len(tab.keys)
    if n <= 4:
        return DiameterRow(n, count, 0 if n == 3 else 1)
    reps = _class_representatives(tab)
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [reps[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            best = max(pool.map(_ecc_chunk, [(n, c) for c in chunks]))
    else:
        best = _ecc_chunk((n, reps))
    return DiameterRow(n, count, best)


def _ecc_chunk(arg: tuple[int, list[int]]) -> int:
    n, rep_indices = arg
    tab = tables(n)
    best = 0
    for i in rep_indices:
        ecc = int(_bfs_row(tab, i).max())
        if ecc > best:
            best = ecc
    return best


def diameter_table(max_n: int, budget: int | None = None, threads: int = 1) -> list[DiameterRow]:
    return [diameter(n, budget, threads) for n in range(3, max_n + 1)]


# -- geodesic DAG ----------------------------------------------------------


@dataclass(frozen=True)
class GeodesicDag:
    """All triangulations lying on some geodesic between a pair.

    A key belongs to layer i exactly when it is at distance i from the first
    endpoint and distance(pair) - i from the second.
    """

    n: int
    endpoints: tuple[int, int]
    distance: int
    layers: tuple[tuple[int, ...], ...]
    arcs: dict[int, tuple[int, ...]]

    def node_count(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def nodes(self) -> list[int]:
        return [k for layer in self.layers for k in layer]

    def arc_count(self) -> int:
        return sum(len(v) for v in self.arcs.values())

    def max_incident_flips(self, a: int) -> int:
        """Longest path weight where arcs incident to {a, a+1} count one."""
        a %= self.n
        b = (a + 1) % self.n
        best = {self.endpoints[0]: 0}
        for layer in self.layers[:-1]:
            for u in layer:
                bu = best[u]
                for v in self.arcs.get(u, ()):
                    ca, cb, cc, cd = flip_arc_corners(self.n, u, v)
                    corners = {ca, cb, cc, cd}
                    w = 1 if a in corners and b in corners else 0
                    if best.get(v, -1) < bu + w:
                        best[v] = bu + w
        return best[self.endpoints[1]]

    def geodesics(self):
        """Yield every geodesic as a key sequence; exponential, tests only."""

        def walk(u, acc):
            if u == self.endpoints[1]:
                yield tuple(acc)
                return
            for v in self.arcs.get(u, ()):
                acc.append(v)
                yield from walk(v, acc)
                acc.pop()

        yield from walk(self.endpoints[0], [self.endpoints[0]])

    def export_adjacency(self) -> str:
        lines = []
        for layer in self.layers:
            for u in layer:
                lines.append(f"{u:x}: " + ",".join(f"{v:x}" for v in self.arcs.get(u, ())))
        return "\n".join(lines) + "\n"


def _restricted_ball(n: int, start: int, required: int, max_depth: int,
                     counter: list[int], limit: int) -> dict[int, int]:
    dist = {start: 0}
    frontier = [start]
    d = 0
    while frontier and d < max_depth:
        d += 1
        nxt = []
        for u in frontier:
            for v in adjacency_lists(n, u):
                if v & required != required or v in dist:
                    continue
                dist[v] = d
                nxt.append(v)
        counter[0] += len(nxt)
        if counter[0] > limit:
            raise ResourceBudgetError(
                f"geodesic DAG exceeded the state budget {limit}"
            )
        frontier = nxt
    return dist


def geodesic_dag(u: Triangulation, v: Triangulation, budget: int | None = None) -> GeodesicDag:
    """Layered DAG of all triangulations on some geodesic from u to v.

    States are pruned to supersets of the shared interior edges: every
    geodesic keeps common edges, so no node of the DAG is lost.
    """
    if u.n != v.n:
        raise InvalidInputError("pair members live on different polygons")
    n = u.n
    uk, vk = u.key(), v.key()
    limit = dag_budget(budget)
    if uk == vk:
        return GeodesicDag(n, (uk, vk), 0, ((uk,),), {})
    required = uk & vk
    counter = [0]

    # forward sweep until v appears, one full level at a time
    dist_f = {uk: 0}
    frontier = [uk]
    d = 0
    found = None
    while frontier and found is None:
        d += 1
        nxt = []
        for x in frontier:
            for y in adjacency_lists(n, x):
                if y & required != required or y in dist_f:
                    continue
                dist_f[y] = d
                nxt.append(y)
        counter[0] += len(nxt)
        if counter[0] > limit:
            raise ResourceBudgetError(f"geodesic DAG exceeded the state budget {limit}")
        if vk in dist_f:
            found = d
        frontier = nxt
    if found is None:
        raise InvalidInputError("flip graph is connected; unreachable pair means a bug")
    total = found

    dist_b = _restricted_ball(n, vk, required, total, counter, limit)

    layers: list[list[int]] = [[] for _ in range(total + 1)]
    on_dag = set()
    for k, df in dist_f.items():
        db = dist_b.get(k)
        if db is not None and df + db == total:
            layers[df].append(k)
            on_dag.add(k)
    for layer in layers:
        layer.sort()
    arcs: dict[int, tuple[int, ...]] = {}
    for i, layer in enumerate(layers[:-1]):
        for x in layer:
            nxt = tuple(
                sorted(
                    y
                    for y in adjacency_lists(n, x)
                    if y in on_dag and dist_f.get(y) == i + 1
                )
            )
            if nxt:
                arcs[x] = nxt
    return GeodesicDag(n, (uk, vk), total, tuple(tuple(l) for l in layers), arcs)


def check_prefix_theorem(u: Triangulation, v: Triangulation, prefix: FlipPath,
                         budget: int | None = None) -> bool:
    """Prefix-prescription check on geodesics from u to v.

    Returns True when some triangulation on a geodesic contains every edge
    introduced along the prefix and the distance identity
    d(prefix end, v) = d(u, v) - len(prefix) holds; returns False when no
    such triangulation exists. A hypothesis that holds while the identity
    fails raises AssertionError, since that would refute the theorem.
    """
    if prefix.start != u:
        raise InvalidInputError("prefix must start at u")
    if len(prefix) == 0:
        return True
    idx = diagonal_index(u.n)
    mask = 0
    for _, intro in prefix.flips:
        mask |= 1 << idx[intro]
    dag = geodesic_dag(u, v, budget)
    if not any(k & mask == mask for k in dag.nodes()):
        return False
    d_end = pair_distance(prefix.end, v)
    expected = dag.distance - len(prefix)
    assert d_end == expected, (
        f"prefix of length {len(prefix)} left distance {d_end}, expected {expected}"
    )
    return True


def clear_caches() -> None:
    """Drop enumeration and table caches (tests and memory control)."""
    _ENUM_CACHE.clear()
    _TABLES.clear()
    distance_matrix.cache_clear()
