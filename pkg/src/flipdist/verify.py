"""One-shot verification harness.

Every numeric claim the package is built around is re-derived here at a
feasible scale and reported as a CheckResult. Results are order-stable by
name, failures are results rather than exceptions, and anything cut off by
a budget reports skipped instead of guessing.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from importlib import resources

from .deletion import delete_many, delete_seq, quotient_graph, flip_graph
from .distance import (
    decompose,
    fan_upper_bound,
    flip_distance,
    reduce_forced,
)
from .errors import ResourceBudgetError, SizeError
from .families import family_a, family_b, family_c, family_d, is_zigzag, zigzag, comb_teeth
from .flipgraph import (
    check_prefix_theorem,
    diameter,
    distance_matrix,
    flip_arc_corners,
    pair_distance,
    tables,
)
from .polygon import (
    Triangulation,
    TriangulationPair,
    apply_flips,
    crosses,
    diagonal_index,
    edge,
    flip,
    is_boundary,
    link,
    pair_dihedral_class,
    uniform_random,
    _permute_key,
    dihedral_bit_perms,
)

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_SKIP = "skipped"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    expected: str
    observed: str
    claim: str

    def as_dict(self) -> dict:
        return asdict(self)


def _result(name: str, ok: bool, expected, observed, claim: str) -> CheckResult:
    return CheckResult(name, STATUS_PASS if ok else STATUS_FAIL, str(expected), str(observed), claim)


def _skip(name: str, reason: str, claim: str) -> CheckResult:
    return CheckResult(name, STATUS_SKIP, "", reason, claim)


# -- small tables ------------------------------------------------------------

SMALL_A_DISTANCES = {3: 0, 4: 1, 5: 2, 6: 4, 7: 5, 8: 7}
DIAMETERS = {3: 0, 4: 1, 5: 2, 6: 4, 7: 5, 8: 7, 9: 9, 10: 11, 11: 12, 12: 15}
MISMATCH_DIMS = (6, 7, 9)


def check_small_tables(max_diameter_n: int = 12, stretch: bool = False) -> list[CheckResult]:
    out: list[CheckResult] = []
    for n, want in SMALL_A_DISTANCES.items():
        got = flip_distance(*_a(n)).distance
        out.append(_result(f"dist-A-{n:02d}", got == want, want, got,
                           f"asymmetric pair on {n} vertices has flip distance {want}"))
    for n in range(9, 13):
        want = 2 * n - 10
        got = flip_distance(*_a(n)).distance
        out.append(_result(f"dist-A-{n:02d}", got == want, want, got,
                           f"asymmetric pair on {n} vertices has flip distance 2n-10 = {want}"))

    for n in range(8, 12):
        bound = 2 * n - 11
        db = flip_distance(*_bc(n, "B")).distance
        dc = flip_distance(*_bc(n, "C")).distance
        ok = db >= bound and dc >= bound
        if n == 8:
            ok = ok and db == 5 and dc == 5
        out.append(_result(f"dist-BC-{n:02d}", ok, f">={bound}" + (" and ==5" if n == 8 else ""),
                           f"B:{db} C:{dc}",
                           f"auxiliary pairs on {n} vertices have flip distance at least 2n-11"))

    diams: dict[int, int] = {}
    for n in range(3, max_diameter_n + 1):
        want = DIAMETERS[n]
        row = diameter(n)
        diams[n] = row.diameter
        out.append(_result(f"diameter-{n:02d}", row.diameter == want, want, row.diameter,
                           f"flip-graph diameter of the {n}-gon is {want}"))

    for d in range(0, 10):
        n = d + 3
        if n > max_diameter_n:
            continue
        da = flip_distance(*_a(n)).distance
        diam = diams[n]
        want = diam - 1 if d in MISMATCH_DIMS else diam
        out.append(_result(
            f"mismatch-d{d}", da == want,
            f"diameter-1={want}" if d in MISMATCH_DIMS else f"diameter={want}", da,
            "the asymmetric pair attains the diameter exactly except in dimensions 6, 7 and 9"))

    for n in range(3, 14):
        got = flip_distance(*_d(n)).distance
        out.append(CheckResult(f"dist-D-{n:02d}", STATUS_PASS, "recorded", str(got),
                               f"exact flip distance of the symmetric single-comb pair on {n} vertices"))

    if stretch:
        for n, want in ((13, 16), (14, 18), (15, 20)):
            row = diameter(n)
            ok = row.diameter == want and row.diameter <= 2 * n - 10
            out.append(_result(f"diameter-{n:02d}", ok, want, row.diameter,
                               f"stretch: diameter of the {n}-gon equals 2(n-3)-4 and respects the 2n-10 cap"))
    else:
        for n in (13, 14, 15):
            out.append(_skip(f"diameter-{n:02d}", "stretch disabled",
                             f"stretch: diameter of the {n}-gon equals 2(n-3)-4"))
    return out


def _a(n: int):
    p = family_a(n)
    return p.first, p.second


def _bc(n: int, which: str):
    p = family_b(n) if which == "B" else family_c(n)
    return p.first, p.second


def _d(n: int):
    p = family_d(n)
    return p.first, p.second


# -- recursion and theta implications ----------------------------------------


def check_recursion(n_max: int = 14, stretch: bool = False) -> list[CheckResult]:
    out: list[CheckResult] = []
    delta = {n: flip_distance(*_a(n)).distance for n in range(3, n_max + 1)}

    for n in range(13, n_max + 1):
        rhs = min(delta[n - 1] + 2, delta[n - 2] + 4, delta[n - 5] + 10, delta[n - 6] + 12)
        out.append(_result(f"recursion-{n:02d}", delta[n] >= rhs, f">={rhs}", delta[n],
                           "the distance of the asymmetric pair dominates the recursive minimum"))
        want = 2 * n - 10
        out.append(_result(f"dist-A-{n:02d}", delta[n] == want, want, delta[n],
                           f"asymmetric pair on {n} vertices has flip distance 2n-10 = {want}"))

    from .deletion import theta

    def theta_or_none(pair, a):
        try:
            return theta(pair, a)
        except ResourceBudgetError:
            return None

    for n in range(4, n_max + 1):
        pa = family_a(n)
        th1 = theta_or_none(pa, 1)
        claim = "two flips at vertex 1 on some geodesic force a +2 step down one size"
        if th1 is None:
            out.append(_skip(f"step1-{n:02d}", "state budget", claim))
        elif th1 >= 2:
            ok = delta[n] >= delta[n - 1] + 2
            out.append(_result(f"step1-{n:02d}", ok, f">={delta[n-1]+2}", delta[n], claim))
        else:
            out.append(_skip(f"step1-{n:02d}", f"hypothesis not met (theta={th1})", claim))

        if n < 6:
            continue
        th3 = theta_or_none(pa, 3)
        claim = "three flips at vertex 3 on some geodesic force a +4 step down two sizes"
        if th3 is None:
            out.append(_skip(f"step2-{n:02d}", "state budget", claim))
        elif th3 >= 3:
            ok = delta[n] >= delta[n - 2] + 4
            out.append(_result(f"step2-{n:02d}", ok, f">={delta[n-2]+4}", delta[n], claim))
        else:
            out.append(_skip(f"step2-{n:02d}", f"hypothesis not met (theta={th3})", claim))

        if n < 8:
            continue
        claim = ("when both theta conditions fail, one auxiliary pair one size down "
                 "sits exactly 3 flips closer and keeps theta at vertex 3 small")
        if th1 is None or th3 is None:
            out.append(_skip(f"step3-{n:02d}", "state budget", claim))
        elif th1 <= 1 and th3 <= 2:
            db = flip_distance(*_bc(n - 1, "B")).distance
            dc = flip_distance(*_bc(n - 1, "C")).distance
            okb = db == delta[n] - 3 and (t := theta_or_none(family_b(n - 1), 3)) is not None and t <= 1
            okc = dc == delta[n] - 3 and (t := theta_or_none(family_c(n - 1), 3)) is not None and t <= 1
            out.append(_result(f"step3-{n:02d}", okb or okc, f"{delta[n]-3} with small theta",
                               f"B:{db} C:{dc}", claim))
        else:
            out.append(_skip(f"step3-{n:02d}", f"hypothesis not met (theta1={th1}, theta3={th3})", claim))

    for n in range(12, n_max):
        for which, drop, steps in (("B", 5, 9), ("C", 4, 7)):
            pair = family_b(n) if which == "B" else family_c(n)
            claim = f"auxiliary pair {which} reduces to the asymmetric pair {drop} sizes down plus {steps}"
            name = f"step{which}-{n:02d}"
            th = theta_or_none(pair, 3)
            if th is None:
                out.append(_skip(name, "state budget", claim))
            elif th <= 1:
                dp = flip_distance(pair.first, pair.second).distance
                ok = dp >= delta[n - drop] + steps
                out.append(_result(name, ok, f">={delta[n-drop]+steps}", dp, claim))
            else:
                out.append(_skip(name, f"hypothesis not met (theta={th})", claim))

    if stretch:
        for n in (15, 16):
            want = 2 * n - 10
            got = flip_distance(*_a(n)).distance
            out.append(_result(f"dist-A-{n:02d}", got == want, want, got,
                               f"stretch: asymmetric pair on {n} vertices has flip distance {want}"))
    else:
        for n in (15, 16):
            out.append(_skip(f"dist-A-{n:02d}", "stretch disabled",
                             f"stretch: asymmetric pair on {n} vertices has flip distance {2*n-10}"))
    return out


# -- 31-flip reduction witness ------------------------------------------------


def _load_reduction(which: str) -> list[tuple[int, int]]:
    text = resources.files("flipdist.data").joinpath(f"reduction31_{which}.json").read_text()
    return [tuple(e) for e in json.loads(text)["edges"]]


def _resolve_offsets(entries: list[tuple[int, int]], n: int):
    return [edge(p if p >= 0 else n + p, q if q >= 0 else n + q) for p, q in entries]


def _restrict(t: Triangulation, lo: int, hi: int) -> Triangulation:
    m = hi - lo + 1
    interior = []
    for a, b in t.interior:
        if lo <= a and b <= hi:
            e = edge(a - lo, b - lo)
            if not is_boundary(m, e):
                interior.append(e)
    return Triangulation(m, interior)


def prop11_witness(n: int) -> CheckResult:
    """Execute the 14+17 flip witness showing the symmetric pair reduces by 16 vertices in 31 flips."""
    claim = ("31 flips reduce the symmetric single-comb pair to the one 16 vertices smaller")
    if n < 20:
        raise SizeError(f"the reduction witness needs n >= 20, got {n}")
    pair = family_d(n)
    steps = []
    try:
        pu = apply_flips(pair.first, _resolve_offsets(_load_reduction("minus"), n))
        steps.append("14-flip side executed")
        pv = apply_flips(pair.second, _resolve_offsets(_load_reduction("plus"), n))
        steps.append("17-flip side executed")
    except Exception as err:  # noqa: BLE001 - failure is a result here
        return _result(f"reduction31-{n}", False, "all flips executable", f"{steps}; {err}", claim)
    shared7 = len(pu.steps[7].interior & pv.steps[7].interior)
    u14, v17 = pu.end, pv.end
    lo, hi = 8, n - 9
    inside_u = {e for e in u14.interior if lo <= e[0] and e[1] <= hi}
    inside_v = {e for e in v17.interior if lo <= e[0] and e[1] <= hi}
    removed_match = (u14.interior - inside_u) == (v17.interior - inside_v)
    iso = pair_dihedral_class(
        TriangulationPair(_restrict(u14, lo, hi), _restrict(v17, lo, hi))
    ) == pair_dihedral_class(family_d(n - 16))
    ok = shared7 == 7 and removed_match and iso
    observed = f"shared7={shared7} removed_match={removed_match} iso={iso}"
    return _result(f"reduction31-{n}", ok, "shared7=7 removed_match=True iso=True", observed, claim)


def check_reduction31(ns=(20, 21, 22)) -> list[CheckResult]:
    return [prop11_witness(n) for n in ns]


# -- property suite -----------------------------------------------------------


def _link_table(n: int, keys: list[int]) -> list[list[int]]:
    from .flipgraph import _vertex_masks

    out = []
    for k in keys:
        masks = _vertex_masks(n, k)
        row = []
        for a in range(n):
            b = (a + 1) % n
            common = masks[a] & masks[b] & ~(1 << a) & ~(1 << b)
            row.append((common & -common).bit_length() - 1)
        out.append(row)
    return out


def _incidence_masks(n: int, tab) -> list[list[int]]:
    out = []
    for i, k in enumerate(tab.keys):
        row = []
        for j in tab.nbr[i]:
            ca, cb, cc, cd = flip_arc_corners(n, k, tab.keys[j])
            corners = {ca, cb, cc, cd}
            mask = 0
            for a in range(n):
                if a in corners and (a + 1) % n in corners:
                    mask |= 1 << a
            row.append(mask)
        out.append(row)
    return out


def _delete_key_table(n: int, keys: list[int], target_index: dict[int, int]) -> list[list[int]]:
    out = []
    for k in keys:
        t = Triangulation.from_key(n, k)
        row = []
        for a in range(n):
            row.append(target_index[delete_many(t, [a]).key()])
        out.append(row)
    return out


_PERM_CACHE: dict[int, dict[int, tuple[int, ...]]] = {}


def _permuted_images(n: int, key: int) -> tuple[int, ...]:
    cache = _PERM_CACHE.setdefault(n, {})
    got = cache.get(key)
    if got is None:
        got = tuple(_permute_key(key, p) for p in dihedral_bit_perms(n))
        cache[key] = got
    return got


def _pair_class(n: int, k1: int, k2: int) -> tuple[int, int]:
    im1 = _permuted_images(n, k1)
    im2 = _permuted_images(n, k2)
    best = None
    for a, b in zip(im1, im2):
        cand = (a, b) if a <= b else (b, a)
        if best is None or cand < best:
            best = cand
    return best


def _theta_vector(n, tab, inc, row_u, row_v, iu, iv, total) -> list[int]:
    """Longest-path incident-flip counts for every vertex over the geodesic DAG."""
    on = [i for i in range(len(tab.keys)) if row_u[i] + row_v[i] == total]
    on.sort(key=lambda i: row_u[i])
    neg = -(10 ** 6)
    best = {i: [neg] * n for i in on}
    best[iu] = [0] * n
    on_set = set(on)
    for i in on:
        bi = best[i]
        li = row_u[i]
        for slot, j in enumerate(tab.nbr[i]):
            j = int(j)
            if j not in on_set or row_u[j] != li + 1:
                continue
            mask = inc[i][slot]
            bj = best[j]
            for a in range(n):
                cand = bi[a] + ((mask >> a) & 1)
                if cand > bj[a]:
                    bj[a] = cand
    return best[iv]


def property_suite(n_max: int = 10, seed: int = 20130617, exhaustive_n: int = 8,
                   samples: int = 500, engine_samples: int = 1000) -> list[CheckResult]:
    """Randomized and exhaustive property checks, deterministic under seed.

    Exhaustive sweeps run on one representative per relabeling class of each
    pair, which is sound because every asserted statement is invariant under
    relabeling both members simultaneously. The diameter table lives in the
    small-tables suite.
    """
    rng = random.Random(seed)
    sampled = tuple(n for n in (9, 10) if n <= n_max)
    out: list[CheckResult] = []

    out.append(_check_core_random(rng))
    out.append(_check_deletion_valid(rng))
    out.append(_check_projection_contract(rng, cases=10_000))
    out.append(_check_engine_small(tuple(range(4, exhaustive_n))))
    for n in range(6, exhaustive_n + 1):
        out.extend(_check_pair_sweep(n))
    out.extend(_check_pair_samples(rng, sampled, samples))
    out.append(_check_engine_sampled(rng, (9, 10, 11), engine_samples))
    for n in (7, 8, 9):
        out.append(_check_cor4(n))
    for n in sorted({7, min(8, exhaustive_n)}):
        out.append(_check_forced_and_decompose(n, rng))
    out.append(_check_prefix_exhaustive(7))
    out.append(_check_prefix_random(rng, (8, 9), 1000))
    out.extend(_check_quotients())
    out.extend(_check_family_structure())
    return out


def _check_engine_sampled(rng, ns, cases: int) -> CheckResult:
    from .flipgraph import _bfs_row

    bad = 0
    for n in ns:
        tab = tables(n)
        for _ in range(cases):
            u = uniform_random(n, rng.randrange(1 << 30))
            v = uniform_random(n, rng.randrange(1 << 30))
            row = _bfs_row(tab, tab.index[u.key()])
            if flip_distance(u, v).distance != int(row[tab.index[v.key()]]):
                bad += 1
    return _result("engine-oracle-sampled", bad == 0, "0 discrepancies",
                   f"{bad} discrepancies in {cases} pairs per size {ns}",
                   "the search engine agrees with BFS on sampled pairs at sizes beyond the sweep")


def _check_engine_small(ns) -> CheckResult:
    bad = 0
    checked = 0
    for n in ns:
        tab = tables(n)
        dm = distance_matrix(n)
        tris = [Triangulation.from_key(n, k) for k in tab.keys]
        for i, u in enumerate(tris):
            for j in range(i + 1, len(tris)):
                checked += 1
                if flip_distance(u, tris[j]).distance != int(dm[i][j]):
                    bad += 1
    return _result("engine-oracle-small", bad == 0, "0 discrepancies",
                   f"{bad} discrepancies in {checked} pairs",
                   "the search engine agrees with exhaustive BFS on every small pair")


def _check_core_random(rng) -> CheckResult:
    bad = 0
    trials = 0
    for _ in range(400):
        n = rng.randrange(4, 13)
        t = uniform_random(n, rng.randrange(1 << 30))
        trials += 1
        nbrs = set()
        for e in sorted(t.interior):
            t2, intro = flip(t, e)
            nbrs.add(t2.key())
            back, back_intro = flip(t2, intro)
            if back != t or back_intro != e:
                bad += 1
            if not crosses(n, e, intro):
                bad += 1
            if any(crosses(n, intro, f) for f in t2.interior if f != intro):
                bad += 1
        if len(nbrs) != n - 3:
            bad += 1
        e = rng.choice(sorted(t.interior)) if t.interior else None
        if e is not None and crosses(n, e, e):
            bad += 1
    return _result("core-random", bad == 0, "0 violations", f"{bad} violations in {trials} triangulations",
                   "flips are involutions of degree n-3 and exchange crossing diagonals")


def _check_deletion_valid(rng) -> CheckResult:
    bad = 0
    checked = 0
    for n in (5, 6, 7, 8):
        for k in tables(n).keys:
            t = Triangulation.from_key(n, k)
            for a in range(n):
                t2 = delete_many(t, [a])
                checked += 1
                if len(t2.interior) != len(t.interior) - 1:
                    bad += 1
    for _ in range(300):
        n = rng.randrange(9, 12)
        t = uniform_random(n, rng.randrange(1 << 30))
        a = rng.randrange(n)
        t2 = delete_many(t, [a])
        checked += 1
        if t2.n != n - 1:
            bad += 1
    return _result("deletion-valid", bad == 0, "0 violations", f"{bad} violations in {checked} deletions",
                   "deleting a vertex always yields a triangulation with one interior edge fewer")


def _check_projection_contract(rng, cases: int) -> CheckResult:
    bad = 0
    for _ in range(cases):
        n = rng.randrange(5, 10)
        t = uniform_random(n, rng.randrange(1 << 30))
        length = rng.randrange(0, 2 * n)
        edges = []
        cur = t
        for _ in range(length):
            e = rng.choice(sorted(cur.interior))
            cur, _intro = flip(cur, e)
            edges.append(e)
        path = apply_flips(t, edges)
        a = rng.randrange(n)
        from .deletion import incident_flip_count, project_path

        projected = project_path(path, a)
        want = len(path) - incident_flip_count(path, a)
        if len(projected) != want:
            bad += 1
        if delete_many(path.start, [a]) != projected.start or delete_many(path.end, [a]) != projected.end:
            bad += 1
    return _result("projection-contract", bad == 0, "0 violations", f"{bad} violations in {cases} paths",
                   "deleting a vertex shortens a path by exactly its incident flip count")


def _check_pair_sweep(n: int) -> list[CheckResult]:
    """Fused exhaustive sweep at size n: deletion inequality, the two
    two-flip configuration theorems, geodesic-DAG edge retention, engine
    equivalence, bound sanity."""
    tab = tables(n)
    keys = tab.keys
    count = len(keys)
    dm = distance_matrix(n)
    dm1 = distance_matrix(n - 1)
    tab1 = tables(n - 1)
    del_keys = _delete_key_table(n, keys, tab1.index)
    links = _link_table(n, keys)
    inc = _incidence_masks(n, tab)
    didx = diagonal_index(n)

    deletion_ineq_bad = crossing_config_bad = adjacent_config_bad = retention_bad = engine_bad = adm_bad = 0
    crossing_config_cases = adjacent_config_cases = 0
    seen: set[tuple[int, int]] = set()
    reps = 0
    for i in range(count):
        for j in range(i + 1, count):
            cls = _pair_class(n, keys[i], keys[j])
            if cls in seen:
                continue
            seen.add(cls)
            reps += 1
            total = int(dm[i][j])
            row_u, row_v = dm[i], dm[j]
            thetas = _theta_vector(n, tab, inc, row_u, row_v, i, j, total)

            common = keys[i] & keys[j]
            if common:
                for t_idx in range(count):
                    if row_u[t_idx] + row_v[t_idx] == total and keys[t_idx] & common != common:
                        retention_bad += 1

            for a in range(n):
                da = int(dm1[del_keys[i][a]][del_keys[j][a]])
                if not total >= da + thetas[a]:
                    deletion_ineq_bad += 1

            for (iu, iv) in ((i, j), (j, i)):
                lku, lkv = links[iu], links[iv]
                for a in range(n):
                    b = (a + 1) % n
                    x, xp = lku[a], lkv[a]
                    ax = edge(a, x)
                    bxp = edge(b, xp)
                    for c in range(n):
                        if c == a:
                            continue
                        d = (c + 1) % n
                        y, yp = lku[c], lkv[c]
                        cy = edge(c, y)
                        if ax == cy:
                            continue
                        dyp = edge(d, yp)
                        if crosses(n, ax, dyp) and crosses(n, cy, bxp):
                            crossing_config_cases += 1
                            if max(thetas[a], thetas[c]) < 2:
                                crossing_config_bad += 1
                    c = (a + 2) % n
                    y = lku[b]
                    if len({a, c, x, y}) == 4:
                        ac = edge(a, c)
                        if ac in didx and (keys[iv] >> didx[ac]) & 1:
                            adjacent_config_cases += 1
                            if max(thetas[a], thetas[b]) < 2:
                                adjacent_config_bad += 1

    checked_pairs = 0
    for i in range(count):
        u = Triangulation.from_key(n, keys[i])
        for j in range(i + 1, count):
            v = Triangulation.from_key(n, keys[j])
            rep = flip_distance(u, v)
            checked_pairs += 1
            if rep.distance != int(dm[i][j]):
                engine_bad += 1
            if rep.distance < len(u.interior - v.interior):
                adm_bad += 1
            if fan_upper_bound(u, v) < rep.distance:
                adm_bad += 1

    return [
        _result(f"deletion-inequality-{n}", deletion_ineq_bad == 0, "0 violations",
                f"{deletion_ineq_bad} violations in {reps} pair classes",
                "distance dominates deleted distance plus the maximal incident flip count"),
        _result(f"config2flips-{n}", crossing_config_bad == 0, "0 violations",
                f"{crossing_config_bad} violations in {crossing_config_cases} hypothesis cases",
                "crossing link configurations force two incident flips at one of two vertices"),
        _result(f"config2flips-adjacent-{n}", adjacent_config_bad == 0, "0 violations",
                f"{adjacent_config_bad} violations in {adjacent_config_cases} hypothesis cases",
                "a short-cut edge over two boundary steps forces two incident flips nearby"),
        _result(f"geodesic-retention-{n}", retention_bad == 0, "0 violations",
                f"{retention_bad} geodesic nodes dropped a shared edge",
                "every triangulation on a geodesic keeps the endpoints' shared edges"),
        _result(f"engine-oracle-{n}", engine_bad == 0, "0 discrepancies",
                f"{engine_bad} discrepancies in {checked_pairs} pairs",
                "the search engine agrees with exhaustive BFS on every pair"),
        _result(f"bounds-sane-{n}", adm_bad == 0, "0 violations",
                f"{adm_bad} violations in {checked_pairs} pairs",
                "the edge-difference lower bound and fan upper bound bracket the distance"),
    ]


def _check_pair_samples(rng, ns, samples: int) -> list[CheckResult]:
    out = []
    for n in ns:
        tab = tables(n)
        dm = distance_matrix(n)
        dm1 = distance_matrix(n - 1)
        tab1 = tables(n - 1)
        inc = _incidence_masks(n, tab)
        deletion_ineq_bad = retention_bad = engine_bad = forced_first_bad = sym_bad = 0
        for _ in range(samples):
            u = uniform_random(n, rng.randrange(1 << 30))
            v = uniform_random(n, rng.randrange(1 << 30))
            iu, iv = tab.index[u.key()], tab.index[v.key()]
            total = int(dm[iu][iv])
            thetas = _theta_vector(n, tab, inc, dm[iu], dm[iv], iu, iv, total)
            for a in range(n):
                du = delete_many(u, [a]).key()
                dv = delete_many(v, [a]).key()
                da = int(dm1[tab1.index[du]][tab1.index[dv]])
                if not total >= da + thetas[a]:
                    deletion_ineq_bad += 1
            common = u.key() & v.key()
            if common:
                row_u, row_v = dm[iu], dm[iv]
                for t_idx in range(len(tab.keys)):
                    if row_u[t_idx] + row_v[t_idx] == total and tab.keys[t_idx] & common != common:
                        retention_bad += 1
            rep = flip_distance(u, v)
            rep_back = flip_distance(v, u)
            if rep.distance != total:
                engine_bad += 1
            if rep_back.distance != rep.distance:
                sym_bad += 1
            for e in sorted(u.interior):
                u2, intro = flip(u, e)
                if intro in v.interior and int(dm[tab.index[u2.key()]][iv]) != total - 1:
                    forced_first_bad += 1
        out.append(_result(f"deletion-inequality-sampled-{n}", deletion_ineq_bad == 0, "0 violations",
                           f"{deletion_ineq_bad} violations in {samples} pairs",
                           "distance dominates deleted distance plus the maximal incident flip count"))
        out.append(_result(f"geodesic-retention-{n}", retention_bad == 0, "0 violations",
                           f"{retention_bad} geodesic nodes dropped a shared edge",
                           "every triangulation on a geodesic keeps the endpoints' shared edges"))
        out.append(_result(f"engine-oracle-{n}", engine_bad == 0 and sym_bad == 0, "0 discrepancies",
                           f"{engine_bad} value and {sym_bad} symmetry discrepancies in {samples} pairs",
                           "the search engine agrees with BFS and is symmetric in its arguments"))
        out.append(_result(f"forced-first-{n}", forced_first_bad == 0, "0 violations",
                           f"{forced_first_bad} violations in {samples} pairs",
                           "a flip introducing a target edge always starts some geodesic"))
    return out


def _check_cor4(n: int) -> CheckResult:
    tab = tables(n)
    keys = tab.keys
    count = len(keys)
    dm = distance_matrix(n)
    links = _link_table(n, keys)
    didx = diagonal_index(n)
    dm6 = distance_matrix(n - 3)
    tab6 = tables(n - 3)
    triple_cache: dict[tuple[int, int], int] = {}

    def triple_delete(key: int, b: int) -> int:
        got = triple_cache.get((key, b))
        if got is None:
            t = Triangulation.from_key(n, key)
            got = tab6.index[delete_many(t, [b, (b + 1) % n, (b + 2) % n]).key()]
            triple_cache[(key, b)] = got
        return got

    bad = 0
    cases = 0
    seen: set[tuple[int, int]] = set()
    for i in range(count):
        for j in range(i + 1, count):
            cls = _pair_class(n, keys[i], keys[j])
            if cls in seen:
                continue
            seen.add(cls)
            total = int(dm[i][j])
            for (iu, iv) in ((i, j), (j, i)):
                lku = links[iu]
                vkey = keys[iv]
                for a in range(n):
                    b, c, d, e = ((a + k) % n for k in (1, 2, 3, 4))
                    group = {a, b, e, lku[b], lku[c], lku[d]}
                    if len(group) != 6:
                        continue
                    need = (edge(a, e), edge(b, e), edge(c, e))
                    if all(x in didx and (vkey >> didx[x]) & 1 for x in need):
                        cases += 1
                        reduced = int(dm6[triple_delete(keys[iu], b)][triple_delete(vkey, b)])
                        if not total >= reduced + 5:
                            bad += 1
    return _result(f"triple-deletion-{n}", bad == 0, "0 violations",
                   f"{bad} violations in {cases} hypothesis cases",
                   "three consecutive deletions under the five-vertex configuration cost at least 5 flips")


def _check_forced_and_decompose(n: int, rng) -> CheckResult:
    tab = tables(n)
    keys = tab.keys
    dm = distance_matrix(n)
    bad = 0
    checked = 0
    seen: set[tuple[int, int]] = set()
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            cls = _pair_class(n, keys[i], keys[j])
            if cls in seen:
                continue
            seen.add(cls)
            total = int(dm[i][j])
            for iu, iv in ((i, j), (j, i)):
                u = Triangulation.from_key(n, keys[iu])
                v = Triangulation.from_key(n, keys[iv])
                checked += 1
                parts = decompose(u, v)
                s = sum(pair_distance(p.first, p.second) for p in parts)
                if s != total:
                    bad += 1
                u2, applied = reduce_forced(u, v)
                if int(dm[tab.index[u2.key()]][tab.index[v.key()]]) + applied != total:
                    bad += 1
    return _result(f"decompose-forced-{n}", bad == 0, "0 violations",
                   f"{bad} violations in {checked} ordered pair classes",
                   "cell decomposition is additive and forced flips reduce the distance one for one")


def _check_prefix_exhaustive(n: int) -> CheckResult:
    tab = tables(n)
    keys = tab.keys
    dm = distance_matrix(n)
    bad = 0
    checked = 0
    for i in range(len(keys)):
        u = Triangulation.from_key(n, keys[i])
        for j in range(len(keys)):
            if i == j:
                continue
            v = Triangulation.from_key(n, keys[j])
            row_u, row_v = dm[i], dm[j]
            total = int(dm[i][j])
            dag_nodes = [keys[t] for t in range(len(keys)) if row_u[t] + row_v[t] == total]
            for e in sorted(u.interior):
                prefix = apply_flips(u, [e])
                intro = prefix.flips[0][1]
                bit = 1 << diagonal_index(n)[intro]
                expect = any(k & bit for k in dag_nodes)
                checked += 1
                try:
                    got = check_prefix_theorem(u, v, prefix)
                except AssertionError:
                    bad += 1
                    continue
                if got != expect:
                    bad += 1
    return _result(f"prefix-exhaustive-{n}", bad == 0, "0 violations",
                   f"{bad} violations in {checked} single-flip prefixes",
                   "a flip introducing any geodesic edge can be prescribed first at full distance credit")


def _check_prefix_random(rng, ns, cases: int) -> CheckResult:
    bad = 0
    ran = 0
    for _ in range(cases):
        n = rng.choice(ns)
        u = uniform_random(n, rng.randrange(1 << 30))
        v = uniform_random(n, rng.randrange(1 << 30))
        if u == v:
            continue
        length = rng.randrange(1, 4)
        edges = []
        cur = u
        for _ in range(length):
            e = rng.choice(sorted(cur.interior))
            cur, _ = flip(cur, e)
            edges.append(e)
        prefix = apply_flips(u, edges)
        ran += 1
        try:
            check_prefix_theorem(u, v, prefix)
        except AssertionError:
            bad += 1
    return _result("prefix-random", bad == 0, "0 violations",
                   f"{bad} violations in {ran} random prefixes",
                   "prescribing a contained prefix never changes the remaining distance")


def _check_quotients() -> list[CheckResult]:
    out = []
    g6 = quotient_graph(6, 0)
    cyc = len(g6.nodes) == 5 and g6.degrees() == [2, 2, 2, 2, 2]
    same5 = g6.adj == flip_graph(5).adj
    out.append(_result("quotient-hexagon", cyc and same5, "5-cycle equal to the pentagon flip graph",
                       f"nodes={len(g6.nodes)} degrees={g6.degrees()} equal={same5}",
                       "contracting same-deletion classes of the hexagon gives the pentagon flip graph"))
    g5 = quotient_graph(5, 2)
    out.append(_result("quotient-pentagon", len(g5.nodes) == 2 and g5.edge_count() == 1,
                       "2 nodes, 1 edge", f"nodes={len(g5.nodes)} edges={g5.edge_count()}",
                       "contracting the pentagon gives the square flip graph"))
    g7 = quotient_graph(7, 3)
    out.append(_result("quotient-heptagon", g7.adj == flip_graph(6).adj,
                       "equal to the hexagon flip graph", f"equal={g7.adj == flip_graph(6).adj}",
                       "contracting the heptagon gives the hexagon flip graph"))
    return out


def _check_family_structure() -> list[CheckResult]:
    out = []
    bad = sum(0 if is_zigzag(zigzag(n)) else 1 for n in range(5, 21))
    out.append(_result("zigzag-shape", bad == 0, "0 violations", f"{bad} violations",
                       "the zigzag construction alternates turns for every size up to 20"))

    iso_bad = []
    for n in range(4, 15):
        if pair_dihedral_class(delete_seq(family_a(n), [1])) != pair_dihedral_class(family_a(n - 1)):
            iso_bad.append(("A1", n))
    for n in range(6, 15):
        if pair_dihedral_class(delete_seq(family_a(n), [3, 1])) != pair_dihedral_class(family_a(n - 2)):
            iso_bad.append(("A31", n))
    for n in range(12, 16):
        if pair_dihedral_class(delete_seq(family_b(n), [4, 5, 0, 1, 2])) != pair_dihedral_class(family_a(n - 5)):
            iso_bad.append(("B", n))
        if pair_dihedral_class(delete_seq(family_c(n), [4, 0, 1, 2])) != pair_dihedral_class(family_a(n - 4)):
            iso_bad.append(("C", n))
    out.append(_result("family-isomorphisms", not iso_bad, "all isomorphic", f"failures: {iso_bad}",
                       "deleting the designated vertices maps each family onto a smaller one"))

    link_bad = []
    # deletions below renumber: labels quoted after shifting through the deleted set
    for n in range(6, 17):
        pa = family_a(n)
        want_minus = 4 if n <= 7 else 5
        if link(delete_many(pa.first, [3]), (1, 2)) != want_minus:
            link_bad.append(("A-", n))
        if link(delete_many(pa.second, [3]), (1, 2)) != 3:
            link_bad.append(("A+", n))
    for n in range(12, 17):
        bm = delete_many(family_b(n).first, [4, 5])
        cm = delete_many(family_c(n).first, [4])
        for t, tag, shift in ((bm, "B", 2), (cm, "C", 1)):
            for e, want in (((0, 1), 8), ((1, 2), 7), ((2, 3), 6)):
                if link(t, e) != want - shift:
                    link_bad.append((tag, n, e))
    out.append(_result("family-links", not link_bad, "all as constructed", f"failures: {link_bad}",
                       "the deleted family members expose the documented links near the low vertices"))

    comb_bad = []
    for n in range(6, 21):
        dd = family_d(n)
        for t in (dd.first, dd.second):
            combs = [v for v in range(n) if comb_teeth(t, v) >= 3]
            if len(combs) != 1 or comb_teeth(t, combs[0]) != 3:
                comb_bad.append(n)
    for n in range(9, 17):
        pa = family_a(n)
        if comb_teeth(pa.first, 2) != 3 or comb_teeth(pa.second, 3) != 4:
            comb_bad.append(("A", n))
    out.append(_result("family-combs", not comb_bad, "all as constructed", f"failures: {comb_bad}",
                       "comb counts at the designated vertices match the constructions"))
    return out


# -- suite runner --------------------------------------------------------------

SUITES = ("small", "recursion", "prop11", "properties")


def run_suites(names=SUITES, seed: int = 20130617, recursion_max: int = 14,
               stretch: bool = False) -> list[CheckResult]:
    out: list[CheckResult] = []
    for name in names:
        if name == "small":
            out.extend(check_small_tables(stretch=stretch))
        elif name == "recursion":
            out.extend(check_recursion(recursion_max, stretch=stretch))
        elif name == "prop11":
            out.extend(check_reduction31())
        elif name == "properties":
            out.extend(property_suite(seed=seed))
        else:
            raise SizeError(f"unknown suite {name!r}")
    return sorted(out, key=lambda r: r.name)


def failures(results: list[CheckResult]) -> int:
    return sum(1 for r in results if r.status == STATUS_FAIL)
