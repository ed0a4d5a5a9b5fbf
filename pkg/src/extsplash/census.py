"""Counting subplanes by exterior splash, and how common-splash subplanes meet."""
from __future__ import annotations

import itertools
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool

from . import pg1
from .circle_models import all_covers
from .errors import PreconditionViolation
from .plane import (
    CANONICAL_FRAME,
    det,
    Homography,
    all_points,
    base_points,
    collinear,
    frobenius_point,
    homography_from_frames,
    incidence,
    is_subline,
    join,
    line_to_text,
    meet,
    points_on_line,
    scale,
    subline_through,
    subplane_from_homography,
    transpose,
)
from .splash import canonical_pair, splash


def expected_exterior_subplanes(q):
    return q ** 9 * (q ** 3 - 1) * (q ** 3 + 1) * (q - 1)


def expected_splash_count(q):
    return q ** 3 * (q ** 3 + 1) * (q - 1) // 2


def expected_class_size(q):
    return 2 * q ** 6 * (q ** 3 - 1)


# --- exhaustive enumeration at q = 2 -------------------------------------

class _Tables:
    """Point/line indices of PG(2, 8) with join and meet lookups."""

    def __init__(self, ctx, L):
        self.ctx = ctx
        self.points = all_points(ctx)
        self.index = {P: i for i, P in enumerate(self.points)}
        n = len(self.points)
        self.join = [[-1] * n for _ in range(n)]
        for i, j in itertools.combinations(range(n), 2):
            k = self.index[join(ctx, self.points[i], self.points[j])]
            self.join[i][j] = self.join[j][i] = k
        # lines share the point list as coordinates
        self.meet = [[-1] * n for _ in range(n)]
        for i, j in itertools.combinations(range(n), 2):
            k = self.index[meet(ctx, self.points[i], self.points[j])]
            self.meet[i][j] = self.meet[j][i] = k
        self.host = self.index[L]
        self.on_host = [incidence(ctx, P, L) for P in self.points]
        self.off = [i for i in range(n) if not self.on_host[i]]


_WORKER = {}


def _shard(first):
    T = _WORKER["tables"]
    jn, mt, on = T.join, T.meet, T.on_host
    off = T.off
    found = set()
    rest = [x for x in off if x > first]
    a = first
    for bi, b in enumerate(rest):
        lab = jn[a][b]
        for ci in range(bi + 1, len(rest)):
            c = rest[ci]
            if jn[a][c] == lab:
                continue
            lac, lbc = jn[a][c], jn[b][c]
            for d in rest[ci + 1:]:
                lad, lbd, lcd = jn[a][d], jn[b][d], jn[c][d]
                if lad == lab or lad == lac or lbd == lbc:
                    continue
                d1 = mt[lab][lcd]
                if on[d1]:
                    continue
                d2 = mt[lac][lbd]
                if on[d2]:
                    continue
                d3 = mt[lad][lbc]
                if on[d3]:
                    continue
                found.add(tuple(sorted((a, b, c, d, d1, d2, d3))))
    return found


def _init_worker(ctx, L):
    _WORKER["tables"] = _Tables(ctx, L)


def enumerate_exterior_subplanes(ctx, L, jobs=1):
    """Every order-2-subplane of PG(2, 8) missing L, as sorted point-index tuples.

    Quadrangles of points off L are completed by their diagonal points (which
    are collinear in characteristic 2); sets are merged and sorted, so the
    result does not depend on ``jobs``.
    """
    if ctx.q != 2:
        raise PreconditionViolation("exhaustive enumeration is only run at q = 2")
    _init_worker(ctx, L)
    T = _WORKER["tables"]
    firsts = T.off
    if jobs > 1:
        with Pool(jobs, initializer=_init_worker, initargs=(ctx, L)) as pool:
            parts = pool.map(_shard, firsts)
    else:
        parts = [_shard(a) for a in firsts]
    keys = set()
    for p in parts:
        keys |= p
    return T, sorted(keys)


def quadrangles_per_subplane(q):
    n = q * q + q + 1
    return n * (n - 1) * q * q * (q - 1) ** 2 // 24


def _key_splash(T, key):
    jn, mt = T.join, T.meet
    return frozenset(mt[jn[i][j]][T.host] for i, j in itertools.combinations(key, 2))


def _key_carriers(T, key):
    ctx = T.ctx
    pts = [T.points[i] for i in key]
    quad = next(c for c in itertools.combinations(pts, 4)
                if not any(collinear(ctx, *tri) for tri in itertools.combinations(c, 3)))
    H = homography_from_frames(ctx, CANONICAL_FRAME, quad)
    Hi = H.inverse()
    L = T.points[T.host]
    Lin = Hi.line(L)
    m = H.line(frobenius_point(ctx, Lin, 2))
    n = H.line(frobenius_point(ctx, Lin, 1))
    return meet(ctx, L, m), meet(ctx, L, n)


@dataclass
class CensusReport:
    q: int
    host: str
    exterior_subplanes: int
    splashes: int
    class_sizes: dict
    intersection_profile: dict = field(default_factory=dict)
    carriers_shared: bool | None = None
    quadrangles_per_subplane: int | None = None
    q_plus_1_intersections: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def to_json(self):
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def group_by_splash(T, keys, check_carriers=True):
    """Partition subplane keys by splash; returns (report, {splash: [keys]})."""
    ctx = T.ctx
    classes = {}
    for k in keys:
        classes.setdefault(_key_splash(T, k), []).append(k)
    shared = None
    if check_carriers:
        shared = True
        for members in classes.values():
            first = None
            for k in members:
                car = frozenset(_key_carriers(T, k))
                if first is None:
                    first = car
                elif car != first:
                    shared = False
                    break
    sizes = Counter(len(v) for v in classes.values())
    report = CensusReport(
        q=ctx.q,
        host=line_to_text(ctx, T.points[T.host]),
        exterior_subplanes=len(keys),
        splashes=len(classes),
        class_sizes={str(k): v for k, v in sorted(sizes.items())},
        carriers_shared=shared,
    )
    return report, classes


def class_intersection_profile(T, members):
    """Histogram of |pi1 & pi2| over all pairs within one class, plus how many
    (q+1)-point intersections are sublines and how many are not."""
    ctx = T.ctx
    q = ctx.q
    sets = [frozenset(k) for k in members]
    hist = Counter()
    kinds = Counter()
    for a, b in itertools.combinations(sets, 2):
        c = a & b
        hist[len(c)] += 1
        if len(c) == q + 1:
            pts = [T.points[i] for i in c]
            kinds["subline" if is_subline(ctx, pts) else "not_subline"] += 1
    return dict(sorted(hist.items())), dict(sorted(kinds.items()))


# --- two subplanes through a subline with a given splash ------------------

def _subline_vectors(ctx, b):
    """(u0, uinf) with b = {x*u0 + y*uinf : x, y in GF(q)} projectively."""
    B0, Binf, B1 = sorted(b.points)[:3]
    # B1 = a*B0 + c*Binf
    M = transpose((B0, Binf))
    # solve using two independent coordinates
    for i, j in ((0, 1), (0, 2), (1, 2)):
        d = ctx.sub(ctx.mul(M[i][0], M[j][1]), ctx.mul(M[i][1], M[j][0]))
        if d:
            a = ctx.div(ctx.sub(ctx.mul(B1[i], M[j][1]), ctx.mul(B1[j], M[i][1])), d)
            c = ctx.div(ctx.sub(ctx.mul(M[i][0], B1[j]), ctx.mul(M[j][0], B1[i])), d)
            return B0, Binf, scale(ctx, a, B0), scale(ctx, c, Binf)
    raise PreconditionViolation("subline points are not distinct")


def _singer_transversal(ctx):
    """Representatives of GF(q^3)* / GF(q)*."""
    q = ctx.q
    return [ctx.exp_table[i] for i in range(q * q + q + 1)]


def subplanes_through_subline_with_splash(ctx, b, S):
    """Every order-q-subplane containing subline b whose splash on S.host is S."""
    host = S.host
    m = b.host
    if m == host:
        raise PreconditionViolation("subline lies on the host line")
    X0 = meet(ctx, m, host)
    if X0 in b.points:
        raise PreconditionViolation("subline is not exterior to the host line")
    if X0 not in S.points:
        raise PreconditionViolation("the line of the subline misses the splash")
    B0, Binf, u0, uinf = _subline_vectors(ctx, b)
    spts = S.points
    cands = []
    for s in sorted(spts):
        if s == X0:
            continue
        for P in points_on_line(ctx, join(ctx, B0, s)):
            if P == B0 or P == s:
                continue
            if all(meet(ctx, join(ctx, P, B), host) in spts for B in b.points):
                cands.append(P)
    base_lines = base_points(ctx)
    found = {}
    for P in cands:
        for t in _singer_transversal(ctx):
            w = scale(ctx, t, P)
            H = Homography(ctx, transpose((u0, uinf, w)))
            if all(meet(ctx, H.line(l), host) in spts for l in base_lines):
                pi = subplane_from_homography(H)
                if not any(incidence(ctx, X, host) for X in pi.points):
                    found.setdefault(pi.points, pi)
    return [found[k] for k in sorted(found, key=sorted)]


def random_admissible_subline(ctx, S, rng):
    """A random subline exterior to S.host on a line through a point of S."""
    host = S.host
    while True:
        s = rng.choice(sorted(S.points))
        P = rng.choice(all_points(ctx))
        if incidence(ctx, P, host):
            continue
        m = join(ctx, s, P)
        pts = [X for X in points_on_line(ctx, m) if X != s]
        tri = rng.sample(pts, 3)
        sub = subline_through(ctx, *tri)
        if s not in sub.points:
            return sub


def two_subplanes_check(ctx, S, samples, seed):
    rng = random.Random(seed)
    counts = Counter()
    meet_in_b = True
    for _ in range(samples):
        b = random_admissible_subline(ctx, S, rng)
        found = subplanes_through_subline_with_splash(ctx, b, S)
        counts[len(found)] += 1
        if len(found) == 2 and (found[0].points & found[1].points) != b.points:
            meet_in_b = False
    return {"samples": samples, "counts": dict(sorted(counts.items())),
            "always_two": set(counts) == {2}, "pairs_meet_in_subline": meet_in_b}


# --- sampling intersections of subplanes with a common splash -------------

def perspectivity(ctx, L, v):
    """x -> x + (L.x) v, fixing L pointwise (None if singular)."""
    rows = []
    for i in range(3):
        rows.append(tuple(ctx.add(1 if i == j else 0, ctx.mul(v[i], L[j])) for j in range(3)))
    M = tuple(rows)
    if det(ctx, M) == 0:
        return None
    return Homography(ctx, M)


def random_common_splash_subplane(pi, S, rng, partner=None):
    """g(pi) or g(partner) for a random perspectivity g with axis S.host."""
    ctx = pi.ctx
    while True:
        v = tuple(rng.randrange(ctx.size) for _ in range(3))
        g = perspectivity(ctx, S.host, v)
        if g is None:
            continue
        src = partner if (partner is not None and rng.random() < 0.5) else pi
        return subplane_from_homography(g @ src.gen)


def intersection_profile(pi1, pi2):
    if pi1 == pi2:
        raise PreconditionViolation("the two subplanes are equal")
    ctx = pi1.ctx
    common = pi1.points & pi2.points
    n = len(common)
    return {"size": n,
            "subline": n == ctx.q + 1 and is_subline(ctx, list(common))}


def intersection_sample(ctx, samples, seed):
    """Random pairs with the canonical splash, plus the pairs through a common subline."""
    from .sublines import swap_families
    rng = random.Random(seed)
    pi, L = canonical_pair(ctx)
    S = splash(pi, L)
    _, partner = swap_families(S, pi)
    q = ctx.q
    hist = Counter()
    sub_ok = True
    for _ in range(samples):
        a = random_common_splash_subplane(pi, S, rng, partner)
        bb = random_common_splash_subplane(pi, S, rng, partner)
        if a == bb or splash(a, L).points != S.points or splash(bb, L).points != S.points:
            continue
        r = intersection_profile(a, bb)
        hist[r["size"]] += 1
        if r["size"] == q + 1 and not r["subline"]:
            sub_ok = False
    for _ in range(max(1, samples // 4)):
        b = random_admissible_subline(ctx, S, rng)
        found = subplanes_through_subline_with_splash(ctx, b, S)
        if len(found) == 2:
            r = intersection_profile(*found)
            hist[r["size"]] += 1
            if r["size"] == q + 1 and not r["subline"]:
                sub_ok = False
    allowed = {0, 1, 2, 3, q + 1}
    return {"histogram": dict(sorted(hist.items())),
            "sizes_allowed": set(hist) <= allowed,
            "q_plus_1_are_sublines": sub_ok}


# --- splash count at q = 3 ---------------------------------------------------

def splash_count_check(ctx):
    """Count exterior splashes two ways: distinct covers, and the PGL(2, q^3) orbit
    of the canonical theta set (with its stabilizer)."""
    q = ctx.q
    covers = all_covers(ctx)
    pi, L = canonical_pair(ctx)
    thetas = splash(pi, L).thetas()
    orbit = set()
    stab = 0
    for M in pg1.all_line_homographies(ctx):
        img = pg1.image(ctx, M, thetas)
        orbit.add(img)
        if img == thetas:
            stab += 1
    n = expected_splash_count(q)
    total = expected_exterior_subplanes(q)
    return {
        "covers": len(covers),
        "orbit": len(orbit),
        "stabilizer": stab,
        "expected": n,
        "expected_stabilizer": 2 * (q * q + q + 1),
        "class_size_identity": total // n == expected_class_size(q) and total % n == 0,
        "orbit_is_covers": orbit == set(covers),
    }


def full_census_q2(jobs=1, profile_class=True):
    """Class sizes and intersection sizes at q = 2, exhaustively."""
    from .fields import make_field
    ctx = make_field(2)
    _, L = canonical_pair(ctx)
    T, keys = enumerate_exterior_subplanes(ctx, L, jobs)
    report, classes = group_by_splash(T, keys)
    report.quadrangles_per_subplane = quadrangles_per_subplane(2)
    if profile_class:
        S0 = splash(canonical_pair(ctx)[0], L).points
        S0 = frozenset(T.index[P] for P in S0)
        hist, kinds = class_intersection_profile(T, classes[S0])
        report.intersection_profile = {str(k): v for k, v in hist.items()}
        report.q_plus_1_intersections = kinds
    report.checks["total_matches_formula"] = len(keys) == expected_exterior_subplanes(2)
    report.checks["splashes_match_formula"] = report.splashes == expected_splash_count(2)
    report.checks["classes_uniform"] = report.class_sizes == {str(expected_class_size(2)): expected_splash_count(2)}
    return report, T, classes


def family_swap_conjecture(ctx, samples, seed):
    """For pairs of common-splash subplanes meeting in a subline, are the two
    subline families exchanged?  Reported only."""
    from .sublines import classify_families
    rng = random.Random(seed)
    pi, L = canonical_pair(ctx)
    S = splash(pi, L)
    swapped = kept = 0
    for _ in range(samples):
        b = random_admissible_subline(ctx, S, rng)
        found = subplanes_through_subline_with_splash(ctx, b, S)
        if len(found) != 2:
            continue
        X1, Y1 = classify_families(found[0], L)
        X2, Y2 = classify_families(found[1], L)
        if X1 == Y2 and Y1 == X2:
            swapped += 1
        else:
            kept += 1
    return {"pairs": swapped + kept, "swapped": swapped, "not_swapped": kept}
