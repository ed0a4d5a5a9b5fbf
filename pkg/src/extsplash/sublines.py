"""The two families of order-q-sublines in an exterior splash.

Conic work happens in the subplane's own coordinates, where it is PG(2, q):
a conic is a GF(q) coefficient 6-tuple ``(a, b, c, d, e, f)`` of
``aX^2 + bY^2 + cZ^2 + dXY + eXZ + fYZ``, evaluated on points for a point
conic and on line coordinates for a dual conic.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import NotSpecial, PointNotInSubplane, PreconditionViolation
from .plane import (
    Homography,
    Subline,
    base_points,
    collinear,
    incidence,
    is_subline,
    mat_mul,
    meet,
    subline_through,
    subplane_from_homography,
    transpose,
    adjugate,
)
from .splash import carriers, singer_group, splash, stabilizer_pair


@dataclass(frozen=True)
class SpecialConic:
    coeffs: tuple
    kind: str
    members: frozenset  # points (kind "point") or lines (kind "dual") of PG(2, q)


@dataclass(frozen=True)
class SplashSublineTag:
    subline: Subline
    family: str  # "pencil" | "dual-conic"
    witness: object


def conic_value(ctx, coeffs, v):
    a, b, c, d, e, f = coeffs
    mul, add = ctx.mul_table, ctx.add_table
    x, y, z = v
    terms = (mul[a][mul[x][x]], mul[b][mul[y][y]], mul[c][mul[z][z]],
             mul[d][mul[x][y]], mul[e][mul[x][z]], mul[f][mul[y][z]])
    s = 0
    for t in terms:
        s = add[s][t]
    return s


@functools.lru_cache(maxsize=None)
def irreducible_conics(ctx):
    """All (coeffs, members) with q+1 members of PG(2, q), no three collinear."""
    q = ctx.q
    pts = base_points(ctx)
    out = []
    for coeffs in itertools.product(range(q), repeat=6):
        if next((x for x in coeffs if x), 0) != 1:
            continue
        members = [P for P in pts if conic_value(ctx, coeffs, P) == 0]
        if len(members) != q + 1:
            continue
        if any(collinear(ctx, *tri) for tri in itertools.combinations(members, 3)):
            continue
        out.append((coeffs, frozenset(members)))
    return tuple(out)


def special_conics(pi, L):
    """Irreducible conics of pi whose extension contains the carrier E1."""
    E1 = carriers(pi, L)[0]
    E1_in = pi.gen.inverse()(E1)
    ctx = pi.ctx
    return [SpecialConic(c, "point", m) for c, m in irreducible_conics(ctx)
            if conic_value(ctx, c, E1_in) == 0]


def special_dual_conics(pi, L):
    """Irreducible dual conics of pi whose extension contains L."""
    ctx = pi.ctx
    L_in = pi.gen.inverse().line(L)
    return [SpecialConic(c, "dual", m) for c, m in irreducible_conics(ctx)
            if conic_value(ctx, c, L_in) == 0]


def nonspecial_dual_conics(pi, L):
    ctx = pi.ctx
    L_in = pi.gen.inverse().line(L)
    return [SpecialConic(c, "dual", m) for c, m in irreducible_conics(ctx)
            if conic_value(ctx, c, L_in) != 0]


def conic_points(pi, G):
    """Points of pi on a point conic, in plane coordinates."""
    return frozenset(pi.gen(P) for P in G.members)


def conic_lines(pi, G):
    return frozenset(pi.gen.line(l) for l in G.members)


def pencil_subline(pi, L, A):
    if A not in pi.points:
        raise PointNotInSubplane("pencil centre must be a point of the subplane")
    ctx = pi.ctx
    pts = frozenset(meet(ctx, m, L) for m in pi.lines if incidence(ctx, A, m))
    return Subline(L, pts)


def dual_conic_subline(pi, L, G):
    """Points where the lines of the dual conic G meet L; NotSpecial unless a subline."""
    ctx = pi.ctx
    pts = frozenset(meet(ctx, m, L) for m in conic_lines(pi, G))
    if not is_subline(ctx, pts):
        raise NotSpecial("the lines of the dual arc do not meet L in a subline")
    return Subline(L, pts)


def sublines_in_splash(S):
    """Brute force: every order-q-subline of the host line inside S."""
    ctx = S.ctx
    pts = S.points
    found = set()
    covered = set()
    for tri in itertools.combinations(sorted(pts), 3):
        if tri in covered:
            continue
        sub = subline_through(ctx, *tri)
        if sub.points <= pts:
            found.add(sub)
            covered.update(itertools.combinations(sorted(sub.points), 3))
    return found


def pencil_family(pi, L):
    return {pencil_subline(pi, L, A) for A in pi.points}


def dual_conic_family(pi, L):
    return {dual_conic_subline(pi, L, G) for G in special_dual_conics(pi, L)}


def classify_families(pi, L):
    """(X, Y): the pi-pencil-sublines and the pi-dual-conic-sublines of the splash."""
    if pi.ctx.q <= 2:
        raise PreconditionViolation("the two families are only distinct for q > 2")
    return pencil_family(pi, L), dual_conic_family(pi, L)


def tagged_sublines(pi, L):
    out = [SplashSublineTag(pencil_subline(pi, L, A), "pencil", A)
           for A in sorted(pi.points)]
    out += [SplashSublineTag(dual_conic_subline(pi, L, G), "dual-conic", G)
            for G in special_dual_conics(pi, L)]
    return out


def witnesses_concurrent(pi, sub):
    """True iff the lines of pi through the points of ``sub`` share a point."""
    ctx = pi.ctx
    lines = []
    for X in sub.points:
        through = [m for m in pi.lines if incidence(ctx, X, m)]
        if len(through) != 1:
            return False
        lines.append(through[0])
    if len(set(lines)) != len(lines):
        return False
    P = meet(ctx, lines[0], lines[1])
    return all(incidence(ctx, P, m) for m in lines[2:])


def internal_singer(pi, L):
    """The Singer generator written in pi's coordinates (a GF(q) collineation)."""
    g = singer_group(pi, L).generator
    return pi.gen.inverse() @ g @ pi.gen


def conic_orbit(pi, L, G):
    """Orbit of a special (dual) conic under I, as member sets."""
    h = internal_singer(pi, L)
    act = h if G.kind == "point" else h.line
    start = G.members
    orbit = [start]
    cur = frozenset(act(x) for x in start)
    while cur != start:
        orbit.append(cur)
        cur = frozenset(act(x) for x in cur)
    return orbit


def carrier_frame_matrix(ctx, E1, E2, E3):
    return transpose((E1, E2, E3))


def swap_families(S, pi):
    """(Delta', pi'): a homography fixing the host and S that swaps the carriers.

    In the frame whose columns are E1, E2, E3 it is ((0,1,0),(c,0,0),(0,0,1));
    for the canonical splash c = 1 and it is the coordinate swap.
    """
    ctx = S.ctx
    E1, E2 = S.carriers
    C = carrier_frame_matrix(ctx, E1, E2, S.third_conjugate)
    c = stabilizer_pair(S).delta[0][1]
    swap = ((0, 1, 0), (c, 0, 0), (0, 0, 1))
    delta = Homography(ctx, mat_mul(ctx, mat_mul(ctx, C, swap), adjugate(ctx, C)))
    return delta, subplane_from_homography(delta @ pi.gen)


def family_swap_report(S, pi):
    """Classify families for pi and its swapped partner pi'."""
    delta, pi2 = swap_families(S, pi)
    X, Y = classify_families(pi, S.host)
    X2, Y2 = classify_families(pi2, S.host)
    return {
        "delta_fixes_host": delta.line(S.host) == S.host,
        "delta_fixes_splash": frozenset(delta(P) for P in S.points) == S.points,
        "distinct_subplane": pi2 != pi,
        "same_splash": splash(pi2, S.host).points == S.points,
        "pencil_swapped": X2 == Y,
        "dual_conic_swapped": Y2 == X,
    }
