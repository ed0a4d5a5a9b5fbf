"""Covers, Sherk surfaces and GF(q)-linear sets on PG(1, q^3).

Point sets on the line are frozensets of labels; ``ctx.inf`` is infinity.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import pg1
from .errors import AllZeroParameters, BadParameters, DependentBasis, NoFit
from .plane import (
    Homography,
    adjugate,
    frobenius_point,
    incidence,
    mat_mul,
    points_on_line,
    subplane_from_homography,
    transpose,
)
from .splash import canonical_carrier


@dataclass(frozen=True)
class Cover:
    kind: str
    a: int
    f: int
    b: int | None = None

    def to_dict(self):
        return {"kind": self.kind, "a": self.a, "b": self.b, "f": self.f}


def cover_points(ctx, c):
    if c.f == 0 or not ctx.is_base(c.f):
        raise BadParameters("f must be a nonzero element of GF(q)")
    nt, sub = ctx.norm_table, ctx.sub
    if c.kind == "I":
        return frozenset(x for x in range(ctx.size) if nt[sub(x, c.a)] == c.f)
    if c.kind == "II":
        if c.b is None or c.a == c.b:
            raise BadParameters("type II cover needs a != b")
        pts = {x for x in range(ctx.size)
               if x != c.b and nt[ctx.div(sub(x, c.a), sub(x, c.b))] == c.f}
        if c.f == 1:
            pts.add(ctx.inf)
        return frozenset(pts)
    raise BadParameters(f"unknown cover kind {c.kind!r}")


def all_covers(ctx):
    """Every distinct cover point set, mapped to one parameter record."""
    out = {}
    fs = range(1, ctx.q)
    for a in range(ctx.size):
        for f in fs:
            c = Cover("I", a, f)
            out.setdefault(cover_points(ctx, c), c)
    for a, b in itertools.permutations(range(ctx.size), 2):
        for f in fs:
            c = Cover("II", a, f, b)
            out.setdefault(cover_points(ctx, c), c)
    return out


@dataclass(frozen=True)
class SherkSurface:
    f: int
    alpha: int
    delta: int
    g: int

    def to_dict(self):
        return {"f": self.f, "alpha": self.alpha, "delta": self.delta, "g": self.g}


def _sherk_terms(ctx, alpha, delta):
    q = ctx.q
    mul, tr = ctx.mul_table, ctx.trace_table
    a2 = ctx.frob(alpha, 2)
    zq1 = [ctx.pow(z, q + 1) for z in range(ctx.size)]
    A = [tr[mul[a2][zq1[z]]] for z in range(ctx.size)]
    D = [tr[mul[delta][z]] for z in range(ctx.size)]
    return A, D


def sherk_points(ctx, s):
    """Solutions of fN(z) + T(alpha^(q^2) z^(q+1)) + T(delta z) + g = 0.

    Infinity belongs to the surface iff f = 0 (the homogenized equation
    reduces to f N(x) = 0 at y = 0).
    """
    if not (s.f or s.alpha or s.delta or s.g):
        raise AllZeroParameters("Sherk surface parameters are all zero")
    if not (ctx.is_base(s.f) and ctx.is_base(s.g)):
        raise BadParameters("f and g must lie in GF(q)")
    A, D = _sherk_terms(ctx, s.alpha, s.delta)
    return _sherk_solve(ctx, s.f, s.g, A, D)


def _sherk_solve(ctx, f, g, A, D):
    badd, bmul = ctx.base.add_table, ctx.base.mul_table
    nt = ctx.norm_table
    pts = {z for z in range(ctx.size)
           if badd[badd[badd[bmul[f][nt[z]]][A[z]]][D[z]]][g] == 0}
    if f == 0:
        pts.add(ctx.inf)
    return frozenset(pts)


def sherk_parameter_classes(ctx):
    """One (f, alpha, delta, g) per class up to a nonzero GF(q) scalar."""
    q = ctx.q
    for flat in itertools.product(range(q), repeat=8):
        lead = next((x for x in flat if x), 0)
        if lead != 1:
            continue
        f, a0, a1, a2, d0, d1, d2, g = flat
        yield SherkSurface(f, ctx.elem(a0, a1, a2), ctx.elem(d0, d1, d2), g)


def sherk_size_census(ctx):
    """Bucket every Sherk surface class by point-set size: size -> [(params, points)]."""
    buckets = {}
    terms = {}
    for s in sherk_parameter_classes(ctx):
        key = (s.alpha, s.delta)
        if key not in terms:
            terms[key] = _sherk_terms(ctx, s.alpha, s.delta)
        pts = _sherk_solve(ctx, s.f, s.g, *terms[key])
        buckets.setdefault(len(pts), []).append((s, pts))
    return buckets


@dataclass(frozen=True)
class LinearSet:
    """GF(q)-span of three vectors of GF(q^3)^2."""

    basis: tuple

    def to_dict(self):
        return {"basis": [list(v) for v in self.basis]}


def linear_set_points(ctx, L):
    mul, add = ctx.mul_table, ctx.add_table
    pts = set()
    for lams in itertools.product(range(ctx.q), repeat=3):
        if not any(lams):
            continue
        u = v = 0
        for lam, (x, y) in zip(lams, L.basis):
            u = add[u][mul[lam][x]]
            v = add[v][mul[lam][y]]
        if u == 0 and v == 0:
            raise DependentBasis("basis is dependent over GF(q)")
        pts.add(pg1.label(ctx, u, v))
    return frozenset(pts)


def is_scattered(ctx, L):
    q = ctx.q
    return len(linear_set_points(ctx, L)) == q * q + q + 1


def pseudoregulus_linear_set(ctx):
    """Basis of {(x, x^q) : x in GF(q^3)}."""
    basis = []
    for x in (1, ctx.tau, ctx.mul(ctx.tau, ctx.tau)):
        basis.append((x, ctx.frob(x, 1)))
    return LinearSet(tuple(basis))


def linear_set_to_splash_frame(ctx):
    """The line homography (x, x^q) -> (x, -x^q) taking {(x, x^q)} onto {N = -1}."""
    return ((1, 0), (0, ctx.minus_one))


def fit_cover(S):
    """A type I cover equal to the theta image of an exterior splash."""
    ctx = S.ctx
    thetas = sorted(S.thetas())
    if ctx.inf in thetas:
        raise NoFit("infinity (a carrier) lies in the splash image")
    fit = _fit_type_one(ctx, thetas)
    if fit is None:
        raise NoFit("no type I cover matches the splash image")
    return fit


def _fit_type_one(ctx, thetas):
    nt, sub = ctx.norm_table, ctx.sub
    for a in range(ctx.size):
        f = nt[sub(thetas[0], a)]
        if f and all(nt[sub(t, a)] == f for t in thetas):
            c = Cover("I", a, f)
            if len(cover_points(ctx, c)) == len(thetas):
                return c
    return None


@functools.lru_cache(maxsize=4096)
def host_points(ctx, L):
    return tuple(points_on_line(ctx, L))


def cover_carriers(ctx, host, pts):
    """Every pair (A, B) of host points making ``pts`` a norm fiber in frame (A, B).

    A point set is an exterior splash (equivalently a cover) iff this is non-empty.
    """
    pts = frozenset(pts)
    off = [X for X in host_points(ctx, host) if X not in pts]
    nt = ctx.norm_table
    found = []
    for A, B in itertools.combinations(off, 2):
        fr = pg1.LineFrame(ctx, A, B)
        it = iter(pts)
        f = nt[fr.theta(next(it))]
        if f and all(nt[fr.theta(X)] == f for X in it):
            found.append((A, B))
    return found


def fiber_points(ctx, E1, E2, f):
    """Points E1 + theta*E2 with N(theta) = f."""
    fr = pg1.LineFrame(ctx, E1, E2)
    return frozenset(fr.point(t) for t in range(1, ctx.size) if ctx.norm(t) == f)


def subplane_for_fiber(ctx, E1, E2, host, f):
    """An order-q-subplane whose exterior splash on ``host`` is ``fiber_points(f)``.

    Maps E, E^q, E^(q^2) of the canonical example to E1, c*E2 and a point off
    the host, with N(c) = -f, so the canonical fiber N = -1 lands on N = f.
    """
    c = next(x for x in range(1, ctx.size) if ctx.norm(x) == ctx.neg(f))
    X = next(v for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1)) if not incidence(ctx, v, host))
    E = canonical_carrier(ctx)
    D = transpose((E, frobenius_point(ctx, E, 1), frobenius_point(ctx, E, 2)))
    C = transpose((E1, tuple(ctx.mul(c, x) for x in E2), X))
    return subplane_from_homography(Homography(ctx, mat_mul(ctx, C, adjugate(ctx, D))))


def disjoint_splashes_with_carriers(ctx, E1, E2, host):
    """The q-1 norm fibers in the (E1, E2) frame: [(f, points)] for f in GF(q)*."""
    if E1 == E2 or not (incidence(ctx, E1, host) and incidence(ctx, E2, host)):
        raise BadParameters("carriers must be distinct points of the host line")
    return [(f, fiber_points(ctx, E1, E2, f)) for f in range(1, ctx.q)]
