"""Splashes of a subplane onto a line, carriers, and the Singer group I."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import pg1
from .errors import NotExterior, SecantLine
from .plane import (
    Homography,
    base_subplane,
    conjugate_line,
    frobenius_point,
    incidence,
    line_to_text,
    meet,
    normalize,
    point_to_text,
)


def canonical_line(ctx):
    """The exterior line [-tau*tau^q, tau^q + tau, -1] of PG(2, q)."""
    t = ctx.tau
    tq = ctx.frob(t, 1)
    return normalize(ctx, (ctx.neg(ctx.mul(t, tq)), ctx.add(tq, t), ctx.minus_one))


def canonical_carrier(ctx):
    """E = (1, tau, tau^2); its conjugates are the other fixed points of T."""
    t = ctx.tau
    return (1, t, ctx.mul(t, t))


def companion_matrix(ctx):
    return ((0, 1, 0), (0, 0, 1), (ctx.t0, ctx.t1, ctx.t2))


def canonical_pair(ctx):
    return base_subplane(ctx), canonical_line(ctx)


def points_on(pi, L):
    ctx = pi.ctx
    return [P for P in pi.points if incidence(ctx, P, L)]


@dataclass(frozen=True)
class Splash:
    ctx: object = field(compare=False, repr=False)
    host: tuple
    points: frozenset
    kind: str
    carriers: tuple | None = None
    third_conjugate: tuple | None = None
    centre: tuple | None = None

    def frame(self):
        if self.kind != "exterior":
            raise NotExterior("line coordinates need an exterior splash")
        return pg1.LineFrame(self.ctx, *self.carriers)

    def thetas(self):
        """The splash as a set of labels of PG(1, q^3) in its carrier frame."""
        fr = self.frame()
        return frozenset(fr.theta(X) for X in self.points)

    def to_dict(self):
        ctx = self.ctx
        out = {
            "host": line_to_text(ctx, self.host),
            "kind": self.kind,
            "points": [point_to_text(ctx, P) for P in sorted(self.points)],
        }
        if self.kind == "exterior":
            out["carriers"] = [point_to_text(ctx, E) for E in self.carriers]
            out["third_conjugate"] = point_to_text(ctx, self.third_conjugate)
            out["thetas"] = [ctx.to_text(t) if t != ctx.inf else "inf"
                             for t in sorted(self.thetas())]
        else:
            out["centre"] = point_to_text(ctx, self.centre)
        return out


def conjugate_lines(pi, L):
    """(m, n) with E1 = L.m = L^(zeta^2) meet L and E2 = L.n."""
    return conjugate_line(pi, L, 2), conjugate_line(pi, L, 1)


def carriers(pi, L):
    """(E1, E2, E3) for a line L exterior to pi."""
    if points_on(pi, L):
        raise NotExterior("line meets the subplane")
    ctx = pi.ctx
    m, n = conjugate_lines(pi, L)
    return meet(ctx, L, m), meet(ctx, L, n), meet(ctx, m, n)


def splash(pi, L):
    ctx = pi.ctx
    on = points_on(pi, L)
    if len(on) >= 2:
        raise SecantLine("line contains two or more points of the subplane")
    pts = frozenset(meet(ctx, m, L) for m in pi.lines)
    if not on:
        E1, E2, E3 = carriers(pi, L)
        return Splash(ctx, L, pts, "exterior", (E1, E2), E3)
    return Splash(ctx, L, pts, "tangent", centre=on[0])


def adapted_frame(pi, L):
    """A homography H with H(PG(2,q)) = pi and H(canonical line) = L.

    In pi's own coordinates the carrier F = (f0, f1, f2) of L is reached from
    E = (1, tau, tau^2) by the GF(q)-matrix whose rows are the tau-coefficients
    of f0, f1, f2; a rational matrix commutes with conjugation, so it carries
    the whole conjugate triangle and hence the line.
    """
    if points_on(pi, L):
        raise NotExterior("line meets the subplane")
    ctx = pi.ctx
    Lin = pi.gen.inverse().line(L)
    F = meet(ctx, Lin, frobenius_point(ctx, Lin, 2))
    B = Homography(ctx, tuple(ctx.coeffs(f) for f in F))
    return pi.gen @ B


@dataclass(frozen=True)
class SingerGroup:
    generator: Homography
    order: int
    fixed_points: tuple
    fixed_lines: tuple

    def elements(self):
        out = [Homography.identity(self.generator.ctx)]
        for _ in range(self.order - 1):
            out.append(self.generator @ out[-1])
        return out

    def orbit(self, P):
        g = self.generator
        seen = [P]
        X = g(P)
        while X != P:
            seen.append(X)
            X = g(X)
        return seen

    def line_orbit(self, L):
        g = self.generator
        seen = [L]
        X = g.line(L)
        while X != L:
            seen.append(X)
            X = g.line(X)
        return seen

    def set_orbit(self, pts):
        g = self.generator
        pts = frozenset(pts)
        seen = [pts]
        X = frozenset(g(P) for P in pts)
        while X != pts:
            seen.append(X)
            X = frozenset(g(P) for P in X)
        return seen


def singer_group(pi, L):
    """Generator of the stabilizer of (pi, L) in PGL(3, q^3)."""
    ctx = pi.ctx
    H = adapted_frame(pi, L)
    T = Homography(ctx, companion_matrix(ctx))
    gen = H @ T @ H.inverse()
    E1, E2, E3 = carriers(pi, L)
    m, n = conjugate_lines(pi, L)
    q = ctx.q
    return SingerGroup(gen, q * q + q + 1, (E1, E2, E3), (L, m, n))


def line_coordinates(S):
    """Map every point of the host line to its theta label (E1 -> 0, E2 -> inf)."""
    fr = S.frame()
    ctx = S.ctx
    return {fr.point(t): t for t in range(ctx.size + 1)}


@dataclass(frozen=True)
class StabilizerPair:
    """Gamma = diag(tau, tau^q) and Delta = ((0, c), (1, 0)) on theta labels.

    ``c`` is 1 whenever the splash has norm value -1 (the canonical case).
    """

    ctx: object = field(compare=False, repr=False)
    gamma: tuple
    delta: tuple

    def apply(self, M, x):
        return pg1.mobius(self.ctx, M, x)

    def group(self):
        """All permutations of PG(1, q^3) generated by gamma and delta."""
        ctx = self.ctx
        labels = range(ctx.size + 1)
        gens = [tuple(self.apply(M, x) for x in labels) for M in (self.gamma, self.delta)]
        ident = tuple(labels)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    r = tuple(g[i] for i in p)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        return seen


def stabilizer_pair(S):
    ctx = S.ctx
    thetas = S.thetas()
    f = ctx.norm(next(iter(thetas)))
    f2 = ctx.mul(f, f)
    c = next(x for x in range(1, ctx.size) if ctx.norm(x) == f2)
    t = ctx.tau
    gamma = ((t, 0), (0, ctx.frob(t, 1)))
    delta = ((0, c), (1, 0))
    return StabilizerPair(ctx, gamma, delta)


def full_line_stabilizer(ctx, thetas):
    """Every element of PGL(2, q^3) mapping the label set to itself (brute force)."""
    thetas = frozenset(thetas)
    return [M for M in pg1.all_line_homographies(ctx)
            if pg1.image(ctx, M, thetas) == thetas]
