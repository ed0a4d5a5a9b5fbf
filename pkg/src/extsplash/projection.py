"""Projections of a subplane from a point onto a line."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import pg1
from .circle_models import cover_carriers
from .errors import MultiplePoints, NoPoint, PointInSubplane, PointOnLine, PreconditionViolation
from .plane import (
    all_points,
    frobenius_point,
    incidence,
    join,
    meet,
    point_to_text,
)
from .splash import canonical_carrier, singer_group, splash


@dataclass(frozen=True)
class ProjectionRecord:
    source: tuple
    target_line: tuple
    image: frozenset
    classification: str
    orbit_size_under_I: int | None = None


def project_points(ctx, pts, P, L):
    return frozenset(meet(ctx, join(ctx, P, X), L) for X in pts if X != P)


def classify_image(ctx, L, image):
    q = ctx.q
    n = len(image)
    if n == q * q + 1:
        return "tangent-splash"
    if n == q * q + q + 1 and cover_carriers(ctx, L, image):
        return "exterior-splash"
    return "degenerate"


def splash_orbit_under_I(pts, I):
    return len(I.set_orbit(pts))


def project(pi, P, L, I=None):
    ctx = pi.ctx
    if P in pi.points:
        raise PointInSubplane("projection centre lies in the subplane")
    if incidence(ctx, P, L):
        raise PointOnLine("projection centre lies on the target line")
    img = project_points(ctx, pi.points, P, L)
    orbit = splash_orbit_under_I(img, I) if I is not None else None
    return ProjectionRecord(P, L, img, classify_image(ctx, L, img), orbit)


def theta_formula(ctx, P, X):
    """Parameter of (PX meet L) for the canonical pair, from the closed-form quotient."""
    r, s, t = P
    x, y, z = X
    mul, add, sub = ctx.mul_table, ctx.add_table, ctx.sub
    tau = ctx.tau
    tau2 = mul[tau][tau]
    tq, t2q = ctx.frob(tau, 1), ctx.frob(tau2, 1)

    def lin(a, b, c):
        return add[add[mul[x][a]][mul[y][b]]][mul[z][c]]

    f = lin(sub(mul[s][tau2], mul[t][tau]), sub(t, mul[r][tau2]), sub(mul[r][tau], s))
    g = lin(sub(mul[t][tq], mul[s][t2q]), sub(mul[r][t2q], t), sub(s, mul[r][tq]))
    return pg1.label(ctx, f, g)


@dataclass
class ProjectionCensus:
    ctx: object = field(repr=False)
    host: tuple
    groups: dict  # image -> sorted list of projection points
    kinds: dict   # image -> classification
    orbits: dict  # image -> orbit size under I
    carrier_match: dict  # image -> bool (exterior images only)
    splash0: frozenset
    E3: tuple
    singer: object = field(repr=False)

    def stratum(self, kind):
        return {img: pts for img, pts in self.groups.items() if self.kinds[img] == kind}

    def rows(self):
        """One row per distinct image, in deterministic order."""
        out = []
        for img in sorted(self.groups, key=lambda s: sorted(s)):
            out.append({
                "kind": self.kinds[img],
                "size": len(img),
                "projection_points": len(self.groups[img]),
                "orbit_size": self.orbits[img],
                "carrier_match": self.carrier_match.get(img, False),
            })
        return out


def projection_census(pi, L):
    ctx = pi.ctx
    I = singer_group(pi, L)
    E1, E2, E3 = I.fixed_points
    S0 = splash(pi, L).points
    fr = pg1.LineFrame(ctx, E1, E2)
    groups = {}
    for P in all_points(ctx):
        if P in pi.points or incidence(ctx, P, L):
            continue
        img = project_points(ctx, pi.points, P, L)
        groups.setdefault(img, []).append(P)
    kinds, orbits, match = {}, {}, {}
    nt = ctx.norm_table
    for img in groups:
        kinds[img] = classify_image(ctx, L, img)
        orbits[img] = splash_orbit_under_I(img, I)
        if kinds[img] == "exterior-splash":
            ts = [fr.theta(X) for X in img]
            norms = {nt[t] for t in ts if t != ctx.inf}
            match[img] = ctx.inf not in ts and len(norms) == 1 and 0 not in norms
    return ProjectionCensus(ctx, L, groups, kinds, orbits, match, S0, E3, I)


def orbit_sizes_hold(census):
    q = census.ctx.q
    n = q * q + q + 1
    ok_ext = all(census.orbits[img] in (1, n) for img in census.stratum("exterior-splash"))
    ok_tan = all(census.orbits[img] == n for img in census.stratum("tangent-splash"))
    return ok_ext and ok_tan


def same_carrier_counts(census):
    """Projection-point counts of exterior images sharing the carriers E1, E2."""
    return sorted(len(census.groups[img]) for img, m in census.carrier_match.items() if m)


def carrier_counts_hold(census):
    q = census.ctx.q
    n = q * q + q + 1
    allowed = {1, n} if q % 2 == 0 else {n, n + 1}
    return all(c in allowed for c in same_carrier_counts(census))


def projection_conjecture_report(pi, census):
    """Tabulate the census against each clause of the conjecture (never raises)."""
    ctx = census.ctx
    q = ctx.q
    n = q * q + q + 1
    I = census.singer
    tangent = census.stratum("tangent-splash")
    on_lines = {P for P in all_points(ctx)
                if P not in pi.points and not incidence(ctx, P, census.host)
                and any(incidence(ctx, P, m) for m in pi.lines)}
    tangent_sources = {P for pts in tangent.values() for P in pts}
    report = {
        "q": q,
        "tangent": {
            "count": len(tangent),
            "expected": n * (q ** 3 - q - 1),
            "all_single_point": all(len(p) == 1 for p in tangent.values()),
            "sources_are_points_on_subplane_lines": tangent_sources == on_lines,
        },
    }
    S0 = census.splash0
    s0_points = census.groups.get(S0, [])
    same_carrier = []
    for img, m in sorted(census.carrier_match.items(), key=lambda kv: sorted(kv[0])):
        if not m or img == S0:
            continue
        pts = census.groups[img]
        non_e3 = [P for P in pts if P != census.E3]
        one_orbit = bool(non_e3) and set(I.orbit(non_e3[0])) == set(non_e3)
        same_carrier.append({
            "projection_points": len(pts),
            "includes_E3": census.E3 in pts,
            "others_form_one_I_orbit": one_orbit,
        })
    report["S0"] = {
        "in_census": S0 in census.groups,
        "projection_points": [point_to_text(ctx, P) for P in s0_points],
        "only_from_E3": s0_points == [census.E3],
    }
    report["same_carriers"] = {
        "count": len(same_carrier),
        "expected": q - 2,
        "entries": same_carrier,
    }
    remaining = Counter()
    two_point_same_orbit = 0
    for img, m in census.carrier_match.items():
        if m:
            continue
        pts = census.groups[img]
        remaining[len(pts)] += 1
        if len(pts) == 2 and pts[1] in I.orbit(pts[0]):
            two_point_same_orbit += 1
    report["remaining_exterior"] = {
        "by_projection_point_count": dict(sorted(remaining.items())),
        "two_point_images_in_one_orbit": two_point_same_orbit,
        "only_one_or_two_points": set(remaining) <= {1, 2},
    }
    report["degenerate_images"] = len(census.stratum("degenerate"))
    return report


def subline_projection_point(ctx, b, c):
    """The unique point off both hosts projecting subline b onto subline c."""
    m, L = b.host, c.host
    if m == L:
        raise PreconditionViolation("sublines must lie on different lines")
    X0 = meet(ctx, L, m)
    if X0 in b.points or X0 in c.points:
        raise PreconditionViolation("sublines must avoid the common point of their hosts")
    found = []
    for P in all_points(ctx):
        if incidence(ctx, P, L) or incidence(ctx, P, m):
            continue
        if project_points(ctx, b.points, P, L) == c.points:
            found.append(P)
    if not found:
        raise NoPoint("no projection point found")
    if len(found) > 1:
        raise MultiplePoints(f"{len(found)} projection points found")
    return found[0]


def tangent_pair(ctx):
    """PG(2, q) and the line [0, 1, tau], which meets it only in (1, 0, 0)."""
    from .plane import base_subplane
    return base_subplane(ctx), (0, 1, ctx.tau)


def verify_tangent_nonprojection(pi, L):
    """Project a tangent subplane from every point; no image may equal its splash."""
    ctx = pi.ctx
    q = ctx.q
    ST = splash(pi, L)
    if ST.kind != "tangent":
        raise PreconditionViolation("subplane must be tangent to the line")
    witnesses = []
    sizes = {"on-line": Counter(), "in-subplane": Counter(),
             "on-subplane-line": Counter(), "on-no-subplane-line": Counter()}
    for P in all_points(ctx):
        img = project_points(ctx, pi.points, P, L) if not incidence(ctx, P, L) else frozenset({P})
        if incidence(ctx, P, L):
            cat = "on-line"
        elif P in pi.points:
            cat = "in-subplane"
        elif any(incidence(ctx, P, m) for m in pi.lines):
            cat = "on-subplane-line"
        else:
            cat = "on-no-subplane-line"
        sizes[cat][len(img)] += 1
        if img == ST.points:
            witnesses.append(P)
    small = all(s < q * q + 1 for cat in ("on-line", "in-subplane") for s in sizes[cat])
    large = all(s > q * q + 1 for s in sizes["on-no-subplane-line"])
    return {
        "witnesses": witnesses,
        "splash_size": len(ST.points),
        "image_sizes": {k: dict(sorted(v.items())) for k, v in sizes.items()},
        "too_small_from_line_or_subplane": small,
        "too_large_from_points_on_no_line": large,
    }


def e3_projection(pi, L):
    """Projection of pi from the third conjugate point E3."""
    I = singer_group(pi, L)
    return project(pi, I.fixed_points[2], L, I)


def canonical_e3(ctx):
    return frobenius_point(ctx, canonical_carrier(ctx), 2)


def random_subline_pair(ctx, rng):
    """(b, c): random sublines on distinct lines m and l, both avoiding l meet m."""
    from .plane import points_on_line, subline_through
    pts = all_points(ctx)
    while True:
        m, L = rng.sample(pts, 2)
        X0 = meet(ctx, L, m)
        b = subline_through(ctx, *rng.sample([X for X in points_on_line(ctx, m) if X != X0], 3))
        c = subline_through(ctx, *rng.sample([X for X in points_on_line(ctx, L) if X != X0], 3))
        if X0 not in b.points and X0 not in c.points:
            return b, c
