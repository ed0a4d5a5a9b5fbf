"""Theorem checks grouped by topic, shared by the command line driver.

Each ``check_*`` function returns a :class:`Section`: a list of named boolean
checks (asserted results) plus free-form data, including any conjecture
findings, which never count as failures.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field

from . import pg1
from .census import (
    expected_class_size,
    expected_exterior_subplanes,
    expected_splash_count,
    family_swap_conjecture,
    full_census_q2,
    splash_count_check,
    two_subplanes_check,
    intersection_sample,
)
from .circle_models import (
    Cover,
    SherkSurface,
    all_covers,
    cover_carriers,
    cover_points,
    disjoint_splashes_with_carriers,
    fit_cover,
    is_scattered,
    linear_set_points,
    linear_set_to_splash_frame,
    pseudoregulus_linear_set,
    sherk_points,
    sherk_size_census,
    subplane_for_fiber,
)
from .plane import (
    all_points,
    fixed_lines,
    fixed_points,
    frobenius_point,
    incidence,
    is_quadrangle,
    normalize,
    point_to_text,
    scale,
    subplane_from_quadrangle,
    vadd,
)
from .projection import (
    projection_conjecture_report,
    e3_projection,
    orbit_sizes_hold,
    same_carrier_counts,
    carrier_counts_hold,
    project_points,
    projection_census,
    random_subline_pair,
    subline_projection_point,
    tangent_pair,
    theta_formula,
    verify_tangent_nonprojection,
)
from .splash import canonical_carrier, canonical_pair, singer_group, splash
from .sublines import (
    classify_families,
    conic_orbit,
    family_swap_report,
    special_conics,
    special_dual_conics,
    sublines_in_splash,
)


@dataclass
class Section:
    name: str
    checks: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.checks.values())

    def to_dict(self):
        return {"name": self.name, "passed": self.passed,
                "checks": dict(self.checks), "data": self.data}


def check_field(ctx):
    q = ctx.q
    n = ctx.size
    s = Section("field")
    s.data = ctx.to_dict()
    x, order = ctx.tau, 1
    while x != 1:
        x = ctx.mul(x, ctx.tau)
        order += 1
    s.checks["tau_primitive"] = order == n - 1
    nt, tt = ctx.norm_table, ctx.trace_table
    mul, add = ctx.mul_table, ctx.add_table
    s.checks["norm_multiplicative"] = all(
        nt[mul[a][b]] == ctx.mul(nt[a], nt[b]) for a in range(n) for b in range(n))
    s.checks["trace_additive"] = all(
        tt[add[a][b]] == ctx.add(tt[a], tt[b]) for a in range(n) for b in range(n))
    s.checks["trace_gf_q_linear"] = all(
        tt[mul[c][a]] == ctx.mul(c, tt[a]) for c in range(q) for a in range(n))
    s.checks["norm_trace_in_subfield"] = all(
        ctx.is_base(nt[a]) and ctx.is_base(tt[a]) for a in range(n))
    fibers = Counter(nt[a] for a in range(1, n))
    s.checks["norm_fibers_partition"] = (
        sorted(fibers) == list(range(1, q)) and set(fibers.values()) == {q * q + q + 1})
    s.checks["tau_norm_is_t0"] = nt[ctx.tau] == ctx.t0
    s.data["tau_order"] = order
    return s


def check_splash(ctx, seed=0):
    q = ctx.q
    n = q * q + q + 1
    s = Section("splash")
    pi, L = canonical_pair(ctx)
    S = splash(pi, L)
    E = canonical_carrier(ctx)
    Eq = frobenius_point(ctx, E, 1)
    expected = frozenset(normalize(ctx, vadd(ctx, E, scale(ctx, t, Eq)))
                         for t in range(1, ctx.size) if ctx.norm(t) == ctx.minus_one)
    I = singer_group(pi, L)
    g = I.generator
    s.checks["line_exterior"] = not any(incidence(ctx, P, L) for P in pi.points)
    s.checks["splash_is_norm_fiber"] = S.kind == "exterior" and S.points == expected
    s.checks["carriers"] = S.carriers == (E, Eq)
    s.checks["singer_order"] = g.order() == n
    P0 = min(pi.points)
    s.checks["singer_regular_on_points"] = set(I.orbit(P0)) == set(pi.points)
    s.checks["singer_regular_on_lines"] = set(I.line_orbit(min(pi.lines))) == set(pi.lines)
    s.checks["three_fixed_points"] = sorted(fixed_points(g)) == sorted(I.fixed_points)
    s.checks["three_fixed_lines"] = sorted(fixed_lines(g)) == sorted(I.fixed_lines)
    s.checks["theta_image_is_cover"] = S.thetas() == cover_points(ctx, fit_cover(S))

    # a random subplane and a random exterior line
    rng = random.Random(seed)
    pts = all_points(ctx)
    while True:
        quad = rng.sample(pts, 4)
        if is_quadrangle(ctx, quad):
            break
    pi2 = subplane_from_quadrangle(ctx, *quad)
    while True:
        L2 = rng.choice(pts)
        if not any(incidence(ctx, P, L2) for P in pi2.points):
            break
    S2 = splash(pi2, L2)
    I2 = singer_group(pi2, L2)
    s.checks["random_pair_singer_fixes_pair"] = (
        frozenset(I2.generator(P) for P in pi2.points) == pi2.points
        and I2.generator.line(L2) == L2 and I2.generator.order() == n)
    s.checks["random_pair_image_is_cover"] = S2.thetas() == cover_points(ctx, fit_cover(S2))
    s.data["canonical"] = S.to_dict()
    return s


def check_models(ctx):
    q = ctx.q
    s = Section("models")
    pi, L = canonical_pair(ctx)
    S = splash(pi, L)
    th = S.thetas()
    cover = cover_points(ctx, Cover("I", 0, ctx.minus_one))
    sherk = sherk_points(ctx, SherkSurface(1, 0, 0, 1))
    lin = pseudoregulus_linear_set(ctx)
    lin_img = pg1.image(ctx, linear_set_to_splash_frame(ctx), linear_set_points(ctx, lin))
    s.checks["cover_equals_splash"] = cover == th
    s.checks["sherk_equals_splash"] = sherk == th
    s.checks["linear_set_scattered"] = is_scattered(ctx, lin)
    s.checks["linear_set_equals_splash"] = lin_img == th
    if q <= 3:
        covers = all_covers(ctx)
        census = sherk_size_census(ctx)
        stratum = {pts for _, pts in census.get(q * q + q + 1, [])}
        s.checks["cover_count"] = len(covers) == expected_splash_count(q)
        s.checks["sherk_stratum_equals_covers"] = stratum == set(covers)
        s.data["sherk_sizes"] = {str(k): len(v) for k, v in sorted(census.items())}
    # norm fibers with fixed carriers, each realized by a subplane
    E1, E2 = S.carriers
    fibers = disjoint_splashes_with_carriers(ctx, E1, E2, L)
    union = set()
    disjoint = True
    realized = True
    for f, pts in fibers:
        if union & pts:
            disjoint = False
        union |= pts
        sub = subplane_for_fiber(ctx, E1, E2, L, f)
        Sf = splash(sub, L)
        realized &= Sf.points == pts and Sf.carriers == (E1, E2)
    s.checks["q_minus_1_fibers_per_carrier_pair"] = len(fibers) == q - 1 and disjoint
    s.checks["fibers_realized_by_subplanes"] = realized
    return s


def check_sublines(ctx):
    q = ctx.q
    n = q * q + q + 1
    s = Section("sublines")
    pi, L = canonical_pair(ctx)
    S = splash(pi, L)
    oracle = sublines_in_splash(S)
    s.data["oracle_count"] = len(oracle)
    if q <= 2:
        s.data["note"] = "family classification needs q > 2; every 3 splash points form a subline"
        return s
    X, Y = classify_families(pi, L)
    s.checks["oracle_count"] = len(oracle) == 2 * n
    s.checks["pencil_family_size"] = len(X) == n
    s.checks["dual_conic_family_size"] = len(Y) == n
    s.checks["families_disjoint"] = not (X & Y)
    s.checks["families_cover_oracle"] = (X | Y) == oracle
    conics = special_conics(pi, L)
    duals = special_dual_conics(pi, L)
    s.checks["special_conic_bundle"] = len(conics) == n and all(
        len(a.members & b.members) == 1 for a, b in itertools.combinations(conics, 2))
    s.checks["special_dual_conic_bundle"] = len(duals) == n and all(
        len(a.members & b.members) == 1 for a, b in itertools.combinations(duals, 2))
    s.checks["singer_regular_on_special_conics"] = (
        {frozenset(o) for o in conic_orbit(pi, L, conics[0])} == {c.members for c in conics}
        and len(conic_orbit(pi, L, conics[0])) == n)
    s.checks["singer_regular_on_special_dual_conics"] = (
        {frozenset(o) for o in conic_orbit(pi, L, duals[0])} == {c.members for c in duals}
        and len(conic_orbit(pi, L, duals[0])) == n)
    swap = family_swap_report(S, pi)
    for k, v in swap.items():
        s.checks["swap_" + k] = v
    return s


def check_projection(ctx, seed=0, census=True):
    q = ctx.q
    n = q * q + q + 1
    s = Section("projection")
    pi, L = canonical_pair(ctx)
    S = splash(pi, L)
    rec = e3_projection(pi, L)
    s.checks["e3_image_equals_splash_iff_q_even"] = (rec.image == S.points) == (q % 2 == 0)
    s.checks["e3_image_exterior_same_carriers"] = (
        rec.classification == "exterior-splash"
        and tuple(S.carriers) in cover_carriers(ctx, L, rec.image))
    if q <= 3:
        fr = S.frame()
        s.checks["theta_formula"] = all(
            fr.theta(X2) == theta_formula(ctx, P, X)
            for P in all_points(ctx)
            if P not in pi.points and not incidence(ctx, P, L)
            for X, X2 in ((X, _proj(ctx, P, X, L)) for X in pi.points))
    if census:
        c = projection_census(pi, L)
        tangent = c.stratum("tangent-splash")
        s.checks["tangent_images_count"] = len(tangent) == n * (q ** 3 - q - 1)
        s.checks["tangent_images_single_point"] = all(len(v) == 1 for v in tangent.values())
        s.checks["orbit_sizes"] = orbit_sizes_hold(c)
        s.checks["same_carrier_counts"] = carrier_counts_hold(c)
        s.data["same_carrier_counts"] = same_carrier_counts(c)
        s.data["conjecture_projection"] = projection_conjecture_report(pi, c)
        s.data["rows"] = c.rows()
    if q == 2:
        rng = random.Random(seed)
        ok = True
        for _ in range(20):
            b, cc = random_subline_pair(ctx, rng)
            try:
                subline_projection_point(ctx, b, cc)
            except Exception:
                ok = False
        s.checks["subline_projection_unique"] = ok
        tp, tl = tangent_pair(ctx)
        rep = verify_tangent_nonprojection(tp, tl)
        s.checks["tangent_splash_not_a_projection"] = not rep["witnesses"]
        s.data["tangent_nonprojection"] = {k: v for k, v in rep.items() if k != "witnesses"}
    return s


def _proj(ctx, P, X, L):
    return next(iter(project_points(ctx, [X], P, L)))


def check_census(ctx, seed=0, jobs=1, samples=None):
    q = ctx.q
    s = Section("census")
    pi, L = canonical_pair(ctx)
    S = splash(pi, L)
    if q == 2:
        report, T, classes = full_census_q2(jobs)
        s.checks["exterior_subplanes"] = report.exterior_subplanes == expected_exterior_subplanes(2)
        s.checks["splash_classes"] = report.splashes == expected_splash_count(2)
        s.checks["class_sizes"] = report.class_sizes == {str(expected_class_size(2)): expected_splash_count(2)}
        s.checks["carriers_shared_in_class"] = bool(report.carriers_shared)
        sizes = {int(k) for k in report.intersection_profile}
        s.checks["intersection_sizes_at_most_q_plus_1"] = sizes <= {0, 1, 2, 3}
        s.data["report"] = _report_dict(report, T, classes)
    else:
        count = splash_count_check(ctx)
        s.checks["splash_count_covers"] = count["covers"] == count["expected"]
        s.checks["splash_count_orbit"] = count["orbit"] == count["expected"] and count["orbit_is_covers"]
        s.checks["splash_stabilizer"] = count["stabilizer"] == count["expected_stabilizer"]
        s.checks["class_size_identity"] = count["class_size_identity"]
        s.data["splash_count"] = count
    n_samples = samples or (100 if q == 2 else 20)
    pairs = two_subplanes_check(ctx, S, n_samples, seed)
    s.checks["two_subplanes_per_subline"] = pairs["always_two"]
    s.checks["pair_meets_in_subline"] = pairs["pairs_meet_in_subline"]
    s.data["two_subplanes"] = pairs
    if q > 2:
        inter = intersection_sample(ctx, n_samples, seed)
        s.checks["intersection_sizes_allowed"] = inter["sizes_allowed"]
        s.checks["q_plus_1_intersections_are_sublines"] = inter["q_plus_1_are_sublines"]
        s.data["intersections"] = inter
        s.data["conjecture_family_swap"] = family_swap_conjecture(ctx, n_samples, seed)
    return s


def _report_dict(report, T, classes):
    from dataclasses import asdict
    d = asdict(report)
    d["per_splash"] = [
        {"splash": [point_to_text(T.ctx, T.points[i]) for i in sorted(k)], "subplanes": len(v)}
        for k, v in sorted(classes.items(), key=lambda kv: sorted(kv[0]))]
    return d


SECTIONS = {
    "field": check_field,
    "splash": check_splash,
    "models": check_models,
    "sublines": check_sublines,
    "project": check_projection,
    "census": check_census,
}
