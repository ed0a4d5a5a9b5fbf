
import pytest
from helpers import random_exterior_pair

from extsplash import pg1
from extsplash.errors import NotExterior, SecantLine
from extsplash.fields import make_field
from extsplash.plane import (
    all_points,
    base_subplane,
    conjugate,
    frobenius_point,
    incidence,
    points_on_line,
)
from extsplash.splash import (
    canonical_carrier,
    canonical_line,
    canonical_pair,
    carriers,
    full_line_stabilizer,
    line_coordinates,
    singer_group,
    splash,
    stabilizer_pair,
)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_canonical_splash_is_norm_fiber(q):
    ctx = make_field(q)
    pi, L = canonical_pair(ctx)
    S = splash(pi, L)
    assert S.kind == "exterior"
    assert len(S.points) == q * q + q + 1
    E = canonical_carrier(ctx)
    assert S.carriers == (E, frobenius_point(ctx, E, 1))
    assert S.third_conjugate == frobenius_point(ctx, E, 2)
    assert S.thetas() == frozenset(t for t in range(1, ctx.size) if ctx.norm(t) == ctx.minus_one)


def test_q2_splash_is_line_minus_carriers(pair2, gf2):
    pi, L = pair2
    S = splash(pi, L)
    assert S.points == frozenset(points_on_line(gf2, L)) - set(S.carriers)


def test_secant_line(gf2):
    with pytest.raises(SecantLine):
        splash(base_subplane(gf2), (0, 0, 1))


def test_tangent_splash(gf3):
    pi = base_subplane(gf3)
    L = (0, 1, gf3.tau)
    S = splash(pi, L)
    assert S.kind == "tangent"
    assert S.centre == (1, 0, 0)
    assert len(S.points) == 10 and S.centre in S.points
    with pytest.raises(NotExterior):
        carriers(pi, L)


def test_one_splash_point_per_line(pair3, gf3):
    pi, L = pair3
    S = splash(pi, L)
    for X in S.points:
        assert sum(1 for m in pi.lines if incidence(gf3, X, m)) == 1


def test_carriers_permuted_by_conjugacy(gf3):
    pi, L = random_exterior_pair(gf3, 7)
    E1, E2, E3 = carriers(pi, L)
    trio = {E1, E2, E3}
    assert {conjugate(pi, X, 1) for X in trio} == trio
    S = splash(pi, L)
    assert E1 not in S.points and E2 not in S.points


@pytest.mark.parametrize("seed", range(3))
def test_singer_group_random_pair(gf3, seed):
    pi, L = random_exterior_pair(gf3, seed)
    I = singer_group(pi, L)
    g = I.generator
    assert g.order() == 13
    assert set(I.orbit(min(pi.points))) == set(pi.points)
    assert g.line(L) == L
    S = splash(pi, L)
    assert frozenset(g(X) for X in S.points) == S.points
    assert set(I.orbit(min(S.points))) == set(S.points)
    for E in I.fixed_points:
        assert g(E) == E


def test_singer_semiregular_off_fixed(pair2, gf2):
    pi, L = pair2
    I = singer_group(pi, L)
    fixed = set(I.fixed_points)
    for P in all_points(gf2):
        if P not in fixed:
            assert len(I.orbit(P)) == 7


def test_line_coordinates(pair3, gf3):
    pi, L = pair3
    S = splash(pi, L)
    coords = line_coordinates(S)
    E1, E2 = S.carriers
    assert coords[E1] == 0 and coords[E2] == gf3.inf
    assert len(coords) == gf3.size + 1
    assert {coords[X] for X in S.points} == S.thetas()


def test_stabilizer_pair(gf2, gf3):
    for ctx in (gf2, gf3):
        pi, L = canonical_pair(ctx)
        S = splash(pi, L)
        sp = stabilizer_pair(S)
        th = S.thetas()
        assert pg1.image(ctx, sp.gamma, th) == th
        assert pg1.image(ctx, sp.delta, th) == th
        assert sp.delta == ((0, 1), (1, 0))
        assert sp.apply(sp.delta, 0) == ctx.inf and sp.apply(sp.gamma, 0) == 0
        n = ctx.q ** 2 + ctx.q + 1
        assert len(sp.group()) == 2 * n


def test_full_stabilizer_order_q2(pair2, gf2):
    S = splash(*pair2)
    assert len(full_line_stabilizer(gf2, S.thetas())) == 14


def test_to_dict(pair2):
    d = splash(*pair2).to_dict()
    assert d["kind"] == "exterior"
    assert len(d["points"]) == 7 and len(d["carriers"]) == 2
    assert len(d["thetas"]) == 7


def test_canonical_line_value(gf2):
    t = gf2.tau
    tq = gf2.frob(t, 1)
    L = canonical_line(gf2)
    # [-tau tau^q, tau^q + tau, -1] normalized
    raw = (gf2.neg(gf2.mul(t, tq)), gf2.add(tq, t), gf2.minus_one)
    assert all(incidence(gf2, P, L) == incidence(gf2, P, raw) for P in all_points(gf2))
