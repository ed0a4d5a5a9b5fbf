import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extsplash.errors import NonPrimitiveRoot, NotPrimePower, ReduciblePolynomial, ZeroRightHandSide
from extsplash.fields import (
    SUPPORTED_Q,
    frobenius,
    make_field,
    norm,
    prime_power,
    solve_norm_eq,
    trace,
)


def test_default_cubic_q2():
    ctx = make_field(2)
    assert (ctx.t0, ctx.t1, ctx.t2) == (1, 1, 0)
    # tau^3 = tau + 1
    t = ctx.tau
    assert ctx.mul(ctx.mul(t, t), t) == ctx.add(t, 1)


def test_q3_tau_has_order_26():
    ctx = make_field(3)
    x, k = ctx.tau, 1
    while x != 1:
        x = ctx.mul(x, ctx.tau)
        k += 1
    assert k == 26


def test_reducible_polynomial_rejected():
    with pytest.raises(ReduciblePolynomial):
        make_field(2, (0, 0, 0))
    with pytest.raises(ReduciblePolynomial):
        make_field(7, (0, 0, 0))


def test_non_primitive_root_rejected():
    # x^3 - 2 is irreducible over GF(7) but a root has order 9 (its cube is 2, of order 3)
    with pytest.raises(NonPrimitiveRoot):
        make_field(7, (2, 0, 0))


@pytest.mark.parametrize("q", [1, 6, 10, 12])
def test_not_prime_power(q):
    with pytest.raises(NotPrimePower):
        make_field(q)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)


@pytest.mark.parametrize("q", SUPPORTED_Q)
def test_norm_of_tau_is_t0(q):
    ctx = make_field(q)
    assert norm(ctx, ctx.tau) == ctx.t0
    # also as the product of conjugates
    t = ctx.tau
    assert ctx.mul(ctx.mul(t, ctx.frob(t, 1)), ctx.frob(t, 2)) == ctx.t0


def test_small_values(gf2):
    assert norm(gf2, 0) == 0 and norm(gf2, 1) == 1
    assert all(norm(gf2, x) == 1 for x in range(1, 8))
    assert trace(gf2, 0) == 0
    assert trace(gf2, 1) == 1
    assert trace(gf2, gf2.tau) == 0
    assert frobenius(gf2, gf2.tau, 1) == gf2.mul(gf2.tau, gf2.tau)


def test_solve_norm_eq(gf2, gf3):
    assert solve_norm_eq(gf2, 1) == frozenset(range(1, 8))
    assert len(solve_norm_eq(gf3, 1)) == 13
    assert not (solve_norm_eq(gf3, 1) & solve_norm_eq(gf3, 2))
    with pytest.raises(ZeroRightHandSide):
        solve_norm_eq(gf3, 0)


def test_subfield_labels(gf4):
    fixed = [x for x in range(gf4.size) if gf4.frob(x, 1) == x]
    assert fixed == list(range(4))


def test_text_round_trip(gf3):
    for x in range(gf3.size):
        assert gf3.from_text(gf3.to_text(x)) == x
    assert gf3.to_dict() == {"q": 3, "t0": gf3.t0, "t1": gf3.t1, "t2": gf3.t2}


# property tests over every supported field

fields = st.sampled_from(SUPPORTED_Q).map(make_field)


@st.composite
def field_and_elements(draw, k=2):
    ctx = draw(fields)
    xs = [draw(st.integers(0, ctx.size - 1)) for _ in range(k)]
    return ctx, xs


@settings(max_examples=300, deadline=None)
@given(field_and_elements(3))
def test_field_axioms(data):
    ctx, (a, b, c) = data
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    assert ctx.add(a, ctx.neg(a)) == 0
    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
    if a:
        assert ctx.mul(a, ctx.inv(a)) == 1


@settings(max_examples=300, deadline=None)
@given(field_and_elements(2))
def test_norm_multiplicative_trace_additive(data):
    ctx, (a, b) = data
    assert norm(ctx, ctx.mul(a, b)) == ctx.mul(norm(ctx, a), norm(ctx, b))
    assert trace(ctx, ctx.add(a, b)) == ctx.add(trace(ctx, a), trace(ctx, b))
    assert ctx.is_base(norm(ctx, a)) and ctx.is_base(trace(ctx, a))
    assert norm(ctx, a) == ctx.pow(a, ctx.q ** 2 + ctx.q + 1)


@settings(max_examples=200, deadline=None)
@given(field_and_elements(2), st.integers(0, 8))
def test_frobenius_automorphism(data, i):
    ctx, (a, b) = data
    assert frobenius(ctx, frobenius(ctx, a, i), 3 - i % 3) == a
    assert frobenius(ctx, ctx.mul(a, b), i) == ctx.mul(frobenius(ctx, a, i), frobenius(ctx, b, i))
    assert frobenius(ctx, ctx.add(a, b), i) == ctx.add(frobenius(ctx, a, i), frobenius(ctx, b, i))


@settings(max_examples=100, deadline=None)
@given(field_and_elements(1), st.integers(0, 8))
def test_trace_gf_q_linear(data, c):
    ctx, (a,) = data
    c = c % ctx.q
    assert trace(ctx, ctx.mul(c, a)) == ctx.mul(c, trace(ctx, a))
