"""The projective line PG(1, q^3) as labels ``0 .. q^3`` (``q^3`` is infinity)."""
from __future__ import annotations

import itertools

from .plane import normalize, scale, vadd


def vec(ctx, x):
    return (1, 0) if x == ctx.inf else (x, 1)


def label(ctx, u, v):
    """Label of the projective point (u, v)."""
    if v == 0:
        if u == 0:
            raise ValueError("zero vector")
        return ctx.inf
    return ctx.div(u, v)


def mobius(ctx, M, x):
    """Apply the 2x2 matrix ``((a, b), (c, d))`` to a label."""
    (a, b), (c, d) = M
    mul, add = ctx.mul_table, ctx.add_table
    u, v = vec(ctx, x)
    return label(ctx, add[mul[a][u]][mul[b][v]], add[mul[c][u]][mul[d][v]])


def mat2_mul(ctx, A, B):
    mul, add = ctx.mul_table, ctx.add_table
    return tuple(tuple(add[mul[A[i][0]][B[0][j]]][mul[A[i][1]][B[1][j]]]
                       for j in range(2)) for i in range(2))


def mat2_det(ctx, M):
    (a, b), (c, d) = M
    return ctx.sub(ctx.mul(a, d), ctx.mul(b, c))


def _frame2(ctx, triple):
    p1, p2, p3 = (vec(ctx, x) for x in triple)
    d = mat2_det(ctx, ((p1[0], p2[0]), (p1[1], p2[1])))
    if d == 0 or len(set(triple)) != 3:
        raise ValueError("frame points must be distinct")
    l1 = ctx.div(ctx.sub(ctx.mul(p3[0], p2[1]), ctx.mul(p3[1], p2[0])), d)
    l2 = ctx.div(ctx.sub(ctx.mul(p1[0], p3[1]), ctx.mul(p1[1], p3[0])), d)
    return ((ctx.mul(l1, p1[0]), ctx.mul(l2, p2[0])),
            (ctx.mul(l1, p1[1]), ctx.mul(l2, p2[1])))


def mobius_from_triples(ctx, src, dst):
    """The unique element of PGL(2, q^3) sending the labels ``src`` to ``dst``."""
    A = _frame2(ctx, src)
    B = _frame2(ctx, dst)
    (a, b), (c, d) = A
    adj = ((d, ctx.neg(b)), (ctx.neg(c), a))
    return mat2_mul(ctx, B, adj)


def image(ctx, M, xs):
    return frozenset(mobius(ctx, M, x) for x in xs)


def find_line_homography(ctx, A, B):
    """Some M in PGL(2, q^3) with M(A) = B, or None.  Brute force over triples."""
    A, B = frozenset(A), frozenset(B)
    if len(A) != len(B) or len(A) < 3:
        return None
    src = sorted(A)[:3]
    for dst in itertools.permutations(sorted(B), 3):
        M = mobius_from_triples(ctx, src, dst)
        if image(ctx, M, A) == B:
            return M
    return None


def all_line_homographies(ctx):
    """Every element of PGL(2, q^3), one matrix each."""
    n = ctx.size
    for b, c, d in itertools.product(range(n), repeat=3):
        # first nonzero entry scaled to 1: either a = 1, or a = 0 and b = 1
        for a in (0, 1):
            if a == 0 and b != 1:
                continue
            M = ((a, b), (c, d))
            if mat2_det(ctx, M):
                yield M


class LineFrame:
    """Coordinates on a line of PG(2, q^3): ``E1 + theta*E2`` has label theta.

    ``E1`` gets 0, ``E2`` gets infinity and ``E1 + E2`` gets 1, using the
    normalized coordinate vectors of E1 and E2.
    """

    def __init__(self, ctx, E1, E2):
        if E1 == E2:
            raise ValueError("frame points must differ")
        self.ctx, self.E1, self.E2 = ctx, E1, E2
        mul, sub = ctx.mul_table, ctx.sub
        for i, j in ((0, 1), (0, 2), (1, 2)):
            d = sub(mul[E1[i]][E2[j]], mul[E1[j]][E2[i]])
            if d:
                self._minor = (i, j, ctx.inv(d))
                break

    def theta(self, X):
        ctx = self.ctx
        mul, sub = ctx.mul_table, ctx.sub
        i, j, dinv = self._minor
        E1, E2 = self.E1, self.E2
        alpha = mul[sub(mul[X[i]][E2[j]], mul[X[j]][E2[i]])][dinv]
        beta = mul[sub(mul[E1[i]][X[j]], mul[E1[j]][X[i]])][dinv]
        return label(ctx, beta, alpha)

    def point(self, theta):
        ctx = self.ctx
        if theta == ctx.inf:
            return self.E2
        return normalize(ctx, vadd(ctx, self.E1, scale(ctx, theta, self.E2)))
