"""Incidence geometry of PG(2, q^3).

Points and lines are plain tuples of three field labels, normalized so the
first nonzero coordinate is 1.  Whether a triple is a point or a line is
decided by the function it is passed to.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DegenerateFrame, EqualArguments, NotCollinear, NotDistinct

CANONICAL_FRAME = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))


def normalize(ctx, v):
    x, y, z = v
    if x:
        if x == 1:
            return (1, y, z)
        i = ctx.inv_table[x]
        m = ctx.mul_table[i]
        return (1, m[y], m[z])
    if y:
        if y == 1:
            return (0, 1, z)
        return (0, 1, ctx.mul_table[ctx.inv_table[y]][z])
    if z:
        return (0, 0, 1)
    raise ValueError("the zero vector is not a projective point")


def dot(ctx, u, v):
    mul, add = ctx.mul_table, ctx.add_table
    return add[add[mul[u[0]][v[0]]][mul[u[1]][v[1]]]][mul[u[2]][v[2]]]


def incidence(ctx, P, L):
    """True iff point P lies on line L."""
    return dot(ctx, P, L) == 0


def cross(ctx, u, v):
    mul, add, neg = ctx.mul_table, ctx.add_table, ctx.neg_table
    x1, y1, z1 = u
    x2, y2, z2 = v
    return (add[mul[y1][z2]][neg[mul[z1][y2]]],
            add[mul[z1][x2]][neg[mul[x1][z2]]],
            add[mul[x1][y2]][neg[mul[y1][x2]]])


def join(ctx, P, Q):
    if P == Q:
        raise EqualArguments("join of a point with itself")
    return normalize(ctx, cross(ctx, P, Q))


def meet(ctx, L, M):
    if L == M:
        raise EqualArguments("meet of a line with itself")
    return normalize(ctx, cross(ctx, L, M))


def det3(ctx, a, b, c):
    return dot(ctx, a, cross(ctx, b, c))


def collinear(ctx, P, Q, R):
    return det3(ctx, P, Q, R) == 0


def scale(ctx, s, v):
    m = ctx.mul_table[s]
    return (m[v[0]], m[v[1]], m[v[2]])


def vadd(ctx, u, v):
    add = ctx.add_table
    return (add[u[0]][v[0]], add[u[1]][v[1]], add[u[2]][v[2]])


def frobenius_point(ctx, P, i=1):
    f = ctx.frob_table[i % 3]
    return (f[P[0]], f[P[1]], f[P[2]])


@functools.lru_cache(maxsize=None)
def all_points(ctx):
    """Every point of PG(2, q^3), in lexicographic order."""
    n = ctx.size
    pts = [(0, 0, 1)]
    pts += [(0, 1, z) for z in range(n)]
    pts += [(1, y, z) for y in range(n) for z in range(n)]
    return tuple(sorted(pts))


# lines use the same normalized triples
all_lines = all_points


@functools.lru_cache(maxsize=None)
def base_points(ctx):
    """The points of PG(2, q) (all coordinates in GF(q))."""
    q = ctx.q
    return tuple(p for p in itertools.product(range(q), repeat=3)
                 if any(p) and p[next(i for i in range(3) if p[i])] == 1)


def points_on_line(ctx, L):
    return [P for P in all_points(ctx) if incidence(ctx, P, L)]


# 3x3 matrices as tuples of row tuples

def mat_vec(ctx, M, v):
    return tuple(dot(ctx, row, v) for row in M)


def mat_mul(ctx, A, B):
    cols = tuple(zip(*B))
    return tuple(tuple(dot(ctx, row, col) for col in cols) for row in A)


def transpose(M):
    return tuple(zip(*M))


def adjugate(ctx, M):
    # rows of adj(M) are cross products of pairs of columns
    c0, c1, c2 = transpose(M)
    return (cross(ctx, c1, c2), cross(ctx, c2, c0), cross(ctx, c0, c1))


def det(ctx, M):
    c0, c1, c2 = transpose(M)
    return det3(ctx, c0, c1, c2)


def _normalize_matrix(ctx, M):
    flat = [x for row in M for x in row]
    lead = next((x for x in flat if x), 0)
    if lead == 0:
        raise ValueError("zero matrix")
    if lead == 1:
        return tuple(tuple(row) for row in M)
    m = ctx.mul_table[ctx.inv_table[lead]]
    return tuple(tuple(m[x] for x in row) for row in M)


@dataclass(frozen=True)
class Homography:
    """An element of PGL(3, q^3), matrix scaled so its first nonzero entry is 1."""

    ctx: object = field(compare=False, repr=False)
    matrix: tuple

    def __post_init__(self):
        if det(self.ctx, self.matrix) == 0:
            raise DegenerateFrame("singular matrix")
        object.__setattr__(self, "matrix", _normalize_matrix(self.ctx, self.matrix))

    @classmethod
    def identity(cls, ctx):
        return cls(ctx, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def raw(self, v):
        """M v without normalization (keeps scalar information)."""
        return mat_vec(self.ctx, self.matrix, v)

    def __call__(self, P):
        return normalize(self.ctx, mat_vec(self.ctx, self.matrix, P))

    @cached_property
    def _line_matrix(self):
        # (M^-1)^T is proportional to adj(M)^T
        return transpose(adjugate(self.ctx, self.matrix))

    def line(self, L):
        return normalize(self.ctx, mat_vec(self.ctx, self._line_matrix, L))

    def __matmul__(self, other):
        return Homography(self.ctx, mat_mul(self.ctx, self.matrix, other.matrix))

    def inverse(self):
        return Homography(self.ctx, adjugate(self.ctx, self.matrix))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = Homography.identity(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def is_identity(self):
        return self.matrix == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def order(self, limit=None):
        limit = limit or self.ctx.size ** 3
        h = self
        for k in range(1, limit + 1):
            if h.is_identity():
                return k
            h = h @ self
        raise ValueError("order exceeds limit")


def _frame_matrix(ctx, frame):
    """Matrix with columns scaled so the 4th frame point is their sum."""
    a, b, c, d = frame
    cols = (a, b, c)
    dt = det3(ctx, a, b, c)
    if dt == 0:
        raise DegenerateFrame("first three frame points are collinear")
    # Cramer: d = la*a + lb*b + lc*c
    lam = [ctx.div(det3(ctx, *(d if j == i else cols[j] for j in range(3))), dt)
           for i in range(3)]
    if not all(lam):
        raise DegenerateFrame("frame is not a quadrangle")
    scaled = [scale(ctx, l, v) for l, v in zip(lam, cols)]
    return transpose(scaled)


def homography_from_frames(ctx, src, dst):
    """The unique homography sending the four points ``src`` to ``dst`` in order."""
    A = _frame_matrix(ctx, src)
    B = _frame_matrix(ctx, dst)
    return Homography(ctx, mat_mul(ctx, B, adjugate(ctx, A)))


def is_quadrangle(ctx, pts):
    return len(set(pts)) == 4 and not any(
        collinear(ctx, *tri) for tri in itertools.combinations(pts, 3))


@dataclass(frozen=True)
class Subline:
    """An order-q-subline: q+1 points on the line ``host``."""

    host: tuple
    points: frozenset

    def sorted_points(self):
        return sorted(self.points)


def subline_through(ctx, P, Q, R):
    """The order-q-subline through three distinct collinear points."""
    if len({P, Q, R}) != 3:
        raise NotDistinct("subline needs three distinct points")
    if not collinear(ctx, P, Q, R):
        raise NotCollinear("points are not collinear")
    # write R = a P + b Q using a nonvanishing 2x2 minor of (P, Q)
    mul, sub = ctx.mul_table, ctx.sub
    for i, j in ((0, 1), (0, 2), (1, 2)):
        d = sub(mul[P[i]][Q[j]], mul[P[j]][Q[i]])
        if d:
            a = ctx.div(sub(mul[R[i]][Q[j]], mul[R[j]][Q[i]]), d)
            b = ctx.div(sub(mul[P[i]][R[j]], mul[P[j]][R[i]]), d)
            break
    Pa, Qb = scale(ctx, a, P), scale(ctx, b, Q)
    pts = {Q}
    for lam in range(ctx.q):
        pts.add(normalize(ctx, vadd(ctx, Pa, scale(ctx, lam, Qb))))
    return Subline(join(ctx, P, Q), frozenset(pts))


def subline_from_points(ctx, pts):
    """Subline through the first three of ``pts`` (sorted); None if not collinear."""
    P, Q, R = sorted(pts)[:3]
    if not collinear(ctx, P, Q, R):
        return None
    return subline_through(ctx, P, Q, R)


def is_subline(ctx, pts):
    pts = frozenset(pts)
    if len(pts) != ctx.q + 1:
        return False
    sub = subline_from_points(ctx, pts)
    return sub is not None and sub.points == pts


class Subplane:
    """An order-q-subplane: the image of PG(2, q) under ``gen``.

    Equality and hashing use the point set only.
    """

    __slots__ = ("gen", "points", "lines", "__weakref__")

    def __init__(self, gen, points, lines):
        self.gen = gen
        self.points = frozenset(points)
        self.lines = frozenset(lines)

    @property
    def ctx(self):
        return self.gen.ctx

    def key(self):
        return tuple(sorted(self.points))

    def __eq__(self, other):
        return isinstance(other, Subplane) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"Subplane({len(self.points)} points, gen={self.gen.matrix})"

    def lines_through(self, P):
        ctx = self.ctx
        return [L for L in self.lines if incidence(ctx, P, L)]

    def points_on(self, L):
        ctx = self.ctx
        return [P for P in self.points if incidence(ctx, P, L)]


def subplane_from_homography(h):
    ctx = h.ctx
    base = base_points(ctx)
    return Subplane(h, (h(P) for P in base), (h.line(L) for L in base))


def subplane_from_quadrangle(ctx, P1, P2, P3, P4):
    """The unique order-q-subplane containing the quadrangle P1..P4."""
    h = homography_from_frames(ctx, CANONICAL_FRAME, (P1, P2, P3, P4))
    return subplane_from_homography(h)


def base_subplane(ctx):
    """PG(2, q) itself."""
    return subplane_from_homography(Homography.identity(ctx))


def conjugate(pi, X, i=1):
    """Image of point X under zeta^i, zeta = gen . Frobenius . gen^-1."""
    ctx = pi.ctx
    g_inv = pi.gen.inverse()
    return pi.gen(frobenius_point(ctx, g_inv.raw(X), i))


def conjugate_line(pi, L, i=1):
    ctx = pi.ctx
    g_inv = pi.gen.inverse()
    return pi.gen.line(frobenius_point(ctx, g_inv.line(L), i))


def fixed_points(h):
    return [P for P in all_points(h.ctx) if h(P) == P]


def fixed_lines(h):
    return [L for L in all_lines(h.ctx) if h.line(L) == L]


# text forms

def point_to_text(ctx, P):
    return "(" + ",".join(ctx.to_text(x) for x in P) + ")"


def line_to_text(ctx, L):
    return "[" + ",".join(ctx.to_text(x) for x in L) + "]"


def parse_triple(ctx, text):
    """Parse "(a0,a1,a2,b0,...)" or "[...]" into a normalized triple."""
    body = text.strip().strip("()[]")
    nums = [int(s) for s in body.split(",")]
    if len(nums) != 9:
        raise ValueError(f"expected 9 integers in {text!r}")
    coords = tuple(ctx.elem(*nums[3 * i:3 * i + 3]) for i in range(3))
    return normalize(ctx, coords)
