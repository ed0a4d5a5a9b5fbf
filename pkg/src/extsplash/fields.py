"""Exact arithmetic in GF(q) and GF(q^3).

Elements of GF(q^3) are integer labels ``a0 + a1*q + a2*q**2`` standing for
``a0 + a1*tau + a2*tau**2`` where ``tau`` is a root of the defining cubic
``x^3 - t2 x^2 - t1 x - t0``.  Labels ``0 .. q-1`` are exactly the subfield
GF(q), so a GF(q) element needs no conversion to be used in GF(q^3).

All tables are built once per context; every operation is a list lookup.
"""
from __future__ import annotations

import functools
import itertools

from .errors import (
    NonPrimitiveRoot,
    NotPrimePower,
    ReduciblePolynomial,
    ZeroRightHandSide,
)

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)


def prime_power(q):
    """Return ``(p, k)`` with ``q == p**k``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"q={q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotPrimePower(f"q={q} is not a prime power")
    return p, k


class BaseField:
    """GF(q) for q = p^k, elements labelled 0..q-1 by base-p digits."""

    def __init__(self, q):
        p, k = prime_power(q)
        self.q, self.p, self.k = q, p, k
        if k == 1:
            self.modulus = None
            add = [[(a + b) % p for b in range(q)] for a in range(q)]
            mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            self.modulus = self._find_modulus(p, k)
            digits = [self._digits(a) for a in range(q)]
            add = [[self._label([(x + y) % p for x, y in zip(digits[a], digits[b])])
                    for b in range(q)] for a in range(q)]
            mul = [[self._label(self._polymul(digits[a], digits[b]))
                    for b in range(q)] for a in range(q)]
        self.add_table = add
        self.mul_table = mul
        self.neg_table = [next(b for b in range(q) if add[a][b] == 0) for a in range(q)]
        self.inv_table = [0] + [next(b for b in range(1, q) if mul[a][b] == 1)
                                for a in range(1, q)]

    def _digits(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _label(self, digits):
        return sum(d * self.p ** i for i, d in enumerate(digits))

    @staticmethod
    def _find_modulus(p, k):
        # monic degree-k polynomial with no root in GF(p); k <= 3 so that suffices
        for low in itertools.product(range(p), repeat=k):
            coeffs = list(low) + [1]
            if all(sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p
                   for x in range(p)):
                return coeffs
        raise AssertionError("no irreducible polynomial found")  # pragma: no cover

    def _polymul(self, a, b):
        p, k, mod = self.p, self.k, self.modulus
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                for i in range(k + 1):
                    prod[d - k + i] = (prod[d - k + i] - c * mod[i]) % p
        return prod[:k]

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a][b]


class FieldCtx:
    """GF(q^3) built from a primitive cubic over GF(q).

    Immutable after construction. ``inf`` (= q^3) is the label used for the
    point at infinity of PG(1, q^3) by the line-coordinate helpers.
    """

    def __init__(self, q, t0, t1, t2):
        base = BaseField(q)
        self.base = base
        self.q, self.p = q, base.p
        self.t0, self.t1, self.t2 = t0, t1, t2
        if not all(0 <= t < q for t in (t0, t1, t2)):
            raise ReduciblePolynomial("coefficients must be GF(q) labels")
        for r in range(q):
            if _eval_cubic(base, (t0, t1, t2), r) == 0:
                raise ReduciblePolynomial(
                    f"x^3 - {t2}x^2 - {t1}x - {t0} has root {r} in GF({q})")
        n = q ** 3
        self.size = n
        self.inf = n
        self.tau = q
        self.order = n - 1

        # powers of tau as coefficient triples
        badd, bmul = base.add_table, base.mul_table
        exp = []
        a = (1, 0, 0)
        for _ in range(n - 1):
            exp.append(a[0] + a[1] * q + a[2] * q * q)
            a0, a1, a2 = a
            # (a0 + a1 t + a2 t^2) * t with t^3 = t0 + t1 t + t2 t^2
            a = (bmul[a2][t0], badd[a0][bmul[a2][t1]], badd[a1][bmul[a2][t2]])
            if a == (1, 0, 0):
                break
        if len(exp) != n - 1:
            raise NonPrimitiveRoot(
                f"tau has order {len(exp)}, not {n - 1}")
        self.exp_table = exp
        log = [None] * n
        for i, x in enumerate(exp):
            log[x] = i
        self.log_table = log

        coeffs = [(x % q, (x // q) % q, x // (q * q)) for x in range(n)]
        self._coeffs = coeffs
        self.add_table = [
            [badd[ca[0]][cb[0]] + badd[ca[1]][cb[1]] * q + badd[ca[2]][cb[2]] * q * q
             for cb in coeffs] for ca in coeffs]
        m = n - 1
        row0 = [0] * n
        mul = [row0]
        for x in range(1, n):
            lx = log[x]
            mul.append([0] + [exp[(lx + log[y]) % m] for y in range(1, n)])
        self.mul_table = mul
        self.neg_table = [base.neg_table[c0] + base.neg_table[c1] * q
                          + base.neg_table[c2] * q * q for c0, c1, c2 in coeffs]
        self.inv_table = [0] + [exp[(-log[x]) % m] for x in range(1, n)]
        self.frob_table = [
            list(range(n)),
            [0] + [exp[(log[x] * q) % m] for x in range(1, n)],
            [0] + [exp[(log[x] * q * q) % m] for x in range(1, n)],
        ]
        e = q * q + q + 1
        self.norm_table = [0] + [exp[(log[x] * e) % m] for x in range(1, n)]
        f1, f2 = self.frob_table[1], self.frob_table[2]
        add = self.add_table
        self.trace_table = [add[add[x][f1[x]]][f2[x]] for x in range(n)]
        self.minus_one = self.neg_table[1]

    def __repr__(self):
        return f"FieldCtx(q={self.q}, t0={self.t0}, t1={self.t1}, t2={self.t2})"

    # arithmetic
    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul_table[a][self.inv(b)]

    def pow(self, a, e):
        if a == 0:
            return 1 if e == 0 else 0
        return self.exp_table[(self.log_table[a] * e) % self.order]

    def frob(self, a, i=1):
        return self.frob_table[i % 3][a]

    def norm(self, a):
        return self.norm_table[a]

    def trace(self, a):
        return self.trace_table[a]

    def is_base(self, a):
        return a < self.q

    def log(self, a):
        return self.log_table[a]

    # conversions
    def coeffs(self, a):
        return self._coeffs[a]

    def elem(self, a0, a1=0, a2=0):
        q = self.q
        return a0 + a1 * q + a2 * q * q

    def elements(self):
        return range(self.size)

    def base_elements(self):
        return range(self.q)

    def to_text(self, a):
        return ",".join(str(c) for c in self._coeffs[a])

    def from_text(self, text):
        parts = [int(s) for s in text.split(",")]
        if len(parts) != 3 or not all(0 <= c < self.q for c in parts):
            raise ValueError(f"bad element text {text!r}")
        return self.elem(*parts)

    def to_dict(self):
        return {"q": self.q, "t0": self.t0, "t1": self.t1, "t2": self.t2}


def _eval_cubic(base, poly, x):
    t0, t1, t2 = poly
    mul, sub = base.mul, base.sub
    x2 = mul(x, x)
    val = mul(x2, x)
    val = sub(val, mul(t2, x2))
    val = sub(val, mul(t1, x))
    return sub(val, t0)


@functools.lru_cache(maxsize=None)
def make_field(q, poly=None):
    """Build (and cache) the GF(q^3) context.

    ``poly`` is ``(t0, t1, t2)``; when omitted the lexicographically smallest
    ``(t2, t1, t0)`` giving an irreducible cubic with primitive root is used.
    """
    prime_power(q)
    if q not in SUPPORTED_Q:
        raise NotPrimePower(f"q={q} outside the supported range {SUPPORTED_Q}")
    if poly is not None:
        t0, t1, t2 = poly
        return FieldCtx(q, t0, t1, t2)
    for t2, t1, t0 in itertools.product(range(q), repeat=3):
        try:
            return FieldCtx(q, t0, t1, t2)
        except (ReduciblePolynomial, NonPrimitiveRoot):
            continue
    raise AssertionError("no primitive cubic found")  # pragma: no cover


def norm(ctx, x):
    return ctx.norm_table[x]


def trace(ctx, x):
    return ctx.trace_table[x]


def frobenius(ctx, x, i):
    return ctx.frob_table[i % 3][x]


def solve_norm_eq(ctx, f):
    """All theta in GF(q^3) with N(theta) = f, for nonzero f in GF(q)."""
    if f == 0:
        raise ZeroRightHandSide("N(theta) = 0 only has the zero solution")
    if not ctx.is_base(f):
        raise ValueError(f"{f} is not in GF(q)")
    nt = ctx.norm_table
    return frozenset(x for x in range(1, ctx.size) if nt[x] == f)
