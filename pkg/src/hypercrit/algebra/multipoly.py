"""Sparse multivariate polynomials over a field context.

Terms live in a dict from exponent tuples to nonzero coefficients. The
canonical term order (used for display and serialization) is graded
reverse lexicographic with ties broken by variable index.
"""

from __future__ import annotations

from ..errors import MixedContextError
from .unipoly import NEG_INF


def grevlex_key(expo):
    return (sum(expo), tuple(-e for e in reversed(expo)))


class MultiPoly:
    __slots__ = ("ctx", "n", "terms")

    def __init__(self, ctx, n, terms=None, normalized=False):
        self.ctx = ctx
        self.n = n
        if terms is None:
            self.terms = {}
        elif normalized:
            self.terms = dict(terms)
        else:
            clean = {}
            for expo, c in dict(terms).items():
                if len(expo) != n:
                    raise ValueError("exponent tuple of wrong length")
                if any(e < 0 for e in expo):
                    raise ValueError("negative exponent")
                if not ctx.is_zero(c):
                    clean[tuple(expo)] = c
            self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, ctx, n):
        return cls(ctx, n, {}, normalized=True)

    @classmethod
    def constant(cls, ctx, n, c):
        return cls(ctx, n, {(0,) * n: c})

    @classmethod
    def variable(cls, ctx, n, i):
        expo = tuple(1 if j == i else 0 for j in range(n))
        return cls(ctx, n, {expo: ctx.one}, normalized=True)

    @classmethod
    def from_int_terms(cls, ctx, n, int_terms):
        """[(coeff_int, expo)] with integer coefficients."""
        out = {}
        for c, expo in int_terms:
            expo = tuple(expo)
            val = ctx.from_int(c)
            if expo in out:
                val = ctx.add(out[expo], val)
            out[expo] = val
        return cls(ctx, n, out)

    # -- queries ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    @property
    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.ctx == other.ctx
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _check(self, other):
        if self.ctx != other.ctx or self.n != other.n:
            raise MixedContextError("multivariate operands do not match")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        ctx = self.ctx
        out = dict(self.terms)
        for expo, c in other.terms.items():
            if expo in out:
                s = ctx.add(out[expo], c)
                if ctx.is_zero(s):
                    del out[expo]
                else:
                    out[expo] = s
            else:
                out[expo] = c
        return MultiPoly(ctx, self.n, out, normalized=True)

    def __neg__(self):
        ctx = self.ctx
        return MultiPoly(
            ctx, self.n, {e: ctx.neg(c) for e, c in self.terms.items()}, normalized=True
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        ctx = self.ctx
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                prod = ctx.mul(c1, c2)
                if expo in out:
                    prod = ctx.add(out[expo], prod)
                out[expo] = prod
        return MultiPoly(ctx, self.n, {e: c for e, c in out.items() if not ctx.is_zero(c)}, normalized=True)

    def scale(self, c):
        ctx = self.ctx
        if ctx.is_zero(c):
            return MultiPoly.zero(ctx, self.n)
        return MultiPoly(
            ctx, self.n, {e: ctx.mul(c, v) for e, v in self.terms.items()}, normalized=True
        )

    def pow(self, k: int):
        result = MultiPoly.constant(self.ctx, self.n, self.ctx.one)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def partial(self, i: int):
        """Partial derivative with respect to variable i."""
        ctx = self.ctx
        out = {}
        for expo, c in self.terms.items():
            e = expo[i]
            if e == 0:
                continue
            new = list(expo)
            new[i] = e - 1
            coeff = ctx.mul(ctx.from_int(e), c)
            if not ctx.is_zero(coeff):
                out[tuple(new)] = coeff
        return MultiPoly(ctx, self.n, out, normalized=True)

    # -- evaluation and substitution ------------------------------------

    def eval(self, values, ctx=None):
        """Evaluate at a point; values may live in a tower over self.ctx."""
        if ctx is None:
            ctx = self.ctx
            lift = lambda c: c
        else:
            src = self.ctx
            lift = lambda c: ctx.lift_from(src, c)
        acc = ctx.zero
        for expo, c in self.terms.items():
            term = lift(c)
            for v, e in zip(values, expo):
                if e:
                    term = ctx.mul(term, ctx.pow(v, e))
            acc = ctx.add(acc, term)
        return acc

    def subst(self, images: list["MultiPoly"]) -> "MultiPoly":
        """Substitute variable i -> images[i] (all over the same target ring)."""
        ctx = images[0].ctx
        n_out = images[0].n
        acc = MultiPoly.zero(ctx, n_out)
        for expo, c in self.terms.items():
            term = MultiPoly.constant(ctx, n_out, c)
            for img, e in zip(images, expo):
                if e:
                    term = term * img.pow(e)
            acc = acc + term
        return acc

    def permute_vars(self, perm) -> "MultiPoly":
        """Variable i of the result carries the exponent of variable perm[i]."""
        out = {}
        for expo, c in self.terms.items():
            out[tuple(expo[perm[i]] for i in range(self.n))] = c
        return MultiPoly(self.ctx, self.n, out, normalized=True)

    def flip_sign(self, i: int) -> "MultiPoly":
        """Substitute x_i -> -x_i."""
        ctx = self.ctx
        out = {}
        for expo, c in self.terms.items():
            out[expo] = ctx.neg(c) if expo[i] % 2 else c
        return MultiPoly(self.ctx, self.n, out, normalized=True)

    def truncate_vars(self, m: int) -> "MultiPoly":
        """Set variables m..n-1 to zero and reindex into m variables."""
        if m > self.n:
            raise ValueError("cannot truncate to more variables than present")
        out = {}
        for expo, c in self.terms.items():
            if any(expo[m:]):
                continue
            out[expo[:m]] = c
        return MultiPoly(self.ctx, m, out, normalized=True)

    def halve_exponents(self) -> "MultiPoly":
        """The unique g with g(x_1^2, ..., x_n^2) = self; needs all even exponents."""
        out = {}
        for expo, c in self.terms.items():
            if any(e % 2 for e in expo):
                raise ValueError("odd exponent present; polynomial is not even")
            out[tuple(e // 2 for e in expo)] = c
        return MultiPoly(self.ctx, self.n, out, normalized=True)

    def square_variables(self) -> "MultiPoly":
        """Substitute x_i -> x_i^2 (inverse of halve_exponents)."""
        return MultiPoly(
            self.ctx,
            self.n,
            {tuple(2 * e for e in expo): c for expo, c in self.terms.items()},
            normalized=True,
        )

    def map_coeffs(self, ctx, f) -> "MultiPoly":
        return MultiPoly(ctx, self.n, {e: f(c) for e, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for expo, c in self.sorted_terms():
            vars_part = "*".join(
                f"x{i}^{e}" if e > 1 else f"x{i}"
                for i, e in enumerate(expo)
                if e
            )
            bits.append(f"{c}*{vars_part}" if vars_part else f"{c}")
        return "MultiPoly(" + " + ".join(bits) + ")"


def determinant(rows: list[list[MultiPoly]]) -> MultiPoly:
    """Cofactor-expansion determinant of a square matrix of polynomials."""
    k = len(rows)
    if k == 0:
        raise ValueError("empty matrix")
    if k == 1:
        return rows[0][0]
    ctx, n = rows[0][0].ctx, rows[0][0].n
    acc = MultiPoly.zero(ctx, n)
    for j in range(k):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * determinant(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc
