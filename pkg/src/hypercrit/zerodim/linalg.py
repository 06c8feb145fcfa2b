"""Incremental row echelon with combination tracking.

Used for Krylov-style minimal polynomials and for expressing quotient
elements in a power basis. Vectors added one at a time; when a new vector
is dependent, the tracker reports the dependency coefficients over all
vectors added so far. Prime fields go through numpy int64 (entries stay
below 2^63 for the moduli used here); other contexts use exact Python
arithmetic.
"""

from __future__ import annotations

import numpy as np


class PrimeEchelon:
    def __init__(self, p: int, dim: int):
        self.p = p
        self.dim = dim
        self.rows: list[np.ndarray] = []
        self.hist: list[np.ndarray] = []
        self.pivots: list[int] = []
        self.count = 0  # vectors added (and stored) so far

    def _reduce(self, vec):
        p = self.p
        v = np.array(vec, dtype=np.int64) % p
        h = np.zeros(self.count + 1, dtype=np.int64)
        h[self.count] = 1
        for i, piv in enumerate(self.pivots):
            c = int(v[piv])
            if c:
                v = (v - c * self.rows[i]) % p
                h[: len(self.hist[i])] = (h[: len(self.hist[i])] - c * self.hist[i]) % p
        return v, h

    def add(self, vec):
        """Add a vector; returns dependency coefficients (monic in the last
        entry) if it is in the current span, else None."""
        v, h = self._reduce(vec)
        nz = np.nonzero(v)[0]
        if len(nz) == 0:
            return [int(x) for x in h]
        piv = int(nz[0])
        inv = pow(int(v[piv]), -1, self.p)
        v = (v * inv) % self.p
        h = (h * inv) % self.p
        # keep reduced form: clear this pivot from stored rows
        for i in range(len(self.rows)):
            c = int(self.rows[i][piv])
            if c:
                self.rows[i] = (self.rows[i] - c * v) % self.p
                hi = self.hist[i]
                if len(hi) < len(h):
                    hi = np.concatenate([hi, np.zeros(len(h) - len(hi), dtype=np.int64)])
                self.hist[i] = (hi - c * h) % self.p
        self.rows.append(v)
        self.hist.append(h)
        self.pivots.append(piv)
        self.count += 1
        return None

    def solve(self, vec):
        """Coefficients over the added vectors reproducing `vec`, or None."""
        v, h = self._reduce(vec)
        if np.any(v):
            return None
        coeffs = [(-int(x)) % self.p for x in h[: self.count]]
        return coeffs


class GenericEchelon:
    def __init__(self, ctx, dim: int):
        self.ctx = ctx
        self.dim = dim
        self.rows: list[list] = []
        self.hist: list[list] = []
        self.pivots: list[int] = []
        self.count = 0

    def _axpy(self, target, coeff, source):
        ctx = self.ctx
        for k in range(len(source)):
            target[k] = ctx.sub(target[k], ctx.mul(coeff, source[k]))

    def _reduce(self, vec):
        ctx = self.ctx
        v = list(vec)
        h = [ctx.zero] * self.count + [ctx.one]
        for i, piv in enumerate(self.pivots):
            c = v[piv]
            if not ctx.is_zero(c):
                self._axpy(v, c, self.rows[i])
                hi = self.hist[i]
                for k in range(len(hi)):
                    h[k] = ctx.sub(h[k], ctx.mul(c, hi[k]))
        return v, h

    def add(self, vec):
        ctx = self.ctx
        v, h = self._reduce(vec)
        piv = next((k for k, x in enumerate(v) if not ctx.is_zero(x)), None)
        if piv is None:
            return h
        inv = ctx.inv(v[piv])
        v = [ctx.mul(inv, x) for x in v]
        h = [ctx.mul(inv, x) for x in h]
        for i in range(len(self.rows)):
            c = self.rows[i][piv]
            if not ctx.is_zero(c):
                self._axpy(self.rows[i], c, v)
                hi = self.hist[i]
                hi.extend([ctx.zero] * (len(h) - len(hi)))
                for k in range(len(h)):
                    hi[k] = ctx.sub(hi[k], ctx.mul(c, h[k]))
        self.rows.append(v)
        self.hist.append(h)
        self.pivots.append(piv)
        self.count += 1
        return None

    def solve(self, vec):
        ctx = self.ctx
        v, h = self._reduce(vec)
        if any(not ctx.is_zero(x) for x in v):
            return None
        return [ctx.neg(x) for x in h[: self.count]]


def make_echelon(ctx, dim: int):
    if ctx.kind == "prime":
        return PrimeEchelon(ctx.p, dim)
    return GenericEchelon(ctx, dim)
