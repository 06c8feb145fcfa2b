"""Univariate factorization over finite fields, plus rational-root splitting.

Classical distinct-degree / equal-degree (Cantor-Zassenhaus) factorization,
used only to expand parametrized point sets into explicit coordinates in
extension fields. The solving pipeline itself never factors.
"""

from __future__ import annotations

from fractions import Fraction

from ..rng import SplitMix64
from .unipoly import UniPoly, multiplicity_decomposition, uni_gcd


def distinct_degree_split(f: UniPoly):
    """[(product of irreducibles of degree d, d)] for monic squarefree f."""
    ctx = f.ctx
    q = ctx.order()
    out = []
    t = UniPoly.variable(ctx)
    frob = t
    d = 0
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            out.append((f, f.degree))
            break
        frob = frob.pow_mod(q, f)
        g = uni_gcd(frob - t, f)
        if g.degree > 0:
            out.append((g, d))
            f = f.exact_div(g).monic()
            frob = frob % f
    return out


def equal_degree_factor(f: UniPoly, d: int, rng: SplitMix64):
    """Irreducible factors of f, all of degree d (odd field order)."""
    ctx = f.ctx
    if f.degree == d:
        return [f]
    q = ctx.order()
    exponent = (q**d - 1) // 2
    while True:
        r = UniPoly(ctx, [ctx.rand(rng) for _ in range(f.degree)])
        if r.degree < 1:
            continue
        g = uni_gcd(r, f)
        if 0 < g.degree < f.degree:
            pieces = [g, f.exact_div(g).monic()]
        else:
            s = r.pow_mod(exponent, f)
            g = uni_gcd(s - UniPoly.constant(ctx, ctx.one), f)
            if g.degree <= 0 or g.degree >= f.degree:
                continue
            pieces = [g, f.exact_div(g).monic()]
        out = []
        for piece in pieces:
            out.extend(equal_degree_factor(piece, d, rng))
        return out


def factor_squarefree(f: UniPoly, seed: int = 0xFAC7) -> list[UniPoly]:
    """Monic irreducible factors of a monic squarefree f over a finite field."""
    rng = SplitMix64(seed).child("edf", f.degree)
    out = []
    for g, d in distinct_degree_split(f.monic()):
        out.extend(equal_degree_factor(g, d, rng))
    out.sort(key=lambda h: (h.degree, h.coeffs))
    return out


def factor(f: UniPoly, seed: int = 0xFAC7):
    """[(irreducible, multiplicity)] with f = lc * t^d * prod, plus d."""
    d, parts = multiplicity_decomposition(f)
    out = []
    for p, mult in parts:
        for h in factor_squarefree(p, seed):
            out.append((h, mult))
    return d, out


def roots_in_field(f: UniPoly) -> list:
    """Roots of f lying in its own coefficient field (finite fields)."""
    ctx = f.ctx
    q = ctx.order()
    f = f.monic()
    t = UniPoly.variable(ctx)
    g = uni_gcd(t.pow_mod(q, f) - t, f)
    roots = []
    for h in factor_squarefree(g):
        if h.degree == 1:
            roots.append(ctx.neg(h.coeffs[0]))
    return roots


def rational_linear_split(f: UniPoly, divisor_bound: int = 10**7):
    """Split off the rational roots of f over QQ.

    Returns (roots, cofactor) with f = lc * prod(t - r) * cofactor up to a
    constant. Gives up on finding roots (returning ([], f)) when the integer
    coefficients are too large to enumerate divisors; the cofactor then
    simply stays unsplit, which callers treat as a symbolic block.
    """
    ctx = f.ctx
    f = f.monic()
    roots = []
    # strip zero roots first
    while f.degree > 0 and ctx.is_zero(f.coeff(0)):
        roots.append(Fraction(0))
        f = UniPoly(ctx, f.coeffs[1:], normalized=True)
    if f.degree < 1:
        return roots, f
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])
    if a0 > divisor_bound or an > divisor_bound:
        return roots, f
    for num in _divisors(a0):
        for d in _divisors(an):
            for cand in (Fraction(num, d), Fraction(-num, d)):
                while f.degree > 0 and f.eval(cand) == 0:
                    roots.append(cand)
                    f = f.exact_div(
                        UniPoly(ctx, (-cand, Fraction(1)), normalized=True)
                    )
    return roots, f


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int):
    if n == 0:
        return [1]
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)
