"""Dynamic-evaluation arithmetic in K[t]/(v) for squarefree v.

A QuotientContext behaves like a field until a zero test or inversion hits
a zero divisor; it then raises SplitRequest carrying a coprime splitting of
the modulus, and the d5_run driver re-runs the computation on each branch.
Every branch then behaves like a field, so generic univariate routines
(gcd, exact division, multiplicity decomposition) run unchanged over it.
"""

from __future__ import annotations

from .fields import ExtensionField, FieldContext
from .unipoly import UniPoly, inverse_mod, is_squarefree, uni_gcd


class SplitRequest(Exception):
    """Asks the driver to split the current modulus into coprime factors."""

    def __init__(self, factors):
        super().__init__("modulus split required")
        self.factors = factors


class QuotientContext(ExtensionField):
    """K[t]/(v) with v monic squarefree; splits instead of failing."""

    kind = "quotient"
    may_split = True

    def __init__(self, base: FieldContext, modulus: UniPoly, validate=True):
        if validate and not is_squarefree(modulus.monic()):
            raise ValueError("quotient modulus must be squarefree")
        super().__init__(base, modulus.monic(), check=False)

    def _branch_gcd(self, a):
        return uni_gcd(self.modulus, UniPoly(self.base, a))

    def is_zero(self, a):
        base = self.base
        if all(base.is_zero(x) for x in a):
            return True
        g = self._branch_gcd(a)
        if g.degree == 0:
            return False
        raise SplitRequest([g, self.modulus.exact_div(g).monic()])

    def inv(self, a):
        if all(self.base.is_zero(x) for x in a):
            raise ZeroDivisionError("inverse of zero in quotient algebra")
        g = self._branch_gcd(a)
        if g.degree == 0:
            return self._pad(inverse_mod(UniPoly(self.base, a), self.modulus))
        raise SplitRequest([g, self.modulus.exact_div(g).monic()])

    def __eq__(self, other):
        return (
            isinstance(other, QuotientContext)
            and other.base == self.base
            and other.modulus.coeffs == self.modulus.coeffs
        )

    def __hash__(self):
        return hash(("quotient", self.base, self.modulus.coeffs))

    def __repr__(self):
        return f"{self.base!r}[t]/({self.modulus!r}) [D5]"


def requotient(poly: UniPoly, ctxq: QuotientContext) -> UniPoly:
    """Re-reduce a polynomial with quotient coefficients into a (sub-)branch
    context, e.g. after a modulus split."""
    base = ctxq.base

    def conv(c):
        return ctxq._pad(UniPoly(base, c) % ctxq.modulus)

    return UniPoly(ctxq, [conv(c) for c in poly.coeffs])


def quotient_poly(ctxq: QuotientContext, base_coeff_polys) -> UniPoly:
    """Build a polynomial over the quotient from base-level residues."""
    return UniPoly(
        ctxq, [ctxq._pad(p % ctxq.modulus) for p in base_coeff_polys]
    )


def d5_run(base: FieldContext, v: UniPoly, func):
    """Run func(ctx) over K[t]/(v), splitting v on zero divisors.

    Returns [(branch_modulus, result)] with monic pairwise-coprime branch
    moduli whose product is v. func is re-executed from scratch per branch,
    which is fine at the degrees involved here.
    """
    pending = [v.monic()]
    out = []
    while pending:
        vb = pending.pop(0)
        ctxq = QuotientContext(base, vb, validate=False)
        try:
            out.append((vb, func(ctxq)))
        except SplitRequest as split:
            pending = list(split.factors) + pending
    return out


def quotient_gcd_d5(a: UniPoly, b: UniPoly, v: UniPoly):
    """Branchwise monic gcd of a and b over K[t]/(v).

    a and b have coefficients in a quotient over the same base as v; the
    result is a list of (branch_modulus, gcd_on_branch) covering v.
    """
    base = v.ctx

    def run(ctxq):
        return uni_gcd(requotient(a, ctxq), requotient(b, ctxq))

    return d5_run(base, v, run)
