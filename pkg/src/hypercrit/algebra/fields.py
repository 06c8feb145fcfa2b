"""Exact coefficient arithmetic: prime fields, rationals, extension towers.

Field elements are plain Python values (int for GF(p), Fraction for the
rationals, tuples of base elements for extensions); a FieldContext carries
the operations. This keeps inner loops free of per-element wrapper objects
and lets the univariate routines stay generic over the context.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from ..errors import MixedContextError
from ..rng import SplitMix64
from .unipoly import UniPoly, inverse_mod, uni_gcd


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldContext:
    """Arithmetic protocol shared by all coefficient contexts."""

    kind = "abstract"
    may_split = False

    def check_system_bound(self, n: int, d: int) -> None:
        """Reject systems whose block sizes or multiplicities could collide
        with the characteristic. No-op in characteristic zero."""

    # Subclasses provide: zero, one, from_int, add, sub, mul, neg, inv,
    # is_zero, char, order, rand, fmt, parse, lift.

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def eq(self, a, b) -> bool:
        return self.is_zero(self.sub(a, b))

    def lift(self, a):
        return a

    def lift_from(self, src: "FieldContext", a):
        """Embed an element of an ancestor context into this one."""
        if src == self:
            return a
        raise MixedContextError(f"cannot lift from {src!r} into {self!r}")


class PrimeField(FieldContext):
    """GF(p) for an odd prime p; elements are ints in [0, p)."""

    kind = "prime"

    def __init__(self, p: int):
        if p == 2 or not is_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        self.p = p
        self.zero = 0
        self.one = 1

    def check_system_bound(self, n, d):
        if 2 * n * d >= self.p:
            raise ValueError(
                f"prime {self.p} too small for a system with n={n}, d={d}"
            )

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        return pow(a, e, self.p) if e >= 0 else pow(pow(a, -1, self.p), -e, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def char(self):
        return self.p

    def order(self):
        return self.p

    def rand(self, rng: SplitMix64):
        return rng.below(self.p)

    def fmt(self, a) -> str:
        return str(a % self.p)

    def parse(self, s: str):
        if "/" in s:
            num, den = s.split("/")
            return self.div(self.from_int(int(num)), self.from_int(int(den)))
        return self.from_int(int(s))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField(FieldContext):
    """Arbitrary-precision rationals; elements are Fractions."""

    kind = "rational"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def char(self):
        return 0

    def order(self):
        return None

    def rand(self, rng: SplitMix64):
        # Small integers keep worked examples readable and coefficient
        # growth bounded.
        return Fraction(rng.randint(-20, 20))

    def fmt(self, a) -> str:
        return str(a)

    def parse(self, s: str):
        return Fraction(s)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class ExtensionField(FieldContext):
    """base[t]/(modulus) for a monic irreducible modulus over the base.

    Elements are tuples of base elements of fixed length deg(modulus);
    nesting extensions builds towers (used for square roots and for points
    living beyond the base field).
    """

    kind = "extension"

    def __init__(self, base: FieldContext, modulus: UniPoly, check: bool = True):
        if modulus.ctx != base:
            raise MixedContextError("modulus not over the base context")
        if modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        if not base.is_zero(base.sub(modulus.lc, base.one)):
            raise ValueError("modulus must be monic")
        if check and not is_irreducible(modulus):
            raise ValueError("modulus is reducible")
        self.base = base
        self.modulus = modulus
        self.deg = modulus.degree
        self.zero = (base.zero,) * self.deg
        self.one = tuple(
            base.one if i == 0 else base.zero for i in range(self.deg)
        )
        # reductions of t^deg .. t^(2deg-2) for schoolbook multiplication
        self._powers = []
        cur = [base.neg(c) for c in modulus.coeffs[:-1]]
        for _ in range(self.deg - 1):
            self._powers.append(tuple(cur))
            top = cur[-1]
            cur = [base.zero] + cur[:-1]
            if not base.is_zero(top):
                for i in range(self.deg):
                    cur[i] = base.add(
                        cur[i], base.mul(top, self._powers[0][i])
                    )

    def check_system_bound(self, n, d):
        self.base.check_system_bound(n, d)

    def from_int(self, n):
        return self.lift(self.base.from_int(n))

    def lift(self, a):
        """Embed an element of the immediate base."""
        return (a,) + (self.base.zero,) * (self.deg - 1)

    def lift_from(self, src, a):
        if src == self:
            return a
        return self.lift(self.base.lift_from(src, a))

    def gen(self):
        """The residue class of t."""
        if self.deg == 1:
            return (self.base.neg(self.modulus.coeffs[0]),)
        return tuple(
            self.base.one if i == 1 else self.base.zero for i in range(self.deg)
        )

    def add(self, a, b):
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        base = self.base
        return tuple(base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        base = self.base
        return tuple(base.neg(x) for x in a)

    def mul(self, a, b):
        base = self.base
        n = self.deg
        if n == 1:
            return (base.mul(a[0], b[0]),)
        prod = [base.zero] * (2 * n - 1)
        for i, x in enumerate(a):
            if base.is_zero(x):
                continue
            for j, y in enumerate(b):
                prod[i + j] = base.add(prod[i + j], base.mul(x, y))
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if base.is_zero(c):
                continue
            red = self._powers[k - n]
            for i in range(n):
                out[i] = base.add(out[i], base.mul(c, red[i]))
        return tuple(out)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in extension field")
        poly = UniPoly(self.base, a)
        return self._pad(inverse_mod(poly, self.modulus))

    def _pad(self, poly: UniPoly):
        c = list(poly.coeffs) + [self.base.zero] * (self.deg - len(poly.coeffs))
        return tuple(c)

    def is_zero(self, a):
        base = self.base
        return all(base.is_zero(x) for x in a)

    def char(self):
        return self.base.char()

    def order(self):
        base_order = self.base.order()
        return None if base_order is None else base_order**self.deg

    def rand(self, rng: SplitMix64):
        return tuple(self.base.rand(rng) for _ in range(self.deg))

    def fmt(self, a) -> str:
        return "(" + ", ".join(self.base.fmt(x) for x in a) + ")"

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus.coeffs == self.modulus.coeffs
        )

    def __hash__(self):
        return hash(("extension", self.base, self.modulus.coeffs))

    def __repr__(self):
        return f"{self.base!r}[t]/({self.modulus!r})"


# -- irreducibility and random moduli ------------------------------------


def is_irreducible(h: UniPoly) -> bool:
    """Irreducibility over a finite field: h has no factor of degree <= e/2
    iff gcd(t^(q^i) - t, h) = 1 for i = 1..e//2."""
    q = h.ctx.order()
    if q is None:
        raise ValueError("irreducibility test requires a finite base field")
    e = h.degree
    if e < 1:
        return False
    if e == 1:
        return True
    t = UniPoly.variable(h.ctx)
    frob = t
    for _ in range(e // 2):
        frob = frob.pow_mod(q, h)
        if uni_gcd(frob - t, h).degree != 0:
            return False
    return True


def random_irreducible(ctx: FieldContext, degree: int, rng: SplitMix64) -> UniPoly:
    """Random monic irreducible of the given degree over a finite field."""
    while True:
        coeffs = [ctx.rand(rng) for _ in range(degree)] + [ctx.one]
        h = UniPoly(ctx, coeffs, normalized=True)
        if is_irreducible(h):
            return h


def extension_of(ctx: FieldContext, degree: int, seed: int = 0x5EED) -> ExtensionField:
    """GF(q^degree) over a finite ctx with a deterministically chosen modulus."""
    rng = SplitMix64(seed).child("modulus", degree)
    return ExtensionField(ctx, random_irreducible(ctx, degree, rng), check=False)


# -- square roots ---------------------------------------------------------


def field_sqrt(ctx: FieldContext, a):
    """A square root of `a` in ctx, or None if a is a non-residue.

    Finite fields use Tonelli-Shanks; over the rationals only exact squares
    of fractions are recognized.
    """
    if ctx.is_zero(a):
        return ctx.zero
    q = ctx.order()
    if q is None:
        frac = a
        if frac < 0:
            return None
        num, den = frac.numerator, frac.denominator
        rn, rd = isqrt(num), isqrt(den)
        if rn * rn == num and rd * rd == den:
            return Fraction(rn, rd)
        return None
    if ctx.pow(a, (q - 1) // 2) != ctx.one:
        return None
    if q % 4 == 3:
        return ctx.pow(a, (q + 1) // 4)
    # Tonelli-Shanks
    s, m = q - 1, 0
    while s % 2 == 0:
        s //= 2
        m += 1
    z = quadratic_nonresidue(ctx)
    c = ctx.pow(z, s)
    x = ctx.pow(a, (s + 1) // 2)
    t = ctx.pow(a, s)
    while t != ctx.one:
        # find least 0 < i < m with t^(2^i) = 1
        i, t2 = 0, t
        while t2 != ctx.one:
            t2 = ctx.mul(t2, t2)
            i += 1
        b = ctx.pow(c, 1 << (m - i - 1))
        x = ctx.mul(x, b)
        c = ctx.mul(b, b)
        t = ctx.mul(t, c)
        m = i
    return x


def quadratic_nonresidue(ctx: FieldContext):
    q = ctx.order()
    if q is None:
        raise ValueError("nonresidue search requires a finite field")
    rng = SplitMix64(0xBAD5EED).child("nonresidue", q % (1 << 61))
    while True:
        z = ctx.rand(rng)
        if not ctx.is_zero(z) and ctx.pow(z, (q - 1) // 2) != ctx.one:
            return z


def sqrt_with_extension(ctx: FieldContext, values):
    """Square roots of the given finite-field elements, extending by one
    quadratic layer when some value is a non-residue.

    Returns (ctx2, roots) where ctx2 is ctx or a degree-2 extension of it
    and roots[i]**2 == values[i] inside ctx2.
    """
    roots = [field_sqrt(ctx, v) for v in values]
    if all(r is not None for r in roots):
        return ctx, roots
    nu = quadratic_nonresidue(ctx)
    modulus = UniPoly(ctx, (ctx.neg(nu), ctx.zero, ctx.one), normalized=True)
    ctx2 = ExtensionField(ctx, modulus, check=False)
    w = ctx2.gen()
    out = []
    for v, r in zip(values, roots):
        if r is not None:
            out.append(ctx2.lift(r))
        else:
            # v = nu * (v/nu) with v/nu a residue, so sqrt(v) = w * sqrt(v/nu)
            rr = field_sqrt(ctx, ctx.div(v, nu))
            out.append(ctx2.mul(w, ctx2.lift(rr)))
    return ctx2, out
