"""Dense univariate polynomials over an arbitrary coefficient context.

A context only needs the small arithmetic protocol implemented by the field
classes (zero/one/add/sub/mul/neg/inv/is_zero/from_int). The same routines
therefore run over prime fields, rationals, extension fields, and the
split-on-zero-divisor quotient contexts: a context whose ``is_zero`` raises
a split request simply propagates it to the dynamic-evaluation driver.

The degree of the zero polynomial is the distinct marker NEG_INF, never -1.
"""

from __future__ import annotations

from ..errors import CharacteristicTooSmallError, MixedContextError

NEG_INF = float("-inf")


class UniPoly:
    """Immutable dense polynomial; coeffs run low to high, top one nonzero."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs, normalized=False):
        if not normalized:
            coeffs = list(coeffs)
            while coeffs and ctx.is_zero(coeffs[-1]):
                coeffs.pop()
            coeffs = tuple(coeffs)
        self.ctx = ctx
        self.coeffs = coeffs

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, ctx) -> "UniPoly":
        return cls(ctx, (), normalized=True)

    @classmethod
    def constant(cls, ctx, c) -> "UniPoly":
        return cls(ctx, (c,))

    @classmethod
    def of_ints(cls, ctx, ints) -> "UniPoly":
        return cls(ctx, [ctx.from_int(c) for c in ints])

    @classmethod
    def variable(cls, ctx) -> "UniPoly":
        return cls(ctx, (ctx.zero, ctx.one), normalized=True)

    @classmethod
    def monomial(cls, ctx, c, k) -> "UniPoly":
        if ctx.is_zero(c):
            return cls.zero(ctx)
        return cls(ctx, (ctx.zero,) * k + (c,), normalized=True)

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.ctx.is_zero(
            self.ctx.sub(self.coeffs[0], self.ctx.one)
        )

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ctx.zero

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def _check(self, other):
        if self.ctx != other.ctx:
            raise MixedContextError("univariate operands from different contexts")

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return UniPoly(ctx, out)

    def __neg__(self):
        ctx = self.ctx
        return UniPoly(ctx, tuple(ctx.neg(c) for c in self.coeffs), normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(ctx)
        out = [ctx.zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ctx.is_zero(ca):
                continue
            for j, cb in enumerate(b):
                out[i + j] = ctx.add(out[i + j], ctx.mul(ca, cb))
        return UniPoly(ctx, out)

    def scale(self, c) -> "UniPoly":
        ctx = self.ctx
        return UniPoly(ctx, [ctx.mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return UniPoly(self.ctx, (self.ctx.zero,) * k + self.coeffs, normalized=True)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        ctx = self.ctx
        if ctx.is_zero(ctx.sub(self.lc, ctx.one)):
            return self
        return self.scale(ctx.inv(self.lc))

    def divmod(self, other):
        self._check(other)
        ctx = self.ctx
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree is NEG_INF or self.degree < other.degree:
            return UniPoly.zero(ctx), self
        inv_lc = ctx.inv(other.lc)
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        q = [ctx.zero] * (len(rem) - db)
        for i in range(len(rem) - db - 1, -1, -1):
            f = ctx.mul(rem[i + db], inv_lc)
            q[i] = f
            if ctx.is_zero(f):
                continue
            for j, cb in enumerate(other.coeffs):
                rem[i + j] = ctx.sub(rem[i + j], ctx.mul(f, cb))
        return UniPoly(ctx, q), UniPoly(ctx, rem[:db])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def exact_div(self, other) -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division was expected to be exact")
        return q

    def derivative(self) -> "UniPoly":
        ctx = self.ctx
        out = [
            ctx.mul(ctx.from_int(k), c) for k, c in enumerate(self.coeffs) if k > 0
        ]
        return UniPoly(ctx, out)

    def pow(self, e: int) -> "UniPoly":
        result = UniPoly.constant(self.ctx, self.ctx.one)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def pow_mod(self, e: int, modulus: "UniPoly") -> "UniPoly":
        result = UniPoly.constant(self.ctx, self.ctx.one)
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def eval(self, x, ctx=None):
        """Horner evaluation; `ctx` may be a tower over self.ctx, in which
        case coefficients are lifted through ctx.lift_from."""
        if ctx is None:
            ctx = self.ctx
            lift = lambda c: c
        else:
            src = self.ctx
            lift = lambda c: ctx.lift_from(src, c)
        acc = ctx.zero
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), lift(c))
        return acc

    def map_coeffs(self, ctx, f) -> "UniPoly":
        return UniPoly(ctx, [f(c) for c in self.coeffs])

    def __repr__(self):
        if not self.coeffs:
            return "UniPoly(0)"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if self.ctx.is_zero(c):
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{k}")
        return "UniPoly(" + " + ".join(parts) + ")"


# -- gcd machinery ------------------------------------------------------


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor by the Euclidean algorithm.

    gcd(0, 0) = 0; otherwise the result is monic.
    """
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def uni_xgcd(a: UniPoly, b: UniPoly):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic."""
    a._check(b)
    ctx = a.ctx
    one = UniPoly.constant(ctx, ctx.one)
    zero = UniPoly.zero(ctx)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = ctx.inv(r0.lc)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def inverse_mod(a: UniPoly, modulus: UniPoly) -> UniPoly:
    g, s, _ = uni_xgcd(a % modulus, modulus)
    if g.degree != 0:
        raise ZeroDivisionError("element is not invertible modulo the modulus")
    return s % modulus


def is_squarefree(q: UniPoly) -> bool:
    if q.is_zero():
        return False
    if q.degree == 0:
        return True
    return uni_gcd(q, q.derivative()).degree == 0


def squarefree_part(q: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of q."""
    if q.is_zero():
        raise ValueError("zero polynomial")
    q = q.monic()
    if q.degree == 0:
        return q
    g = uni_gcd(q, q.derivative())
    if g.degree == 0:
        return q
    return q.exact_div(g).monic()


def _check_characteristic(q: UniPoly):
    char = q.ctx.char()
    if char != 0 and char <= q.degree:
        raise CharacteristicTooSmallError(
            f"characteristic {char} <= degree {q.degree}"
        )


def multiplicity_decomposition(q: UniPoly):
    """Split a nonzero q as t**d * prod(p_i**v_i), multiplicities increasing.

    The p_i are monic, squarefree, pairwise coprime and not divisible by t.
    The input is normalized to monic first, so the reconstruction identity
    t**d * prod(p_i**v_i) == q holds for monic q.
    Yun's algorithm; requires characteristic zero or > deg(q).
    """
    if q.is_zero():
        raise ValueError("zero polynomial has no multiplicity decomposition")
    _check_characteristic(q)
    ctx = q.ctx
    q = q.monic()
    d = 0
    while not q.is_zero() and ctx.is_zero(q.coeff(0)):
        q = UniPoly(ctx, q.coeffs[1:], normalized=True)
        d += 1
    parts = []
    if q.degree > 0:
        g = uni_gcd(q, q.derivative())
        c = q.exact_div(g).monic()
        w = q.derivative().exact_div(g)
        i = 1
        while c.degree > 0:
            y = w - c.derivative()
            p = uni_gcd(c, y)
            if p.degree > 0:
                parts.append((p, i))
            c = c.exact_div(p).monic()
            w = y.exact_div(p)
            i += 1
    return d, parts


def crt_pair(m1: UniPoly, a1: UniPoly, m2: UniPoly, a2: UniPoly) -> UniPoly:
    """The residue mod m1*m2 matching a1 mod m1 and a2 mod m2 (m1, m2 coprime)."""
    g, s, _ = uni_xgcd(m1, m2)
    if g.degree != 0:
        raise ValueError("moduli are not coprime")
    # a1 + m1 * (s*(a2-a1) mod m2); s = inverse of m1 mod m2 up to g=1
    delta = (a2 - a1) % m2
    lift = (s * delta) % m2
    return (a1 + m1 * lift) % (m1 * m2)
