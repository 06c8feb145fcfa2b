"""Univariate parametrizations of finite point sets and operations on them.

A parametrization is (v, (v_1, ..., v_k), beta) with v monic squarefree,
deg(v_j) < deg(v), and beta a linear form satisfying
beta(v_1, ..., v_k) = t * v' mod v; the encoded points are
(v_1(tau)/v'(tau), ..., v_k(tau)/v'(tau)) over the roots tau of v.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from ..algebra import (
    ExtensionField,
    QuotientContext,
    UniPoly,
    crt_pair,
    inverse_mod,
    is_squarefree,
    uni_gcd,
)
from ..algebra.factor import factor_squarefree, rational_linear_split
from ..errors import DuplicateMismatchError, NotFiberConstantError
from ..rng import SplitMix64
from .linalg import GenericEchelon


@dataclass
class ZeroDimParam:
    v: UniPoly
    coords: list[UniPoly]
    beta: tuple
    seed: int = 0

    @property
    def ctx(self):
        return self.v.ctx

    @property
    def degree(self) -> int:
        return self.v.degree if not self.v.is_zero() else 0

    @property
    def k(self) -> int:
        return len(self.coords)

    def is_empty(self) -> bool:
        return self.degree == 0

    @classmethod
    def empty(cls, ctx, k: int, seed: int = 0) -> "ZeroDimParam":
        one = UniPoly.constant(ctx, ctx.one)
        return cls(one, [UniPoly.zero(ctx)] * k, tuple([ctx.zero] * k), seed)

    def to_json(self):
        ctx = self.ctx
        return {
            "v": [ctx.fmt(c) for c in self.v.coeffs],
            "coords": [[ctx.fmt(c) for c in w.coeffs] for w in self.coords],
            "beta": [ctx.fmt(b) for b in self.beta],
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, ctx, data) -> "ZeroDimParam":
        v = UniPoly(ctx, [ctx.parse(c) for c in data["v"]])
        coords = [UniPoly(ctx, [ctx.parse(c) for c in w]) for w in data["coords"]]
        beta = tuple(ctx.parse(b) for b in data["beta"])
        return cls(v, coords, beta, int(data.get("seed", 0)))


def validate_param(r: ZeroDimParam) -> bool:
    """Monic squarefree v, bounded numerator degrees, and the linear-form
    identity beta(v_1, ..., v_k) = t * v' mod v."""
    ctx = r.v.ctx
    if r.v.is_zero() or not ctx.is_zero(ctx.sub(r.v.lc, ctx.one)):
        return False
    if not is_squarefree(r.v):
        return False
    if len(r.beta) != len(r.coords):
        return False
    if any(not w.is_zero() and w.degree >= r.v.degree for w in r.coords):
        return False
    acc = UniPoly.zero(ctx)
    for b, w in zip(r.beta, r.coords):
        acc = acc + w.scale(b)
    target = (UniPoly.variable(ctx) * r.v.derivative()) % r.v
    return (acc % r.v) == target


def value_functions(r: ZeroDimParam) -> list[UniPoly]:
    """coords_j / v' as residues mod v (the coordinate value at each root)."""
    if r.is_empty():
        return [UniPoly.zero(r.ctx) for _ in r.coords]
    w = inverse_mod(r.v.derivative(), r.v)
    return [(c * w) % r.v for c in r.coords]


def point_in_param(r: ZeroDimParam, ctx_pt, point) -> bool:
    """Algebraic membership test: works for points in extension towers of
    the base field without comparing across different towers."""
    base = r.ctx
    beta_l = [ctx_pt.lift_from(base, b) for b in r.beta]
    tau = ctx_pt.zero
    for b, x in zip(beta_l, point):
        tau = ctx_pt.add(tau, ctx_pt.mul(b, x))
    if not ctx_pt.is_zero(r.v.eval(tau, ctx_pt)):
        return False
    dv = r.v.derivative().eval(tau, ctx_pt)
    for w, x in zip(r.coords, point):
        if not ctx_pt.is_zero(
            ctx_pt.sub(w.eval(tau, ctx_pt), ctx_pt.mul(x, dv))
        ):
            return False
    return True


@dataclass
class PointSet:
    """Expanded points; each entry carries its own (possibly extension)
    context and the number of conjugate points it stands for."""

    entries: list = dataclass_field(default_factory=list)  # (ctx, coords, conj_count)

    def total(self) -> int:
        return sum(c for _, _, c in self.entries)

    def plain(self):
        """[(ctx, coords)] for entries standing for a single point each."""
        return [(ctx, pt) for ctx, pt, c in self.entries if c == 1]


def expand_points(r: ZeroDimParam) -> PointSet:
    """Explicit points of Z(R).

    Over a prime field every point is materialized in GF(p^e) for e the
    degree of its irreducible factor (conjugates enumerated via Frobenius).
    Over the rationals, rational points are explicit and the rest stay as
    residue-class entries counting their conjugates.
    """
    ctx = r.ctx
    out = PointSet()
    if r.is_empty():
        return out
    if ctx.kind == "prime":
        p = ctx.p
        for h in factor_squarefree(r.v):
            if h.degree == 1:
                tau = ctx.neg(h.coeffs[0])
                dv = ctx.inv(r.v.derivative().eval(tau))
                pt = tuple(ctx.mul(w.eval(tau), dv) for w in r.coords)
                out.entries.append((ctx, pt, 1))
            else:
                ext = ExtensionField(ctx, h, check=False)
                tau = ext.gen()
                dv = ext.inv(r.v.derivative().eval(tau, ext))
                pt = tuple(ext.mul(w.eval(tau, ext), dv) for w in r.coords)
                for i in range(h.degree):
                    conj = tuple(ext.pow(x, p**i) for x in pt)
                    out.entries.append((ext, conj, 1))
        return out
    roots, cofactor = rational_linear_split(r.v)
    dv_poly = r.v.derivative()
    for tau in roots:
        dv = ctx.inv(dv_poly.eval(tau))
        pt = tuple(ctx.mul(w.eval(tau), dv) for w in r.coords)
        out.entries.append((ctx, pt, 1))
    if cofactor.degree > 0:
        ctxq = QuotientContext(ctx, cofactor, validate=False)
        tau = ctxq.gen()
        dv = ctxq.inv(dv_poly.eval(tau, ctxq))
        pt = tuple(ctxq.mul(w.eval(tau, ctxq), dv) for w in r.coords)
        out.entries.append((ctxq, pt, cofactor.degree))
    return out


# -- reparametrization ----------------------------------------------------


def _form_from_constant(ctx, c: int, k: int):
    """Deterministic Vandermonde-style form (1, c, c^2, ...)."""
    out = []
    acc = ctx.one
    base = ctx.from_int(c)
    for _ in range(k):
        out.append(acc)
        acc = ctx.mul(acc, base)
    return tuple(out)


def param_from_functions(
    v: UniPoly,
    funcs: list[UniPoly],
    rng: SplitMix64 | None = None,
    forms=None,
    seed: int = 0,
    max_tries: int = 24,
    require_degree: int | None = None,
) -> ZeroDimParam:
    """Parametrize the image point set {(f_1(tau), ..., f_l(tau)) : v(tau)=0}.

    funcs are residues mod v over the base field. Duplicate images merge.
    A candidate linear form is accepted only if every coordinate function
    interpolates through it (the inconsistent linear solve detects forms
    that identify distinct image points).
    """
    ctx = v.ctx
    ell = len(funcs)
    if v.degree == 0:
        return ZeroDimParam.empty(ctx, ell, seed)
    deg_v = v.degree
    tries = 0
    attempt = 0
    while tries < max_tries:
        if forms is not None:
            if attempt >= len(forms):
                break
            gamma = forms[attempt]
        elif attempt < 8:
            gamma = _form_from_constant(ctx, attempt + 1, ell)
        else:
            bound = 4 * deg_v * deg_v + 11
            if ctx.kind == "prime":
                bound = min(bound, ctx.p - 1)
            gamma = tuple(ctx.from_int(rng.randint(1, bound)) for _ in range(ell))
        attempt += 1
        tries += 1
        sigma = UniPoly.zero(ctx)
        for g, f in zip(gamma, funcs):
            sigma = sigma + f.scale(g)
        sigma = sigma % v
        ech = GenericEchelon(ctx, deg_v)
        power = UniPoly.constant(ctx, ctx.one)
        rel = None
        while rel is None:
            rel = ech.add(_pad_coeffs(power, deg_v, ctx))
            if rel is None:
                power = (power * sigma) % v
        w = UniPoly(ctx, rel)
        if require_degree is not None and w.degree != require_degree:
            continue
        solved = []
        ok = True
        for f in funcs:
            c = ech.solve(_pad_coeffs(f % v, deg_v, ctx))
            if c is None:
                ok = False
                break
            solved.append(UniPoly(ctx, c))
        if not ok:
            continue
        dw = w.derivative()
        coords = [(c * dw) % w for c in solved]
        return ZeroDimParam(w, coords, gamma, seed)
    raise NotFiberConstantError(
        "no admissible linear form found; map may not be fiber-constant"
    )


def _pad_coeffs(poly: UniPoly, dim: int, ctx):
    return list(poly.coeffs) + [ctx.zero] * (dim - len(poly.coeffs))


def reparametrize(r: ZeroDimParam, forms=None, rng=None) -> ZeroDimParam:
    """Same point set under a new linear form (degree must be preserved)."""
    if r.is_empty():
        return r
    return param_from_functions(
        r.v,
        value_functions(r),
        rng=rng,
        forms=forms,
        seed=r.seed,
        require_degree=r.degree,
    )


def params_equal(r1: ZeroDimParam, r2: ZeroDimParam) -> bool:
    """Point-set equality via a common deterministic form.

    Raw comparison is meaningless because numerators depend on the form, so
    both sides are pushed onto the first shared form that separates each.
    """
    if r1.ctx != r2.ctx or r1.k != r2.k:
        return False
    if r1.degree != r2.degree:
        return False
    if r1.is_empty():
        return True
    ctx = r1.ctx
    for c in range(1, 40):
        gamma = [_form_from_constant(ctx, c, r1.k)]
        try:
            p1 = reparametrize(r1, forms=gamma)
            p2 = reparametrize(r2, forms=gamma)
        except NotFiberConstantError:
            continue
        return p1.v == p2.v and p1.coords == p2.coords
    raise NotFiberConstantError("no common separating form found")


def param_union(r1: ZeroDimParam, r2: ZeroDimParam) -> ZeroDimParam:
    """Union of two disjoint point sets in the same coordinate space."""
    if r1.is_empty():
        return r2
    if r2.is_empty():
        return r1
    if r1.k != r2.k or r1.ctx != r2.ctx:
        raise ValueError("union of incompatible parametrizations")
    ctx = r1.ctx
    for c in range(1, 60):
        gamma = [_form_from_constant(ctx, c, r1.k)]
        try:
            p1 = reparametrize(r1, forms=gamma)
            p2 = reparametrize(r2, forms=gamma)
        except NotFiberConstantError:
            continue
        if uni_gcd(p1.v, p2.v).degree != 0:
            continue  # a shared form value across the parts; try another form
        v = p1.v * p2.v
        coords = []
        funcs1 = value_functions(p1)
        funcs2 = value_functions(p2)
        dv = v.derivative()
        for f1, f2 in zip(funcs1, funcs2):
            combined = crt_pair(p1.v, f1, p2.v, f2)
            coords.append((combined * dv) % v)
        return ZeroDimParam(v, coords, p1.beta, r1.seed)
    raise DuplicateMismatchError(
        "point sets could not be joined under any common form; they overlap"
    )


def pushforward(r: ZeroDimParam, images, rng: SplitMix64 | None = None) -> ZeroDimParam:
    """Parametrization of {F(pt) : pt in Z(R)} for polynomial maps F.

    `images` is a list of multivariate polynomials in the k coordinates of
    R; duplicate image points are merged.
    """
    ctx = r.ctx
    if r.is_empty():
        return ZeroDimParam.empty(ctx, len(images), r.seed)
    ctxq = QuotientContext(ctx, r.v, validate=False)
    values = [ctxq._pad(f % r.v) for f in value_functions(r)]
    funcs = []
    for img in images:
        val = img.eval(values, ctxq)
        funcs.append(UniPoly(ctx, val))
    if rng is None:
        rng = SplitMix64(r.seed).child("pushforward")
    return param_from_functions(r.v, funcs, rng=rng, seed=r.seed)
