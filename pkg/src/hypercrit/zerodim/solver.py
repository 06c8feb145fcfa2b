"""Zero-dimensional solving: radical parametrization of a finite variety.

Pipeline per system: reduced basis (grevlex Buchberger), finiteness check
via the staircase, radical refinement by adding the squarefree part of each
variable's minimal polynomial, then a random separating linear form whose
minimal polynomial over the reduced algebra is the parametrizing v. The
form is accepted only when deg(v) equals the reduced dimension, i.e. the
count of distinct solutions, so a non-separating draw is always detected.

Over the rationals, large systems run multi-modularly: the same integer
form is solved modulo a sequence of word-size primes, coefficients are
lifted by CRT plus rational reconstruction, and the result is verified
(exact linear-form identity, squarefree and soundness certificates modulo
fresh primes).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from ..algebra import MultiPoly, PrimeField, UniPoly, is_squarefree, squarefree_part
from ..errors import PositiveDimensionalError, SeparatingFormError
from ..rng import SplitMix64
from .groebner import (
    GroebnerBasis,
    MonomialSpace,
    buchberger,
    pack_multipoly,
    require_staircase,
)
from .linalg import make_echelon
from .params import ZeroDimParam

_DIRECT_RATIONAL_LIMIT = 48  # quotient dimension above which QQ goes modular


class _BetaNotSeparating(Exception):
    pass


class _BadReduction(Exception):
    """A modular image disagrees with the generic behaviour."""


class QuotientAlgebra:
    """Vector-space view of ctx[x]/I over the staircase of a reduced basis."""

    def __init__(self, gb: GroebnerBasis, stairs):
        self.gb = gb
        self.space = gb.space
        self.ctx = gb.ctx
        self.stairs = stairs
        self.index = {m: i for i, m in enumerate(stairs)}
        self.dim = len(stairs)
        self._prime = self.ctx.kind == "prime"
        self._mono_cache: dict[int, dict] = {}
        self._var_mats: dict[int, object] = {}

    def nf_monomial(self, m: int) -> dict:
        if m in self.index:
            return {m: self.ctx.one}
        cached = self._mono_cache.get(m)
        if cached is None:
            cached = self.gb.normal_form({m: self.ctx.one})
            self._mono_cache[m] = cached
        return cached

    def vector_of(self, poly: dict):
        ctx = self.ctx
        if self._prime:
            vec = np.zeros(self.dim, dtype=np.int64)
            for m, c in poly.items():
                vec[self.index[m]] = c
            return vec
        vec = [ctx.zero] * self.dim
        for m, c in poly.items():
            vec[self.index[m]] = c
        return vec

    def unit_vector(self) -> object:
        return self.vector_of({0: self.ctx.one})

    def var_matrix(self, j: int):
        mat = self._var_mats.get(j)
        if mat is not None:
            return mat
        ctx = self.ctx
        var = self.space.var(j)
        cols = []
        for b in self.stairs:
            cols.append(self.vector_of(self.nf_monomial(b + var)))
        if self._prime:
            mat = np.column_stack(cols) if cols else np.zeros((0, 0), dtype=np.int64)
        else:
            mat = cols
        self._var_mats[j] = mat
        return mat

    def form_multiplier(self, coeffs):
        """Closure computing multiplication by sum_j coeffs[j] * x_j."""
        ctx = self.ctx
        if self._prime:
            p = ctx.p
            mat = np.zeros((self.dim, self.dim), dtype=np.int64)
            for j, c in enumerate(coeffs):
                if ctx.is_zero(c):
                    continue
                mat = (mat + c * self.var_matrix(j)) % p
            return lambda v: (mat @ v) % p
        combined = [
            [ctx.zero] * self.dim for _ in range(self.dim)
        ]  # combined[i] = image column of basis i
        for j, c in enumerate(coeffs):
            if ctx.is_zero(c):
                continue
            cols = self.var_matrix(j)
            for i in range(self.dim):
                col = cols[i]
                tgt = combined[i]
                for kk in range(self.dim):
                    if not ctx.is_zero(col[kk]):
                        tgt[kk] = ctx.add(tgt[kk], ctx.mul(c, col[kk]))

        def mul(vec):
            out = [ctx.zero] * self.dim
            for i, x in enumerate(vec):
                if ctx.is_zero(x):
                    continue
                col = combined[i]
                for kk in range(self.dim):
                    if not ctx.is_zero(col[kk]):
                        out[kk] = ctx.add(out[kk], ctx.mul(x, col[kk]))
            return out

        return mul

    def var_multiplier(self, j: int):
        one = self.ctx.one
        coeffs = [one if i == j else self.ctx.zero for i in range(self.space.n)]
        return self.form_multiplier(coeffs)


def krylov_minpoly(algebra: QuotientAlgebra, mul):
    """Minimal polynomial of the algebra element represented by `mul`
    (Krylov sequence from 1), plus the echelon holding its power basis."""
    ctx = algebra.ctx
    ech = make_echelon(ctx, algebra.dim)
    u = algebra.unit_vector()
    while True:
        rel = ech.add(u)
        if rel is not None:
            if ctx.kind == "prime":
                rel = [ctx.from_int(c) for c in rel]
            return UniPoly(ctx, rel), ech
        u = mul(u)


def _radical_basis(space, ctx, packed):
    """Reduced basis of the radical, via squarefree parts of the variable
    minimal polynomials; returns (gb, algebra) with a reduced quotient."""
    for _round in range(space.n + 2):
        gb = buchberger(space, ctx, packed)
        if gb.is_trivial():
            return gb, None
        stairs = require_staircase(gb)
        algebra = QuotientAlgebra(gb, stairs)
        additions = []
        for j in range(space.n):
            mu, _ = krylov_minpoly(algebra, algebra.var_multiplier(j))
            sigma = squarefree_part(mu)
            if sigma.degree < mu.degree:
                additions.append(_univariate_packed(space, ctx, sigma, j))
        if not additions:
            return gb, algebra
        packed = list(gb.polys) + additions
    raise RuntimeError("radical refinement failed to stabilize")


def _univariate_packed(space, ctx, poly: UniPoly, j: int) -> dict:
    out = {}
    for e, c in enumerate(poly.coeffs):
        if not ctx.is_zero(c):
            out[space.pack(tuple(e if i == j else 0 for i in range(space.n)))] = c
    return out


@dataclass
class _CoreResult:
    v: UniPoly
    coords: list[UniPoly]
    n_points: int


def _prepare_algebra(polys: list[MultiPoly], ctx):
    """Reduced (radical) quotient algebra of the system, or None if empty."""
    k_solve = polys[0].n
    space = MonomialSpace(k_solve)
    packed = [pack_multipoly(space, p) for p in polys]
    _, algebra = _radical_basis(space, ctx, packed)
    return algebra


def _parametrize(algebra: QuotientAlgebra, out_k: int, beta_ints) -> _CoreResult:
    """Parametrization with an imposed integer separating form.

    Raises _BetaNotSeparating when the form fails, so callers control the
    retry policy (fresh draw, or fresh prime in the modular route).
    """
    ctx = algebra.ctx
    space = algebra.space
    n_points = algebra.dim
    beta = [ctx.from_int(b) for b in beta_ints] + [ctx.zero] * (space.n - out_k)
    mu, ech = krylov_minpoly(algebra, algebra.form_multiplier(beta))
    if mu.degree != n_points:
        raise _BetaNotSeparating(n_points, mu.degree)
    if not is_squarefree(mu):
        raise _BadReduction("minimal polynomial of the form is not squarefree")
    v = mu
    dv = v.derivative()
    coords = []
    for j in range(out_k):
        vec = algebra.vector_of(algebra.nf_monomial(space.var(j)))
        c = ech.solve(vec)
        if c is None:
            raise _BadReduction("coordinate not in the power basis of the form")
        if ctx.kind == "prime":
            c = [ctx.from_int(x) for x in c]
        coords.append((UniPoly(ctx, c) * dv) % v)
    return _CoreResult(v, coords, n_points)


def _solve_core(polys: list[MultiPoly], ctx, out_k: int, beta_ints) -> _CoreResult:
    algebra = _prepare_algebra(polys, ctx)
    if algebra is None:
        return _CoreResult(
            UniPoly.constant(ctx, ctx.one), [UniPoly.zero(ctx)] * out_k, 0
        )
    return _parametrize(algebra, out_k, beta_ints)


_BETA_BOUNDS = (1, 19, 997, 65519, 1 << 20)


def _beta_bound(ctx, attempt: int) -> int:
    bound = _BETA_BOUNDS[min(attempt, len(_BETA_BOUNDS) - 1)]
    if ctx.kind == "prime":
        bound = min(bound, ctx.p - 1)
    return bound


def solve_zero_dim(
    system: list[MultiPoly],
    saturation: MultiPoly | None = None,
    seed: int = 0,
    max_retries: int = 5,
) -> ZeroDimParam:
    """Radical parametrization of the solution set of `system`.

    With `saturation` given, solutions where it vanishes are removed by
    appending u * saturation - 1 for an auxiliary variable u and projecting
    the parametrization back to the original coordinates (the form never
    involves u). Deterministic per seed.
    """
    if not system:
        raise ValueError("empty system")
    ctx = system[0].ctx
    k = system[0].n
    polys = list(system)
    out_k = k
    if saturation is not None:
        if saturation.is_zero():
            raise ValueError("saturation polynomial is zero")
        extended = []
        for p in polys:
            extended.append(
                MultiPoly(ctx, k + 1, {e + (0,): c for e, c in p.terms.items()}, normalized=True)
            )
        sat = MultiPoly(
            ctx,
            k + 1,
            {e + (1,): c for e, c in saturation.terms.items()},
            normalized=True,
        )
        one = MultiPoly.constant(ctx, k + 1, ctx.one)
        extended.append(sat - one)
        polys = extended
    if ctx.kind == "rational" and _estimate_large(polys):
        return _solve_rational_modular(polys, out_k, seed, max_retries)
    algebra = _prepare_algebra(polys, ctx)
    if algebra is None:
        return ZeroDimParam.empty(ctx, out_k, seed)
    rng = SplitMix64(seed).child("separating-form")
    last = None
    for attempt in range(max_retries):
        bound = _beta_bound(ctx, attempt)
        beta_ints = [rng.randint(1, bound) for _ in range(out_k)]
        try:
            core = _parametrize(algebra, out_k, beta_ints)
        except _BetaNotSeparating as exc:
            last = exc
            continue
        beta = tuple(ctx.from_int(b) for b in beta_ints)
        return ZeroDimParam(core.v, core.coords, beta, seed)
    raise SeparatingFormError(f"no separating form after {max_retries} draws: {last}")


def _estimate_large(polys) -> bool:
    """Crude size heuristic deciding the modular route over the rationals."""
    degs = sorted(
        (p.total_degree for p in polys if not p.is_zero() and p.total_degree > 0),
        reverse=True,
    )
    n = polys[0].n
    est = 1
    for d in degs[:n]:
        est *= d
    return est > _DIRECT_RATIONAL_LIMIT


# -- multi-modular route over the rationals -------------------------------


def _prime_stream(start: int = (1 << 24) - 1):
    from ..algebra.fields import is_prime

    p = start
    while p > 3:
        if is_prime(p):
            yield p
        p -= 2


def _reduce_poly_mod(p: MultiPoly, gf: PrimeField) -> MultiPoly:
    terms = {}
    for e, c in p.terms.items():
        if c.denominator % gf.p == 0:
            raise _BadReduction("denominator vanishes modulo the prime")
        terms[e] = gf.from_int(c.numerator) * pow(c.denominator, -1, gf.p) % gf.p
    return MultiPoly(gf, p.n, terms)


def _rational_reconstruct(r: int, modulus: int) -> Fraction | None:
    bound = isqrt(modulus // 2)
    a0, a1 = modulus, r % modulus
    b0, b1 = 0, 1
    while a1 > bound:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    if b1 == 0 or abs(b1) > bound or gcd(abs(b1), modulus) != 1:
        return None
    if b1 < 0:
        a1, b1 = -a1, -b1
    if gcd(abs(a1), b1) != 1:
        return None
    return Fraction(a1, b1)


def _crt_lift(residues, primes) -> int:
    total = 0
    modulus = 1
    for p in primes:
        modulus *= p
    for r, p in zip(residues, primes):
        m = modulus // p
        total += r * m * pow(m, -1, p)
    return total % modulus


def _reconstruct_coeffs(per_prime_coeffs, primes):
    """CRT + rational reconstruction across primes; None if any fails."""
    modulus = 1
    for p in primes:
        modulus *= p
    out = []
    for residues in per_prime_coeffs:
        x = _crt_lift(residues, primes)
        f = _rational_reconstruct(x, modulus)
        if f is None:
            return None
        out.append(f)
    return out


def _solve_rational_modular(polys, out_k, seed, max_retries) -> ZeroDimParam:
    from ..algebra import QQ

    rng = SplitMix64(seed).child("separating-form")
    for attempt in range(max_retries):
        bound = _beta_bound(QQ, attempt)
        beta_ints = [rng.randint(1, bound) for _ in range(out_k)]
        result = _modular_attempt(polys, out_k, beta_ints, seed)
        if result is not None:
            if result == "nonseparating":
                continue
            return result
    raise SeparatingFormError("modular route found no separating form")


def _modular_attempt(polys, out_k, beta_ints, seed):
    from ..algebra import QQ

    primes = _prime_stream()
    signature = None
    collected = []  # (prime, v coeffs, coords coeffs)
    nonseparating_votes = 0
    prev_recon = None
    initial_batch = 4
    max_primes = 400
    used = 0
    for p in primes:
        if used >= max_primes:
            raise RuntimeError("modular reconstruction did not stabilize")
        gf = PrimeField(p)
        try:
            mod_polys = [_reduce_poly_mod(q, gf) for q in polys]
            core = _solve_core(mod_polys, gf, out_k, beta_ints)
        except _BetaNotSeparating:
            nonseparating_votes += 1
            if nonseparating_votes >= 3:
                return "nonseparating"
            continue
        except _BadReduction:
            continue
        used += 1
        sig = (core.n_points, core.v.degree, tuple(w.degree for w in core.coords))
        if signature is None:
            signature = sig
        elif sig != signature:
            # disagreement: trust the larger point count (bad primes lose
            # solutions or merge them)
            if sig[0] > signature[0]:
                signature = sig
                collected = []
                prev_recon = None
            else:
                continue
        collected.append((p, core))
        if len(collected) < initial_batch:
            continue
        recon = _try_reconstruction(collected, signature, out_k)
        if recon is not None and recon == prev_recon:
            param = _finalize_rational(recon, signature, beta_ints, polys, out_k, seed)
            if param is not None:
                return param
        prev_recon = recon
    return None


def _try_reconstruction(collected, signature, out_k):
    primes = [p for p, _ in collected]
    n_points, deg_v, _ = signature
    per_coeff = []
    for idx in range(deg_v + 1):
        per_coeff.append([core.v.coeff(idx) for _, core in collected])
    v_coeffs = _reconstruct_coeffs(per_coeff, primes)
    if v_coeffs is None:
        return None
    coords_coeffs = []
    for j in range(out_k):
        per_coeff = []
        for idx in range(deg_v):
            per_coeff.append(
                [core.coords[j].coeff(idx) for _, core in collected]
            )
        cc = _reconstruct_coeffs(per_coeff, primes)
        if cc is None:
            return None
        coords_coeffs.append(tuple(cc))
    return (tuple(v_coeffs), tuple(coords_coeffs))


def _finalize_rational(recon, signature, beta_ints, polys, out_k, seed):
    """Exact and certificate checks on a reconstructed parametrization."""
    from ..algebra import QQ

    v_coeffs, coords_coeffs = recon
    v = UniPoly(QQ, list(v_coeffs))
    if v.degree != signature[1] or not QQ.is_zero(QQ.sub(v.lc, QQ.one)):
        return None
    coords = [UniPoly(QQ, list(cc)) for cc in coords_coeffs]
    beta = tuple(QQ.from_int(b) for b in beta_ints)
    # exact linear-form identity
    acc = UniPoly.zero(QQ)
    for b, w in zip(beta, coords):
        acc = acc + w.scale(b)
    if (acc % v) != (UniPoly.variable(QQ) * v.derivative()) % v:
        return None
    # certificates modulo fresh primes: squarefreeness and soundness
    fresh = _prime_stream(start=(1 << 23) - 1)
    checks_done = 0
    for q in fresh:
        if checks_done >= 2:
            break
        gf = PrimeField(q)
        try:
            v_q = v.map_coeffs(gf, lambda c: _frac_mod(c, q))
            coords_q = [w.map_coeffs(gf, lambda c: _frac_mod(c, q)) for w in coords]
            polys_q = [_reduce_poly_mod(pp, gf) for pp in polys]
        except (_BadReduction, ZeroDivisionError):
            continue
        if v_q.degree != v.degree:
            continue
        from ..algebra import uni_gcd as _gcd

        if checks_done == 0 and _gcd(v_q, v_q.derivative()).degree != 0:
            return None  # v not squarefree over the rationals
        if not _sound_mod_prime(polys_q, v_q, coords_q, out_k, gf):
            return None
        checks_done += 1
    if checks_done < 2:
        return None
    return ZeroDimParam(v, coords, beta, seed)


def _frac_mod(c: Fraction, p: int) -> int:
    if c.denominator % p == 0:
        raise _BadReduction("fresh prime divides a denominator")
    return c.numerator * pow(c.denominator, -1, p) % p


def _sound_mod_prime(polys_q, v_q, coords_q, out_k, gf) -> bool:
    from ..algebra import QuotientContext, inverse_mod

    if uni_is_not_squarefree_mod(v_q):
        return False
    ctxq = QuotientContext(gf, v_q, validate=False)
    dv = v_q.derivative()
    try:
        inv_dv = inverse_mod(dv, v_q)
    except ZeroDivisionError:
        return False
    values = [ctxq._pad((w * inv_dv) % v_q) for w in coords_q]
    k_solve = polys_q[0].n
    if k_solve > out_k:
        # recover the auxiliary inverse value for the saturation variable:
        # it satisfies u * g = 1, so substitute the inverse of g directly
        sat_rows = [p for p in polys_q if any(e[-1] for e in p.terms.keys())]
        if not sat_rows:
            return False
        g_terms = {}
        for e, c in sat_rows[-1].terms.items():
            if e[-1] == 1:
                g_terms[e[:-1]] = c
        g = MultiPoly(gf, out_k, g_terms)
        gval = g.eval(values, ctxq)
        try:
            uval = ctxq.inv(gval)
        except (ZeroDivisionError, Exception):
            return False
        values = values + [uval]
    for p in polys_q:
        if not ctxq.is_zero(p.eval(values, ctxq)):
            return False
    return True


def uni_is_not_squarefree_mod(v_q: UniPoly) -> bool:
    from ..algebra import uni_gcd as _gcd

    return _gcd(v_q, v_q.derivative()).degree != 0


# -- test oracle: trace-form rank ------------------------------------------


def trace_form_rank(system: list[MultiPoly]) -> int:
    """Rank of the trace bilinear form of ctx[x]/(system): the number of
    distinct solutions. Desk-scale oracle (full multiplication matrices)."""
    ctx = system[0].ctx
    space = MonomialSpace(system[0].n)
    gb = buchberger(space, ctx, [pack_multipoly(space, p) for p in system])
    if gb.is_trivial():
        return 0
    stairs = require_staircase(gb)
    algebra = QuotientAlgebra(gb, stairs)
    dim = algebra.dim
    if ctx.kind != "prime":
        raise ValueError("trace-form oracle implemented over prime fields")
    p = ctx.p
    mats = {0: np.eye(dim, dtype=np.int64)}
    order = sorted(stairs, key=space.key)
    for mono in order:
        if mono == 0:
            continue
        for j in range(space.n):
            prev = mono - space.var(j)
            if space.unpack(mono)[j] > 0 and prev in mats:
                mats[mono] = (algebra.var_matrix(j) @ mats[prev]) % p
                break
        else:
            raise RuntimeError("staircase is not downward closed")
    traces = np.array([int(np.trace(mats[m])) % p for m in order], dtype=np.int64)
    gram = np.zeros((dim, dim), dtype=np.int64)
    for i, bi in enumerate(order):
        for j in range(i, dim):
            prod_nf = algebra.nf_monomial(bi + order[j])
            val = 0
            for m, c in prod_nf.items():
                val = (val + c * int(traces[algebra.index[m]])) % p
            gram[i, j] = gram[j, i] = val
    return _matrix_rank_mod(gram, p)


def _matrix_rank_mod(mat: np.ndarray, p: int) -> int:
    a = mat % p
    rank = 0
    rows, cols = a.shape
    col = 0
    for col in range(cols):
        piv = None
        for r in range(rank, rows):
            if a[r, col] % p:
                piv = r
                break
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        for r in range(rows):
            if r != rank and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[rank]) % p
        rank += 1
    return rank
