"""Signed-permutation invariance: checks, rewrites, truncation, generation.

A polynomial is invariant under all signed permutations iff it is fixed by
the three group generators (adjacent swap, full cycle, single sign flip);
such a polynomial has only even exponents and is a polynomial in the
elementary symmetric functions of the squared variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .algebra import FieldContext, MultiPoly
from .errors import InvarianceError
from .rng import SplitMix64


def is_bn_invariant(p: MultiPoly) -> bool:
    """Fixed by swap(x0,x1), the full cycle, and negate(x0)?

    Those three generate the whole signed-permutation group, so the check
    is complete without enumerating all 2^n n! elements.
    """
    n = p.n
    if n >= 2:
        swap = list(range(n))
        swap[0], swap[1] = 1, 0
        if p.permute_vars(swap) != p:
            return False
        cycle = [(i + 1) % n for i in range(n)]
        if p.permute_vars(cycle) != p:
            return False
    return p.flip_sign(0) == p


def rewrite_squares(p: MultiPoly) -> MultiPoly:
    """The unique g with g(x_1^2, ..., x_n^2) = p; requires even exponents."""
    try:
        return p.halve_exponents()
    except ValueError as exc:
        raise InvarianceError(str(exc)) from exc


def truncate(p: MultiPoly, m: int) -> MultiPoly:
    """The algebra map sending x_{m+1}, ..., x_n to 0, as an m-variable poly."""
    return p.truncate_vars(m)


def elementary_symmetric_in_squares(ctx: FieldContext, n: int, k: int) -> MultiPoly:
    """eta_k(x_1^2, ..., x_n^2) as an n-variable polynomial."""
    # coefficient extraction from prod_i (1 + x_i^2 T), by variable count
    layers = [MultiPoly.zero(ctx, n) for _ in range(k + 1)]
    layers[0] = MultiPoly.constant(ctx, n, ctx.one)
    for i in range(n):
        xi2 = MultiPoly(ctx, n, {tuple(2 if j == i else 0 for j in range(n)): ctx.one})
        for deg in range(min(i + 1, k), 0, -1):
            layers[deg] = layers[deg] + layers[deg - 1] * xi2
    return layers[k]


@dataclass
class InvariantSystem:
    """s invariant constraints plus one invariant objective in n variables."""

    n: int
    s: int
    f: list[MultiPoly]
    phi: MultiPoly
    field: FieldContext
    meta: dict = dataclass_field(default_factory=dict)

    def __post_init__(self):
        if self.s != len(self.f):
            raise ValueError("s does not match the number of constraints")
        if not 0 < self.s < self.n:
            raise ValueError("need 0 < s < n")
        degs = []
        for poly in [*self.f, self.phi]:
            if poly.n != self.n or poly.ctx != self.field:
                raise InvarianceError("system member over the wrong ring")
            if not is_bn_invariant(poly):
                raise InvarianceError(
                    "system member is not signed-permutation invariant"
                )
            deg = poly.total_degree
            if isinstance(deg, int):
                degs.append(deg)
        self.degree = max(degs) if degs else 0
        if self.degree % 2:
            raise InvarianceError("invariant polynomials must have even degree")
        self.field.check_system_bound(self.n, max(self.degree, 1))

    def members(self) -> list[MultiPoly]:
        return [*self.f, self.phi]


def random_invariant_system(
    n: int, s: int, d: int, seed: int, field: FieldContext
) -> InvariantSystem:
    """Random invariant system of degree <= d, deterministic per seed.

    Sampling happens in the generator basis: random coefficients on the
    monomials in eta_1(x^2), ..., eta_n(x^2) of total x-degree <= d, which
    guarantees invariance by construction and keeps the sparsity comparable
    to the generators themselves.
    """
    if d <= 0 or d % 2:
        raise ValueError("degree bound d must be a positive even integer")
    if not 0 < s < n:
        raise ValueError("need 0 < s < n")
    rng = SplitMix64(seed).child("invariant-system", n, s, d)
    gens = [elementary_symmetric_in_squares(field, n, k) for k in range(1, n + 1)]

    def weighted_exponents(budget: int, idx: int):
        if idx == len(gens):
            yield ()
            return
        weight = 2 * (idx + 1)
        for e in range(budget // weight + 1):
            for rest in weighted_exponents(budget - weight * e, idx + 1):
                yield (e,) + rest

    basis = sorted(weighted_exponents(d, 0))
    polys = []
    for _ in range(s + 1):
        acc = MultiPoly.zero(field, n)
        for expo in basis:
            c = field.rand(rng)
            if field.is_zero(c):
                continue
            term = MultiPoly.constant(field, n, c)
            for g, e in zip(gens, expo):
                if e:
                    term = term * g.pow(e)
            acc = acc + term
        polys.append(acc)
    system = InvariantSystem(
        n=n, s=s, f=polys[:s], phi=polys[s], field=field, meta={"seed": seed, "d": d}
    )
    return system
