"""Buchberger's algorithm over a field context, graded reverse lex order.

Monomials are packed into single integers (one bit field per variable plus
guard bits), so divisibility is one mask test and multiplication is integer
addition. Pair handling uses the product and chain criteria in the usual
update formulation. The engine returns the reduced basis, from which the
quotient staircase and normal-form vectors are derived.
"""

from __future__ import annotations

import heapq

from ..algebra import MultiPoly
from ..errors import PositiveDimensionalError

_B = 10  # bits per exponent field; exponents must stay below 2^(_B-1)
_FIELD_MAX = (1 << (_B - 1)) - 1


class MonomialSpace:
    """Packing, ordering and divisibility for exponent vectors of length n."""

    def __init__(self, n: int):
        self.n = n
        self.guard = 0
        for i in range(n):
            self.guard |= 1 << (_B * i + _B - 1)
        self._key_cache: dict[int, int] = {}
        self.one = 0

    def pack(self, expo) -> int:
        m = 0
        for i, e in enumerate(expo):
            if e > _FIELD_MAX:
                raise OverflowError("exponent too large for packed monomials")
            m |= e << (_B * i)
        return m

    def unpack(self, m: int):
        return tuple((m >> (_B * i)) & ((1 << _B) - 1) for i in range(self.n))

    def degree(self, m: int) -> int:
        return sum(self.unpack(m))

    def key(self, m: int) -> int:
        """Integer whose natural order is graded reverse lexicographic."""
        k = self._key_cache.get(m)
        if k is None:
            expo = self.unpack(m)
            k = sum(expo)
            for i in range(self.n):  # most significant: last variable, reversed
                k = (k << _B) | (_FIELD_MAX - expo[self.n - 1 - i])
            self._key_cache[m] = k
        return k

    def divides(self, a: int, b: int) -> bool:
        return ((b | self.guard) - a) & self.guard == self.guard

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.unpack(a), self.unpack(b)
        return self.pack(tuple(max(x, y) for x, y in zip(ea, eb)))

    def var(self, i: int) -> int:
        return 1 << (_B * i)


class GroebnerBasis:
    """Reduced monic basis plus the machinery built on top of it."""

    def __init__(self, space: MonomialSpace, ctx, polys):
        self.space = space
        self.ctx = ctx
        self.polys = polys  # list of dicts {packed: coeff}, monic, tail-reduced
        self.leads = [max(p, key=space.key) for p in polys]

    def is_trivial(self) -> bool:
        return len(self.polys) == 1 and self.leads[0] == 0

    def normal_form(self, poly: dict) -> dict:
        return _normal_form(self.space, self.ctx, poly, self.leads, self.polys)

    def staircase(self):
        """Monomials outside the lead ideal, sorted; None marks infinite dim.

        The quotient is finite-dimensional iff every variable appears as a
        pure power among the lead monomials.
        """
        space, leads = self.space, self.leads
        if any(lead == 0 for lead in leads):
            return []  # the whole ring is the ideal
        if not leads:
            return None
        for i in range(space.n):
            if not any(_is_pure_power(space, lead, i) for lead in leads):
                return None
        seen = {0}
        order = [0]
        idx = 0
        while idx < len(order):
            m = order[idx]
            idx += 1
            for i in range(space.n):
                m2 = m + space.var(i)
                if m2 in seen:
                    continue
                seen.add(m2)
                if not any(space.divides(lead, m2) for lead in leads):
                    order.append(m2)
        order.sort(key=space.key)
        return order


def _is_pure_power(space: MonomialSpace, mono: int, i: int) -> bool:
    expo = space.unpack(mono)
    return expo[i] > 0 and all(e == 0 for j, e in enumerate(expo) if j != i)


def _normal_form(space, ctx, poly, leads, polys) -> dict:
    key = space.key
    work = dict(poly)
    out = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if ctx.is_zero(c):
            continue
        reducer = -1
        for gi, lead in enumerate(leads):
            if space.divides(lead, m):
                reducer = gi
                break
        if reducer < 0:
            out[m] = c
            continue
        shift = m - leads[reducer]
        for m2, c2 in polys[reducer].items():
            if m2 == leads[reducer]:
                continue
            mm = m2 + shift
            prev = work.get(mm)
            val = ctx.neg(ctx.mul(c, c2)) if prev is None else ctx.sub(prev, ctx.mul(c, c2))
            if ctx.is_zero(val):
                work.pop(mm, None)
            else:
                work[mm] = val
    return out


def _make_monic(ctx, poly: dict, lead: int) -> dict:
    lc = poly[lead]
    if ctx.is_zero(ctx.sub(lc, ctx.one)):
        return poly
    inv = ctx.inv(lc)
    return {m: ctx.mul(inv, c) for m, c in poly.items()}


def buchberger(space: MonomialSpace, ctx, polys, use_criteria: bool = True) -> GroebnerBasis:
    """Reduced monic basis of the ideal generated by `polys` (packed dicts)."""
    key = space.key
    basis: list[dict] = []
    leads: list[int] = []

    heap: list[tuple[int, int, int, int]] = []
    alive: set[tuple[int, int]] = set()
    lcms: dict[tuple[int, int], int] = {}

    def push_pair(i, j):
        if i > j:
            i, j = j, i
        sig = (i, j)
        if sig in alive:
            return
        l = space.lcm(leads[i], leads[j])
        alive.add(sig)
        lcms[sig] = l
        heapq.heappush(heap, (key(l), i, j, l))

    def drop_pair(i, j):
        alive.discard((i, j) if i < j else (j, i))

    def update(t):
        """Add generator index t; install new pairs, prune with the standard
        product/chain criteria."""
        lead_t = leads[t]
        if not use_criteria:
            for i in range(t):
                push_pair(i, t)
            return
        cand = []
        for i in range(t):
            cand.append((space.lcm(leads[i], lead_t), i))
        keep = []
        for l, i in cand:
            redundant = False
            for l2, j in cand:
                if j == i:
                    continue
                if l2 != l and space.divides(l2, l):
                    redundant = True
                    break
            if not redundant:
                keep.append((l, i))
        by_lcm: dict[int, list[int]] = {}
        for l, i in keep:
            by_lcm.setdefault(l, []).append(i)
        for l, idxs in by_lcm.items():
            if any(space.lcm(leads[i], lead_t) == leads[i] + lead_t for i in idxs):
                continue  # a coprime pair makes every pair with this lcm redundant
            push_pair(idxs[0], t)
        # chain criterion on old pairs
        for (i, j) in list(alive):
            if t in (i, j):
                continue
            l = lcms[(i, j)]
            if space.divides(lead_t, l) and space.lcm(leads[i], lead_t) != l and space.lcm(leads[j], lead_t) != l:
                drop_pair(i, j)

    for p in polys:
        p = {m: c for m, c in p.items() if not ctx.is_zero(c)}
        if not p:
            continue
        r = _normal_form(space, ctx, p, leads, basis)
        if not r:
            continue
        lead = max(r, key=key)
        if lead == 0:
            return GroebnerBasis(space, ctx, [{0: ctx.one}])
        basis.append(_make_monic(ctx, r, lead))
        leads.append(lead)
        update(len(basis) - 1)

    if not basis:
        return GroebnerBasis(space, ctx, [])  # zero ideal

    while heap:
        _, i, j, l = heapq.heappop(heap)
        if (i, j) not in alive:
            continue
        drop_pair(i, j)
        s = _spoly(space, ctx, basis[i], leads[i], basis[j], leads[j], l)
        r = _normal_form(space, ctx, s, leads, basis)
        if not r:
            continue
        lead = max(r, key=key)
        if lead == 0:
            return GroebnerBasis(space, ctx, [{0: ctx.one}])
        basis.append(_make_monic(ctx, r, lead))
        leads.append(lead)
        update(len(basis) - 1)

    return _reduce_basis(space, ctx, basis, leads)


def _spoly(space, ctx, f, lead_f, g, lead_g, l) -> dict:
    out: dict[int, object] = {}
    shift_f = l - lead_f
    for m, c in f.items():
        out[m + shift_f] = c
    shift_g = l - lead_g
    for m, c in g.items():
        mm = m + shift_g
        prev = out.get(mm)
        val = ctx.neg(c) if prev is None else ctx.sub(prev, c)
        if prev is not None and ctx.is_zero(val):
            del out[mm]
        else:
            out[mm] = val
    return out


def _reduce_basis(space, ctx, basis, leads) -> GroebnerBasis:
    keep = []
    for i, lead in enumerate(leads):
        if not any(
            j != i and space.divides(leads[j], lead) for j in range(len(leads))
        ):
            keep.append(i)
    polys = [basis[i] for i in keep]
    kept_leads = [leads[i] for i in keep]
    reduced = []
    for i, p in enumerate(polys):
        others = [kept_leads[j] for j in range(len(polys)) if j != i]
        opolys = [polys[j] for j in range(len(polys)) if j != i]
        tail = dict(p)
        del tail[kept_leads[i]]
        nf_tail = _normal_form(space, ctx, tail, others, opolys)
        nf_tail[kept_leads[i]] = ctx.one
        reduced.append(nf_tail)
    order = sorted(range(len(reduced)), key=lambda i: space.key(kept_leads[i]))
    return GroebnerBasis(space, ctx, [reduced[i] for i in order])


# -- conversions ----------------------------------------------------------


def pack_multipoly(space: MonomialSpace, p: MultiPoly) -> dict:
    return {space.pack(expo): c for expo, c in p.terms.items()}


def unpack_to_multipoly(space: MonomialSpace, ctx, poly: dict) -> MultiPoly:
    return MultiPoly(
        ctx,
        space.n,
        {space.unpack(m): c for m, c in poly.items()},
        normalized=True,
    )


def groebner_of_multipolys(polys: list[MultiPoly]) -> GroebnerBasis:
    if not polys:
        raise ValueError("empty system")
    n, ctx = polys[0].n, polys[0].ctx
    space = MonomialSpace(n)
    packed = [pack_multipoly(space, p) for p in polys]
    return buchberger(space, ctx, packed)


def require_staircase(gb: GroebnerBasis):
    stairs = gb.staircase()
    if stairs is None:
        raise PositiveDimensionalError("quotient algebra is infinite-dimensional")
    return stairs
