from fractions import Fraction

import pytest

from hypercrit.algebra import (
    QQ,
    ExtensionField,
    MultiPoly,
    PrimeField,
    QuotientContext,
    UniPoly,
    determinant,
    extension_of,
    field_sqrt,
    is_irreducible,
    is_squarefree,
    multiplicity_decomposition,
    quotient_gcd_d5,
    quotient_poly,
    sqrt_with_extension,
    uni_gcd,
    uni_xgcd,
)
from hypercrit.algebra.factor import factor_squarefree, rational_linear_split, roots_in_field
from hypercrit.errors import MixedContextError
from hypercrit.rng import SplitMix64

GF = PrimeField(65521)


def P(ctx, *ints):
    return UniPoly.of_ints(ctx, ints)


# -- field contexts ----------------------------------------------------


def test_prime_field_basics():
    assert GF.add(65520, 1) == 0
    assert GF.mul(GF.inv(7), 7) == 1
    with pytest.raises(ValueError):
        PrimeField(65520)
    with pytest.raises(ValueError):
        PrimeField(2)


def test_system_bound_rejection():
    small = PrimeField(101)
    with pytest.raises(ValueError):
        small.check_system_bound(10, 8)
    GF.check_system_bound(6, 12)
    QQ.check_system_bound(100, 100)


def test_extension_field_frobenius_fixed_points():
    # x^(p^e) == x for random elements of GF(p^e), e <= 4
    p = PrimeField(101)
    rng = SplitMix64(7)
    for e in (2, 3, 4):
        ext = extension_of(p, e)
        assert ext.order() == 101**e
        for _ in range(10):
            x = ext.rand(rng)
            assert ext.pow(x, 101**e) == x


def test_extension_inverse_and_tower():
    ext = extension_of(GF, 2)
    rng = SplitMix64(3)
    for _ in range(20):
        x = ext.rand(rng)
        if ext.is_zero(x):
            continue
        assert ext.mul(x, ext.inv(x)) == ext.one
    # one more quadratic layer on top
    top = extension_of(ext, 2, seed=11)
    y = top.lift_from(GF, 17)
    assert top.mul(y, y) == top.lift_from(GF, GF.mul(17, 17))


def test_irreducibility_test():
    t2 = P(GF, -1, 0, 1)  # (t-1)(t+1)
    assert not is_irreducible(t2)
    # t^2 - g for a non-residue g is irreducible
    g = 17
    while GF.pow(g, (GF.p - 1) // 2) == 1:
        g += 1
    assert is_irreducible(P(GF, -g, 0, 1))


def test_sqrt_prime_and_extension():
    for a in (4, 9, 12345):
        r = field_sqrt(GF, GF.from_int(a * a))
        assert GF.mul(r, r) == GF.from_int(a * a)
    ctx2, roots = sqrt_with_extension(GF, [3, 5, 7, 11])
    for v, r in zip([3, 5, 7, 11], roots):
        assert ctx2.mul(r, r) == ctx2.lift_from(GF, v)
    assert field_sqrt(QQ, Fraction(9, 4)) == Fraction(3, 2)
    assert field_sqrt(QQ, Fraction(2)) is None


# -- univariate arithmetic ---------------------------------------------


def test_unipoly_divmod_roundtrip():
    rng = SplitMix64(5)
    for _ in range(50):
        a = UniPoly(GF, [GF.rand(rng) for _ in range(rng.randint(0, 8))])
        b = UniPoly(GF, [GF.rand(rng) for _ in range(rng.randint(1, 5))])
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


def test_gcd_examples():
    # gcd(t^3-3t^2+2t, t^2-4t+3) = t-1
    assert uni_gcd(P(QQ, 0, 2, -3, 1), P(QQ, 3, -4, 1)) == P(QQ, -1, 1)
    # gcd(p, 0) = monic(p)
    p = P(QQ, 2, 4)
    assert uni_gcd(p, UniPoly.zero(QQ)) == P(QQ, 1, 2).monic()
    assert uni_gcd(UniPoly.zero(QQ), UniPoly.zero(QQ)).is_zero()
    # gcd(t^2-9, t^2-6) = 1
    assert uni_gcd(P(QQ, -9, 0, 1), P(QQ, -6, 0, 1)).is_one()


def test_gcd_divides_and_is_greatest():
    rng = SplitMix64(11)
    for _ in range(40):
        c = UniPoly(GF, [GF.rand(rng) for _ in range(rng.randint(1, 4))])
        a0 = UniPoly(GF, [GF.rand(rng) for _ in range(rng.randint(1, 4))])
        b0 = UniPoly(GF, [GF.rand(rng) for _ in range(rng.randint(1, 4))])
        a, b = c * a0, c * b0
        if a.is_zero() or b.is_zero():
            continue
        g = uni_gcd(a, b)
        assert (a % g).is_zero() and (b % g).is_zero()
        if not c.is_zero():
            assert (g % c.monic()).is_zero()
        gg, s, t = uni_xgcd(a, b)
        assert s * a + t * b == gg


def test_mixed_context_rejected():
    with pytest.raises(MixedContextError):
        uni_gcd(P(QQ, 1, 1), P(GF, 1, 1))


def test_multiplicity_decomposition_worked_example():
    # (t^3-3t^2+2t)*(t^2-4t+3)^2 = t * (t-2) * (t-3)^2 * (t-1)^3
    q = P(QQ, 0, 2, -3, 1) * P(QQ, 3, -4, 1) * P(QQ, 3, -4, 1)
    d, parts = multiplicity_decomposition(q)
    assert d == 1
    assert parts == [(P(QQ, -2, 1), 1), (P(QQ, -3, 1), 2), (P(QQ, -1, 1), 3)]


def test_multiplicity_decomposition_edges():
    d, parts = multiplicity_decomposition(P(QQ, 0, 0, 0, 0, 0, 1))  # t^5
    assert d == 5 and parts == []
    q = P(QQ, -9, 0, 1) * P(QQ, -6, 0, 1)
    d, parts = multiplicity_decomposition(q)
    assert d == 0
    assert parts == [(q.monic(), 1)]


def test_multiplicity_decomposition_reconstructs():
    rng = SplitMix64(23)
    for _ in range(40):
        q = UniPoly.constant(GF, GF.one)
        d0 = rng.below(3)
        q = q.shift(d0)
        for _ in range(rng.randint(1, 3)):
            lin = P(GF, rng.randint(1, 50), 1)
            q = q * lin.pow(rng.randint(1, 3))
        d, parts = multiplicity_decomposition(q)
        rebuilt = UniPoly.constant(GF, GF.one).shift(d)
        seen = set()
        prev = 0
        for p_i, v_i in parts:
            rebuilt = rebuilt * p_i.pow(v_i)
            assert v_i > prev
            prev = v_i
            assert is_squarefree(p_i)
            assert not GF.is_zero(p_i.coeff(0))
            for q_j in seen:
                assert uni_gcd(p_i, q_j).is_one()
            seen.add(p_i)
        assert rebuilt == q.monic()


# -- dynamic evaluation --------------------------------------------------


def quotient_var_poly(ctxq, shift_ints):
    """u - c(t) style polynomials over the quotient, c given by base coeffs."""
    base = ctxq.base
    polys = [UniPoly.of_ints(base, shift_ints), UniPoly.of_ints(base, [1])]
    return quotient_poly(ctxq, polys)


def test_quotient_gcd_equal_inputs_no_split():
    v = P(GF, 6, -5, 1)  # (t-2)(t-3)
    ctxq = QuotientContext(GF, v)
    a = quotient_var_poly(ctxq, [-4])  # u - 4
    branches = quotient_gcd_d5(a, a, v)
    assert len(branches) == 1
    vb, g = branches[0]
    assert vb == v
    assert g.degree == 1


def test_quotient_gcd_splits_on_shared_root():
    # v = t^2-5t+6; a = u - t, b = u - 2: gcd is u-2 at t=2 and 1 at t=3
    v = P(GF, 6, -5, 1)
    ctxq = QuotientContext(GF, v)
    tt = ctxq.gen()
    a = UniPoly(ctxq, [ctxq.neg(tt), ctxq.one])
    b = UniPoly(ctxq, [ctxq.from_int(-2), ctxq.one])
    branches = dict()
    for vb, g in quotient_gcd_d5(a, b, v):
        branches[vb.coeffs] = g
    t_minus_2 = P(GF, -2, 1)
    t_minus_3 = P(GF, -3, 1)
    assert set(branches) == {t_minus_2.coeffs, t_minus_3.coeffs}
    g2 = branches[t_minus_2.coeffs]
    assert g2.degree == 1 and g2.coeffs[0] == QuotientContext(GF, t_minus_2).from_int(-2)
    assert branches[t_minus_3.coeffs].is_one()


def test_quotient_gcd_branches_multiply_back_and_match_specializations():
    rng = SplitMix64(41)
    for trial in range(20):
        roots = set()
        while len(roots) < 3:
            roots.add(rng.randint(1, 97))
        v = UniPoly.constant(GF, GF.one)
        for r in roots:
            v = v * P(GF, -r, 1)
        ctxq = QuotientContext(GF, v)
        tt = ctxq.gen()
        # a = (u - t)(u - c1), b = (u - c2)(u - t) share the root u=t always,
        # plus more at special t values
        c1, c2 = rng.randint(1, 97), rng.randint(1, 97)
        u_minus_t = UniPoly(ctxq, [ctxq.neg(tt), ctxq.one])
        a = u_minus_t * UniPoly(ctxq, [ctxq.from_int(-c1), ctxq.one])
        b = u_minus_t * UniPoly(ctxq, [ctxq.from_int(-c2), ctxq.one])
        branches = quotient_gcd_d5(a, b, v)
        prod = UniPoly.constant(GF, GF.one)
        for vb, g in branches:
            prod = prod * vb
            # check against plain gcd at every root of the branch
            for r in roots:
                if not GF.is_zero(vb.eval(GF.from_int(r))):
                    continue
                spec_a = UniPoly(GF, [UniPoly(GF, co).eval(GF.from_int(r)) for co in a.coeffs])
                spec_b = UniPoly(GF, [UniPoly(GF, co).eval(GF.from_int(r)) for co in b.coeffs])
                expected = uni_gcd(spec_a, spec_b)
                got = UniPoly(GF, [UniPoly(GF, co).eval(GF.from_int(r)) for co in g.coeffs]).monic()
                assert got == expected
        assert prod == v.monic()


# -- factorization (expansion support) ------------------------------------


def test_factor_squarefree_products_of_linears():
    f = P(GF, -1, 1) * P(GF, -2, 1) * P(GF, -3, 1)
    factors = factor_squarefree(f)
    assert sorted(h.degree for h in factors) == [1, 1, 1]
    assert set(roots_in_field(f)) == {1, 2, 3}


def test_factor_squarefree_mixed_degrees():
    g = 17
    while GF.pow(g, (GF.p - 1) // 2) == 1:
        g += 1
    f = P(GF, -g, 0, 1) * P(GF, -5, 1)
    factors = factor_squarefree(f)
    assert sorted(h.degree for h in factors) == [1, 2]
    prod = UniPoly.constant(GF, GF.one)
    for h in factors:
        prod = prod * h
    assert prod == f.monic()


def test_rational_linear_split():
    f = P(QQ, -9, 0, 1) * P(QQ, -6, 0, 1)
    roots, cof = rational_linear_split(f)
    assert sorted(roots) == [-3, 3]
    assert cof == P(QQ, -6, 0, 1)


# -- multivariate polynomials ---------------------------------------------


def test_multipoly_arithmetic_and_eval():
    x = MultiPoly.variable(GF, 2, 0)
    y = MultiPoly.variable(GF, 2, 1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.eval([GF.from_int(5), GF.from_int(3)]) == GF.from_int(16)
    assert p.total_degree == 2


def test_multipoly_partial_and_substitution():
    x = MultiPoly.variable(QQ, 2, 0)
    y = MultiPoly.variable(QQ, 2, 1)
    p = x.pow(3) * y + y.pow(2)
    assert p.partial(0) == MultiPoly.from_int_terms(QQ, 2, [(3, (2, 1))])
    q = p.subst([y, x])  # swap variables
    assert q == y.pow(3) * x + x.pow(2)


def test_multipoly_truncate_and_halve():
    p = MultiPoly.from_int_terms(QQ, 3, [(1, (4, 0, 0)), (1, (0, 4, 0)), (1, (0, 0, 4)), (-18, (0, 0, 0))])
    t1 = p.truncate_vars(1)
    assert t1 == MultiPoly.from_int_terms(QQ, 1, [(1, (4,)), (-18, (0,))])
    g = t1.halve_exponents()
    assert g == MultiPoly.from_int_terms(QQ, 1, [(1, (2,)), (-18, (0,))])
    assert g.square_variables() == t1


def test_determinant_matches_hand_expansion():
    x = MultiPoly.variable(QQ, 2, 0)
    y = MultiPoly.variable(QQ, 2, 1)
    one = MultiPoly.constant(QQ, 2, QQ.one)
    m = [[x, y], [one, x]]
    assert determinant(m) == x * x - y
