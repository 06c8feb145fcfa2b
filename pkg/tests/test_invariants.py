import pytest

from hypercrit.algebra import QQ, MultiPoly, PrimeField
from hypercrit.errors import InvarianceError
from hypercrit.invariants import (
    InvariantSystem,
    elementary_symmetric_in_squares,
    is_bn_invariant,
    random_invariant_system,
    rewrite_squares,
    truncate,
)
from hypercrit.rng import SplitMix64

GF = PrimeField(65521)


def test_is_bn_invariant_examples(example1_q):
    assert is_bn_invariant(example1_q.f[0])
    assert is_bn_invariant(example1_q.phi)
    x1cubed = MultiPoly.from_int_terms(QQ, 3, [(1, (3, 0, 0))])
    assert not is_bn_invariant(x1cubed)
    eta2 = elementary_symmetric_in_squares(QQ, 3, 2)
    assert eta2 == MultiPoly.from_int_terms(
        QQ, 3, [(1, (2, 2, 0)), (1, (2, 0, 2)), (1, (0, 2, 2))]
    )
    assert is_bn_invariant(eta2)
    # symmetric but not sign-invariant
    assert not is_bn_invariant(
        MultiPoly.from_int_terms(QQ, 3, [(1, (1, 0, 0)), (1, (0, 1, 0)), (1, (0, 0, 1))])
    )


def test_rewrite_squares_examples(example1_q):
    g = rewrite_squares(example1_q.f[0])
    assert g == MultiPoly.from_int_terms(
        QQ, 3, [(1, (2, 0, 0)), (1, (0, 2, 0)), (1, (0, 0, 2)), (-18, (0, 0, 0))]
    )
    psi = rewrite_squares(example1_q.phi)
    assert psi == MultiPoly.from_int_terms(
        QQ, 3, [(1, (1, 1, 1)), (-3, (1, 0, 0)), (-3, (0, 1, 0)), (-3, (0, 0, 1))]
    )
    c = MultiPoly.constant(QQ, 2, QQ.from_int(7))
    assert rewrite_squares(c) == c
    with pytest.raises(InvarianceError):
        rewrite_squares(MultiPoly.from_int_terms(QQ, 2, [(1, (1, 0))]))


def test_rewrite_squares_roundtrip_random():
    rng = SplitMix64(9)
    for _ in range(20):
        sys = random_invariant_system(3, 1, 4, rng.next_u64(), GF)
        for p in sys.members():
            assert rewrite_squares(p).square_variables() == p


def test_truncate_examples():
    # p = sum_{i<j<=5} x_i^4 x_j^4 truncated to 3 variables
    terms = []
    for i in range(5):
        for j in range(i + 1, 5):
            e = [0] * 5
            e[i] = e[j] = 4
            terms.append((1, tuple(e)))
    p = MultiPoly.from_int_terms(QQ, 5, terms)
    t3 = truncate(p, 3)
    expected = []
    for i in range(3):
        for j in range(i + 1, 3):
            e = [0] * 3
            e[i] = e[j] = 4
            expected.append((1, tuple(e)))
    assert t3 == MultiPoly.from_int_terms(QQ, 3, expected)
    assert truncate(p, 5) == p
    with pytest.raises(ValueError):
        truncate(p, 6)


def test_truncate_then_rewrite_example(example1_q):
    q1 = rewrite_squares(truncate(example1_q.f[0], 1))
    assert q1 == MultiPoly.from_int_terms(QQ, 1, [(1, (2,)), (-18, (0,))])


def test_partial_derivative_divisible_by_variable():
    # invariant p has dp/dx_i vanishing at x_i = 0
    rng = SplitMix64(13)
    checked = 0
    while checked < 50:
        sys = random_invariant_system(3, 1, 6, rng.next_u64(), GF)
        for p in sys.members():
            for i in range(3):
                dp = p.partial(i)
                point = [GF.rand(rng) for _ in range(3)]
                point[i] = GF.zero
                assert dp.eval(point) == GF.zero
                checked += 1


def test_chain_rule_factorization():
    # Jac_x(f, phi) = Jac_z(g, psi)(x^2) * diag(2x) entrywise at nonzero points
    rng = SplitMix64(17)
    checked = 0
    while checked < 50:
        sys = random_invariant_system(3, 2, 4, rng.next_u64(), GF)
        gs = [rewrite_squares(p) for p in sys.members()]
        point = [GF.rand(rng) for _ in range(3)]
        if any(GF.is_zero(x) for x in point):
            continue
        squares = [GF.mul(x, x) for x in point]
        for p, g in zip(sys.members(), gs):
            for i in range(3):
                lhs = p.partial(i).eval(point)
                rhs = GF.mul(
                    g.partial(i).eval(squares), GF.mul(GF.from_int(2), point[i])
                )
                assert lhs == rhs
        checked += 1


def test_truncation_commutes_with_derivative():
    rng = SplitMix64(19)
    checked = 0
    while checked < 50:
        sys = random_invariant_system(4, 1, 4, rng.next_u64(), GF)
        m = rng.randint(1, 4)
        for p in sys.members():
            for i in range(m):
                a = truncate(p.partial(i), m)
                b = truncate(p, m).partial(i)
                point = [GF.rand(rng) for _ in range(m)]
                assert a.eval(point) == b.eval(point)
                checked += 1


def test_random_system_contract():
    sys1 = random_invariant_system(3, 1, 8, 42, GF)
    sys2 = random_invariant_system(3, 1, 8, 42, GF)
    for a, b in zip(sys1.members(), sys2.members()):
        assert a == b
    assert sys1.degree <= 8
    for p in sys1.members():
        assert is_bn_invariant(p)
    sys3 = random_invariant_system(3, 1, 8, 43, GF)
    assert any(a != b for a, b in zip(sys1.members(), sys3.members()))
    with pytest.raises(ValueError):
        random_invariant_system(3, 1, 7, 1, GF)


def test_invariant_system_validation(example1_q):
    x1 = MultiPoly.from_int_terms(QQ, 3, [(1, (1, 0, 0))])
    with pytest.raises(InvarianceError):
        InvariantSystem(n=3, s=1, f=[x1], phi=example1_q.phi, field=QQ)
    with pytest.raises(ValueError):
        InvariantSystem(n=3, s=3, f=[example1_q.f[0]] * 3, phi=example1_q.phi, field=QQ)
