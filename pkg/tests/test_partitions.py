from itertools import permutations
from math import factorial

import pytest

from hypercrit.partitions import (
    OrbitType,
    Partition,
    bound_nC,
    gamma_factor,
    gamma_sign,
    is_extended_refinement,
    orbit_size_x,
    partitions_of,
    zeta,
)
from hypercrit.rng import SplitMix64


def test_partition_construction_and_invariants():
    lam = Partition.of(1, 1, 2)
    assert lam.parts == ((1, 2), (2, 1))
    assert lam.m == 4 and lam.length == 3
    with pytest.raises(ValueError):
        Partition(((2, 1), (1, 1)))  # decreasing values
    with pytest.raises(ValueError):
        Partition(((1, 0),))


def test_partitions_of_small():
    assert [p.as_list() for p in partitions_of(1)] == [[1]]
    assert sorted(p.as_list() for p in partitions_of(3)) == [[1, 1, 1], [1, 2], [3]]
    assert len(partitions_of(7)) == 15
    # deterministic order, no duplicates
    assert partitions_of(6) == partitions_of(6)
    assert len(set(partitions_of(6))) == len(partitions_of(6))


def test_extended_refinement_examples():
    assert is_extended_refinement(Partition.of(1, 1, 2), Partition.of(1, 3))
    assert is_extended_refinement(Partition.of(3), Partition.of(1, 3))  # smaller m
    for lam in partitions_of(5):
        assert is_extended_refinement(lam, lam)
    assert not is_extended_refinement(Partition.of(4), Partition.of(1, 3))
    assert not is_extended_refinement(Partition.of(2, 2), Partition.of(1, 3))


def test_extended_refinement_transitive_sample():
    rng = SplitMix64(2)
    pool = [p for m in range(1, 7) for p in partitions_of(m)]
    checked = 0
    while checked < 200:
        a = pool[rng.below(len(pool))]
        b = pool[rng.below(len(pool))]
        c = pool[rng.below(len(pool))]
        if is_extended_refinement(a, b) and is_extended_refinement(b, c):
            assert is_extended_refinement(a, c)
            checked += 1


def signed_orbit(values, zeros):
    """Explicit signed-permutation orbit of (values..., 0...0) as tuples."""
    base = list(values) + [0] * zeros
    out = set()
    for perm in permutations(base):
        stack = [()]
        for v in perm:
            nxt = []
            for prefix in stack:
                nxt.append(prefix + (v,))
                if v != 0:
                    nxt.append(prefix + (-v,))
            stack = nxt
        out.update(stack)
    return out


def canonical_point(orbit_type: OrbitType):
    """A representative with distinct nonzero squares per block."""
    values = []
    base = 2
    for v, k in orbit_type.lam.parts:
        for _ in range(k):
            values.extend([base] * v)
            base += 1
    return values, orbit_type.zero_pad


def test_orbit_size_examples():
    assert orbit_size_x(OrbitType(Partition.of(1, 1), 1)) == 24
    assert orbit_size_x(OrbitType(Partition.of(3), 0)) == 8
    assert orbit_size_x(OrbitType(Partition.of(2), 1)) == 12
    assert orbit_size_x(OrbitType(Partition.of(1), 2)) == 6


def test_orbit_size_matches_enumeration_up_to_n5():
    for n in range(1, 6):
        for m in range(1, n + 1):
            for lam in partitions_of(m):
                t = OrbitType(lam, n - m)
                values, zeros = canonical_point(t)
                assert orbit_size_x(t) == len(signed_orbit(values, zeros)), t


def test_zeta_examples_and_gamma():
    assert zeta(OrbitType(Partition.of(2), 1)) == 3
    assert zeta(OrbitType(Partition.of(*([1] * 4)), 0)) == factorial(4)
    assert zeta(OrbitType(Partition.of(1, 1, 1, 2, 2), 2)) == 45360
    for n in range(1, 6):
        for m in range(1, n + 1):
            for lam in partitions_of(m):
                t = OrbitType(lam, n - m)
                expected = zeta(t) * factorial(n - m)
                for _, k in lam.parts:
                    expected *= factorial(k)
                assert gamma_factor(t) == expected
                assert gamma_sign(t) == 2**lam.length


def test_bound_nc_table():
    rows = {
        (3, 1, 8): 240,
        (3, 2, 8): 960,
        (4, 1, 8): 560,
        (4, 2, 8): 2240,
        (4, 3, 8): 8960,
        (5, 1, 12): 7560,
        (5, 2, 12): 45360,
        (5, 3, 12): 272160,
        (5, 4, 12): 1632960,
        (6, 1, 12): 16632,
        (6, 2, 12): 99792,
        (6, 3, 12): 598752,
        (6, 4, 12): 3592512,
        (6, 5, 12): 21555072,
    }
    for (n, s, d), expected in rows.items():
        bounds = bound_nC(n, s, d)
        assert bounds.nC == expected
        assert bounds.nC == n * bounds.C
        assert bounds.delta == d // 2
    with pytest.raises(ValueError):
        bound_nC(3, 1, 7)


def test_orbittype_json_roundtrip():
    t = OrbitType(Partition.of(1, 2, 2), 3)
    assert OrbitType.from_json(t.to_json()) == t
