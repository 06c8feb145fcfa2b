"""Integer partitions, orbit types, and the counting formulas.

A partition is stored in counted form ((m_1, k_1), ..., (m_r, k_r)) with
strictly increasing part values m_i and positive counts k_i. An orbit type
pairs a partition of m with a zero pad n-m: it records, up to signed
permutation, the block structure of a point's squared coordinates together
with its zero coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial


@dataclass(frozen=True)
class Partition:
    parts: tuple[tuple[int, int], ...]  # ((value, count), ...) increasing values

    def __post_init__(self):
        prev = 0
        for value, count in self.parts:
            if value <= prev or count <= 0:
                raise ValueError(f"malformed partition {self.parts}")
            prev = value

    @classmethod
    def of(cls, *values: int) -> "Partition":
        """Build from a bag of part values, e.g. Partition.of(1, 1, 2)."""
        counts: dict[int, int] = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        return cls(tuple(sorted(counts.items())))

    @property
    def m(self) -> int:
        return sum(v * k for v, k in self.parts)

    @property
    def length(self) -> int:
        return sum(k for _, k in self.parts)

    def as_list(self) -> list[int]:
        out = []
        for v, k in self.parts:
            out.extend([v] * k)
        return out

    def to_json(self):
        return [[v, k] for v, k in self.parts]

    @classmethod
    def from_json(cls, data) -> "Partition":
        return cls(tuple((int(v), int(k)) for v, k in data))

    def __repr__(self):
        return "(" + " ".join(f"{v}^{k}" for v, k in self.parts) + ")"


EMPTY_PARTITION = Partition(())


@dataclass(frozen=True)
class OrbitType:
    lam: Partition
    zero_pad: int

    def __post_init__(self):
        if self.zero_pad < 0:
            raise ValueError("negative zero pad")

    @property
    def n(self) -> int:
        return self.lam.m + self.zero_pad

    def to_json(self):
        return {"lambda": self.lam.to_json(), "zero_pad": self.zero_pad}

    @classmethod
    def from_json(cls, data) -> "OrbitType":
        return cls(Partition.from_json(data["lambda"]), int(data["zero_pad"]))

    def __repr__(self):
        return f"({self.lam!r}, [{self.zero_pad}])"


@lru_cache(maxsize=None)
def _partition_lists(m: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if m == 0:
        return ((),)
    out = []
    for first in range(1, min(m, max_part) + 1):
        for rest in _partition_lists(m - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(m: int) -> list[Partition]:
    """All partitions of m, once each, ordered by the sorted part lists."""
    if m < 1:
        raise ValueError("m must be positive")
    lists = sorted(tuple(sorted(p)) for p in _partition_lists(m, m))
    return [Partition.of(*p) for p in lists]


def is_extended_refinement(finer: Partition, coarser: Partition) -> bool:
    """Whether `finer` (a partition of m') extends-refines `coarser` (of m).

    True when m' < m, or when m' == m and finer is a multiset union of one
    partition of each part of coarser.
    """
    m_fine, m_coarse = finer.m, coarser.m
    if m_fine > m_coarse:
        return False
    if m_fine < m_coarse:
        return True
    remaining: dict[int, int] = {}
    for v, k in finer.parts:
        remaining[v] = k
    targets = coarser.as_list()

    def assign(idx: int, pool: dict[int, int]) -> bool:
        if idx == len(targets):
            return all(c == 0 for c in pool.values())
        target = targets[idx]
        usable = sorted(v for v, c in pool.items() if c > 0 and v <= target)

        def pick(total: int, max_v: int, pool: dict[int, int]) -> bool:
            if total == 0:
                return assign(idx + 1, pool)
            for v in usable:
                if v > min(total, max_v) or pool.get(v, 0) == 0:
                    continue
                pool[v] -= 1
                if pick(total - v, v, pool):
                    pool[v] += 1
                    return True
                pool[v] += 1
            return False

        return pick(target, target, pool)

    return assign(0, dict(remaining))


def zeta(orbit_type: OrbitType) -> int:
    """Number of coordinate arrangements of a type's value blocks:
    n! / (m_1!^k_1 ... m_r!^k_r (n-m)!)."""
    n = orbit_type.n
    denom = factorial(orbit_type.zero_pad)
    for v, k in orbit_type.lam.parts:
        denom *= factorial(v) ** k
    return factorial(n) // denom


def gamma_factor(orbit_type: OrbitType) -> int:
    """Compression factor zeta * (k_1! ... k_r! (n-m)!)."""
    out = zeta(orbit_type) * factorial(orbit_type.zero_pad)
    for _, k in orbit_type.lam.parts:
        out *= factorial(k)
    return out


def gamma_sign(orbit_type: OrbitType) -> int:
    """Sign-choice factor 2^k for a type of length k."""
    return 1 << orbit_type.lam.length


def orbit_size_x(orbit_type: OrbitType) -> int:
    """Exact cardinality of the signed-permutation orbit of a point of this
    exact type (blocks with distinct nonzero squares): zeta * 2^m.

    Each of the m nonzero coordinates flips sign independently; zeta counts
    the distinct placements of the value blocks and zeros.
    """
    return zeta(orbit_type) << orbit_type.lam.m


@dataclass(frozen=True)
class BoundSet:
    """Computable output-size and complexity bound quantities for (n, s, d)."""

    n: int
    s: int
    d: int
    C: int
    E: int
    Gamma_bound: int
    nC: int
    delta: int

    def to_json(self):
        return {
            "n": self.n,
            "s": self.s,
            "d": self.d,
            "C": self.C,
            "E": self.E,
            "Gamma_bound": self.Gamma_bound,
            "nC": self.nC,
            "delta": self.delta,
        }


def bound_nC(n: int, s: int, d: int) -> BoundSet:
    """Output-size bound n*C with C = (d/2)^s * binom(n + d/2 - 1, n)."""
    if d <= 0 or d % 2:
        raise ValueError("degree bound d must be a positive even integer")
    if not 0 < s < n:
        raise ValueError("need 0 < s < n")
    half = d // 2
    c = half**s * comb(n + half - 1, n)
    e = n * (half + 1) * comb(n + half, n)
    gamma = n**2 * comb(n + half, half) + n**4 * comb(n, s + 1)
    return BoundSet(n=n, s=s, d=d, C=c, E=e, Gamma_bound=gamma, nC=n * c, delta=half)
