import pytest

from hypercrit.algebra import QQ, MultiPoly, PrimeField
from hypercrit.invariants import InvariantSystem

GF = PrimeField(65521)


def octic_example_polys(ctx):
    """n=3, s=1: f = x1^4+x2^4+x3^4-18, phi = x1^2x2^2x3^2-3x1^2-3x2^2-3x3^2."""
    f = MultiPoly.from_int_terms(
        ctx, 3, [(1, (4, 0, 0)), (1, (0, 4, 0)), (1, (0, 0, 4)), (-18, (0, 0, 0))]
    )
    phi = MultiPoly.from_int_terms(
        ctx,
        3,
        [(1, (2, 2, 2)), (-3, (2, 0, 0)), (-3, (0, 2, 0)), (-3, (0, 0, 2))],
    )
    return f, phi


@pytest.fixture(scope="session")
def gf():
    return GF


@pytest.fixture(scope="session")
def example1_q():
    f, phi = octic_example_polys(QQ)
    return InvariantSystem(n=3, s=1, f=[f], phi=phi, field=QQ)


@pytest.fixture(scope="session")
def example1_gf():
    f, phi = octic_example_polys(GF)
    return InvariantSystem(n=3, s=1, f=[f], phi=phi, field=GF)
