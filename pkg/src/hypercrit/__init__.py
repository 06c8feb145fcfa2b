"""Critical loci of signed-permutation-invariant polynomial maps.

The pipeline restricts an invariant map to an invariant variety, splits the
critical locus along coordinate-coincidence strata, and returns one
compressed point per signed-permutation orbit, together with a naive
determinantal solver used as a correctness oracle.
"""

__version__ = "0.1.0"
