"""Exact computations with free Jordan algebras.

The two halves of the library check each other: a lambda-ring recursion
predicts the sl2 x GL(V) character of the free Jordan algebra degree by
degree, while an identity-consequence rank method computes the actual
multilinear module structure. A truncated Laurent series predictor, the
two-generator special realization, and homology of the associated
Tits-Allison-Gao Lie algebras complete the toolkit. All arithmetic is exact
(integers, rationals, certified modular ranks); no floats anywhere.
"""

__version__ = "0.1.0"
