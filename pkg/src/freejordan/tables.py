"""Published reference values for free Jordan algebra invariants.

Dimension sequences for the two-generator case come from OEIS (A005418 for
the reversible elements, A000031/A000029 for necklaces and bracelets); the
irreducible decompositions of the multilinear components Jord(n) through
degree 10 and the multidegree dimensions in degrees 11 and 12 are the known
published values. They are frozen here so the verification suites can
compare fresh computations against them.

Partitions are tuples in weakly decreasing order, e.g. V_{3,2,1} -> (3,2,1).
"""

# dim Jord(x1,x2)_n for n = 1..20 (reversible elements; OEIS A005418)
TWO_GEN_DIMS = (
    2, 3, 6, 10, 20, 36, 72, 136, 272, 528,
    1056, 2080, 4160, 8256, 16512, 32896, 65792, 131328, 262656, 524800,
)

# dim B(Jord(x1,x2))_n for n = 1..20
TWO_GEN_B_DIMS = (
    0, 1, 2, 6, 12, 27, 54, 114, 226, 466,
    930, 1888, 3780, 7633, 15288, 30774, 61680, 123899, 248346, 498300,
)

# the predictor departs from the truth here
PREDICTED_DIM_19_TWO_GEN = 262658
PREDICTED_B_DIM_20_TWO_GEN = 498303

# dim Jord(n), multilinear components (n = 9, 10 are the predicted values,
# confirmed by the rank method)
MULTILINEAR_DIMS = {
    1: 1, 2: 1, 3: 3, 4: 11, 5: 55, 6: 330,
    7: 2345, 8: 19089, 9: 175203, 10: 1785840,
}

# commutative association types (Wedderburn-Etherington) and normal
# association types (Fibonacci), degrees 1..10
COMMUTATIVE_TYPE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 46, 98)
NORMAL_TYPE_COUNTS = (1, 1, 1, 2, 3, 5, 8, 13, 21, 34)

# pinned monomials of the z^19 coefficient of the two-generator conjecture
# series (t-exponent -> coefficient), and its residue
Z19_PINNED_MONOMIALS = {9: -1218, 8: 45184, -1: 2}
Z19_RESIDUE = 2

# irreducible decompositions of Jord(n): partition -> multiplicity
JORDAN_MODULE = {
    1: {(1,): 1},
    2: {(2,): 1},
    3: {(2, 1): 1, (3,): 1},
    4: {(2, 1, 1): 1, (2, 2): 2, (3, 1): 1, (4,): 1},
    5: {
        (2, 1, 1, 1): 1, (2, 2, 1): 3, (3, 1, 1): 2, (3, 2): 3,
        (4, 1): 2, (5,): 1,
    },
    6: {
        (2, 1, 1, 1, 1): 1, (2, 2, 1, 1): 3, (2, 2, 2): 4, (3, 1, 1, 1): 4,
        (3, 2, 1): 8, (3, 3): 1, (4, 1, 1): 4, (4, 2): 6, (5, 1): 2, (6,): 1,
    },
    7: {
        (2, 1, 1, 1, 1, 1): 1, (2, 2, 1, 1, 1): 4, (2, 2, 2, 1): 7,
        (3, 1, 1, 1, 1): 5, (3, 2, 1, 1): 16, (3, 2, 2): 12, (3, 3, 1): 9,
        (4, 1, 1, 1): 8, (4, 2, 1): 18, (4, 3): 7, (5, 1, 1): 6, (5, 2): 8,
        (6, 1): 3, (7,): 1,
    },
    8: {
        (2, 1, 1, 1, 1, 1, 1): 1, (2, 2, 1, 1, 1, 1): 6, (2, 2, 2, 1, 1): 11,
        (2, 2, 2, 2): 10, (3, 1, 1, 1, 1, 1): 5, (3, 2, 1, 1, 1): 26,
        (3, 2, 2, 1): 34, (3, 3, 1, 1): 30, (3, 3, 2): 19, (4, 1, 1, 1, 1): 14,
        (4, 2, 1, 1): 41, (4, 2, 2): 32, (4, 3, 1): 34, (4, 4): 10,
        (5, 1, 1, 1): 16, (5, 2, 1): 32, (5, 3): 12, (6, 1, 1): 9, (6, 2): 12,
        (7, 1): 3, (8,): 1,
    },
    9: {
        (2, 1, 1, 1, 1, 1, 1, 1): 1, (2, 2, 1, 1, 1, 1, 1): 7,
        (2, 2, 2, 1, 1, 1): 18, (2, 2, 2, 2, 1): 22, (3, 1, 1, 1, 1, 1, 1): 6,
        (3, 2, 1, 1, 1, 1): 38, (3, 2, 2, 1, 1): 74, (3, 2, 2, 2): 44,
        (3, 3, 1, 1, 1): 58, (3, 3, 2, 1): 85, (3, 3, 3): 20,
        (4, 1, 1, 1, 1, 1): 20, (4, 2, 1, 1, 1): 84, (4, 2, 2, 1): 109,
        (4, 3, 1, 1): 107, (4, 3, 2): 86, (4, 4, 1): 44, (5, 1, 1, 1, 1): 31,
        (5, 2, 1, 1): 91, (5, 2, 2): 64, (5, 3, 1): 78, (5, 4): 22,
        (6, 1, 1, 1): 25, (6, 2, 1): 53, (6, 3): 24, (7, 1, 1): 12,
        (7, 2): 15, (8, 1): 4, (9,): 1,
    },
    10: {
        (2, 1, 1, 1, 1, 1, 1, 1, 1): 1, (2, 2, 1, 1, 1, 1, 1, 1): 7,
        (2, 2, 2, 1, 1, 1, 1): 26, (2, 2, 2, 2, 1, 1): 38, (2, 2, 2, 2, 2): 26,
        (3, 1, 1, 1, 1, 1, 1, 1): 8, (3, 2, 1, 1, 1, 1, 1): 53,
        (3, 2, 2, 1, 1, 1): 139, (3, 2, 2, 2, 1): 144, (3, 3, 1, 1, 1, 1): 93,
        (3, 3, 2, 1, 1): 226, (3, 3, 2, 2): 122, (3, 3, 3, 1): 114,
        (4, 1, 1, 1, 1, 1, 1): 26, (4, 2, 1, 1, 1, 1): 151,
        (4, 2, 2, 1, 1): 272, (4, 2, 2, 2): 162, (4, 3, 1, 1, 1): 257,
        (4, 3, 2, 1): 394, (4, 3, 3): 105, (4, 4, 1, 1): 143, (4, 4, 2): 138,
        (5, 1, 1, 1, 1, 1): 50, (5, 2, 1, 1, 1): 212, (5, 2, 2, 1): 263,
        (5, 3, 1, 1): 289, (5, 3, 2): 224, (5, 4, 1): 144, (5, 5): 16,
        (6, 1, 1, 1, 1): 58, (6, 2, 1, 1): 168, (6, 2, 2): 120, (6, 3, 1): 155,
        (6, 4): 50, (7, 1, 1, 1): 40, (7, 2, 1): 80, (7, 3): 35,
        (8, 1, 1): 16, (8, 2): 20, (9, 1): 4, (10,): 1,
    },
}

# dimensions of multidegree components with three strictly positive entries
MULTIDEGREE_DIMS = {
    (9, 1, 1): 55, (8, 2, 1): 250, (7, 3, 1): 660, (6, 4, 1): 1160,
    (5, 5, 1): 1386, (7, 2, 2): 1000, (6, 3, 2): 2326, (5, 4, 2): 3493,
    (5, 3, 3): 4651, (4, 4, 3): 5835,
    (10, 1, 1): 66, (9, 2, 1): 330, (8, 3, 1): 990, (7, 4, 1): 1980,
    (6, 5, 1): 2772, (8, 2, 2): 1500, (7, 3, 2): 3969, (6, 4, 2): 6982,
    (5, 5, 2): 8347, (6, 3, 3): 9291, (5, 4, 3): 13961, (4, 4, 4): 17520,
}
