#!/usr/bin/env python3
"""Walk through the degree-19 counterexample on two generators.

Prints predicted vs actual dimensions side by side, the residues of the
actual sequence (all zero until 19, then 2), and the pinned monomials of
the z^19 Laurent coefficient that certify the failure.
"""

from freejordan.series import check_sequence, conjecture_series, predict_dims
from freejordan.twogen import b_dim_two_gen, reversible_dim


def main():
    N = 20
    predicted = predict_dims(2, N)
    actual = [reversible_dim(n) for n in range(1, N + 1)]

    print("degree   predicted      actual   gap")
    for n in range(1, N + 1):
        p, a = predicted.dim(n), actual[n - 1]
        mark = "" if p == a else "   <-- first failure" if n == 19 else " !"
        print("%4d  %10d  %10d  %4d%s" % (n, p, a, p - a, mark))

    chk = check_sequence(2, actual)
    print()
    print("residues of the actual sequence:", list(chk.residues))
    print("first nonzero residue at degree", chk.first_nonzero,
          "with value", chk.residue(chk.first_nonzero))

    coeff = conjecture_series(2, actual[:19]).coeffs[19]
    print()
    print("z^19 Laurent coefficient, extreme monomials:")
    for e in sorted(coeff, reverse=True):
        if e in (9, 8, -1):
            print("   t^%-3d %+d" % (e, coeff[e]))

    from freejordan.lambda_ring import dims_from_character, km_prediction

    _, b = km_prediction(2, N)
    pb = dims_from_character(b, 2)
    print()
    print("same story one floor up (the quotient space of wedges):")
    print("degree 20: predicted %d, actual %d, gap %d"
          % (pb.dim(20), b_dim_two_gen(20), pb.dim(20) - b_dim_two_gen(20)))


if __name__ == "__main__":
    main()
