#!/usr/bin/env python3
"""Probe dim Inner(J) against dim B(J) on small truncations.

B(J) surjects onto the inner derivations; for free algebras the open
question is whether the two coincide.  On a degree-N truncation the two
are NOT expected to agree (B of a quotient keeps wedges whose relations
live above the cut), so this script reports both numbers plus the graded
breakdown of B, as raw material rather than as evidence either way.

Usage: inner_vs_b.py [g] [maxN]
"""

import sys

from freejordan.tkk import b_space, inner_derivations, truncated_free_jordan


def main():
    g = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    max_n = int(sys.argv[2]) if len(sys.argv) > 2 else 5

    print("truncated free algebra on %d generators" % g)
    print("  N   dim J   dim Inner   dim B   B graded by degree")
    for N in range(1, max_n + 1):
        J = truncated_free_jordan(g, N)
        inner = inner_derivations(J)
        B = b_space(J)
        graded = B.graded_dims()
        print("%3d   %5d   %9d   %5d   %s"
              % (N, J.dim, inner.rank, len(B.basis), graded))
    print()
    print("note: wedges of top-degree elements have all their relations")
    print("truncated away, which inflates dim B relative to dim Inner.")


if __name__ == "__main__":
    main()
