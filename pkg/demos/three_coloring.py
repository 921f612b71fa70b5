"""Nowhere-zero coflows for representation-induced orientations."""

from lpmkit.lpm_structure import rank2_lpm
from lpmkit.orient_coflow import (
    chromatic_number,
    nowhere_zero_3_coflow,
    representation_from_matrix,
    signed_cocircuits,
    synthesize_representation,
)
from lpmkit.transversal import lpm


def main():
    # three collinear points: every +-1 vector breaks x1 - x2 + x3 = 0
    U23 = rank2_lpm(3)
    R = representation_from_matrix([(1, 1, 1), (1, 2, 3)], lpm=U23)
    for c in signed_cocircuits(R, U23):
        print("cocircuit", c.vector)
    cert = nowhere_zero_3_coflow(U23, R)
    print("certificate", cert.F, "chromatic number", chromatic_number(U23, R))

    M = lpm("EENENN", "NNENEE")
    R = synthesize_representation(M, seed=0)
    print("random representation on the presentation pattern:")
    for row in R.matrix:
        print("  ", [int(v) for v in row])
    cert = nowhere_zero_3_coflow(M, R)
    print("certificate", cert.F, "coefficients", cert.coefficients)
    print("chromatic number", chromatic_number(M, R))


if __name__ == "__main__":
    main()
