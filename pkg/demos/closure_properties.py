"""Duals and direct sums of lattice path matroids stay on the path level."""

import random

from lpmkit.lattice_path import all_pairs
from lpmkit.matroid_engine import direct_sum, dual, lpm_concat, lpm_dual_paths, same_rank_function
from lpmkit.transversal import bases, build_lpm, lpm


def main():
    M = lpm("EENENN", "NNENEE")
    D = lpm_dual_paths(M)
    print(f"dual of {M!r} is {D!r}")
    E = frozenset(range(1, M.n + 1))
    print("dual bases are complements:", set(bases(D)) == {E - B for B in bases(M)})

    rng = random.Random(0)
    agree = 0
    for _ in range(200):
        a = build_lpm(rng.choice(list(all_pairs(rng.randint(1, 4)))))
        b = build_lpm(rng.choice(list(all_pairs(rng.randint(0, 4)))))
        agree += same_rank_function(lpm_concat(a, b).oracle, direct_sum(a, b))
        agree += same_rank_function(lpm_dual_paths(a).oracle, dual(a))
    print(f"{agree}/400 path-level constructions match the rank oracle")


if __name__ == "__main__":
    main()
