"""Walk through M[EENENN, NNENEE]: presentation, bases, colines."""

from lpmkit.lattice_path import PathPair
from lpmkit.matroid_engine import colines, flats
from lpmkit.transversal import bases, build_lpm


def main():
    pair = PathPair.parse("EENENN", "NNENEE")
    print("corridor between the bounding paths:")
    print(pair.q.diagram())
    print()
    print(pair.p.diagram())

    M = build_lpm(pair)
    for i in range(1, M.m + 1):
        print(f"A_{i} = {sorted(M.level_set(i))}")

    bs = bases(M)
    print(f"{len(bs)} bases, one per path in the corridor; first few:")
    for B in bs[:5]:
        print("  ", sorted(B))

    print(f"{len(flats(M))} flats")
    for rep in colines(M):
        kinds = ", ".join(f"{sorted(Y)}:{k}" for Y, k in rep.copoints)
        print(f"coline {sorted(rep.coline)} -> {kinds}  quite simple: {rep.quite_simple}")


if __name__ == "__main__":
    main()
