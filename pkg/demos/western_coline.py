"""Read the Western coline off the upper path and check it against closures."""

from lpmkit.lattice_path import all_pairs
from lpmkit.lpm_structure import quite_simple_coline, western_coline
from lpmkit.matroid_engine import coline_report, is_simple
from lpmkit.transversal import build_lpm, lpm


def show(M):
    res = western_coline(M, check=True)
    print(f"{M!r}: j1={res.j1} j2={res.j2} W={sorted(res.coline)}")
    print(f"  prefix copoint {sorted(res.prefix_copoint)} ({res.prefix_copoint_kind})")
    print("  eastern simple copoints:", [sorted(Y) for Y in res.eastern_simple_copoints])
    W = quite_simple_coline(M)
    rep = coline_report(M, W)
    print(f"  quite simple coline {sorted(W)}: {rep.n_simple} simple vs {rep.n_multiple} multiple")


def main():
    show(lpm("EENENN", "NNENEE"))
    # when the last step of q is north the Western coline can fail; the
    # quite simple coline is then found by peeling off coloops
    show(lpm("ENNN", "NNEN"))

    tally = {}
    for n in range(2, 8):
        for pair in all_pairs(n):
            M = build_lpm(pair)
            if M.m < 2 or not is_simple(M):
                continue
            ok = coline_report(M, quite_simple_coline(M)).quite_simple
            hit, total = tally.get(n, (0, 0))
            tally[n] = (hit + ok, total + 1)
    for n, (hit, total) in tally.items():
        print(f"n={n}: {hit}/{total} simple instances have a quite simple coline")


if __name__ == "__main__":
    main()
