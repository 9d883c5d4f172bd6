"""Count divided bipartitions per rank for the charge (0, e/2 + Ne)."""

import argparse

from fockcrystal import Multicharge, is_divided_bipartition, uglov_set


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--e", type=int, default=4)
    parser.add_argument("--N", type=int, nargs="+", default=[0, 1, 2])
    parser.add_argument("--n-max", type=int, default=8)
    args = parser.parse_args()

    print("n  " + "  ".join(f"N={N}: divided/total" for N in args.N))
    for n in range(args.n_max + 1):
        cells = []
        for N in args.N:
            charge = Multicharge((0, args.e // 2 + N * args.e), args.e)
            layer = uglov_set(charge, n)
            divided = sum(is_divided_bipartition(mp, N, args.e) for mp in layer)
            cells.append(f"{divided:>5}/{len(layer):<5}")
        print(f"{n:<3}" + "      ".join(cells))


if __name__ == "__main__":
    main()
