"""Time crystal-graph generation and print the layer sizes."""

import argparse
import time

from fockcrystal import Multicharge, crystal_graph


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--e", type=int, default=4)
    parser.add_argument("--charge", default="0,2")
    parser.add_argument("--n-max", type=int, default=12)
    args = parser.parse_args()

    charge = Multicharge.parse(args.charge, args.e)
    start = time.perf_counter()
    graph = crystal_graph(charge, args.n_max)
    elapsed = time.perf_counter() - start
    print(f"e={args.e} s=({charge}) n_max={args.n_max}: {len(graph.vertices)} vertices, "
          f"{len(graph.arrows)} arrows in {elapsed:.3f}s")
    print("layer sizes:", [len(layer) for layer in graph.ranks])


if __name__ == "__main__":
    main()
