"""Truncated 2-kernel census of the coded fixed points, across prefix lengths.

    python scripts/kernel_census.py [--depth 6] [--lengths 64 128 256 512 1024]

Heuristic only: truncation merges rows, so a plateau at one length may be
an artefact.  For an automatic sequence the final count should not move as
the length grows; for a non-automatic one it keeps climbing.
"""

import argparse

from morphic_gate.goldens import GOLDENS, load
from morphic_gate.oracle import kernel_census
from morphic_gate.words import find_fixed_point_seed


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k", type=int, default=2)
    parser.add_argument("--depth", type=int, default=6)
    parser.add_argument("--lengths", type=int, nargs="+", default=[64, 128, 256, 512, 1024])
    parser.add_argument("names", nargs="*", default=sorted(GOLDENS))
    args = parser.parse_args()

    for name in args.names:
        _, phi, coding = load(name)
        seed = find_fixed_point_seed(phi)
        print(name)
        for length in args.lengths:
            census = kernel_census(phi, coding, args.k, args.depth, length, seed.letter, seed.power)
            flag = "plateau" if census.stabilized else "growing"
            print(f"  L={length:5d}  counts={census.counts}  {flag}")


if __name__ == "__main__":
    main()
