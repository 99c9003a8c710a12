#!/usr/bin/env python3
"""Median counting time per degree, chamber-cone pipeline against dense Sturm.

The Sturm column stops at the oracle's degree cap; past a few hundred it is
already orders of magnitude slower, which is the point of the comparison.
"""
import argparse

from sparseroots import randlab


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degrees", default="1000,10000,100000,1000000,10000000,100000000,1000000000")
    ap.add_argument("--sturm-degrees", default="50,100,200,400")
    ap.add_argument("--trials", type=int, default=21)
    ap.add_argument("--sturm-trials", type=int, default=3)
    ap.add_argument("--height-bits", type=int, default=16)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()

    rows = randlab.run_timing_scaling([int(d) for d in a.degrees.split(",")], a.trials,
                                      height_bits=a.height_bits, seed=a.seed)
    print("# chamber-cone")
    print(randlab.timing_csv(rows), end="")
    if a.sturm_degrees:
        rows = randlab.run_timing_scaling([int(d) for d in a.sturm_degrees.split(",")],
                                          a.sturm_trials, height_bits=a.height_bits,
                                          seed=a.seed, method="sturm")
        print("# sturm")
        print(randlab.timing_csv(rows), end="")


if __name__ == "__main__":
    main()
