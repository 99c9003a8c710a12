#!/usr/bin/env python3
"""Random low-degree tetranomials: chamber-cone count against Sturm on (0, inf)."""
import argparse
import time

from sparseroots import randlab


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--M", type=int, default=32)
    ap.add_argument("--max-degree", type=int, default=60)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()

    t0 = time.perf_counter()
    (r,) = randlab.run_outer_frequency([a.M], a.trials, max_degree=a.max_degree, seed=a.seed)
    dt = time.perf_counter() - t0
    print(f"trials={r.trials} unique={r.unique_cone_count} checked={r.checked_count} "
          f"agree={r.agreement_count} disagree={len(r.disagreements)} ({dt:.1f}s)")
    for t, poly, got, want in r.disagreements:
        print(f"  replay: SamplerConfig(M={a.M}, max_degree={a.max_degree}, seed={a.seed}), "
              f"trial {t}: pipeline {got}, oracle {want}: {poly}")


if __name__ == "__main__":
    main()
