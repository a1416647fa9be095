"""Time the WLP-failure certificate over a range of d and report ranks."""
import argparse
import random
import time
from dataclasses import dataclass

from dihedral_invariants.exactmath import rank
from dihedral_invariants.group import valid_a_values
from dihedral_invariants.wlp import multiplication_matrix, random_form, witness_verify


@dataclass
class TimingConfig:
    d_min: int = 3
    d_max: int = 12
    seed: int = 0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-min", type=int, default=3)
    ap.add_argument("--d-max", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = TimingConfig(args.d_min, args.d_max, args.seed)
    rng = random.Random(cfg.seed)
    print(f"{'d':>3} {'shape':>10} {'rank':>5} {'rank s':>7} {'witness s':>9}")
    for d in range(cfg.d_min, cfg.d_max + 1):
        L = random_form(rng)
        t0 = time.perf_counter()
        M = multiplication_matrix(d, L)
        rk = rank(M)
        t1 = time.perf_counter()
        ok = witness_verify(d, valid_a_values(d)[0], L)
        t2 = time.perf_counter()
        shape = f"{M.rows}x{M.cols}"
        print(f"{d:>3} {shape:>10} {rk:>5} {t1 - t0:>7.2f} {t2 - t1:>9.2f}"
              + ("" if ok else "  witness FAILED"))


if __name__ == "__main__":
    main()
