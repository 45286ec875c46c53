"""How often does the row/pool scan miss subquasigroups without the final sweep?

Draws random isotopes and relabelings of a few bases and compares both
variants with brute-force closed-subset enumeration.

    python3 scripts/sweep_ablation.py --samples 200 --seed 7
"""
import argparse
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from quasicrypt.catalog import (
    cyclic_group,
    direct_product,
    klein_group,
    linear_quasigroup,
    random_isotope,
    random_relabel,
)
from quasicrypt.subquasigroups import find_all_subquasigroups

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from oracles import closed_subsets  # noqa: E402


@dataclass
class AblationConfig:
    samples: int = 200
    seed: int = 7


def bases():
    s3 = linear_quasigroup(3, 2, 2)
    return {
        "Z6": cyclic_group(6),
        "Z2xS3": direct_product(cyclic_group(2), s3),
        "S3xS3": direct_product(s3, s3),
        "V4xZ3": direct_product(klein_group(), cyclic_group(3)),
        "Z12": cyclic_group(12),
    }


def run(cfg: AblationConfig):
    rng = random.Random(cfg.seed)
    print(f"{'base':<8}{'tables':>8}{'bare misses':>13}{'sweep misses':>14}")
    for name, base in bases().items():
        bare_miss = full_miss = 0
        for k in range(cfg.samples):
            Q = random_isotope(base, rng) if k % 2 else random_relabel(base, rng)
            expected = sorted(closed_subsets(Q.cells), key=lambda W: (len(W), W))
            bare_miss += find_all_subquasigroups(Q, sweep=False).subquasigroups != expected
            full_miss += find_all_subquasigroups(Q).subquasigroups != expected
        print(f"{name:<8}{cfg.samples:>8}{bare_miss:>13}{full_miss:>14}")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=AblationConfig.samples)
    ap.add_argument("--seed", type=int, default=AblationConfig.seed)
    args = ap.parse_args(argv)
    run(AblationConfig(samples=args.samples, seed=args.seed))


if __name__ == "__main__":
    main()
