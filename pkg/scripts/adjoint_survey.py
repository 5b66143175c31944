#!/usr/bin/env python3
"""Survey nilpotent vs unipotent adjoint partitions over random classical data.

Samples (kind, lambda, p) triples, computes both adjoint partitions and
tallies agreement, separating good and bad characteristic.  With a good
prime the two sides always agree; at p = 2 the symplectic and orthogonal
cases split.

Usage: python scripts/adjoint_survey.py [count] [seed]
"""

import random
import sys

from jordanblocks.classical import good_char_report, validate_classical_partition
from jordanblocks.linalg import Partition


def sample(rng):
    kind = rng.choice(("GL", "Sp", "SO"))
    p = rng.choice((2, 3, 5, 7, 11, 13))
    while True:
        parts = []
        budget = rng.randint(4, 10)
        while sum(parts) < budget and len(parts) < 4:
            x = rng.randint(1, 8)
            if kind == "Sp" and x % 2 == 1:
                parts += [x, x]
            elif kind == "SO" and x % 2 == 0:
                parts += [x, x]
            else:
                parts.append(x)
        lam = Partition(sorted(parts, reverse=True))
        if validate_classical_partition(kind, lam):
            return kind, lam, p


def main() -> None:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 60
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0
    rng = random.Random(f"survey:{seed}")
    agree_good = agree_bad = split_bad = 0
    for _ in range(count):
        kind, lam, p = sample(rng)
        report = good_char_report(kind, lam, p)
        if report.good_characteristic:
            assert report.equal, (kind, tuple(lam), p)
            agree_good += 1
        elif report.equal:
            agree_bad += 1
        else:
            split_bad += 1
            print(f"split at p={p}: {kind} {lam.compressed():12s} "
                  f"ad={report.nilpotent.compressed()} Ad={report.unipotent.compressed()}")
    print(f"\n{count} samples: {agree_good} good-characteristic (all agree), "
          f"{agree_bad} bad-characteristic agreeing, {split_bad} bad-characteristic splitting")


if __name__ == "__main__":
    main()
