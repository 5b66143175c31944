#!/usr/bin/env python3
"""Recompute the characteristic-2 tensor / wedge / Sym table for J_4..J_7.

Prints the decomposition of J_n (x) J_n, wedge^2 J_n and Sym^2 J_n over F_2
for both the additive and the multiplicative law, n = 4..7.
"""

from jordanblocks.fgl import additive, multiplicative
from jordanblocks.fields import GF
from jordanblocks.repring import RingElement, sym_partition, tensor_partition, wedge_partition


def main() -> None:
    field = GF(2)
    laws = [("F_m", multiplicative(field)), ("F_a", additive(field))]
    header = f"{'n':>2} {'law':>4} | {'tensor^2':>20} {'wedge^2':>16} {'Sym^2':>20}"
    print(header)
    print("-" * len(header))
    for n in (4, 5, 6, 7):
        for name, law in laws:
            cells = (
                tensor_partition((n,), (n,), law, field),
                wedge_partition((n,), 2, law, field),
                sym_partition((n,), 2, law, field),
            )
            pretty = [RingElement.from_partition(c).pretty() for c in cells]
            print(f"{n:>2} {name:>4} | {pretty[0]:>20} {pretty[1]:>16} {pretty[2]:>20}")


if __name__ == "__main__":
    main()
