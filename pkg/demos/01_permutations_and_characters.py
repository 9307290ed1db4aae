"""Finitely supported permutations and exact symmetric group characters.

Walks through the group layer the rest of the package sits on: cycle
notation, the splitting of a permutation across a cut, and integer
character tables computed by the Murnaghan-Nakayama recursion.
"""

import math
from fractions import Fraction

from stablerep.characters import character_table, class_size, mn_character
from stablerep.partitions import hook_dimension, partitions_of
from stablerep.permutations import Permutation, cycle, split_product, transposition


def main():
    g = cycle(1, 4, 2) * transposition(5, 6)
    print("g =", g, " support:", sorted(g.support), " cycle type:", g.cycle_type())

    # A permutation belongs to S_n x S_{N\n} exactly when no cycle
    # crosses the cut; split_product returns the two halves or None.
    for n in (2, 4, 6):
        print(f"split at {n}:", split_product(g, n))

    print()
    n = 5
    print(f"character table of S_{n} (rows are partitions, columns classes):")
    table = character_table(n)
    classes = list(partitions_of(n))
    header = " ".join(f"{str(mu):>12}" for mu in classes)
    print(" " * 14, header)
    for lam in classes:
        row = " ".join(f"{table[lam][mu]:>12}" for mu in classes)
        print(f"{str(lam):>14}", row)

    # the rows are exactly orthogonal with class-size weights
    lam, nu = (3, 2), (2, 2, 1)
    inner = sum(
        Fraction(class_size(mu)) * mn_character(lam, mu) * mn_character(nu, mu)
        for mu in classes
    )
    print(f"\n<chi_{lam}, chi_{nu}> * {n}! =", inner)
    inner = sum(
        Fraction(class_size(mu)) * mn_character(lam, mu) ** 2 for mu in classes
    )
    print(f"<chi_{lam}, chi_{lam}> * {n}! =", inner, f"(= {n}! = {math.factorial(n)})")

    dims = {lam: hook_dimension(lam) for lam in classes}
    print("\nhook length dimensions:", dims)
    print("sum of squares:", sum(d * d for d in dims.values()), "=", math.factorial(n))


if __name__ == "__main__":
    main()
