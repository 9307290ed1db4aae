"""Canonical stable states and their classification.

A canonical state is built from a cut n, a partition of n, and tail
parameters.  It vanishes off S_n x S_{N\\n}, evaluates exactly in
rational arithmetic, and is recovered from black-box values alone:
depth from conjugation invariance, the partition by projection onto
finite characters, the parameters from asymptotic cycle values.
"""

from fractions import Fraction as F

from stablerep.canonical import (
    CanonicalState,
    asymptotic_character,
    classify,
    quasi_equivalent,
    shift_sequence,
)
from stablerep.permutations import cycle, transposition
from stablerep.thoma import ThomaParams


def main():
    f = CanonicalState(2, (1, 1), ThomaParams(alpha=(F(1, 2),), beta=(F(1, 4),)))
    print("state:", f.to_json())
    samples = [
        transposition(1, 2),          # inside S_2: sign character
        transposition(3, 4),          # inside the tail: parameter value
        transposition(2, 3),          # crosses the cut: exactly zero
        transposition(1, 2) * cycle(3, 4, 5),
    ]
    for s in samples:
        print(f"  f({s}) =", f(s))

    # shift sequences relocate a fixed permutation ever deeper into the
    # tail; the state value freezes once the support clears the cut
    g = transposition(1, 2)
    seq = shift_sequence(g, M=6)
    print("\nconjugates of", g, "along the shift sequence:")
    for m in range(seq.m0, 7):
        print(f"  m={m}: {seq.shifted(m)}  value {f(seq.shifted(m))}")
    res = asymptotic_character(f, g, M=6)
    print("asymptotic value:", res.value, " stabilized at m =", res.stabilized_at)

    result = classify(f, K=6, support_bounds=(2, 2))
    print("\nclassified from values alone:")
    for key, val in result.to_json().items():
        print(f"  {key}: {val}")

    other = CanonicalState(2, (2,), ThomaParams(alpha=(F(1, 2),), beta=(F(1, 4),)))
    print("\nsame parameters, different partition, equivalent?",
          quasi_equivalent(f, other))


if __name__ == "__main__":
    main()
