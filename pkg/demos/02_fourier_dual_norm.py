"""Fourier blocks, the dual norm, and positivity certificates.

A function on S_n is summarized by one matrix block per irreducible.
The dual norm weights the nuclear norm of each block by dim/n!, which
calibrates every state (normalized positive definite function) to norm
one.  Positivity itself is certified by the smallest block eigenvalue.
"""

import random

import numpy as np

from stablerep.characters import mn_character
from stablerep.fourier import (
    StateFunction,
    dual_norm,
    fourier,
    is_positive_definite,
)
from stablerep.partitions import hook_dimension, partitions_of
from stablerep.permutations import symmetric_group, transposition


def main():
    n = 4
    delta = StateFunction.delta(n)
    print("block shapes for the point mass at e on S_4:")
    for lam, block in fourier(delta).items():
        print(f"  {str(lam):>12} -> {block.shape}, identity: {np.allclose(block, np.eye(len(block)))}")
    print("dual norm of the point mass:", dual_norm(delta))

    print("\nnormalized irreducible characters are norm-one states:")
    for lam in partitions_of(n):
        d = hook_dimension(lam)
        f = StateFunction.from_class_function(n, lambda ct, lam=lam, d=d: mn_character(lam, ct) / d)
        cert = is_positive_definite(f)
        print(f"  {str(lam):>12}  norm {dual_norm(f):.12f}  positive {cert.positive}")

    # a convolution square is positive by construction; its negation is not
    rng = random.Random(5)
    group = symmetric_group(n)
    c = {g: complex(rng.gauss(0, 1), rng.gauss(0, 1)) for g in group}
    square = StateFunction(
        n, {g: sum(np.conj(c[h]) * c[h * g] for h in group) for g in group}
    )
    cert = is_positive_definite(square)
    print("\nconvolution square: positive", cert.positive, f"(min eig {cert.min_eigenvalue:.3e})")
    cert = is_positive_definite(-1.0 * square)
    print("its negation:       positive", cert.positive, "witness block", cert.witness)

    f = StateFunction.delta(n, transposition(1, 2))
    print("\ndual norm of a point mass off the identity:", dual_norm(f))


if __name__ == "__main__":
    main()
