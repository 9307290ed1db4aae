"""Characters induced from two-block Young subgroups.

The induced character is computed by the literal averaging formula over
the big group; its decomposition into irreducibles is exact integer
arithmetic throughout.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .characters import class_representative, class_size, mn_character
from .partitions import check_partition, partitions_of
from .permutations import split_product, symmetric_group


@lru_cache(maxsize=None)
def _conjugation_distribution(
    m: int, n: int
) -> dict[tuple[int, ...], Counter]:
    """Per class of S_m: how often t^-1 s t lands in S_n x S_{n+1..m},
    bucketed by the cycle types of the two factors."""
    out: dict[tuple[int, ...], Counter] = {}
    for mu in partitions_of(m):
        s = class_representative(mu)
        buckets: Counter = Counter()
        for t in symmetric_group(m):
            u = s.conjugate_by(t.inverse())
            parts = split_product(u, n)
            if parts is not None:
                u1, u2 = parts
                buckets[(u1.cycle_type(), u2.cycle_type())] += 1
        out[mu] = buckets
    return out


def induced_character(
    n: int, lam: tuple[int, ...], mu: tuple[int, ...], m: int
) -> dict[tuple[int, ...], Fraction]:
    """Character of Ind from S_n x S_{m-n} of (chi_lam outer chi_mu).

    Returns the value on each class of S_m, keyed by full cycle type.
    Values are exact and, being induced character values, integers.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    if sum(mu) != m - n:
        raise ValueError(f"{mu} is not a partition of {m - n}")
    order_h = math.factorial(n) * math.factorial(m - n)
    dist = _conjugation_distribution(m, n)
    out = {}
    for nu, buckets in dist.items():
        total = 0
        for (ct1, ct2), count in buckets.items():
            total += count * mn_character(lam, ct1) * mn_character(mu, ct2)
        out[nu] = Fraction(total, order_h)
    return out


def character_inner(
    values: Mapping[tuple[int, ...], Fraction], lam: tuple[int, ...], m: int
) -> Fraction:
    """<values, chi_lam> over S_m, with values keyed by class."""
    acc = Fraction(0)
    for nu in partitions_of(m):
        acc += class_size(nu) * Fraction(values[nu]) * mn_character(lam, nu)
    return acc / math.factorial(m)


def decompose_induced(
    n: int, lam: tuple[int, ...], mu: tuple[int, ...], m: int
) -> dict[tuple[int, ...], int]:
    """Multiplicities of each irreducible of S_m in the induced character."""
    values = induced_character(n, lam, mu, m)
    out = {}
    for nu in partitions_of(m):
        c = character_inner(values, nu, m)
        if c.denominator != 1 or c < 0:
            raise ValueError(f"multiplicity of {nu} is {c}, not a nonnegative integer")
        if c:
            out[nu] = int(c)
    return out
