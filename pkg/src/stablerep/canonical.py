"""Canonical stable states and their classification data.

A canonical state is labelled by a depth n, a partition of n and a
Thoma parameter pair.  Its value at s factors through the subgroup
product S_n * S_{N minus n}: the normalized finite character of the
partition on the first factor times the infinite character on the
second, and 0 whenever s admits no such factorization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence, Union

from .characters import character_value, hook_dimension, mn_character
from .partitions import check_partition, partitions_of
from .permutations import (
    IDENTITY,
    Permutation,
    cycle,
    split_product,
    symmetric_group,
    transposition,
)
from .thoma import FactorType, RecoveryResult, ThomaParams, recover_params, thoma_character, type_classify

Evaluator = Callable[[Permutation], complex]


class ClassificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class CanonicalState:
    """The stable state with data (n, partition, params); callable on permutations.

    >>> from fractions import Fraction
    >>> f = CanonicalState(2, (1, 1), ThomaParams(alpha=(Fraction(1, 2), Fraction(1, 2))))
    >>> f(transposition(1, 2))
    Fraction(-1, 1)
    >>> f(transposition(2, 3))
    0
    """

    n: int
    partition: tuple[int, ...]
    params: ThomaParams

    def __post_init__(self):
        object.__setattr__(self, "partition", check_partition(self.partition))
        if sum(self.partition) != self.n:
            raise ValueError(f"partition {self.partition} has weight != {self.n}")
        if self.n < 0:
            raise ValueError("depth must be >= 0")

    @property
    def alpha(self) -> tuple:
        return self.params.alpha

    @property
    def beta(self) -> tuple:
        return self.params.beta

    def __call__(self, s: Permutation):
        parts = split_product(s, self.n)
        if parts is None:
            return 0
        s1, s2 = parts
        finite = Fraction(
            mn_character(self.partition, s1.cycle_type()),
            hook_dimension(self.partition),
        )
        return finite * thoma_character(self.params, s2.cycle_type())

    def invariant(self) -> "ClassInvariant":
        return ClassInvariant(
            self.n,
            self.partition,
            tuple(float(a) for a in self.alpha),
            tuple(float(b) for b in self.beta),
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lambda": list(self.partition),
            "alpha": [float(a) for a in self.alpha],
            "beta": [float(b) for b in self.beta],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CanonicalState":
        return cls(
            int(data["n"]),
            tuple(data["lambda"]),
            ThomaParams.from_json(data),
        )


@dataclass(frozen=True)
class ClassInvariant:
    """The complete invariant (n, partition, alpha, beta) of a stable state."""

    n: int
    partition: tuple[int, ...]
    alpha: tuple[float, ...]
    beta: tuple[float, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lambda": list(self.partition),
            "alpha": list(self.alpha),
            "beta": list(self.beta),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ClassInvariant":
        return cls(
            int(data["n"]),
            tuple(data["lambda"]),
            tuple(float(a) for a in data.get("alpha", ())),
            tuple(float(b) for b in data.get("beta", ())),
        )


# ---------------------------------------------------------------------------
# Shift sequences: conjugators that push a fixed permutation above every cut.


@dataclass(frozen=True)
class ShiftSequence:
    """Conjugators sigma_m, m0 <= m <= M, relocating supp(g) above each cut m.

    Invariants: sigma_m g sigma_m^-1 fixes 1..m, and consecutive
    conjugators differ by a cycle fixing 1..m, so the sequence witnesses
    the asymptotic character value of g.
    """

    g: Permutation
    m0: int
    sigmas: tuple[Permutation, ...]

    def sigma(self, m: int) -> Permutation:
        if not self.m0 <= m <= self.m0 + len(self.sigmas) - 1:
            raise IndexError(f"m={m} outside [{self.m0}, {self.m0 + len(self.sigmas) - 1}]")
        return self.sigmas[m - self.m0]

    def shifted(self, m: int) -> Permutation:
        s = self.sigma(m)
        return self.g.conjugate_by(s)

    def verify(self) -> bool:
        """Exact check of both defining memberships."""
        last = self.m0 + len(self.sigmas) - 1
        for m in range(self.m0, last + 1):
            if any(p <= m for p in self.shifted(m).support):
                return False
        for m in range(self.m0, last):
            step = self.sigma(m + 1) * self.sigma(m).inverse()
            if any(p <= m for p in step.support):
                return False
        return True


def shift_sequence(g: Permutation, M: int, m0: Optional[int] = None) -> ShiftSequence:
    """Build sigma_m for m0 <= m <= M.

    sigma_m0 relocates the support of g to the block just above m0 by
    disjoint transpositions; each later conjugator prepends the cycle
    (m+1, ..., m+r+1), which fixes 1..m.
    """
    m0 = g.level if m0 is None else m0
    if m0 < g.level:
        raise ValueError(f"m0={m0} is below the level {g.level} of g")
    if M < m0:
        raise ValueError("M must be >= m0")
    supp = sorted(g.support)
    r = len(supp)
    sigma = Permutation(
        {p: m0 + i + 1 for i, p in enumerate(supp)}
        | {m0 + i + 1: p for i, p in enumerate(supp)}
    )
    sigmas = [sigma]
    for m in range(m0, M):
        step = cycle(*range(m + 1, m + r + 2)) if r else IDENTITY
        sigma = step * sigma
        sigmas.append(sigma)
    return ShiftSequence(g, m0, tuple(sigmas))


@dataclass(frozen=True)
class AsymptoticResult:
    """Trace of state values along a shift sequence.

    stabilized_at is the smallest m from which consecutive values agree
    within the tolerance, None when the tail still moves; value is the
    final stable value (None when not stabilized).
    """

    values: tuple[tuple[int, complex], ...]
    stabilized_at: Optional[int]
    value: Optional[complex]


def asymptotic_character(
    state: Evaluator,
    g: Permutation,
    M: int,
    m0: Optional[int] = None,
    tol: float = 1e-12,
) -> AsymptoticResult:
    """Evaluate state along a shift sequence of g and report stabilization.

    The state must be defined up to level M + |supp(g)|, and M must
    leave room for at least two values so stabilization is witnessed,
    never guessed.
    """
    seq = shift_sequence(g, M, m0)
    if M < seq.m0 + 1:
        raise ValueError("need M >= m0 + 1 to witness stabilization")
    trace = tuple((m, state(seq.shifted(m))) for m in range(seq.m0, M + 1))
    stabilized = None
    for i in range(len(trace) - 1, 0, -1):
        if abs(complex(trace[i][1]) - complex(trace[i - 1][1])) <= tol:
            stabilized = trace[i - 1][0]
        else:
            break
    if stabilized is None:
        return AsymptoticResult(trace, None, None)
    return AsymptoticResult(trace, stabilized, trace[-1][1])


# ---------------------------------------------------------------------------
# Recovery of the discrete data (depth and partition) from an evaluator.


def central_depth(
    state: Evaluator, K: int, tol: float = 1e-10
) -> Optional[int]:
    """Smallest n <= K at which the state looks centrally supported.

    Checks, over all of S_K: vanishing off the subgroup product at cut n,
    and invariance under conjugation by generators of both factors.
    Returns None when no n <= K passes (reported upstream as "> K").
    """
    elements = symmetric_group(K)
    for n in range(K + 1):
        gens = [transposition(i, i + 1) for i in range(1, n)]
        gens += [transposition(i, i + 1) for i in range(n + 1, K)]
        ok = True
        for s in elements:
            if split_product(s, n) is None:
                if abs(complex(state(s))) > tol:
                    ok = False
                    break
        if ok:
            for t in gens:
                for s in elements:
                    if abs(complex(state(s.conjugate_by(t))) - complex(state(s))) > tol:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            return n
    return None


def recover_lambda(
    state: Evaluator, n: int, tol: float = 1e-8
) -> tuple[int, ...]:
    """Identify the partition by projecting onto each irreducible character.

    Exactly one projection sum_{g in S_n} state(g) chi_mu(g) must survive
    the threshold; anything else raises ClassificationError.
    """
    if n == 0:
        return ()
    sums = {}
    elements = symmetric_group(n)
    for mu in partitions_of(n):
        total = sum(complex(state(g)) * character_value(mu, g) for g in elements)
        sums[mu] = total
    survivors = [mu for mu, v in sums.items() if abs(v) > tol]
    if len(survivors) != 1:
        raise ClassificationError(
            f"character projection found {len(survivors)} surviving partitions: {survivors}"
        )
    return survivors[0]


@dataclass(frozen=True)
class ClassificationResult:
    invariant: ClassInvariant
    factor_type: FactorType
    residual: float
    asymptotic_values: dict[int, float]
    stabilized_at: dict[int, int]

    def to_json(self) -> dict:
        out = self.invariant.to_json()
        out["factor_type"] = self.factor_type.value
        out["residual"] = self.residual
        out["asymptotic_values"] = {str(k): v for k, v in sorted(self.asymptotic_values.items())}
        out["stabilized_at"] = {str(k): v for k, v in sorted(self.stabilized_at.items())}
        return out


def classify(
    state: Evaluator,
    K: int,
    support_bounds: tuple[int, int],
    cycle_max: Optional[int] = None,
    seed: int = 0,
    depth_tol: float = 1e-10,
    lambda_tol: float = 1e-8,
) -> ClassificationResult:
    """Recover the full invariant (n, partition, alpha, beta) of a state.

    Runs central_depth at truncation K, projects onto finite characters,
    reads asymptotic values on k-cycles for k = 2..cycle_max, and fits
    Thoma parameters within the given support bounds.
    """
    r, s = support_bounds
    kmax = max(K, r + s + 1) if cycle_max is None else cycle_max
    n = central_depth(state, K, tol=depth_tol)
    if n is None:
        raise ClassificationError(f"no central depth found up to truncation {K}")
    lam = recover_lambda(state, n, tol=lambda_tol)
    values: dict[int, float] = {}
    stabilized: dict[int, int] = {}
    for k in range(2, kmax + 1):
        g = cycle(*range(1, k + 1))
        res = asymptotic_character(state, g, M=max(k, n) + 2)
        if res.stabilized_at is None:
            raise ClassificationError(
                f"asymptotic value of the {k}-cycle did not stabilize: {res.values}"
            )
        values[k] = float(complex(res.value).real)
        stabilized[k] = res.stabilized_at
    rec = recover_params(values, support_bounds, seed=seed)
    invariant = ClassInvariant(n, lam, rec.params.alpha, rec.params.beta)
    return ClassificationResult(
        invariant, type_classify(rec.params), rec.residual, values, stabilized
    )


def _padded_close(a: Sequence[float], b: Sequence[float], tol: float) -> bool:
    width = max(len(a), len(b))
    pa = list(a) + [0.0] * (width - len(a))
    pb = list(b) + [0.0] * (width - len(b))
    return all(abs(float(x) - float(y)) <= tol for x, y in zip(pa, pb))


def quasi_equivalent(
    a: Union[ClassInvariant, CanonicalState],
    b: Union[ClassInvariant, CanonicalState],
    tol: float = 1e-9,
) -> bool:
    """Equality of invariants: same depth, same partition, same parameters.

    Parameter lists are compared entrywise after zero padding, so a
    trailing explicit zero never separates two descriptions.
    """
    return (
        a.n == b.n
        and tuple(a.partition) == tuple(b.partition)
        and _padded_close(a.alpha, b.alpha, tol)
        and _padded_close(a.beta, b.beta, tol)
    )
