"""Characters of the infinite symmetric group and their parameters.

An extremal character is determined by two weakly decreasing summable
sequences alpha, beta of positive reals with total mass at most 1.  Its
value on a permutation is a product over cycles: a k-cycle contributes
sum(alpha_i^k) + (-1)^(k+1) sum(beta_j^k).
"""

from __future__ import annotations

import enum
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

import numpy as np
from scipy import optimize

SUM_SLACK = 1e-12


@dataclass(frozen=True)
class ThomaParams:
    """Parameter pair (alpha, beta); entries in (0, 1], sums bounded by 1.

    Entries are sorted into weakly decreasing order on construction and
    may be floats or Fractions; Fraction parameters keep every character
    value exact.
    """

    alpha: tuple = ()
    beta: tuple = ()

    def __post_init__(self):
        for name in ("alpha", "beta"):
            entries = tuple(sorted(getattr(self, name), reverse=True))
            for x in entries:
                if not isinstance(x, numbers.Real):
                    raise ValueError(f"{name} entries must be real numbers")
                if x <= 0 or float(x) > 1 + SUM_SLACK:
                    raise ValueError(f"{name} entries must lie in (0, 1], got {x}")
            object.__setattr__(self, name, entries)
        if float(sum(self.alpha) + sum(self.beta)) > 1 + SUM_SLACK:
            raise ValueError("sum(alpha) + sum(beta) must not exceed 1")

    @property
    def total(self):
        return sum(self.alpha) + sum(self.beta)

    @property
    def gamma(self):
        return 1 - self.total

    def to_json(self) -> dict:
        return {"alpha": [float(a) for a in self.alpha], "beta": [float(b) for b in self.beta]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ThomaParams":
        return cls(tuple(_parse_number(x) for x in data.get("alpha", ())),
                   tuple(_parse_number(x) for x in data.get("beta", ())))


def _parse_number(x):
    if isinstance(x, str):
        return Fraction(x)
    return x


class FactorType(enum.Enum):
    II1 = "II_1"
    II_INFINITY = "II_infinity"


def power_sum(params: ThomaParams, k: int):
    """sum(alpha^k) + (-1)^(k+1) sum(beta^k) for k >= 2."""
    if k < 2:
        raise ValueError("power sums are used for cycle lengths >= 2")
    sign = -1 if k % 2 == 0 else 1
    return sum(a**k for a in params.alpha) + sign * sum(b**k for b in params.beta)


def thoma_character(params: ThomaParams, cycle_type: Iterable[int]):
    """Character value on a permutation with the given cycle type.

    Cycle lengths equal to 1 contribute a factor 1 and may be omitted.

    >>> thoma_character(ThomaParams(alpha=(Fraction(1, 2), Fraction(1, 2))), (2,))
    Fraction(1, 2)
    """
    value = 1
    for k in cycle_type:
        if k >= 2:
            value = value * power_sum(params, k)
    return value


def type_classify(params: ThomaParams, tol: float = 1e-9) -> FactorType:
    """Factor type of the generated representation from the total mass.

    Mass 1 (within tol) gives II_infinity, strictly smaller gives II_1.
    """
    total = float(params.total)
    if total > 1 + tol:
        raise ValueError(f"total mass {total} exceeds 1")
    if abs(total - 1) <= tol:
        return FactorType.II_INFINITY
    return FactorType.II1


@dataclass(frozen=True)
class RecoveryResult:
    params: ThomaParams
    residual: float

    def ok(self, threshold: float = 1e-8) -> bool:
        return self.residual <= threshold


def _model(x: np.ndarray, r: int, ks: np.ndarray) -> np.ndarray:
    a, b = x[:r], x[r:]
    signs = np.where(ks % 2 == 0, -1.0, 1.0)
    return np.array(
        [np.sum(a**k) for k in ks]
    ) + signs * np.array([np.sum(b**k) for k in ks])


def _jac(x: np.ndarray, r: int, ks: np.ndarray) -> np.ndarray:
    a, b = x[:r], x[r:]
    rows = []
    for k in ks:
        sign = -1.0 if k % 2 == 0 else 1.0
        rows.append(np.concatenate([k * a ** (k - 1), sign * k * b ** (k - 1)]))
    return np.array(rows)


def _starts(r: int, s: int, seed: int, extra: int) -> list[np.ndarray]:
    def ramp(m: int, mass: float) -> np.ndarray:
        if m == 0:
            return np.zeros(0)
        w = 2.0 ** -np.arange(m)
        return mass * w / w.sum()

    tiny = 1e-3
    starts = [
        np.concatenate([ramp(r, 0.9), ramp(s, tiny)]),
        np.concatenate([ramp(r, tiny), ramp(s, 0.9)]),
        np.concatenate([ramp(r, 0.45), ramp(s, 0.45)]),
    ]
    rng = np.random.default_rng(seed)
    for _ in range(extra):
        raw = np.sort(rng.uniform(0, 1, r + s))[::-1]
        raw *= rng.uniform(0.3, 0.99) / max(raw.sum(), 1e-12)
        starts.append(np.concatenate([np.sort(raw[:r])[::-1], np.sort(raw[r:])[::-1]]))
    return starts


def _tied_refit(
    x: np.ndarray,
    r: int,
    ks: np.ndarray,
    target: np.ndarray,
    gap: float = 1e-3,
) -> Optional[tuple[np.ndarray, float]]:
    """Re-fit with near-equal entries forced equal; None when nothing ties."""

    def clusters(vals: np.ndarray) -> list[list[int]]:
        order = np.argsort(vals)[::-1]
        groups: list[list[int]] = []
        for i in order:
            if groups and abs(vals[groups[-1][-1]] - vals[i]) < gap:
                groups[-1].append(i)
            else:
                groups.append([i])
        return groups

    ga = clusters(x[:r])
    gb = clusters(x[r:])
    if all(len(g) == 1 for g in ga + gb):
        return None
    mult = np.array([len(g) for g in ga] + [len(g) for g in gb], dtype=float)
    x0 = np.array(
        [np.mean(x[:r][g]) for g in ga] + [np.mean(x[r:][g]) for g in gb]
    )
    ra = len(ga)

    def resid(y: np.ndarray) -> np.ndarray:
        a, b = y[:ra] , y[ra:]
        ma, mb = mult[:ra], mult[ra:]
        signs = np.where(ks % 2 == 0, -1.0, 1.0)
        vals = np.array([np.sum(ma * a**k) for k in ks]) + signs * np.array(
            [np.sum(mb * b**k) for k in ks]
        )
        return vals - target

    fit = optimize.least_squares(
        resid, x0, bounds=(0.0, 1.0), xtol=1e-15, ftol=1e-15, gtol=1e-15
    )
    if float(np.sum(mult * fit.x)) > 1 + 1e-9:
        return None
    full = np.concatenate(
        [
            np.concatenate([np.full(len(g), fit.x[i]) for i, g in enumerate(ga)])
            if ga
            else np.zeros(0),
            np.concatenate([np.full(len(g), fit.x[ra + j]) for j, g in enumerate(gb)])
            if gb
            else np.zeros(0),
        ]
    )
    return full, 2 * fit.cost


def _fit_support(
    target: np.ndarray, ks: np.ndarray, r: int, s: int, seed: int, random_starts: int
) -> tuple[np.ndarray, float]:
    """Best constrained fit at exactly the support (r, s)."""
    dim = r + s
    if dim == 0:
        return np.zeros(0), float(np.sum(target**2))

    def objective(x: np.ndarray) -> float:
        return float(np.sum((_model(x, r, ks) - target) ** 2))

    constraints = [{"type": "ineq", "fun": lambda x: 1.0 - x.sum()}]
    for i in range(r - 1):
        constraints.append({"type": "ineq", "fun": lambda x, i=i: x[i] - x[i + 1]})
    for j in range(s - 1):
        constraints.append(
            {"type": "ineq", "fun": lambda x, j=j: x[r + j] - x[r + j + 1]}
        )

    best_x, best_val = np.zeros(dim), np.inf
    for x0 in _starts(r, s, seed, random_starts):
        res = optimize.minimize(
            objective,
            x0,
            method="SLSQP",
            bounds=[(0.0, 1.0)] * dim,
            constraints=constraints,
            options={"maxiter": 400, "ftol": 1e-16},
        )
        if res.fun < best_val:
            best_x, best_val = res.x, res.fun

    polish = optimize.least_squares(
        lambda x: _model(x, r, ks) - target,
        np.clip(best_x, 0.0, 1.0),
        jac=lambda x: _jac(x, r, ks),
        bounds=(0.0, 1.0),
        xtol=1e-15,
        ftol=1e-15,
        gtol=1e-15,
    )
    if polish.x.sum() <= 1 + 1e-9 and 2 * polish.cost <= best_val:
        best_x, best_val = polish.x, 2 * polish.cost

    # Ties flatten the objective to quartic order and stall Gauss-Newton a
    # few digits out; refitting with detected multiplicities restores full
    # conditioning.  Kept only when it does not worsen the fit.
    snapped = _tied_refit(best_x, r, ks, target)
    if snapped is not None and snapped[1] <= best_val + 1e-18:
        best_x, best_val = snapped
    return best_x, best_val


def recover_params(
    values: Mapping[int, float],
    support_bounds: tuple[int, int],
    seed: int = 0,
    random_starts: int = 2,
    drop_tol: float = 1e-8,
) -> RecoveryResult:
    """Fit (alpha, beta) with bounded supports to observed cycle values.

    values maps cycle lengths k >= 2 to the character value on a single
    k-cycle.  Constrained least squares from deterministic corner starts
    plus seeded random ones, run over every support inside the bounds;
    among fits of equal quality the smallest support wins, which keeps
    padded bounds from leaving near-cancelling junk entries.  The caller
    judges the returned residual; it is never hidden.
    """
    r, s = support_bounds
    if r < 0 or s < 0:
        raise ValueError("support bounds must be >= 0")
    ks = np.array(sorted(int(k) for k in values))
    if len(ks) == 0 or ks[0] < 2:
        raise ValueError("values must be keyed by cycle lengths >= 2")
    if ks.max() < r + s + 1:
        raise ValueError(
            f"need cycle values up to at least {r + s + 1} for bounds ({r}, {s})"
        )
    target = np.array([float(values[k]) for k in ks])

    fits = {}
    for r2 in range(r + 1):
        for s2 in range(s + 1):
            fits[(r2, s2)] = _fit_support(target, ks, r2, s2, seed, random_starts)
    best_residual = min(v for _, v in fits.values())
    slack = max(1e-16, 1e-9 * best_residual)
    candidates = [key for key, (_, v) in fits.items() if v <= best_residual + slack]
    r2, s2 = min(candidates, key=lambda key: (key[0] + key[1], key))
    best_x = fits[(r2, s2)][0]

    alpha = tuple(float(a) for a in sorted(best_x[:r2], reverse=True) if a > drop_tol)
    beta = tuple(float(b) for b in sorted(best_x[r2:], reverse=True) if b > drop_tol)
    scale = sum(alpha) + sum(beta)
    if 1 < scale <= 1 + 1e-9:
        alpha = tuple(a / scale for a in alpha)
        beta = tuple(b / scale for b in beta)
    params = ThomaParams(alpha, beta)
    fitted = np.array([float(thoma_character(params, (int(k),))) for k in ks])
    return RecoveryResult(params, float(np.sum((fitted - target) ** 2)))
