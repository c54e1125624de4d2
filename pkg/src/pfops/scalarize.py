"""Scalarized target densities and the balance-parameter schedule.

A run simulates a sequence of unnormalized densities pi_k over the decision
space, each collapsing the two objectives into one scalar with a balance
parameter lambda_k that sweeps from 0 (pure f1) to 1 (pure f2):

    weighted-sum:  pi_k(x) = exp(-[(1 - lambda_k) f1(x) + lambda_k f2(x)])
    Tchebycheff:   pi_k(x) = exp(-max{(1 - lambda_k) |f1(x) - z1|,
                                      lambda_k |f2(x) - z2|})

where z = (z1, z2) is a Utopian point strictly below each objective's
minimum. Normalizing constants are never computed: every consumer works
with ratios of pi_k, where they cancel, and all arithmetic stays in log
space (raw densities underflow: the convex benchmark reaches exp(-225)
at the far corner of its box).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidConfigError, InvalidInputError
from .problems import BiObjectiveProblem


class ScalarizationKind(enum.Enum):
    WEIGHTED_SUM = "weighted-sum"
    TCHEBYCHEFF = "tchebycheff"


@dataclass(frozen=True)
class Scalarization:
    """One member of the target-density family.

    Attributes:
        kind: weighted-sum or Tchebycheff.
        lam: balance parameter in [0, 1].
        utopian: (z1, z2), required iff kind is Tchebycheff.
    """

    kind: ScalarizationKind
    lam: float
    utopian: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.lam <= 1.0:
            raise InvalidConfigError(f"lambda must lie in [0, 1], got {self.lam}")
        if self.kind is ScalarizationKind.TCHEBYCHEFF:
            if self.utopian is None:
                raise InvalidConfigError("Tchebycheff scalarization requires a Utopian point")
            object.__setattr__(self, "utopian", (float(self.utopian[0]), float(self.utopian[1])))
        elif self.utopian is not None:
            raise InvalidConfigError("weighted-sum scalarization takes no Utopian point")

    def log_density_values(self, objectives: np.ndarray) -> np.ndarray | float:
        """log pi at pre-computed objective values.

        Args:
            objectives: (..., 2) array of (f1, f2) values.

        Returns:
            log pi with the leading shape of ``objectives``; a float for a
            single (2,) input.
        """
        obj = np.asarray(objectives, dtype=float)
        f1 = obj[..., 0]
        f2 = obj[..., 1]
        if self.kind is ScalarizationKind.WEIGHTED_SUM:
            out = -((1.0 - self.lam) * f1 + self.lam * f2)
        else:
            z1, z2 = self.utopian  # type: ignore[misc]
            out = -np.maximum(
                (1.0 - self.lam) * np.abs(f1 - z1), self.lam * np.abs(f2 - z2)
            )
        return float(out) if out.ndim == 0 else out


def weighted_sum(lam: float) -> Scalarization:
    return Scalarization(ScalarizationKind.WEIGHTED_SUM, lam)


def tchebycheff(lam: float, utopian: tuple[float, float]) -> Scalarization:
    return Scalarization(ScalarizationKind.TCHEBYCHEFF, lam, utopian)


def equal_interval_schedule(k_targets: int) -> np.ndarray:
    """Balance parameters lambda_k = (k-1)/(K-1) for k = 1..K.

    Raises:
        InvalidConfigError: if K < 2; a single lambda cannot be both the
            required first value 0 and last value 1.
    """
    if k_targets < 2:
        raise InvalidConfigError(
            f"need at least 2 targets to span lambda from 0 to 1, got {k_targets}"
        )
    return np.linspace(0.0, 1.0, int(k_targets))


def validate_schedule(values: np.ndarray) -> np.ndarray:
    """Check a schedule is strictly increasing from exactly 0 to exactly 1."""
    values = np.asarray(values, dtype=float)
    if values.ndim != 1 or len(values) < 2:
        raise InvalidConfigError("schedule must be a 1-D array of length >= 2")
    if values[0] != 0.0 or values[-1] != 1.0:
        raise InvalidConfigError("schedule must start at 0 and end at 1")
    if not np.all(np.diff(values) > 0):
        raise InvalidConfigError("schedule must be strictly increasing")
    return values


def log_density(s: Scalarization, problem: BiObjectiveProblem, x: np.ndarray) -> float:
    """log pi at a decision vector; evaluates both objectives (counted).

    Out-of-bounds ``x`` raises BoundsError via the problem.
    """
    return float(s.log_density_values(problem.evaluate(x)))


def analytic_weighted_sum_minimizer_convex(lam: float) -> np.ndarray:
    """Exact minimizer of the weighted-sum scalarized convex benchmark.

    Minimizing (1-lam)(x1^2 + x2^2) + lam((x1-5)^2 + (x2-5)^2): the gradient
    vanishes at x_j = 5 lam in each coordinate, and the quadratic is strictly
    convex, so (5 lam, 5 lam) is the unique minimizer.
    """
    if not 0.0 <= lam <= 1.0:
        raise InvalidInputError(f"lambda must lie in [0, 1], got {lam}")
    return np.array([5.0 * lam, 5.0 * lam])
