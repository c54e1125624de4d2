"""Particle-filter optimizer over a path-sampled sequence of scalarized targets.

One run walks the balance parameter lambda through an equally spaced schedule
from 0 to 1. At each step k the population is scored under the current target
pi_k, the best particle becomes the step's incumbent, particles are
importance-reweighted by the density ratio pi_k / pi_{k-1}, multinomially
resampled, and optionally rejuvenated by a componentwise Metropolis sweep
(which may also improve the incumbent, including through rejected proposals).
The K recorded incumbents form the estimated Pareto set; their objective
vectors, kept from the evaluations already paid for, form the estimated front.

Objective values are evaluated once per particle per step and shared by the
incumbent update and both sides of the weight ratio, so a run consumes exactly
2*K*N single-objective evaluations, plus 2*K*N*d more when the Metropolis
sweep is on (one (f1, f2) pair per componentwise proposal, out-of-box
proposals included).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DegenerateWeightsError, InvalidConfigError, InvalidInputError
from .pareto import nondominated_mask
from .problems import BiObjectiveProblem
from .scalarize import Scalarization, ScalarizationKind, equal_interval_schedule


@dataclass(frozen=True)
class Incumbent:
    """Best decision seen under the current target density."""

    decision: np.ndarray
    log_density: float
    objectives: np.ndarray


@dataclass
class Population:
    """N weighted particles plus the per-step incumbent.

    ``objectives`` caches (f1, f2) rows for ``particles`` when they have
    already been paid for this step; ``None`` means not evaluated yet.
    """

    particles: np.ndarray
    log_weights: np.ndarray
    incumbent: Incumbent | None = None
    objectives: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.particles)


@dataclass(frozen=True)
class PfopsConfig:
    """Run settings.

    Attributes:
        n_targets: K, number of target densities (>= 2).
        n_particles: N, particle count (>= 1).
        sigma: Metropolis proposal standard deviation (> 0), shared by all
            coordinates.
        metropolis_enabled: run the componentwise rejuvenation sweep.
        final_filter_enabled: drop dominated members from the archive.
        seed: seed for the run's random stream.
        scalarization_kind: weighted-sum or Tchebycheff target family.
        utopian: (z1, z2), required iff Tchebycheff.
    """

    n_targets: int
    n_particles: int
    sigma: float = 1.0
    metropolis_enabled: bool = True
    final_filter_enabled: bool = True
    seed: int = 0
    scalarization_kind: ScalarizationKind = ScalarizationKind.WEIGHTED_SUM
    utopian: tuple[float, float] | None = None

    def validate(self) -> None:
        if self.n_targets < 2:
            raise InvalidConfigError(f"n_targets must be >= 2, got {self.n_targets}")
        if self.n_particles < 1:
            raise InvalidConfigError(f"n_particles must be >= 1, got {self.n_particles}")
        if not self.sigma > 0:
            raise InvalidConfigError(f"sigma must be positive, got {self.sigma}")
        if self.scalarization_kind is ScalarizationKind.TCHEBYCHEFF and self.utopian is None:
            raise InvalidConfigError("Tchebycheff runs require a Utopian point")
        if self.scalarization_kind is ScalarizationKind.WEIGHTED_SUM and self.utopian is not None:
            raise InvalidConfigError("weighted-sum runs take no Utopian point")

    def scalarization(self, lam: float) -> Scalarization:
        return Scalarization(self.scalarization_kind, float(lam), self.utopian)


@dataclass(frozen=True)
class ParetoArchive:
    """Index-aligned estimated Pareto set and front: front[i] = F(decisions[i])."""

    decisions: np.ndarray
    front: np.ndarray

    def __len__(self) -> int:
        return len(self.decisions)


def initialize(
    config: PfopsConfig, problem: BiObjectiveProblem, rng: np.random.Generator
) -> Population:
    """Draw N particles uniformly inside the box; weights uniform, no incumbent."""
    config.validate()
    span = problem.upper - problem.lower
    particles = problem.lower + span * rng.random((config.n_particles, problem.dim))
    log_weights = np.full(config.n_particles, -np.log(config.n_particles))
    return Population(particles=particles, log_weights=log_weights)


def _ensure_objectives(pop: Population, problem: BiObjectiveProblem) -> np.ndarray:
    if pop.objectives is None:
        pop.objectives = problem.evaluate_batch(pop.particles)
    return pop.objectives


def update_incumbent(
    pop: Population, s: Scalarization, problem: BiObjectiveProblem
) -> Population:
    """Set the incumbent to the particle maximizing log pi; first index wins ties."""
    if len(pop) == 0:
        raise InvalidInputError("population is empty")
    objectives = _ensure_objectives(pop, problem)
    log_pi = np.asarray(s.log_density_values(objectives))
    j = int(np.argmax(log_pi))
    incumbent = Incumbent(
        decision=pop.particles[j].copy(),
        log_density=float(log_pi[j]),
        objectives=objectives[j].copy(),
    )
    return replace(pop, incumbent=incumbent, objectives=objectives)


def _normalize_log_weights(log_w: np.ndarray) -> np.ndarray:
    m = np.max(log_w)
    if not np.isfinite(m):
        raise DegenerateWeightsError(
            "every particle has zero density under the current target"
        )
    shifted = log_w - m
    return shifted - np.log(np.sum(np.exp(shifted)))


def importance_weights(
    pop: Population,
    k: int,
    s_k: Scalarization,
    s_prev: Scalarization | None,
    problem: BiObjectiveProblem,
) -> Population:
    """Incremental importance weighting, normalized in log space.

    Raw weight: pi_k at the particle when k = 1, else the ratio
    pi_k / pi_{k-1}; both targets are scored at the same cached objective
    values, so the ratio costs no extra evaluations.
    """
    if k < 1:
        raise InvalidInputError(f"step index must be >= 1, got {k}")
    if (k == 1) != (s_prev is None):
        raise InvalidInputError("s_prev is required exactly when k > 1")
    objectives = _ensure_objectives(pop, problem)
    log_w = np.asarray(s_k.log_density_values(objectives), dtype=float)
    if s_prev is not None:
        log_w = log_w - np.asarray(s_prev.log_density_values(objectives), dtype=float)
    return replace(pop, log_weights=_normalize_log_weights(log_w), objectives=objectives)


def resample(pop: Population, rng: np.random.Generator) -> Population:
    """Multinomial resampling: N independent draws by weight; weights reset to 1/N.

    Offspring reuse their parents' cached objective values, so resampling
    consumes no evaluations.
    """
    n = len(pop)
    probs = np.exp(pop.log_weights - pop.log_weights.max())
    probs /= probs.sum()
    idx = rng.choice(n, size=n, replace=True, p=probs)
    return Population(
        particles=pop.particles[idx].copy(),
        log_weights=np.full(n, -np.log(n)),
        incumbent=pop.incumbent,
        objectives=None if pop.objectives is None else pop.objectives[idx].copy(),
    )


def metropolis_sweep(
    pop: Population,
    s: Scalarization,
    problem: BiObjectiveProblem,
    sigma: float,
    rng: np.random.Generator,
) -> Population:
    """One componentwise Metropolis sweep over every particle.

    For each dimension in order, every particle proposes a Gaussian
    perturbation of that coordinate and accepts with probability
    min{1, pi(x') / pi(x)}. Proposals leaving the box get zero density
    (always rejected) but are still tallied as objective evaluations.
    Any proposal beating the incumbent's log density replaces the
    incumbent, accepted or not.
    """
    particles = pop.particles.copy()
    objectives = _ensure_objectives(pop, problem).copy()
    log_pi = np.asarray(s.log_density_values(objectives), dtype=float)
    n = len(particles)

    if pop.incumbent is not None:
        inc = pop.incumbent
    else:
        j = int(np.argmax(log_pi))
        inc = Incumbent(particles[j].copy(), float(log_pi[j]), objectives[j].copy())

    for dim in range(problem.dim):
        proposed_col = particles[:, dim] + sigma * rng.standard_normal(n)
        inside = (proposed_col >= problem.lower[dim]) & (proposed_col <= problem.upper[dim])
        proposals = particles.copy()
        proposals[:, dim] = proposed_col

        prop_obj = np.full((n, 2), np.nan)
        prop_log_pi = np.full(n, -np.inf)
        if inside.any():
            prop_obj[inside] = problem.evaluate_batch(proposals[inside])
            prop_log_pi[inside] = np.asarray(
                s.log_density_values(prop_obj[inside]), dtype=float
            )
        # out-of-box proposals still consumed two objective calls each
        problem.counter.add(2 * int(np.count_nonzero(~inside)))

        best = int(np.argmax(prop_log_pi))
        if prop_log_pi[best] > inc.log_density:
            inc = Incumbent(
                proposals[best].copy(), float(prop_log_pi[best]), prop_obj[best].copy()
            )

        accept = rng.random(n) < np.exp(np.minimum(prop_log_pi - log_pi, 0.0))
        particles[accept, dim] = proposed_col[accept]
        objectives[accept] = prop_obj[accept]
        log_pi[accept] = prop_log_pi[accept]

    return replace(pop, particles=particles, objectives=objectives, incumbent=inc)


def run(config: PfopsConfig, problem: BiObjectiveProblem) -> tuple[ParetoArchive, int]:
    """Execute the full K-step loop and return the archive and evaluation count.

    Per step: incumbent update, importance weighting, multinomial resampling,
    optional Metropolis sweep; the step's incumbent is then recorded. The
    front entries come from objective values cached when each incumbent was
    scored, and the final dominated-member filter, when enabled, is free.
    """
    config.validate()
    rng = np.random.default_rng(config.seed)
    schedule = equal_interval_schedule(config.n_targets)
    targets = [config.scalarization(lam) for lam in schedule]

    start_count = problem.counter.count
    pop = initialize(config, problem, rng)

    decisions = []
    front = []
    for k, s_k in enumerate(targets, start=1):
        # fresh scores each step: one batch evaluation shared by the
        # incumbent update and both sides of the weight ratio
        pop.objectives = None
        pop = update_incumbent(pop, s_k, problem)
        pop = importance_weights(pop, k, s_k, targets[k - 2] if k > 1 else None, problem)
        pop = resample(pop, rng)
        if config.metropolis_enabled:
            pop = metropolis_sweep(pop, s_k, problem, config.sigma, rng)
        assert pop.incumbent is not None
        decisions.append(pop.incumbent.decision)
        front.append(pop.incumbent.objectives)

    decisions_arr = np.stack(decisions)
    front_arr = np.stack(front)
    if config.final_filter_enabled:
        keep = nondominated_mask(front_arr)
        decisions_arr = decisions_arr[keep]
        front_arr = front_arr[keep]
    archive = ParetoArchive(decisions=decisions_arr, front=front_arr)
    return archive, problem.counter.count - start_count
