"""Derivative-free global optimizers used by the calibration stages.

Two methods, both deterministic under a fixed seed:

* Differential evolution, rand/1/bin variant: mutate three distinct donors,
  binomial crossover with a forced coordinate, greedy selection.
* Adaptive simulated annealing: per-dimension generating temperatures with a
  T_i(k) = T0 exp(-c k^{1/D}) schedule, the signed power-law generating
  distribution, Metropolis acceptance on its own annealed temperature, and
  periodic re-annealing that rescales each dimension's annealing index by
  its finite-difference sensitivity at the best point.

Objectives may return ``inf`` for infeasible points; both methods treat such
points as never improving.  Population (or candidate-batch) evaluations can
run on a thread pool; results are reduced in submission order so the
trajectory is identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Bounds:
    """Per-parameter [lo, hi] boxes, optionally with a Feller penalty hook.

    When ``feller_indices`` is set, objective wrappers add the penalty
    weight * max(0, sigma^2 - 2 kappa theta)^2 per factor; see
    :func:`multitenor.calibration.feller_penalty`.
    """

    lo: np.ndarray
    hi: np.ndarray
    feller_indices: tuple | None = None
    feller_weight: float = 1e6

    def __init__(self, lo, hi, feller_indices=None, feller_weight=1e6):
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        if lo.shape != hi.shape or lo.ndim != 1:
            raise ValueError("lo and hi must be 1-d arrays of equal length")
        if np.any(lo >= hi):
            raise ValueError("need lo < hi for every parameter")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "feller_indices", feller_indices)
        object.__setattr__(self, "feller_weight", feller_weight)

    @property
    def dim(self) -> int:
        return len(self.lo)

    def clip(self, x: np.ndarray) -> np.ndarray:
        return np.clip(x, self.lo, self.hi)

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return self.lo + (self.hi - self.lo) * rng.random((n, self.dim))


@dataclass
class OptimizerResult:
    x: np.ndarray
    fun: float
    n_evals: int
    trace: list = field(default_factory=list)  # (eval budget used, best so far)
    seed: int = 0


@dataclass(frozen=True)
class DeConfig:
    pop: int | None = None  # default 15 * dim
    F: float = 0.7
    CR: float = 0.9
    max_iter: int = 300
    tol: float = 0.0
    seed: int = 0
    n_workers: int = 1


@dataclass(frozen=True)
class AsaConfig:
    T0: float = 1.0
    anneal_scale: float = 6.0
    max_evals: int = 50_000
    reanneal_every: int = 500
    seed: int = 0
    n_workers: int = 1


def _evaluate(objective, xs, n_workers: int) -> np.ndarray:
    if n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            vals = list(pool.map(objective, xs))
    else:
        vals = [objective(x) for x in xs]
    return np.asarray(vals, dtype=float)


def differential_evolution(
    objective, bounds: Bounds, config: DeConfig = DeConfig()
) -> OptimizerResult:
    """rand/1/bin differential evolution over a box.

    Always returns the best member found; a constant objective returns an
    unmodified member of the initial population.
    """
    dim = bounds.dim
    pop_size = config.pop or 15 * dim
    if pop_size < 4:
        raise ValueError("population must have at least 4 members")
    rng = np.random.default_rng(config.seed)

    pop = bounds.sample(rng, pop_size)
    fitness = _evaluate(objective, pop, config.n_workers)
    n_evals = pop_size
    best_idx = int(np.argmin(fitness))
    trace = [(n_evals, float(fitness[best_idx]))]

    for _ in range(config.max_iter):
        if fitness[best_idx] <= config.tol:
            break
        trials = np.empty_like(pop)
        for i in range(pop_size):
            donors: list[int] = []
            while len(donors) < 3:
                j = int(rng.integers(pop_size))
                if j != i and j not in donors:
                    donors.append(j)
            r1, r2, r3 = donors
            mutant = pop[r1] + config.F * (pop[r2] - pop[r3])
            mutant = bounds.clip(mutant)
            cross = rng.random(dim) < config.CR
            cross[rng.integers(dim)] = True
            trials[i] = np.where(cross, mutant, pop[i])
        trial_fit = _evaluate(objective, trials, config.n_workers)
        n_evals += pop_size
        improved = trial_fit < fitness
        pop[improved] = trials[improved]
        fitness[improved] = trial_fit[improved]
        best_idx = int(np.argmin(fitness))
        trace.append((n_evals, float(fitness[best_idx])))

    return OptimizerResult(
        x=pop[best_idx].copy(),
        fun=float(fitness[best_idx]),
        n_evals=n_evals,
        trace=trace,
        seed=config.seed,
    )


def _asa_generate(rng, x, temps, bounds: Bounds) -> np.ndarray:
    """Signed power-law step: y = sgn(v-1/2) T ((1+1/T)^{|2v-1|} - 1)."""
    v = rng.random(bounds.dim)
    y = np.sign(v - 0.5) * temps * ((1.0 + 1.0 / temps) ** np.abs(2.0 * v - 1.0) - 1.0)
    candidate = x + y * (bounds.hi - bounds.lo)
    return bounds.clip(candidate)


def adaptive_simulated_annealing(
    objective, bounds: Bounds, config: AsaConfig = AsaConfig()
) -> OptimizerResult:
    """Annealing with per-dimension generating temperatures and re-annealing."""
    dim = bounds.dim
    rng = np.random.default_rng(config.seed)
    c = config.anneal_scale * math.exp(-config.anneal_scale / dim)

    x = bounds.sample(rng, 1)[0]
    f = float(objective(x))
    n_evals = 1
    best_x, best_f = x.copy(), f
    k_gen = np.ones(dim)  # per-dimension annealing index
    k_acc = 1.0
    accepted_since_reanneal = 0
    trace = [(n_evals, best_f)]

    while n_evals < config.max_evals:
        temps = config.T0 * np.exp(-c * k_gen ** (1.0 / dim))
        temps = np.maximum(temps, 1e-12)
        t_accept = max(config.T0 * math.exp(-c * k_acc ** (1.0 / dim)), 1e-12)

        candidate = _asa_generate(rng, x, temps, bounds)
        f_cand = float(objective(candidate))
        n_evals += 1

        accept = f_cand < f
        if not accept and math.isfinite(f_cand):
            delta = f_cand - f
            accept = rng.random() < math.exp(-delta / t_accept)
        if accept:
            x, f = candidate, f_cand
            k_acc += 1.0
            accepted_since_reanneal += 1
            if f < best_f:
                best_x, best_f = x.copy(), f
                trace.append((n_evals, best_f))
        k_gen += 1.0

        if accepted_since_reanneal >= config.reanneal_every:
            accepted_since_reanneal = 0
            sens = _sensitivities(objective, best_x, bounds)
            n_evals += dim
            s_max = float(np.max(sens))
            if s_max > 0:
                ratio = np.where(sens > 0, s_max / sens, 1.0)
                temps = np.maximum(config.T0 * np.exp(-c * k_gen ** (1.0 / dim)), 1e-12)
                new_temps = np.minimum(temps * ratio, config.T0)
                k_gen = (np.log(config.T0 / new_temps) / c) ** dim
                k_gen = np.maximum(k_gen, 1.0)
            # restart the walk from the incumbent best
            x, f = best_x.copy(), best_f

    trace.append((n_evals, best_f))
    return OptimizerResult(
        x=best_x, fun=best_f, n_evals=n_evals, trace=trace, seed=config.seed
    )


def _sensitivities(objective, x, bounds: Bounds) -> np.ndarray:
    """|f(x + h e_i) - f(x)| / h with h a small fraction of the box width."""
    f0 = float(objective(x))
    sens = np.empty(bounds.dim)
    for i in range(bounds.dim):
        h = 1e-6 * (bounds.hi[i] - bounds.lo[i])
        xp = x.copy()
        xp[i] = min(x[i] + h, bounds.hi[i])
        step = xp[i] - x[i]
        if step == 0.0:
            xp[i] = x[i] - h
            step = xp[i] - x[i]
        sens[i] = abs(float(objective(xp)) - f0) / abs(step)
    return sens
