"""Monte Carlo verification oracle for the analytic transforms.

Simulates the square-root factors with the exact noncentral chi-square
transition (or full-truncation Euler as a cross-check), accumulates running
integrals by the trapezoid rule, and estimates each pricing expectation
pathwise together with its standard error.

Determinism: paths are partitioned into fixed-size blocks and block ``b``
draws from a counter-based Philox stream keyed by ``(seed, b)``; block
partial sums are combined with compensated (fsum) reduction in block order.
Estimates are therefore bit-identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .affine import SIGMA_EPS, FactorSet
from .caplet import _z_coefficients
from .errors import SpecError
from .instruments import BankCredit
from .model import ModelSpec, ois_discount
from .shifts import PiecewiseShift


@dataclass(frozen=True)
class McConfig:
    """Simulation settings; any reported comparison needs >= 1000 paths."""

    n_paths: int = 100_000
    steps_per_year: int = 120
    seed: int = 0
    scheme: str = "exact"
    block_size: int = 20_000
    n_workers: int = 1

    def __post_init__(self):
        if self.n_paths < 1000:
            raise ValueError("n_paths must be at least 1000 for reported comparisons")
        if self.scheme not in ("exact", "euler"):
            raise ValueError("scheme must be 'exact' or 'euler'")


@dataclass(frozen=True)
class ExpLeg:
    """One exponent contribution: int_start^end (shift(s) + <gamma, X(s)>) ds."""

    start: float
    end: float
    gamma: np.ndarray
    shift: PiecewiseShift | float = 0.0

    def __post_init__(self):
        if self.end < self.start or self.start < 0:
            raise SpecError(f"bad leg interval [{self.start}, {self.end}]")
        object.__setattr__(
            self, "gamma", np.atleast_1d(np.asarray(self.gamma, dtype=float))
        )

    def shift_integral(self) -> float:
        if isinstance(self.shift, PiecewiseShift):
            return self.shift.integral(self.start, self.end)
        return float(self.shift) * (self.end - self.start)


@dataclass
class McEstimate:
    value: float
    std_error: float
    n_paths: int

    def within(self, reference: float, n_se: float = 3.0) -> bool:
        return abs(self.value - reference) <= n_se * self.std_error


def _block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.Philox(key=np.array([seed, block], dtype=np.uint64))
    )


class _ExactStepper:
    """Joint noncentral chi-square transition for all factors at one dt.

    For df = 4 kappa theta / sigma^2 > 1 (always true under the Feller
    condition) the transition decomposes into a central chi-square with
    df - 1 degrees plus one squared shifted normal, which vectorises far
    better than elementwise noncentral chi-square sampling.
    """

    def __init__(self, factors: FactorSet):
        self.kappa = factors.kappa
        self.theta = factors.theta
        self.sigma = factors.sigma
        self.stochastic = self.sigma >= SIGMA_EPS
        self.df = np.where(
            self.stochastic, 4.0 * self.kappa * self.theta / self.sigma**2, 2.0
        )
        self.fast = self.stochastic & (self.df > 1.0)
        self._cache: dict[float, tuple] = {}

    def _constants(self, dt_step: float):
        cached = self._cache.get(dt_step)
        if cached is None:
            e = np.exp(-self.kappa * dt_step)
            c = np.where(
                self.stochastic,
                self.sigma**2 * (1.0 - e) / (4.0 * self.kappa),
                1.0,
            )
            cached = (e, c)
            self._cache[dt_step] = cached
        return cached

    def __call__(self, rng, y, dt_step):
        e, c = self._constants(dt_step)
        if not self.stochastic.any():
            return self.theta + (y - self.theta) * e
        n = y.shape[0]
        z = rng.standard_normal(y.shape)
        out = np.empty_like(y)
        for i in range(y.shape[1]):
            if not self.stochastic[i]:
                out[:, i] = self.theta[i] + (y[:, i] - self.theta[i]) * e[i]
            elif self.fast[i]:
                chi = 2.0 * rng.standard_gamma(0.5 * (self.df[i] - 1.0), size=n)
                nc = y[:, i] * (e[i] / c[i])
                out[:, i] = c[i] * (chi + (z[:, i] + np.sqrt(nc)) ** 2)
            else:
                nc = y[:, i] * (e[i] / c[i])
                out[:, i] = c[i] * rng.noncentral_chisquare(self.df[i], nc)
        return out


class _EulerStepper:
    """Full-truncation Euler step for all factors at one dt."""

    def __init__(self, factors: FactorSet):
        self.kappa = factors.kappa
        self.theta = factors.theta
        self.sigma = factors.sigma
        self.stochastic = self.sigma >= SIGMA_EPS

    def __call__(self, rng, y, dt_step):
        e = np.exp(-self.kappa * dt_step)
        det = self.theta + (y - self.theta) * e
        y_pos = np.maximum(y, 0.0)
        z = rng.standard_normal(y.shape)
        stepped = (
            y
            + self.kappa * (self.theta - y_pos) * dt_step
            + self.sigma * np.sqrt(y_pos * dt_step) * z
        )
        return np.where(self.stochastic, stepped, det)


def _time_grid(event_times, steps_per_year: int) -> np.ndarray:
    events = np.unique(np.round(np.asarray(event_times, dtype=float), 12))
    if events[0] != 0.0:
        events = np.concatenate(([0.0], events))
    grid = [0.0]
    for s, e in zip(events[:-1], events[1:]):
        n = max(1, math.ceil((e - s) * steps_per_year - 1e-9))
        grid.extend(np.linspace(s, e, n + 1)[1:])
    return np.asarray(grid)


class PathFunctionals:
    """Streaming accumulation of window integrals and state snapshots.

    ``windows`` maps a name to (start, end): per-path trapezoid integrals of
    each factor over the window.  ``checkpoints`` maps a name to a time at
    which the factor state is recorded.
    """

    def __init__(self, integrals: dict, states: dict):
        self.integrals = integrals  # name -> (n, d) array
        self.states = states  # name -> (n, d) array


def simulate_block(
    factors: FactorSet,
    cfg: McConfig,
    block: int,
    n: int,
    windows: dict,
    checkpoints: dict,
) -> PathFunctionals:
    rng = _block_rng(cfg.seed, block)
    step = (_ExactStepper if cfg.scheme == "exact" else _EulerStepper)(factors)
    d = len(factors)
    events = (
        [w[0] for w in windows.values()]
        + [w[1] for w in windows.values()]
        + list(checkpoints.values())
    )
    grid = _time_grid(events, cfg.steps_per_year)

    y = np.tile(factors.y0, (n, 1))
    integrals = {name: np.zeros((n, d)) for name in windows}
    states = {}
    for name, t_chk in checkpoints.items():
        if t_chk == 0.0:
            states[name] = y.copy()
    for t0, t1 in zip(grid[:-1], grid[1:]):
        dt_step = t1 - t0
        y_new = step(rng, y, dt_step)
        if cfg.scheme == "exact" and np.any(y_new < 0):
            raise AssertionError("exact-scheme path went negative")
        contrib = 0.5 * (y + y_new) * dt_step
        for name, (ws, we) in windows.items():
            if t0 >= ws - 1e-9 and t1 <= we + 1e-9:
                integrals[name] += contrib
        for name, t_chk in checkpoints.items():
            if abs(t1 - t_chk) < 1e-9:
                states[name] = y_new.copy()
        y = y_new
    return PathFunctionals(integrals, states)


def _blocks(cfg: McConfig):
    sizes = []
    remaining = cfg.n_paths
    while remaining > 0:
        sizes.append(min(cfg.block_size, remaining))
        remaining -= sizes[-1]
    return sizes


def estimate(
    factors: FactorSet,
    cfg: McConfig,
    windows: dict,
    checkpoints: dict,
    payoff,
) -> McEstimate:
    """mean and SE of ``payoff(PathFunctionals) -> (n,) array`` over all paths."""
    sizes = _blocks(cfg)

    def run(args):
        block, n = args
        funcs = simulate_block(factors, cfg, block, n, windows, checkpoints)
        vals = np.asarray(payoff(funcs), dtype=float)
        return float(np.sum(vals)), float(np.sum(vals * vals))

    jobs = list(enumerate(sizes))
    if cfg.n_workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.n_workers) as pool:
            partials = list(pool.map(run, jobs))
    else:
        partials = [run(j) for j in jobs]
    total = math.fsum(p[0] for p in partials)
    total_sq = math.fsum(p[1] for p in partials)
    n = cfg.n_paths
    mean = total / n
    var = max(total_sq / n - mean * mean, 0.0)
    return McEstimate(value=mean, std_error=math.sqrt(var / n), n_paths=n)


# ---------------------------------------------------------------------------
# expression-level oracle
# ---------------------------------------------------------------------------


def mc_expectation(
    factors: FactorSet, legs: list[ExpLeg], cfg: McConfig
) -> McEstimate:
    """E[exp(sum of leg exponents)] with X(0) = y0, estimated pathwise."""
    if not legs:
        raise SpecError("need at least one exponent leg")
    for leg in legs:
        factors.check_dim(leg.gamma, "leg.gamma")
    windows = {}
    for k, leg in enumerate(legs):
        if leg.end > leg.start:
            windows[f"leg{k}"] = (leg.start, leg.end)
    det = math.fsum(leg.shift_integral() for leg in legs)

    def payoff(funcs: PathFunctionals):
        expo = np.full(next(iter(funcs.integrals.values())).shape[0], det) if windows else det
        if not windows:
            return np.array([math.exp(det)])
        for k, leg in enumerate(legs):
            name = f"leg{k}"
            if name in funcs.integrals:
                expo = expo + funcs.integrals[name] @ leg.gamma
        return np.exp(expo)

    return estimate(factors, cfg, windows, {}, payoff)


# ---------------------------------------------------------------------------
# named oracles for the pricing operations
# ---------------------------------------------------------------------------


def mc_ois_discount(model: ModelSpec, T: float, cfg: McConfig) -> McEstimate:
    return mc_expectation(
        model.factors,
        [ExpLeg(0.0, T, -model.proj_rc.loading, model.proj_rc.shift.scaled(-1.0))],
        cfg,
    )


def mc_funding_growth(model: ModelSpec, T: float, cfg: McConfig) -> McEstimate:
    return mc_expectation(
        model.factors,
        [ExpLeg(0.0, T, model.proj_phi.loading, model.proj_phi.shift)],
        cfg,
    )


def mc_risky_discount(model: ModelSpec, T: float, cfg: McConfig) -> McEstimate:
    return mc_expectation(
        model.factors,
        [ExpLeg(0.0, T, -model.risky_loading(), model.risky_shift().scaled(-1.0))],
        cfg,
    )


def mc_rollover_forward_term(
    model: ModelSpec, T_prev: float, T_next: float, cfg: McConfig
) -> McEstimate:
    return mc_expectation(
        model.factors,
        [
            ExpLeg(0.0, T_prev, -model.risky_loading(), model.risky_shift().scaled(-1.0)),
            ExpLeg(T_prev, T_next, model.proj_phi.loading, model.proj_phi.shift),
        ],
        cfg,
    )


def mc_survival_discount(
    model: ModelSpec, bank: BankCredit, T: float, cfg: McConfig
) -> McEstimate:
    gamma = -(model.proj_rc.loading + bank.loading)
    shift = model.proj_rc.shift.plus(bank.shift).scaled(-1.0)
    return mc_expectation(model.factors, [ExpLeg(0.0, T, gamma, shift)], cfg)


def _pathwise_rate_factors(model: ModelSpec, T_prev: float, T_next: float, states):
    """(spot rate L, one-period discount D) per path at the fixing state."""
    from .affine import riccati_transform

    delta = T_next - T_prev
    zero = np.zeros(model.dim)
    a = model.proj_rc.loading
    c = model.proj_phi.loading
    d = model.risky_loading()
    inner_a = riccati_transform(model.factors, delta, zero, 1.0, -a)
    inner_c = riccati_transform(model.factors, delta, zero, 1.0, c)
    inner_d = riccati_transform(model.factors, delta, zero, 1.0, -d)
    a0_int = model.proj_rc.shift.integral(T_prev, T_next)
    c0_int = model.proj_phi.shift.integral(T_prev, T_next)
    d0_int = model.risky_shift().integral(T_prev, T_next)
    growth = np.exp(c0_int + inner_c.phi + states @ inner_c.psi)
    risky = np.exp(-d0_int + inner_d.phi + states @ inner_d.psi)
    libor = (growth / risky - 1.0) / delta
    disc = np.exp(-a0_int + inner_a.phi + states @ inner_a.psi)
    return libor, disc


def mc_libor_leg_pv(
    model: ModelSpec, T_prev: float, T_next: float, cfg: McConfig
) -> McEstimate:
    """Simulate to the fixing date, set the rate there, discount pathwise."""
    delta = T_next - T_prev
    a = model.proj_rc.loading
    a0 = model.proj_rc.shift

    def payoff(funcs: PathFunctionals):
        states = funcs.states["fix"]
        disc_to_fix = np.exp(
            -a0.integral(0.0, T_prev) - funcs.integrals["rc"] @ a
        ) if T_prev > 0 else 1.0
        libor, disc = _pathwise_rate_factors(model, T_prev, T_next, states)
        return disc_to_fix * delta * libor * disc

    windows = {"rc": (0.0, T_prev)} if T_prev > 0 else {}
    return estimate(model.factors, cfg, windows, {"fix": T_prev}, payoff)


def mc_caplet_price(
    model: ModelSpec,
    T_prev: float,
    T_next: float,
    strike: float,
    notional: float,
    cfg: McConfig,
) -> McEstimate:
    delta = T_next - T_prev
    f, g = _z_coefficients(model, T_prev, T_next, strike)
    a = model.proj_rc.loading
    a0 = model.proj_rc.shift

    def payoff(funcs: PathFunctionals):
        states = funcs.states["fix"]
        disc_to_fix = np.exp(
            -a0.integral(0.0, T_prev) - funcs.integrals["rc"] @ a
        ) if T_prev > 0 else 1.0
        _, disc = _pathwise_rate_factors(model, T_prev, T_next, states)
        z = f + states @ g
        return (
            disc_to_fix
            * disc
            * notional
            * (1.0 + delta * strike)
            * np.maximum(np.exp(z) - 1.0, 0.0)
        )

    windows = {"rc": (0.0, T_prev)} if T_prev > 0 else {}
    return estimate(model.factors, cfg, windows, {"fix": T_prev}, payoff)


def mc_caplet_char_fn(
    model: ModelSpec,
    T_prev: float,
    T_next: float,
    strike: float,
    u: complex,
    cfg: McConfig,
) -> tuple[complex, float]:
    """Forward-measure E[e^{iuZ}] by discount reweighting; returns (est, SE).

    The standard error combines both components quadratically.
    """
    f, g = _z_coefficients(model, T_prev, T_next, strike)
    a = model.proj_rc.loading
    a0 = model.proj_rc.shift
    D0 = ois_discount(model, 0.0, T_next)

    def payoff_part(part):
        def payoff(funcs: PathFunctionals):
            states = funcs.states["fix"]
            disc_to_fix = np.exp(
                -a0.integral(0.0, T_prev) - funcs.integrals["rc"] @ a
            ) if T_prev > 0 else 1.0
            _, disc = _pathwise_rate_factors(model, T_prev, T_next, states)
            z = f + states @ g
            weight = disc_to_fix * disc / D0
            vals = weight * np.exp(1j * u * z)
            return vals.real if part == "re" else vals.imag

        return payoff

    windows = {"rc": (0.0, T_prev)} if T_prev > 0 else {}
    re = estimate(model.factors, cfg, windows, {"fix": T_prev}, payoff_part("re"))
    im = estimate(model.factors, cfg, windows, {"fix": T_prev}, payoff_part("im"))
    return complex(re.value, im.value), math.hypot(re.std_error, im.std_error)
