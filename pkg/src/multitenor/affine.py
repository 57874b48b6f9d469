"""Exponential-affine transforms for a vector of independent square-root factors.

The state is a d-dimensional vector X of independent mean-reverting
square-root diffusions

    dy_i = kappa_i (theta_i - y_i) dt + sigma_i sqrt(y_i) dW_i.

Everything priced in this library reduces to the extended transform

    E[ exp( v * integral_0^tau <gamma, X(s)> ds + <u, X(tau)> ) | X(0) = x ]
        = exp( phi(tau) + <psi(tau), x> ),

where (phi, psi) solve a decoupled system of scalar Riccati equations

    psi_i' = v*gamma_i - kappa_i psi_i + (sigma_i^2 / 2) psi_i^2,   psi_i(0) = u_i,
    phi'   = sum_i kappa_i theta_i psi_i,                           phi(0) = 0.

For square-root factors the system has a closed form.  Writing
g = v*gamma_i, the roots of the quadratic (sigma^2/2) p^2 - kappa p + g are

    p_pm = (kappa +- D) / sigma^2,        D = sqrt(kappa^2 - 2 sigma^2 g),

and with W(t) = (u - p_m) e^{-D t} - (u - p_p) the solution is

    psi(t)              = [ p_p (u - p_m) e^{-D t} - p_m (u - p_p) ] / W(t),
    int_0^t psi(s) ds   = p_m t - (2 / sigma^2) * log( W(t) / W(0) ).

W(0) = 2 D / sigma^2, so the formula is well defined whenever D != 0; the
transform explodes exactly where W crosses zero.  Three degenerate branches
are kept separate so the general expression never hits 0/0:

* ``sigma -> 0`` (|sigma| < 1e-8): the Riccati equation is linear,
  psi(t) = g/kappa + (u - g/kappa) e^{-kappa t}.
* ``g -> 0`` (|v*gamma_i| < 1e-14): Bernoulli equation,
  psi(t) = u e^{-kappa t} / (1 - (sigma^2 u / (2 kappa)) (1 - e^{-kappa t})).
* ``D -> 0`` (double root p̄ = kappa/sigma^2):
  psi(t) = p̄ + (u - p̄) / (1 - (sigma^2/2)(u - p̄) t).

The same closed forms are evaluated over complex scalars when the caplet
characteristic function needs them; the real-valued path is a specialisation
that additionally performs exact maximal-domain (explosion) checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, ExplosionError, StepFailure

SIGMA_EPS = 1e-8  # below this the diffusion term is treated as zero
G_EPS = 1e-14  # below this the inhomogeneous term v*gamma_i is treated as zero
_DISC_EPS = 1e-12  # relative threshold for the double-root branch


@dataclass(frozen=True)
class CirFactor:
    """One square-root diffusion factor.

    ``feller_ok`` records whether 2*kappa*theta >= sigma^2 (the condition
    keeping the factor strictly positive).  Violations are recorded, not
    rejected: calibration keeps parameters inside Feller-satisfying bounds
    via a penalty instead.
    """

    kappa: float
    theta: float
    sigma: float
    y0: float

    def __post_init__(self):
        if not (self.kappa > 0 and self.theta > 0 and self.sigma > 0):
            raise ValueError("kappa, theta, sigma must be positive")
        if self.y0 < 0:
            raise ValueError("y0 must be nonnegative")

    @property
    def feller_ok(self) -> bool:
        return 2.0 * self.kappa * self.theta >= self.sigma**2


@dataclass(frozen=True)
class FactorSet:
    """Ordered collection of mutually independent square-root factors."""

    factors: tuple[CirFactor, ...]

    def __init__(self, factors):
        factors = tuple(factors)
        if len(factors) == 0:
            raise ValueError("need at least one factor")
        object.__setattr__(self, "factors", factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    @property
    def kappa(self) -> np.ndarray:
        return np.array([f.kappa for f in self.factors])

    @property
    def theta(self) -> np.ndarray:
        return np.array([f.theta for f in self.factors])

    @property
    def sigma(self) -> np.ndarray:
        return np.array([f.sigma for f in self.factors])

    @property
    def y0(self) -> np.ndarray:
        return np.array([f.y0 for f in self.factors])

    def check_dim(self, vec, name: str) -> np.ndarray:
        arr = np.atleast_1d(np.asarray(vec))
        if arr.shape != (len(self),):
            raise DimensionError(
                f"{name} has length {arr.shape}, expected ({len(self)},)"
            )
        return arr


@dataclass(frozen=True)
class TransformCoeffs:
    """Solution (phi, psi) of the Riccati system at one horizon.

    At horizon 0, ``phi == 0`` and ``psi`` equals the terminal loading.
    """

    phi: complex | float
    psi: np.ndarray


# ---------------------------------------------------------------------------
# scalar closed form (complex-capable, vectorised over tau)
# ---------------------------------------------------------------------------


def _branch_linear(kappa, sigma, g, u, tau):
    """sigma ~ 0: psi' = g - kappa psi."""
    e = np.exp(-kappa * tau)
    ratio = g / kappa
    psi = ratio + (u - ratio) * e
    ipsi = ratio * tau + (u - ratio) * (1.0 - e) / kappa
    return ipsi, psi


def _branch_bernoulli(kappa, sigma, g, u, tau):
    """g ~ 0: psi' = -kappa psi + (sigma^2/2) psi^2."""
    e = np.exp(-kappa * tau)
    h = 0.5 * sigma * sigma * u / kappa
    denom = 1.0 - h * (1.0 - e)
    psi = u * e / denom
    ipsi = -(2.0 / (sigma * sigma)) * np.log(denom)
    return ipsi, psi


def _branch_double_root(kappa, sigma, g, u, tau):
    """D ~ 0: double root pbar = kappa / sigma^2."""
    pbar = kappa / (sigma * sigma)
    w = u - pbar
    denom = 1.0 - 0.5 * sigma * sigma * w * tau
    psi = pbar + w / denom
    ipsi = pbar * tau - (2.0 / (sigma * sigma)) * np.log(denom)
    return ipsi, psi


def _branch_general(kappa, sigma, g, u, tau):
    """Generic two-root closed form in the numerically stable e^{-D tau} form."""
    disc = kappa * kappa - 2.0 * sigma * sigma * g
    if isinstance(disc, complex) or disc < 0:
        D = np.sqrt(complex(disc))
    else:
        D = math.sqrt(disc)
    p_p = (kappa + D) / (sigma * sigma)
    p_m = (kappa - D) / (sigma * sigma)
    e = np.exp(-D * tau)
    w = (u - p_m) * e - (u - p_p)
    w0 = p_p - p_m  # = W(0) = 2 D / sigma^2
    psi = (p_p * (u - p_m) * e - p_m * (u - p_p)) / w
    ipsi = p_m * tau - (2.0 / (sigma * sigma)) * np.log(w / w0)
    return ipsi, psi


def _phi_psi_one(kappa, sigma, g, u, tau):
    """Per-factor (integral of psi, psi) at horizons tau (scalar or array)."""
    if abs(sigma) < SIGMA_EPS:
        return _branch_linear(kappa, sigma, g, u, tau)
    if abs(g) < G_EPS:
        return _branch_bernoulli(kappa, sigma, g, u, tau)
    disc = kappa * kappa - 2.0 * sigma * sigma * g
    if abs(disc) < _DISC_EPS * kappa * kappa:
        return _branch_double_root(kappa, sigma, g, u, tau)
    return _branch_general(kappa, sigma, g, u, tau)


def explosion_time(kappa: float, sigma: float, g: float, u: float) -> float:
    """First time the closed-form denominator crosses zero (inf if never).

    Only meaningful for real inputs; complex loadings are guarded by a
    sampled denominator-magnitude check instead.
    """
    if abs(sigma) < SIGMA_EPS:
        return math.inf
    s2 = sigma * sigma
    if abs(g) < G_EPS:
        p_p = 2.0 * kappa / s2
        if u <= p_p:
            return math.inf
        h = 0.5 * s2 * u / kappa
        # denom 1 - h (1 - e^{-kt}) hits zero at:
        return -math.log(1.0 - 1.0 / h) / kappa
    disc = kappa * kappa - 2.0 * s2 * g
    if abs(disc) < _DISC_EPS * kappa * kappa:
        pbar = kappa / s2
        if u <= pbar:
            return math.inf
        return 2.0 / (s2 * (u - pbar))
    if disc > 0:
        D = math.sqrt(disc)
        p_p = (kappa + D) / s2
        p_m = (kappa - D) / s2
        if u <= p_p:
            return math.inf
        return -math.log((u - p_p) / (u - p_m)) / D
    # complex roots: psi' >= omega^2/(2 sigma^2) > 0, always explodes
    omega = math.sqrt(-disc)
    return (2.0 / omega) * (0.5 * math.pi - math.atan((u * s2 - kappa) / omega))


def _check_real_domain(factors: FactorSet, tau, u, g):
    tmax = float(np.max(tau))
    for i, f in enumerate(factors):
        t_star = explosion_time(f.kappa, f.sigma, float(g[i]), float(u[i]))
        if tmax >= t_star:
            raise ExplosionError(
                f"transform leaves maximal domain at t={t_star:.6g} <= {tmax:.6g}"
                f" (factor {i})",
                explosion_time=t_star,
            )


def _check_complex_domain(factors: FactorSet, tau, u, g, n_grid: int = 64):
    """Denominator-magnitude check on a time grid for complex loadings."""
    tmax = float(np.max(np.real(tau)))
    ts = np.linspace(0.0, tmax, n_grid)
    for i, f in enumerate(factors):
        if abs(f.sigma) < SIGMA_EPS:
            continue
        s2 = f.sigma**2
        gi, ui = complex(g[i]), complex(u[i])
        if abs(gi) < G_EPS:
            denom = 1.0 - 0.5 * s2 * ui / f.kappa * (1.0 - np.exp(-f.kappa * ts))
            scale = 1.0
        else:
            D = np.sqrt(complex(f.kappa**2 - 2.0 * s2 * gi))
            p_p, p_m = (f.kappa + D) / s2, (f.kappa - D) / s2
            denom = (ui - p_m) * np.exp(-D * ts) - (ui - p_p)
            scale = abs(p_p - p_m)
        if np.min(np.abs(denom)) < 1e-10 * max(scale, 1.0):
            raise ExplosionError(
                f"complex transform denominator vanishes on [0, {tmax:.6g}]"
                f" (factor {i})"
            )


def riccati_transform(
    factors: FactorSet, tau, u, v: float, gamma
) -> TransformCoeffs:
    """Closed-form (phi, psi) for the extended transform at horizon ``tau``.

    ``psi`` starts at the terminal loading ``u``; ``v*gamma`` is the running
    integral loading.  ``tau`` may be a scalar or an array of horizons (all
    checked against the maximal domain), in which case ``phi`` has the same
    shape and ``psi`` gains a leading factor axis.

    Raises :class:`ExplosionError` if the transform leaves its maximal domain
    on ``[0, max(tau)]`` and :class:`DimensionError` on length mismatches.
    """
    u = factors.check_dim(u, "u")
    gamma = factors.check_dim(gamma, "gamma")
    tau_arr = np.asarray(tau, dtype=float)
    if np.any(tau_arr < 0):
        raise ValueError("tau must be nonnegative")
    g = v * gamma

    is_complex = np.iscomplexobj(u) or np.iscomplexobj(g)
    if is_complex:
        _check_complex_domain(factors, tau_arr, u, g)
    else:
        u = u.astype(float)
        g = np.asarray(g, dtype=float)
        _check_real_domain(factors, tau_arr, u, g)

    # accumulate in complex: real inputs with oscillatory roots (disc < 0)
    # pass through complex arithmetic with cancelling imaginary parts
    phi = np.zeros(tau_arr.shape, dtype=complex)
    psi = np.zeros((len(factors),) + tau_arr.shape, dtype=complex)
    for i, f in enumerate(factors):
        ipsi, psi_i = _phi_psi_one(f.kappa, f.sigma, g[i], u[i], tau_arr)
        phi = phi + f.kappa * f.theta * np.asarray(ipsi)
        psi[i] = psi_i
    if not is_complex:
        phi, psi = np.real(phi), np.real(psi)
    if tau_arr.ndim == 0:
        return TransformCoeffs(phi=complex(phi) if is_complex else float(phi), psi=psi)
    return TransformCoeffs(phi=phi, psi=psi)


def extended_expectation(factors: FactorSet, x0, tau, gamma, u) -> float:
    """E[exp(int_0^tau <gamma, X> ds + <u, X(tau)>)] given X(0) = x0.

    ``tau`` may be an array of horizons, giving one expectation per entry.
    """
    x0 = factors.check_dim(x0, "x0")
    coeffs = riccati_transform(factors, tau, u, 1.0, gamma)
    expo = coeffs.phi + np.tensordot(x0, coeffs.psi, axes=(0, 0))
    out = np.exp(expo)
    return float(out) if np.ndim(out) == 0 else out


# ---------------------------------------------------------------------------
# adaptive RK4 reference integrator (oracle and fallback)
# ---------------------------------------------------------------------------


def riccati_transform_numeric(
    factors: FactorSet, tau: float, u, v: float, gamma, tol: float = 1e-12
) -> TransformCoeffs:
    """Same contract as :func:`riccati_transform`, by adaptive RK4.

    Step-doubling error control at relative tolerance ``tol``.  Used in tests
    and as a fallback path; raises :class:`StepFailure` when the step size
    underflows, which is the numeric proxy for leaving the maximal domain.
    """
    u = factors.check_dim(u, "u").astype(float)
    gamma = factors.check_dim(gamma, "gamma").astype(float)
    tau = float(tau)
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    if tau == 0.0:
        return TransformCoeffs(phi=0.0, psi=u.copy())

    kappa, theta, sigma = factors.kappa, factors.theta, factors.sigma
    g = v * gamma

    def rhs(state):
        psi = state[:-1]
        dpsi = g - kappa * psi + 0.5 * sigma * sigma * psi * psi
        dphi = float(np.dot(kappa * theta, psi))
        return np.concatenate([dpsi, [dphi]])

    def rk4_step(state, h):
        k1 = rhs(state)
        k2 = rhs(state + 0.5 * h * k1)
        k3 = rhs(state + 0.5 * h * k2)
        k4 = rhs(state + h * k3)
        return state + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)

    state = np.concatenate([u, [0.0]])
    t = 0.0
    h = tau / 16.0
    h_min = max(tau, 1.0) * 1e-14
    while t < tau:
        h = min(h, tau - t)
        if h < h_min:
            raise StepFailure(f"step size underflow at t={t:.6g} (h={h:.3g})")
        full = rk4_step(state, h)
        half = rk4_step(rk4_step(state, 0.5 * h), 0.5 * h)
        # small floor: market-scale loadings give |phi|, |psi| ~ 1e-4 and the
        # closed form is compared against this oracle in *relative* terms
        scale = np.maximum(np.abs(half), 1e-3)
        err = float(np.max(np.abs(full - half) / scale)) / 15.0
        if not np.isfinite(err):
            h *= 0.25
            continue
        if err <= tol:
            # local extrapolation: half-step solution is 5th-order accurate
            state = half
            t += h
            growth = 5.0 if err == 0.0 else 0.9 * (tol / err) ** 0.2
            h *= min(5.0, max(0.2, growth))
        else:
            h *= max(0.2, 0.9 * (tol / err) ** 0.2)
    return TransformCoeffs(phi=float(state[-1]), psi=state[:-1])
