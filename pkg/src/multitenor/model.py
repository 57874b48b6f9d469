"""Model assembly and the core discounting / term-rate expectations.

Three instantaneous quantities are affine in the factor vector X:

* the collateral (overnight) short rate      r_c(t) = a0(t) + <a, X(t)>
* the average credit (renewal) spread        lam(t) = b0(t) + <b, X(t)>
* the funding-liquidity spread               phi(t) = c0(t) + <c, X(t)>

A term deposit rate for accrual [t, T] quoted in this market compensates the
lender for roll-over risk, which gives the ratio representation

    L(t, T) = (1/delta) * ( E_t[exp(int phi)] / E_t[exp(-int (r_c + q*lam))] - 1 ).

Every expectation below is an exponential-affine transform evaluated through
:mod:`multitenor.affine`; deterministic shifts factor out as exact integrals
of piecewise-constant functions.

Spot evaluation fixes X(t) = y0 (the cross-sectional calibration snapshot);
forward evaluation at a future state takes an explicit ``state`` argument.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, replace

import numpy as np

from .affine import FactorSet, riccati_transform
from .errors import DomainError
from .shifts import PiecewiseShift


@dataclass(frozen=True)
class SpreadProjection:
    """Deterministic shift plus a constant loading on the factor vector."""

    shift: PiecewiseShift
    loading: np.ndarray

    def __init__(self, shift: PiecewiseShift, loading):
        object.__setattr__(self, "shift", shift)
        object.__setattr__(
            self, "loading", np.atleast_1d(np.asarray(loading, dtype=float))
        )

    @classmethod
    def zero(cls, dim: int) -> "SpreadProjection":
        return cls(PiecewiseShift.zero(), np.zeros(dim))

    def value(self, t, state) -> float:
        """Instantaneous level shift(t) + <loading, state>."""
        return self.shift(t) + float(np.dot(self.loading, state))


@dataclass(frozen=True)
class ModelSpec:
    """Complete model state for one valuation date.

    ``proj_rc``, ``proj_lambda``, ``proj_phi`` hold (a0, a), (b0, b), (c0, c).
    ``q`` is the loss fraction in default and ``Lambda`` the systemic
    intensity level; the credit-adjusted combination d = a + q*b and
    d0 = a0 + q*b0 is always derived from the parts, never stored.
    """

    factors: FactorSet
    proj_rc: SpreadProjection
    proj_lambda: SpreadProjection
    proj_phi: SpreadProjection
    q: float = 0.6
    Lambda: float = 5e-4
    valuation_date: dt.date = dt.date(2013, 1, 1)

    def __post_init__(self):
        if not (0.0 < self.q <= 1.0):
            raise ValueError("q must be in (0, 1]")
        if self.Lambda < 0:
            raise ValueError("Lambda must be nonnegative")
        for name in ("proj_rc", "proj_lambda", "proj_phi"):
            self.factors.check_dim(getattr(self, name).loading, f"{name}.loading")

    @property
    def dim(self) -> int:
        return len(self.factors)

    @property
    def y0(self) -> np.ndarray:
        return self.factors.y0

    def risky_loading(self) -> np.ndarray:
        """d = a + q*b, the loading of r_c + q*lambda."""
        return self.proj_rc.loading + self.q * self.proj_lambda.loading

    def risky_shift(self) -> PiecewiseShift:
        """d0 = a0 + q*b0, the shift of r_c + q*lambda."""
        return self.proj_rc.shift.plus(self.proj_lambda.shift.scaled(self.q))

    def with_projection(self, **kwargs) -> "ModelSpec":
        return replace(self, **kwargs)

    def to_dict(self) -> dict:
        return {
            "factors": [
                {"kappa": f.kappa, "theta": f.theta, "sigma": f.sigma, "y0": f.y0}
                for f in self.factors
            ],
            "proj_rc": _projection_to_dict(self.proj_rc),
            "proj_lambda": _projection_to_dict(self.proj_lambda),
            "proj_phi": _projection_to_dict(self.proj_phi),
            "q": self.q,
            "Lambda": self.Lambda,
            "valuation_date": self.valuation_date.isoformat(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ModelSpec":
        from .affine import CirFactor

        return cls(
            factors=FactorSet(CirFactor(**f) for f in data["factors"]),
            proj_rc=_projection_from_dict(data["proj_rc"]),
            proj_lambda=_projection_from_dict(data["proj_lambda"]),
            proj_phi=_projection_from_dict(data["proj_phi"]),
            q=data["q"],
            Lambda=data["Lambda"],
            valuation_date=dt.date.fromisoformat(data["valuation_date"]),
        )


def _projection_to_dict(proj: SpreadProjection) -> dict:
    return {
        "breaks": proj.shift.breaks.tolist(),
        "values": proj.shift.values.tolist(),
        "loading": proj.loading.tolist(),
    }


def _projection_from_dict(data: dict) -> SpreadProjection:
    return SpreadProjection(
        PiecewiseShift(data["breaks"], data["values"]), data["loading"]
    )


# ---------------------------------------------------------------------------
# transform helpers
# ---------------------------------------------------------------------------


def _state(model: ModelSpec, state) -> np.ndarray:
    if state is None:
        return model.y0
    return model.factors.check_dim(state, "state")


def transform_value(
    model: ModelSpec,
    tau,
    gamma,
    shift_integral,
    state=None,
    u=None,
):
    """exp(shift_integral + phi(tau) + <psi(tau), state>) for loading gamma.

    ``tau`` may be an array of horizons; ``u`` is an optional terminal
    loading (defaults to zero, the plain running-integral transform).
    """
    x = _state(model, state)
    if u is None:
        u = np.zeros(model.dim)
    coeffs = riccati_transform(model.factors, tau, u, 1.0, gamma)
    expo = shift_integral + coeffs.phi + np.tensordot(x, coeffs.psi, axes=(0, 0))
    out = np.exp(expo)
    return float(out) if np.ndim(out) == 0 else out


# ---------------------------------------------------------------------------
# core expectations
# ---------------------------------------------------------------------------


def ois_discount(model: ModelSpec, t: float, T, state=None):
    """Collateral discount factor E_t[exp(-int_t^T r_c)].

    ``T`` may be an array of maturities >= t.
    """
    T_arr = np.asarray(T, dtype=float)
    if np.any(T_arr < t):
        raise DomainError("ois_discount requires T >= t")
    a0, a = model.proj_rc.shift, model.proj_rc.loading
    return transform_value(model, T_arr - t, -a, -a0.integral(t, T_arr), state)


def funding_growth(model: ModelSpec, t: float, T, state=None):
    """E_t[exp(+int_t^T phi)], the roll-over funding premium factor.

    Positive loadings can push this transform outside its maximal domain;
    the resulting ExplosionError is surfaced, never clamped.
    """
    T_arr = np.asarray(T, dtype=float)
    if np.any(T_arr < t):
        raise DomainError("funding_growth requires T >= t")
    c0, c = model.proj_phi.shift, model.proj_phi.loading
    return transform_value(model, T_arr - t, c, c0.integral(t, T_arr), state)


def risky_discount(model: ModelSpec, t: float, T, state=None):
    """E_t[exp(-int_t^T (r_c + q*lambda))], the credit-adjusted discount."""
    T_arr = np.asarray(T, dtype=float)
    if np.any(T_arr < t):
        raise DomainError("risky_discount requires T >= t")
    d0 = model.risky_shift()
    d = model.risky_loading()
    return transform_value(model, T_arr - t, -d, -d0.integral(t, T_arr), state)


def spot_libor(model: ModelSpec, t: float, T: float, state=None) -> float:
    """Simple term rate for accrual [t, T] set at t (delta = T - t > 0)."""
    delta = T - t
    if delta <= 0:
        raise DomainError("spot_libor requires T > t")
    growth = funding_growth(model, t, T, state)
    risky = risky_discount(model, t, T, state)
    return (growth / risky - 1.0) / delta


def libor_discount(model: ModelSpec, t: float, T: float, state=None) -> float:
    """(1 + delta * L)^{-1}, the term-rate implied discount factor."""
    delta = T - t
    return 1.0 / (1.0 + delta * spot_libor(model, t, T, state))


def instantaneous_spread_discount(
    model: ModelSpec, t: float, T: float, state=None
) -> float:
    """E_t[exp(-int (r_c + phi + q*lambda))].

    Diagnostic only: equals ``libor_discount`` when the credit-adjusted rate
    and the funding spread load on disjoint factor supports (independence),
    not in general.
    """
    total = model.risky_loading() + model.proj_phi.loading
    shift = model.risky_shift().plus(model.proj_phi.shift)
    T_arr = np.asarray(T, dtype=float)
    return transform_value(model, T_arr - t, -total, -shift.integral(t, T_arr), state)


def rollover_forward_term(
    model: ModelSpec, t: float, T_prev: float, T_next: float, state=None
) -> float:
    """E_t[exp(-int_t^{T_prev} (r_c + q*lambda)) * exp(+int_{T_prev}^{T_next} phi)].

    Two-layer transform: the inner funding leg over [T_prev, T_next] produces
    a terminal loading for the outer credit-adjusted discounting leg.
    """
    if not (t <= T_prev <= T_next):
        raise DomainError("need t <= T_prev <= T_next")
    c0, c = model.proj_phi.shift, model.proj_phi.loading
    d0 = model.risky_shift()
    d = model.risky_loading()
    inner = riccati_transform(model.factors, T_next - T_prev, np.zeros(model.dim), 1.0, c)
    shift_int = c0.integral(T_prev, T_next) - d0.integral(t, T_prev)
    return transform_value(
        model, T_prev - t, -d, shift_int + inner.phi, state, u=inner.psi
    )


def libor_leg_pv(
    model: ModelSpec, t: float, T_prev: float, T_next: float, state=None
) -> float:
    """E_t[exp(-int_t^{T_next} r_c) * delta * L(T_prev, T_next)].

    The discounted value at t of one floating accrual delta = T_next - T_prev
    fixing at T_prev.  Two composed transforms: the constant term of the rate
    carries the inner discount loading, the exchanged-exponent term carries
    the combined funding / credit-adjusted loading.
    """
    if not (t <= T_prev < T_next):
        raise DomainError("need t <= T_prev < T_next")
    delta = T_next - T_prev
    a0, a = model.proj_rc.shift, model.proj_rc.loading
    c0, c = model.proj_phi.shift, model.proj_phi.loading
    d0 = model.risky_shift()
    d = model.risky_loading()
    zero = np.zeros(model.dim)

    inner_a = riccati_transform(model.factors, delta, zero, 1.0, -a)
    inner_c = riccati_transform(model.factors, delta, zero, 1.0, c)
    inner_d = riccati_transform(model.factors, delta, zero, 1.0, -d)

    base_shift = -a0.integral(t, T_next)
    # constant term: discounting alone, nested through T_prev
    term1 = transform_value(
        model, T_prev - t, -a, base_shift + inner_a.phi, state, u=inner_a.psi
    )
    # exchanged-exponent term: growth/credit ratio appears inside the accrual
    u2 = inner_a.psi + inner_c.psi - inner_d.psi
    # accrual-interval shifts: c0 + (a0 + q*b0), i.e. the rate's growth and
    # credit-adjusted shift parts both live on [T_prev, T_next] only
    shift2 = base_shift + c0.integral(T_prev, T_next) + d0.integral(T_prev, T_next)
    phi2 = inner_a.phi + inner_c.phi - inner_d.phi
    term2 = transform_value(model, T_prev - t, -a, shift2 + phi2, state, u=u2)
    return term2 - term1
