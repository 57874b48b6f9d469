"""Par rates, PV residuals and prices for the supported instrument set.

Covers overnight-indexed swaps, vanilla fixed-for-floating swaps, tenor basis
swaps, multi-period implied term rates, zero-recovery bonds, survival
discounts and credit default swaps.  Caplet pricing lives in
:mod:`multitenor.caplet`.

Conventions: time is measured in years from the valuation date, payment
grids are equally spaced (delta in {1/12, 1/4, 1/2, 1}), and the quoted
basis spread always accrues on the shorter-tenor leg of the pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConventionError,
    DegenerateAnnuity,
    DomainError,
    MeshError,
    NegativeGrowth,
)
from .model import (
    ModelSpec,
    libor_leg_pv,
    ois_discount,
    risky_discount,
    rollover_forward_term,
    transform_value,
)
from .shifts import PiecewiseShift

FREQUENCY_DELTAS = {"1m": 1.0 / 12.0, "3m": 0.25, "6m": 0.5, "12m": 1.0}


@dataclass(frozen=True)
class TenorStructure:
    """Equally spaced payment schedule from ``start`` to the final maturity."""

    start: float
    payment_dates: np.ndarray
    frequency: str

    def __init__(self, start: float, payment_dates, frequency: str):
        dates = np.asarray(payment_dates, dtype=float)
        if frequency not in FREQUENCY_DELTAS:
            raise ValueError(f"unknown frequency label {frequency!r}")
        if len(dates) == 0:
            raise ValueError("empty payment schedule")
        delta = FREQUENCY_DELTAS[frequency]
        grid = np.concatenate(([start], dates))
        if np.any(np.abs(np.diff(grid) - delta) > 1e-9):
            raise ValueError(f"payment dates are not equally spaced at {frequency}")
        object.__setattr__(self, "start", float(start))
        object.__setattr__(self, "payment_dates", dates)
        object.__setattr__(self, "frequency", frequency)

    @classmethod
    def regular(cls, start: float, maturity: float, frequency: str) -> "TenorStructure":
        delta = FREQUENCY_DELTAS[frequency]
        n = round((maturity - start) / delta)
        if n < 1 or abs(start + n * delta - maturity) > 1e-9:
            raise ValueError(
                f"maturity {maturity} is not a whole number of {frequency} periods"
            )
        dates = start + delta * np.arange(1, n + 1)
        dates[-1] = maturity
        return cls(start, dates, frequency)

    @property
    def delta(self) -> float:
        return FREQUENCY_DELTAS[self.frequency]

    @property
    def maturity(self) -> float:
        return float(self.payment_dates[-1])

    def accrual_periods(self):
        """(T_{j-1}, T_j) pairs."""
        grid = np.concatenate(([self.start], self.payment_dates))
        return list(zip(grid[:-1], grid[1:]))


# ---------------------------------------------------------------------------
# overnight-indexed swaps
# ---------------------------------------------------------------------------


def ois_discount_from_rate(rate: float, delta: float) -> float:
    """Single-period par quote inversion: D = 1 / (1 + delta * rate)."""
    return 1.0 / (1.0 + delta * rate)


def ois_par_rate(model: ModelSpec, t: float, T: float, state=None) -> float:
    """Single-period par rate (1 - D) / (delta * D) with delta = T - t."""
    if T <= t:
        raise DomainError("ois_par_rate requires T > t")
    D = ois_discount(model, t, T, state)
    return (1.0 - D) / ((T - t) * D)


def ois_par_rate_multi(
    model: ModelSpec, t: float, dates: TenorStructure, state=None
) -> float:
    """Multi-period par rate (1 - D(t,T_n)) / sum_j delta_j D(t,T_j)."""
    D = ois_discount(model, t, dates.payment_dates, state)
    D = np.atleast_1d(D)
    deltas = np.diff(np.concatenate(([dates.start], dates.payment_dates)))
    annuity = float(np.dot(deltas, D))
    return (1.0 - float(D[-1])) / annuity


def ois_annuity(model: ModelSpec, t: float, dates: TenorStructure, state=None) -> float:
    """sum_j delta_j D(t, T_j) over the payment schedule."""
    D = np.atleast_1d(ois_discount(model, t, dates.payment_dates, state))
    deltas = np.diff(np.concatenate(([dates.start], dates.payment_dates)))
    return float(np.dot(deltas, D))


# ---------------------------------------------------------------------------
# vanilla and basis swaps
# ---------------------------------------------------------------------------


def floating_leg_pv(model: ModelSpec, t: float, dates: TenorStructure, state=None) -> float:
    """sum_j E_t[exp(-int r_c) * delta_j * L(T_{j-1}, T_j)]."""
    return float(
        sum(
            libor_leg_pv(model, t, T_prev, T_next, state)
            for T_prev, T_next in dates.accrual_periods()
        )
    )


def vanilla_par_rate(
    model: ModelSpec,
    float_tenor: TenorStructure,
    fixed_tenor: TenorStructure,
    t: float = 0.0,
    state=None,
) -> float:
    """Fixed rate nulling the swap value: floating PV / fixed annuity."""
    return floating_leg_pv(model, t, float_tenor, state) / ois_annuity(
        model, t, fixed_tenor, state
    )


def vanilla_swap_residual(
    model: ModelSpec,
    float_tenor: TenorStructure,
    fixed_tenor: TenorStructure,
    fixed_rate: float,
    t: float = 0.0,
    state=None,
) -> float:
    """Floating leg PV minus fixed annuity at ``fixed_rate`` (zero at par)."""
    if abs(float_tenor.maturity - fixed_tenor.maturity) > 1e-9 or abs(
        float_tenor.start - fixed_tenor.start
    ) > 1e-9:
        raise DomainError("float and fixed legs must share start and maturity")
    return floating_leg_pv(model, t, float_tenor, state) - fixed_rate * ois_annuity(
        model, t, fixed_tenor, state
    )


def par_basis_spread(
    model: ModelSpec,
    short_tenor: TenorStructure,
    long_tenor: TenorStructure,
    t: float = 0.0,
    state=None,
) -> float:
    """Par spread on the shorter-tenor leg of a floating-for-floating swap.

    short leg + spread annuity = long leg at par, so
    b = (PV_long - PV_short) / annuity_short.  This makes spreads exactly
    additive across tenor chains when weighted by the short-leg annuities.
    """
    if short_tenor.delta >= long_tenor.delta:
        raise ConventionError("short_tenor must have the higher payment frequency")
    if abs(short_tenor.maturity - long_tenor.maturity) > 1e-9:
        raise ConventionError("basis legs must be co-terminal")
    pv_short = floating_leg_pv(model, t, short_tenor, state)
    pv_long = floating_leg_pv(model, t, long_tenor, state)
    return (pv_long - pv_short) / ois_annuity(model, t, short_tenor, state)


def basis_swap_residual(
    model: ModelSpec,
    float_tenor: TenorStructure,
    fixed_equivalent: tuple[TenorStructure, float],
    spread: float,
    spread_side: str,
    spread_tenor: TenorStructure | None = None,
    t: float = 0.0,
    state=None,
) -> float:
    """Residual of a basis-swap condition against a fixed-equivalent leg.

    The quoted pair's shorter tenor always carries the spread annuity:

    * ``spread_side="shorter"``: the model's floating leg *is* the shorter
      tenor; the spread annuity is subtracted from the fixed-equivalent side
      (equivalently added to the model leg here).
    * ``spread_side="longer"``: the model floats the longer tenor and the
      spread accrues on the reference shorter leg, passed as
      ``spread_tenor``; the annuity is added to the fixed-equivalent side.
    """
    fixed_tenor, fixed_rate = fixed_equivalent
    if spread_side == "shorter":
        if spread_tenor is not None and spread_tenor is not float_tenor:
            if not np.array_equal(spread_tenor.payment_dates, float_tenor.payment_dates):
                raise ConventionError(
                    "spread accrues on the shorter tenor, which is the floating leg"
                )
        spread_tenor = float_tenor
    elif spread_side == "longer":
        if spread_tenor is None:
            raise ConventionError("spread_side='longer' needs the shorter-leg schedule")
        if spread_tenor.delta >= float_tenor.delta:
            raise ConventionError(
                "spread tenor must be strictly shorter than the floating leg"
            )
    else:
        raise ConventionError(f"unknown spread_side {spread_side!r}")

    market_side = fixed_rate * ois_annuity(model, t, fixed_tenor, state)
    spread_annuity = spread * ois_annuity(model, t, spread_tenor, state)
    if spread_side == "shorter":
        market_side -= spread_annuity
    else:
        market_side += spread_annuity
    return floating_leg_pv(model, t, float_tenor, state) - market_side


# ---------------------------------------------------------------------------
# implied term rates beyond the deposit maturities
# ---------------------------------------------------------------------------


def implied_term_libor(
    model: ModelSpec, t: float, dates: TenorStructure, state=None
) -> float:
    """Term rate implied by rolling short funding against term lending.

    For whole-year maturities the rate is annually compounded:
        (1 + L)^m = [sum_j roll_j - sum_{j<n} risky_j] / risky_n
    with roll_j the rollover forward term over accrual j.  Maturities under
    one year fall back to the simple-compounded spot rate.
    """
    m = dates.maturity - t
    if m < 1.0 - 1e-9:
        from .model import spot_libor

        return spot_libor(model, t, dates.maturity, state)
    if abs(m - round(m)) > 1e-9:
        raise DomainError("annually compounded term rate needs whole-year maturity")
    m = round(m)
    periods = dates.accrual_periods()
    roll_sum = sum(
        rollover_forward_term(model, t, T_prev, T_next, state)
        for T_prev, T_next in periods
    )
    interior = dates.payment_dates[:-1]
    risky_interior = (
        float(np.sum(np.atleast_1d(risky_discount(model, t, interior, state))))
        if len(interior)
        else 0.0
    )
    numerator = roll_sum - risky_interior
    if numerator <= 0.0:
        raise NegativeGrowth("implied term growth factor is non-positive")
    growth = numerator / risky_discount(model, t, dates.maturity, state)
    return growth ** (1.0 / m) - 1.0


# ---------------------------------------------------------------------------
# credit: survival discounts, zero-recovery bonds, CDS
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BankCredit:
    """Idiosyncratic default-intensity coefficients for one panel bank.

    intensity(t) = shift(t) + <loading, X(t)>; the level includes the
    systemic component, so it must stay nonnegative on the fitted domain
    (checked at the knots with X = y0).
    """

    shift: PiecewiseShift
    loading: np.ndarray

    def __init__(self, shift: PiecewiseShift, loading):
        object.__setattr__(self, "shift", shift)
        object.__setattr__(
            self, "loading", np.atleast_1d(np.asarray(loading, dtype=float))
        )

    def intensity(self, t, y) -> float:
        return self.shift(t) + float(np.dot(self.loading, y))

    @classmethod
    def zero(cls, dim: int) -> "BankCredit":
        return cls(PiecewiseShift.zero(), np.zeros(dim))


@dataclass(frozen=True)
class CdsSpec:
    """Premium schedule, recovery and contract spread of one CDS."""

    premium_dates: TenorStructure
    recovery: float
    spread: float
    mesh_step: float = 1.0 / 120.0

    def __post_init__(self):
        if not (0.0 <= self.recovery < 1.0):
            raise ValueError("recovery must be in [0, 1)")
        ratio = self.premium_dates.delta / self.mesh_step
        if abs(ratio - round(ratio)) > 1e-9:
            raise MeshError("mesh_step must divide the premium accrual period")

    @classmethod
    def quarterly(
        cls, maturity: float, recovery: float, spread: float, mesh_step: float = 1.0 / 120.0
    ) -> "CdsSpec":
        return cls(
            TenorStructure.regular(0.0, maturity, "3m"), recovery, spread, mesh_step
        )


def survival_discount(model: ModelSpec, bank: BankCredit, t: float, T, state=None):
    """Joint expectation E_t[exp(-int (r_c + intensity))].

    Single risk-neutral expectation combining collateral discounting and
    survival of the bank; no forward-measure change is performed.  ``T`` may
    be an array of maturities.
    """
    T_arr = np.asarray(T, dtype=float)
    if np.any(T_arr < t):
        raise DomainError("survival_discount requires T >= t")
    gamma = -(model.proj_rc.loading + bank.loading)
    shift = model.proj_rc.shift.plus(bank.shift)
    return transform_value(model, T_arr - t, gamma, -shift.integral(t, T_arr), state)


def zero_recovery_bond(
    model: ModelSpec, bank: BankCredit, t: float, T: float, state=None
) -> float:
    """Zero-recovery bond E_t[exp(-int (r_c - q*Lambda + intensity))].

    The riskless rate is the collateral rate minus the systemic credit
    spread, so the bond is the survival discount times exp(q*Lambda*(T-t)).
    """
    adj = np.exp(model.q * model.Lambda * (np.asarray(T, dtype=float) - t))
    out = survival_discount(model, bank, t, T, state) * adj
    return float(out) if np.ndim(out) == 0 else out


def _cds_mesh(spec: CdsSpec) -> np.ndarray:
    dates = spec.premium_dates
    n = round((dates.maturity - dates.start) / spec.mesh_step)
    mesh = dates.start + spec.mesh_step * np.arange(n + 1)
    mesh[-1] = dates.maturity
    # premium dates must sit on the mesh for the accrued-interest bucketing
    on_mesh = np.isclose(
        dates.payment_dates[:, None], mesh[None, :], atol=1e-9
    ).any(axis=1)
    if not on_mesh.all():
        raise MeshError("premium dates do not align with the default-leg mesh")
    return mesh


def cds_legs(
    model: ModelSpec,
    bank: BankCredit,
    spec: CdsSpec,
    t: float = 0.0,
    state=None,
    accrual_rule: str = "midpoint",
) -> tuple[float, float, float]:
    """(protection, premium annuity, accrued-on-default weight).

    The default time is bucketed on the mesh {t_p}: incremental default
    probability mass carries value S(t, t_p) - S(t, t_{p+1}) where S is the
    joint survival discount.  The accrued coupon uses the bucket midpoint by
    default (halves the discretisation bias); ``accrual_rule="left"`` keeps
    the left endpoint for literal comparison with coarser conventions.

    The contract value is (1-R)*protection - C*(annuity + accrued_weight).
    """
    if accrual_rule not in ("midpoint", "left"):
        raise ValueError("accrual_rule must be 'midpoint' or 'left'")
    dates = spec.premium_dates
    if t > dates.start + 1e-12:
        raise DomainError("valuation after the first premium period has begun")
    mesh = _cds_mesh(spec)
    S = np.atleast_1d(survival_discount(model, bank, t, mesh, state))
    dS = S[:-1] - S[1:]  # default-mass value in each mesh bucket

    protection = float(np.sum(dS))

    deltas = np.diff(np.concatenate(([dates.start], dates.payment_dates)))
    S_pay = np.atleast_1d(survival_discount(model, bank, t, dates.payment_dates, state))
    annuity = float(np.dot(deltas, S_pay))

    # accrued coupon from the period start to the default bucket
    period_start = np.concatenate(([dates.start], dates.payment_dates))[:-1]
    bucket_left = mesh[:-1]
    idx = np.searchsorted(dates.payment_dates, bucket_left, side="right")
    if accrual_rule == "midpoint":
        ref = 0.5 * (mesh[:-1] + mesh[1:])
    else:
        ref = bucket_left
    accrued_weight = float(np.sum((ref - period_start[idx]) * dS))
    return protection, annuity, accrued_weight


def cds_value(
    model: ModelSpec,
    bank: BankCredit,
    spec: CdsSpec,
    t: float = 0.0,
    state=None,
    accrual_rule: str = "midpoint",
) -> float:
    """Contract value to the protection buyer (positive = buyer gains)."""
    protection, annuity, accrued = cds_legs(model, bank, spec, t, state, accrual_rule)
    return (1.0 - spec.recovery) * protection - spec.spread * (annuity + accrued)


def cds_par_spread(
    model: ModelSpec,
    bank: BankCredit,
    dates: TenorStructure,
    recovery: float,
    t: float = 0.0,
    mesh_step: float = 1.0 / 120.0,
    state=None,
    accrual_rule: str = "midpoint",
) -> float:
    """Spread nulling the contract value; the value is affine in the spread."""
    spec = CdsSpec(dates, recovery, 0.0, mesh_step)
    protection, annuity, accrued = cds_legs(model, bank, spec, t, state, accrual_rule)
    denom = annuity + accrued
    if denom <= 0.0:
        raise DegenerateAnnuity("premium annuity is non-positive")
    return (1.0 - recovery) * protection / denom
