"""Piecewise-constant deterministic shift functions.

The deterministic parts of the short rate, the credit intensity and the
funding-liquidity spread are piecewise-constant functions of time.  They are
bootstrapped one maturity bucket at a time, so integration must be exact
(sums of interval lengths times interval values), never quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class PiecewiseShift:
    """Right-continuous step function on [0, inf).

    ``values[k]`` applies on ``[breaks[k], breaks[k+1])``; the last value
    extends flat beyond the final break.  ``breaks[0]`` must be 0 so the
    function covers the whole pricing domain.  Evaluation at a break uses the
    interval starting there (left-closed convention).
    """

    breaks: np.ndarray
    values: np.ndarray

    def __init__(self, breaks, values):
        breaks = np.atleast_1d(np.asarray(breaks, dtype=float))
        values = np.atleast_1d(np.asarray(values, dtype=float))
        if breaks.ndim != 1 or values.ndim != 1:
            raise ValueError("breaks and values must be one-dimensional")
        if len(breaks) != len(values):
            raise ValueError("need one value per interval start")
        if len(breaks) == 0:
            raise ValueError("need at least one interval")
        if breaks[0] != 0.0:
            raise ValueError("first break must be 0")
        if np.any(np.diff(breaks) <= 0):
            raise ValueError("breaks must be strictly increasing")
        object.__setattr__(self, "breaks", breaks)
        object.__setattr__(self, "values", values)
        # cumulative integral from 0 to each break, for exact O(log n) lookups
        seg = np.diff(breaks) * values[:-1]
        object.__setattr__(self, "_cum", np.concatenate(([0.0], np.cumsum(seg))))

    _cum: np.ndarray = field(init=False, repr=False, compare=False)

    @classmethod
    def constant(cls, value: float) -> "PiecewiseShift":
        return cls([0.0], [value])

    @classmethod
    def zero(cls) -> "PiecewiseShift":
        return cls.constant(0.0)

    @property
    def is_constant(self) -> bool:
        return len(self.values) == 1 or bool(np.all(self.values == self.values[0]))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if np.any(t < 0):
            raise ValueError("shift evaluated at negative time")
        idx = np.searchsorted(self.breaks, t, side="right") - 1
        out = self.values[idx]
        return float(out) if out.ndim == 0 else out

    def integral(self, s, t):
        """Exact integral of the step function over [s, t] (t may be an array)."""
        t = np.asarray(t, dtype=float)
        if np.any(t < s) or s < 0:
            raise ValueError("integration bounds must satisfy 0 <= s <= t")
        out = self._antiderivative(t) - self._antiderivative(np.asarray(s, dtype=float))
        return float(out) if out.ndim == 0 else out

    def _antiderivative(self, t: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.breaks, t, side="right") - 1
        return self._cum[idx] + (t - self.breaks[idx]) * self.values[idx]

    def with_value(self, interval: int, value: float) -> "PiecewiseShift":
        """Copy of the shift with one interval's level replaced."""
        values = self.values.copy()
        values[interval] = value
        return PiecewiseShift(self.breaks, values)

    def plus(self, other: "PiecewiseShift") -> "PiecewiseShift":
        """Pointwise sum on the union break grid."""
        breaks = np.union1d(self.breaks, other.breaks)
        return PiecewiseShift(breaks, self(breaks) + other(breaks))

    def scaled(self, factor: float) -> "PiecewiseShift":
        return PiecewiseShift(self.breaks, factor * self.values)

    def shifted(self, offset: float) -> "PiecewiseShift":
        return PiecewiseShift(self.breaks, self.values + offset)


def mean_shift(shifts: list[PiecewiseShift]) -> PiecewiseShift:
    """Pointwise arithmetic mean on the union knot grid."""
    if not shifts:
        raise ValueError("mean of zero shifts")
    breaks = shifts[0].breaks
    for sh in shifts[1:]:
        breaks = np.union1d(breaks, sh.breaks)
    stacked = np.vstack([sh(breaks) for sh in shifts])
    return PiecewiseShift(breaks, stacked.mean(axis=0))
