"""Compactly supported cutoff profiles.

Two fixed C^infty profiles are used throughout:

* ``bump`` -- the analytic bump exp(1 - 1/(1 - (x/eps)^2)) on |x| < eps,
  zero outside.  This is the profile behind microlocalization cutoffs and
  small-scale symbols; it equals 1 only at the center.
* ``plateau`` -- identically 1 on |x| <= eps/2, zero for |x| >= eps, glued
  by the standard exp(-1/t) step.  Tube cutoffs must be 1 on the half tube,
  so they use this profile.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_EPS = 0.25


def bump(x, eps: float = DEFAULT_EPS):
    """Fixed analytic bump, supported on (-eps, eps), equal to 1 at 0."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    u = x / eps
    inside = np.abs(u) < 1.0
    ui = u[inside]
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - ui * ui))
    return out if out.ndim else float(out)


def _smooth_step(t):
    # C^infty monotone step: 0 for t<=0, 1 for t>=1.
    t = np.clip(t, 0.0, 1.0)
    with np.errstate(divide="ignore", over="ignore"):
        f = np.where(t > 0.0, np.exp(-1.0 / np.maximum(t, 1e-300)), 0.0)
        g = np.where(t < 1.0, np.exp(-1.0 / np.maximum(1.0 - t, 1e-300)), 0.0)
    return f / (f + g)


def plateau(x, eps: float = DEFAULT_EPS):
    """C^infty cutoff equal to 1 on |x| <= eps/2 and 0 for |x| >= eps."""
    x = np.asarray(x, dtype=float)
    t = (eps - np.abs(x)) / (0.5 * eps)  # 0 at |x|=eps, 2 at center
    out = _smooth_step(t)
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class Cutoff:
    """A scaled cutoff chi(h^{-delta} (x - center)) built on a fixed profile.

    delta must satisfy 0 <= delta < 1/2; delta = 0 gives a plain
    h-independent bump.  ``profile`` is 'bump' or 'plateau'.
    """

    delta: float = 0.0
    center: np.ndarray = field(default_factory=lambda: np.zeros(1))
    epsilon: float = DEFAULT_EPS
    profile: str = "bump"

    def __post_init__(self):
        if not 0.0 <= self.delta < 0.5:
            raise ValueError(f"delta must lie in [0, 1/2), got {self.delta}")
        if self.epsilon <= 0.0:
            raise ValueError("epsilon must be positive")
        if self.profile not in ("bump", "plateau"):
            raise ValueError(f"unknown profile {self.profile!r}")
        object.__setattr__(self, "center", np.atleast_1d(np.asarray(self.center, dtype=float)))

    def scale(self, hbar: float) -> float:
        """Length scale h^delta of the cutoff support (times epsilon)."""
        return float(hbar**self.delta)

    def __call__(self, x, hbar: float, axis: int = 0):
        """Evaluate the cutoff along one axis at points x."""
        prof = bump if self.profile == "bump" else plateau
        s = self.scale(hbar)
        return prof((np.asarray(x, dtype=float) - self.center[axis]) / s, self.epsilon)
