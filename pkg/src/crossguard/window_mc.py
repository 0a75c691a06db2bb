"""Monte Carlo estimation of window confirmation reliability.

The trial loop is the one hot path in the package (hundreds of
thousands of Bernoulli draws per profile when validating the
calibration tables), so it exists twice: a compiled Cython kernel and
a pure-Python fallback with bit-identical semantics.  The backend is
chosen once at import; results never depend on which one is active.
``benchmarks/bench_window_mc.py`` compares the two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .confirmation import WindowConfig, window_detection_probability
from .errors import ValidationError

try:
    from ._window_mc_cy import count_confirmed_windows as _kernel
    BACKEND = "compiled"
except ImportError:
    from ._window_mc_py import count_confirmed_windows as _kernel
    BACKEND = "pure-python"

_MASK64 = (1 << 64) - 1


def count_confirmed_windows(p: float, n: int, k: int, trials: int,
                            seed: int) -> int:
    """Simulate ``trials`` independent n-frame windows with per-frame
    hit probability ``p``; count how many confirm (>= k hits)."""
    if not 0.0 <= p <= 1.0:
        raise ValidationError("must be within [0, 1]", field="p")
    if not 1 <= k <= n:
        raise ValidationError("must satisfy 1 <= k <= n", field="k")
    if trials < 1:
        raise ValidationError("must be >= 1", field="trials")
    return int(_kernel(p, n, k, trials, seed & _MASK64))


@dataclass(frozen=True)
class WindowEstimate:
    """Monte Carlo windowed-detection estimate with its closed-form twin."""

    trials: int
    confirmed: int
    estimate: float
    closed_form: float
    std_error: float  # of the estimator, from the closed-form rate

    @property
    def within_3se(self) -> bool:
        return abs(self.estimate - self.closed_form) <= 3.0 * self.std_error

    @property
    def delta(self) -> float:
        return self.estimate - self.closed_form


def estimate_windowed_detection(p: float, cfg: WindowConfig, trials: int,
                                seed: int) -> WindowEstimate:
    """Estimate the probability an n-frame window confirms presence."""
    n, k = cfg.window_len, cfg.required_hits
    confirmed = count_confirmed_windows(p, n, k, trials, seed)
    closed = window_detection_probability(p, n, k)
    se = math.sqrt(closed * (1.0 - closed) / trials)
    return WindowEstimate(trials=trials, confirmed=confirmed,
                          estimate=confirmed / trials, closed_form=closed,
                          std_error=se)
