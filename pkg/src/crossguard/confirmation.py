"""Sliding-window confirmation of noisy per-frame detections.

Raw channel output flips on single-frame errors; barrier decisions may
not.  Presence is confirmed once at least ``required_hits`` of the
last ``window_len`` frames reported a detection (any-hit-within-ten by
default, which is the only reading of the calibrated ten-frame window
that drives the residual miss count to near zero).  Departure is
confirmed only after ``absence_len`` consecutive misses, a deliberate
hysteresis so a few dropped frames cannot flap the barrier.

States are immutable; :func:`update` is a pure function of
(state, observation, config), which is what makes replaying a recorded
observation sequence reproduce the exact status trace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum

from .detection import FrameObservation
from .errors import OrderingError, ValidationError

__all__ = ["PresenceStatus", "WindowConfig", "ConfirmationState", "update",
           "window_detection_probability"]


class PresenceStatus(Enum):
    ABSENT = "Absent"
    CONFIRMED = "Confirmed"


@dataclass(frozen=True)
class WindowConfig:
    """Window sizes for presence/absence confirmation."""

    window_len: int = 10      # n: frames in the presence window
    required_hits: int = 1    # k: hits within the window to confirm
    absence_len: int = 25     # m: consecutive misses to confirm departure

    def __post_init__(self):
        if self.window_len < 1:
            raise ValidationError("must be >= 1", field="window_len")
        if not 1 <= self.required_hits <= self.window_len:
            raise ValidationError("must satisfy 1 <= k <= n",
                                  field="required_hits")
        if self.absence_len < 1:
            raise ValidationError("must be >= 1", field="absence_len")


@dataclass(frozen=True)
class ConfirmationState:
    """Debouncer state for one detection channel."""

    flags: tuple = field(default_factory=tuple)  # last <= n detected flags
    status: PresenceStatus = PresenceStatus.ABSENT
    consecutive_negative: int = 0
    last_t_ms: int | None = None


def update(state: ConfirmationState, obs: FrameObservation,
           cfg: WindowConfig) -> tuple[ConfirmationState, PresenceStatus]:
    """Fold one observation into the debouncer.

    Returns the successor state and its status.  Observations must be
    strictly newer than the last one folded into this state.
    """
    if state.last_t_ms is not None and obs.t_ms <= state.last_t_ms:
        raise OrderingError(
            f"observation at {obs.t_ms} ms not after {state.last_t_ms} ms")

    flags = (state.flags + (obs.detected,))[-cfg.window_len:]

    if state.status is PresenceStatus.ABSENT:
        if sum(flags) >= cfg.required_hits:
            new = ConfirmationState(flags=flags,
                                    status=PresenceStatus.CONFIRMED,
                                    consecutive_negative=0,
                                    last_t_ms=obs.t_ms)
        else:
            new = replace(state, flags=flags, last_t_ms=obs.t_ms)
        return new, new.status

    # Confirmed: count the miss run; a single hit resets it.
    negatives = 0 if obs.detected else state.consecutive_negative + 1
    if negatives >= cfg.absence_len:
        # Departure confirmed.  The window is cleared so stale hits
        # cannot instantly re-confirm when absence_len < window_len.
        new = ConfirmationState(flags=(), status=PresenceStatus.ABSENT,
                                consecutive_negative=0, last_t_ms=obs.t_ms)
    else:
        new = ConfirmationState(flags=flags, status=PresenceStatus.CONFIRMED,
                                consecutive_negative=negatives,
                                last_t_ms=obs.t_ms)
    return new, new.status


def window_detection_probability(p: float, n: int, k: int) -> float:
    """P(at least k hits among n independent per-frame Bernoulli(p) trials).

    Closed form: sum_{i=k..n} C(n,i) p^i (1-p)^(n-i).
    """
    if not 0.0 <= p <= 1.0:
        raise ValidationError("must be within [0, 1]", field="p")
    if n < 1:
        raise ValidationError("must be >= 1", field="n")
    if not 1 <= k <= n:
        raise ValidationError("must satisfy 1 <= k <= n", field="k")
    total = 0.0
    for i in range(k, n + 1):
        total += math.comb(n, i) * (p ** i) * ((1.0 - p) ** (n - i))
    return min(1.0, total)
