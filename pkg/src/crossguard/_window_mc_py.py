"""Pure-Python Monte Carlo kernel for window confirmation trials.

Twin of the compiled kernel in ``_window_mc_cy.pyx``: both walk the
same SplitMix64 substreams (one per trial, derived from
(seed, trial index)), so they return identical counts for identical
arguments.  Any change here must be mirrored there.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_INV_2_53 = 1.0 / (1 << 53)


def count_confirmed_windows(p: float, n: int, k: int, trials: int,
                            seed: int) -> int:
    """Number of simulated n-frame windows reaching >= k detections.

    Each trial owns substream ``mix64(seed + (i+1)*GOLDEN)`` and stops
    early once confirmed; unconsumed draws never leak across trials.
    """
    confirmed = 0
    for trial in range(trials):
        state = (seed + (trial + 1) * _GOLDEN) & _MASK64
        # inline mix64 (substream derivation)
        state = ((state ^ (state >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        state = ((state ^ (state >> 27)) * 0x94D049BB133111EB) & _MASK64
        state ^= state >> 31
        hits = 0
        for _ in range(n):
            state = (state + _GOLDEN) & _MASK64
            z = state
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
            z ^= z >> 31
            if (z >> 11) * _INV_2_53 < p:
                hits += 1
                if hits >= k:
                    confirmed += 1
                    break
    return confirmed
