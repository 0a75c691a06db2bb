"""Deterministic random-number streams (SplitMix64).

The simulator promises bit-identical event logs for identical
(scenario, seed) pairs, across Python versions and regardless of
whether the compiled Monte Carlo kernel is installed.  That rules out
generators whose streams we cannot reproduce exactly in C, so the
whole package draws from one fully specified primitive: SplitMix64
(the 64-bit mix/advance generator of Steele, Lea & Flood, as shipped
in java.util.SplittableRandom).  It is tiny, passes BigCrush, and a
trial- or channel-indexed substream is a single extra mix, which is
what lets Monte Carlo trials be evaluated independently (and, if ever
needed, in parallel).

``Stream`` deliberately mimics the one method of ``random.Random``
that the detector channel consumes (``random()``), so tests may
substitute the stdlib generator.
"""

from __future__ import annotations

import hashlib

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_INV_2_53 = 1.0 / (1 << 53)


def mix64(z: int) -> int:
    """SplitMix64 finalizer: avalanche a 64-bit value."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def substream_state(seed: int, index: int) -> int:
    """Initial state of substream ``index`` under ``seed``.

    Must match the compiled kernel's derivation exactly; change both
    together or never.
    """
    return mix64((seed + (index + 1) * _GOLDEN) & _MASK64)


def label_state(seed: int, *labels: str) -> int:
    """Initial state for a named substream (e.g. per camera channel).

    Labels are hashed with sha256 so states are stable across runs,
    platforms and Python versions (never use built-in hash() here).
    """
    state = mix64(seed & _MASK64)
    for label in labels:
        digest = hashlib.sha256(label.encode("utf-8")).digest()
        state = mix64(state ^ int.from_bytes(digest[:8], "big"))
    return state


class Stream:
    """A SplitMix64 sequence exposing the random.Random subset we use."""

    __slots__ = ("_state",)

    def __init__(self, state: int):
        self._state = state & _MASK64

    def random(self) -> float:
        """Next float in [0, 1), consuming exactly one 64-bit draw."""
        self._state = (self._state + _GOLDEN) & _MASK64
        return (mix64(self._state) >> 11) * _INV_2_53

    def getstate(self) -> int:
        return self._state

    @classmethod
    def for_labels(cls, seed: int, *labels: str) -> "Stream":
        return cls(label_state(seed, *labels))
