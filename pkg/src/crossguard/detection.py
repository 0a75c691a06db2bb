"""Probabilistic detector channel and its wire protocol.

A camera plus its on-device detection model is abstracted as a
per-frame Bernoulli channel: when the target object is in view the
channel reports a detection with the profile's true-positive rate,
otherwise with its (small) false-positive rate.  Profiles for the six
calibrated (class, condition) pairs come from :mod:`.calibration`.

Real external detectors feed the same pipeline through a
newline-delimited JSON protocol, one record per analyzed frame:

    {"src": "cam1", "t_ms": 1000, "det": true, "cls": "Train", "conf": 0.91}

``src`` (string) and ``t_ms`` (integer) are mandatory, ``det``
(boolean) is mandatory, ``cls`` and ``conf`` appear exactly when
``det`` is true.  Unknown fields are rejected rather than ignored so a
misconfigured producer fails loudly.  Timestamps from one source must
be strictly increasing; ties across sources are broken by source id.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import IO, Iterable, Iterator, Optional

from .calibration import (DEFAULT_FALSE_POSITIVE_RATE, DEFAULT_FRAME_RATE,
                          CLASSIFIER_EVAL, DETECTION_EVAL, Condition,
                          ConfusionCounts, ObjectClass)
from .errors import EmptySampleError, OrderingError, ParseError, ValidationError

__all__ = [
    "Condition", "ObjectClass", "ConfusionCounts", "DetectorProfile",
    "FrameObservation", "accuracy", "format_percent", "per_frame_miss_rate",
    "profile_for", "sample_frame", "parse_observation",
    "serialize_observation", "ObservationReader",
]


@dataclass(frozen=True)
class DetectorProfile:
    """Per-frame Bernoulli parameters of one detection channel."""

    target_class: ObjectClass
    true_positive_rate: float
    false_positive_rate: float = DEFAULT_FALSE_POSITIVE_RATE
    frame_rate: float = DEFAULT_FRAME_RATE

    def __post_init__(self):
        if not 0.0 <= self.true_positive_rate <= 1.0:
            raise ValidationError("must be within [0, 1]",
                                  field="true_positive_rate")
        if not 0.0 <= self.false_positive_rate <= 1.0:
            raise ValidationError("must be within [0, 1]",
                                  field="false_positive_rate")
        if self.frame_rate <= 0:
            raise ValidationError("must be > 0", field="frame_rate")

    @property
    def frame_interval_ms(self) -> int:
        return round(1000.0 / self.frame_rate)


@dataclass(frozen=True)
class FrameObservation:
    """Outcome of one analyzed camera frame.

    ``object_class`` and ``confidence`` are present exactly when
    ``detected`` is true.
    """

    source_id: str
    t_ms: int
    detected: bool
    object_class: Optional[ObjectClass] = None
    confidence: Optional[float] = None

    def __post_init__(self):
        if self.detected:
            if self.object_class is None:
                raise ValidationError("required when detected",
                                      field="object_class")
            if self.confidence is None:
                raise ValidationError("required when detected",
                                      field="confidence")
            if not 0.0 <= self.confidence <= 1.0:
                raise ValidationError("must be within [0, 1]",
                                      field="confidence")
        else:
            if self.object_class is not None or self.confidence is not None:
                raise ValidationError(
                    "class/confidence must be absent when not detected",
                    field="object_class")


def accuracy(counts: ConfusionCounts) -> float:
    """Fraction of correct outcomes, (TP+TN) / total."""
    counts.require_nonempty()
    return (counts.true_positive + counts.true_negative) / counts.total()


def format_percent(fraction: float) -> str:
    """Render a fraction as a percentage, round-half-up at 2 decimals.

    Matches how the calibration accuracies were published (e.g.
    0.9845408... -> "98.45%").
    """
    pct = Decimal(repr(fraction * 100.0)).quantize(Decimal("0.01"),
                                                   rounding=ROUND_HALF_UP)
    return f"{pct}%"


def per_frame_miss_rate(false_negatives: int, frames_analyzed: int) -> float:
    """Observed per-frame miss fraction, FN / frames."""
    if frames_analyzed <= 0:
        raise EmptySampleError("frames_analyzed must be > 0")
    if false_negatives < 0:
        raise ValidationError("must be >= 0", field="false_negatives")
    if false_negatives > frames_analyzed:
        raise ValidationError("cannot exceed frames_analyzed",
                              field="false_negatives")
    return false_negatives / frames_analyzed


def profile_for(condition: Condition, target: ObjectClass) -> DetectorProfile:
    """Preset channel profile for a calibrated (condition, class) pair."""
    if target not in (ObjectClass.TRAIN, ObjectClass.TRESPASSER):
        raise ValidationError("no calibrated profile for this class",
                              field="target")
    row = DETECTION_EVAL[(target, condition)]
    return DetectorProfile(target_class=target,
                           true_positive_rate=row.per_frame_accuracy)


def classifier_counts(condition: Condition) -> ConfusionCounts:
    """Confusion counts of the redundancy classifier for a condition."""
    return CLASSIFIER_EVAL[condition].counts


def sample_frame(truth_present: bool, profile: DetectorProfile, rng,
                 *, source_id: str = "sim", t_ms: int = 0) -> FrameObservation:
    """Draw one frame outcome from the channel.

    Consumes exactly one value from ``rng`` (anything exposing
    ``random() -> [0, 1)``), so observation sequences are reproducible
    draw-for-draw under a fixed seed.
    """
    u = rng.random()
    rate = profile.true_positive_rate if truth_present \
        else profile.false_positive_rate
    detected = u < rate
    if not detected:
        return FrameObservation(source_id, t_ms, False)
    # Confidence is derived from the same single draw: u falls in
    # [0, rate), so 1 - u lies in (1 - rate, 1].
    confidence = min(1.0, 1.0 - u)
    return FrameObservation(source_id, t_ms, True,
                            object_class=profile.target_class,
                            confidence=confidence)


_WIRE_FIELDS = {"src", "t_ms", "det", "cls", "conf"}
_CLASS_NAMES = {c.value: c for c in ObjectClass}


def serialize_observation(obs: FrameObservation) -> bytes:
    """Encode one observation as a wire-protocol line (no newline)."""
    record = {"src": obs.source_id, "t_ms": obs.t_ms, "det": obs.detected}
    if obs.detected:
        record["cls"] = obs.object_class.value
        record["conf"] = obs.confidence
    return json.dumps(record, separators=(",", ":")).encode("utf-8")


def parse_observation(line: bytes | str) -> FrameObservation:
    """Decode one wire-protocol record.

    Inverse of :func:`serialize_observation`; raises :class:`ParseError`
    naming the offending field on any malformed input.
    """
    if isinstance(line, bytes):
        try:
            line = line.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"record is not valid UTF-8: {exc}") from None
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(f"record is not valid JSON: {exc}") from None
    if not isinstance(record, dict):
        raise ParseError("record must be a JSON object")

    unknown = set(record) - _WIRE_FIELDS
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(sorted(unknown))}")
    for field in ("src", "t_ms", "det"):
        if field not in record:
            raise ParseError(f"missing field: {field}")

    src = record["src"]
    if not isinstance(src, str) or not src:
        raise ParseError("src: must be a non-empty string")
    t_ms = record["t_ms"]
    if not isinstance(t_ms, int) or isinstance(t_ms, bool):
        raise ParseError("t_ms: must be an integer")
    det = record["det"]
    if not isinstance(det, bool):
        raise ParseError("det: must be a boolean")

    if det:
        if "cls" not in record:
            raise ParseError("cls: required when det is true")
        if "conf" not in record:
            raise ParseError("conf: required when det is true")
        cls_name = record["cls"]
        if cls_name not in _CLASS_NAMES:
            raise ParseError(f"cls: unknown class string {cls_name!r}")
        conf = record["conf"]
        if isinstance(conf, bool) or not isinstance(conf, (int, float)):
            raise ParseError("conf: must be a number")
        if not 0.0 <= conf <= 1.0:
            raise ParseError("conf: must be within [0, 1]")
        return FrameObservation(src, t_ms, True,
                                object_class=_CLASS_NAMES[cls_name],
                                confidence=float(conf))
    if "cls" in record or "conf" in record:
        raise ParseError("cls/conf: must be absent when det is false")
    return FrameObservation(src, t_ms, False)


class ObservationReader:
    """Streaming reader enforcing per-source timestamp monotonicity.

    Sources are independent: each source's timestamps must strictly
    increase, while interleaving across sources is unconstrained here
    (the simulator's event queue owns cross-source ordering).
    """

    def __init__(self):
        self._last_t: dict[str, int] = {}

    def feed(self, line: bytes | str) -> FrameObservation:
        obs = parse_observation(line)
        last = self._last_t.get(obs.source_id)
        if last is not None and obs.t_ms <= last:
            raise OrderingError(
                f"t_ms: {obs.t_ms} not after {last} for source "
                f"{obs.source_id!r}")
        self._last_t[obs.source_id] = obs.t_ms
        return obs

    def read(self, stream: IO[bytes] | Iterable[bytes | str]
             ) -> Iterator[FrameObservation]:
        for line in stream:
            if isinstance(line, bytes):
                line = line.strip(b"\r\n")
                if not line:
                    continue
            else:
                line = line.strip("\r\n")
                if not line:
                    continue
            yield self.feed(line)
