"""Field-measured performance of the vision models.

This is the single authoritative copy of the evaluation numbers the
detector channel is calibrated against: the redundancy classifier's
confusion counts per lighting condition, and the object detector's
per-frame accuracy with the matching ten-frame window statistics.
Every preset profile and the ``crossguard tables`` validation command
read from here; nothing else in the package embeds these constants.

Two quirks of the source data, preserved on purpose:

* the per-frame accuracy column does not exactly equal
  ``1 - false_negatives / frames`` (e.g. trains at night:
  1 - 337/2158 = 0.8438 vs the recorded 0.843).  The recorded accuracy
  column is authoritative for the channel's true-positive rate; the
  miss counts are kept as separate raw data.
* no per-frame false-positive counts were recorded for the detector,
  so channels default to a small configurable false-positive rate of
  0.001/frame to keep the false-alarm path exercised.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import EmptySampleError, ValidationError


class Condition(Enum):
    """Ambient condition a channel was evaluated under."""

    DAY = "day"
    NIGHT = "night"
    BAD_WEATHER = "badweather"


class ObjectClass(Enum):
    """What a detection channel reports having seen."""

    TRAIN = "Train"
    TRESPASSER = "Trespasser"
    OTHER = "Other"


@dataclass(frozen=True)
class ConfusionCounts:
    """Binary confusion counts from a classifier evaluation."""

    true_positive: int
    true_negative: int
    false_positive: int
    false_negative: int

    def __post_init__(self):
        for name in ("true_positive", "true_negative",
                     "false_positive", "false_negative"):
            if getattr(self, name) < 0:
                raise ValidationError("count must be >= 0", field=name)

    def total(self) -> int:
        return (self.true_positive + self.true_negative
                + self.false_positive + self.false_negative)

    def require_nonempty(self):
        if self.total() == 0:
            raise EmptySampleError("confusion counts sum to zero")


@dataclass(frozen=True)
class ClassifierEval:
    """One row of the classifier evaluation."""

    counts: ConfusionCounts
    recorded_accuracy_pct: str  # as published, 2 decimals


@dataclass(frozen=True)
class DetectionEval:
    """One row of the object-detector evaluation."""

    frames_analyzed: int
    per_frame_accuracy: float
    false_negatives: int
    windowed_accuracy: float    # ten-consecutive-frame aggregation
    windowed_false_negatives: int


CLASSIFIER_EVAL = {
    Condition.DAY: ClassifierEval(
        ConfusionCounts(true_positive=4582, true_negative=3826,
                        false_positive=39, false_negative=93),
        recorded_accuracy_pct="98.45"),
    Condition.NIGHT: ClassifierEval(
        ConfusionCounts(true_positive=2124, true_negative=1247,
                        false_positive=60, false_negative=319),
        recorded_accuracy_pct="89.89"),
    Condition.BAD_WEATHER: ClassifierEval(
        ConfusionCounts(true_positive=329, true_negative=294,
                        false_positive=51, false_negative=96),
        recorded_accuracy_pct="80.91"),
}

DETECTION_EVAL = {
    (ObjectClass.TRAIN, Condition.DAY): DetectionEval(
        frames_analyzed=4533, per_frame_accuracy=0.956, false_negatives=195,
        windowed_accuracy=1.000, windowed_false_negatives=0),
    (ObjectClass.TRAIN, Condition.NIGHT): DetectionEval(
        frames_analyzed=2158, per_frame_accuracy=0.843, false_negatives=337,
        windowed_accuracy=0.999, windowed_false_negatives=1),
    (ObjectClass.TRAIN, Condition.BAD_WEATHER): DetectionEval(
        frames_analyzed=1326, per_frame_accuracy=0.827, false_negatives=222,
        windowed_accuracy=0.999, windowed_false_negatives=1),
    (ObjectClass.TRESPASSER, Condition.DAY): DetectionEval(
        frames_analyzed=3783, per_frame_accuracy=0.917, false_negatives=306,
        windowed_accuracy=1.000, windowed_false_negatives=0),
    (ObjectClass.TRESPASSER, Condition.NIGHT): DetectionEval(
        frames_analyzed=2078, per_frame_accuracy=0.875, false_negatives=269,
        windowed_accuracy=0.999, windowed_false_negatives=2),
    (ObjectClass.TRESPASSER, Condition.BAD_WEATHER): DetectionEval(
        frames_analyzed=1129, per_frame_accuracy=0.778, false_negatives=234,
        windowed_accuracy=0.997, windowed_false_negatives=3),
}

# No false-positive counts were recorded per frame; see module docstring.
DEFAULT_FALSE_POSITIVE_RATE = 0.001

# The prototype hardware sustained five analyzed frames per second.
DEFAULT_FRAME_RATE = 5.0
