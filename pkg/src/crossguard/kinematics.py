"""Train kinematics: velocity from two timed detections, ETA, block
occupancy and head-on conflict detection.

Velocity comes from the time a train takes between the two upstream
detection points (bounding-box motion would tie the estimate to one
camera's optics; two timed line crossings are robust and testable).
The ETA model is constant-velocity; estimates go stale after twice
their own travel-time horizon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import EstimateUnavailableError, ValidationError

__all__ = ["Direction", "TrackGeometry", "TrackEstimate", "BlockOccupancy",
           "Conflict", "TimetableEntry", "estimate_velocity", "eta",
           "head_on_conflict", "schedule_deviation"]


class Direction(Enum):
    UP = "Up"
    DOWN = "Down"


@dataclass(frozen=True)
class TrackGeometry:
    """Fixed distances of one instrumented crossing.

    The primary detection camera sits 2-3 km up-track of the junction;
    the second detection point is ``camera_spacing`` metres closer in.
    ``block_for`` names the track block an approaching train occupies;
    single-track lines (the default) share one block between both
    directions, which is what makes head-on conflicts observable.
    """

    detection_distance: float = 2500.0
    camera_spacing: float = 500.0
    far_side_offset: float = 200.0
    block_up: str = "main"
    block_down: str = "main"

    def __post_init__(self):
        if not 2000.0 <= self.detection_distance <= 3000.0:
            raise ValidationError("must be within [2000, 3000] m",
                                  field="detection_distance")
        if self.camera_spacing <= 0:
            raise ValidationError("must be > 0", field="camera_spacing")
        if self.camera_spacing >= self.detection_distance:
            raise ValidationError("must be smaller than detection_distance",
                                  field="camera_spacing")
        if self.far_side_offset <= 0:
            raise ValidationError("must be > 0", field="far_side_offset")

    def block_for(self, direction: Direction) -> str:
        return self.block_up if direction is Direction.UP else self.block_down


@dataclass(frozen=True)
class TrackEstimate:
    """Snapshot of one train's approach, as estimated from detections."""

    train_id: str
    direction: Direction
    position: float                      # metres from junction, decreasing
    velocity: Optional[float] = None     # m/s, None until both points timed
    eta: Optional[float] = None          # seconds, None when unmeasured
    estimated_at: float = 0.0            # simulation seconds

    def __post_init__(self):
        if self.position < 0:
            raise ValidationError("must be >= 0", field="position")
        if self.eta is not None and (self.velocity is None
                                     or self.velocity <= 0):
            raise ValidationError("finite eta requires velocity > 0",
                                  field="velocity")

    def is_stale(self, now_s: float) -> bool:
        """True once the estimate is older than 2x its own horizon."""
        if self.eta is None:
            return False
        return (now_s - self.estimated_at) > 2.0 * self.eta


@dataclass(frozen=True)
class TimetableEntry:
    train_id: str
    scheduled_arrival: float    # simulation seconds
    scheduled_departure: float

    def __post_init__(self):
        if self.scheduled_departure < self.scheduled_arrival:
            raise ValidationError("must be >= scheduled_arrival",
                                  field="scheduled_departure")


@dataclass(frozen=True)
class Conflict:
    """Two or more trains meeting head-on within one block."""

    block_id: str
    train_ids: tuple


@dataclass
class BlockOccupancy:
    """Which trains currently occupy which track block.

    A train lives in at most one block; placing it again moves it.
    """

    _blocks: dict = field(default_factory=dict)

    def place(self, train_id: str, direction: Direction, block_id: str,
              since: float):
        self.vacate(train_id)
        self._blocks.setdefault(block_id, {})[train_id] = (direction, since)

    def vacate(self, train_id: str):
        for block_id, trains in list(self._blocks.items()):
            trains.pop(train_id, None)
            if not trains:
                del self._blocks[block_id]

    def trains_in(self, block_id: str) -> dict:
        return dict(self._blocks.get(block_id, {}))

    def blocks(self) -> dict:
        return {b: dict(t) for b, t in self._blocks.items()}


def estimate_velocity(spacing: float, t_first: float,
                      t_second: float) -> float:
    """Velocity in m/s from two timed detections ``spacing`` metres apart."""
    if spacing <= 0:
        raise ValueError("spacing must be > 0")
    if t_second <= t_first:
        raise ValueError("second detection must be after the first")
    return spacing / (t_second - t_first)


def eta(distance: float, velocity: Optional[float]) -> Optional[float]:
    """Seconds to cover ``distance`` at ``velocity``; None when unmeasured."""
    if distance < 0:
        raise ValueError("distance must be >= 0")
    if velocity is None or velocity <= 0:
        return None
    return distance / velocity


def head_on_conflict(occupancy: BlockOccupancy) -> list[Conflict]:
    """Every block holding trains of opposing directions."""
    conflicts = []
    for block_id, trains in sorted(occupancy.blocks().items()):
        directions = {direction for direction, _ in trains.values()}
        if len(directions) > 1:
            conflicts.append(Conflict(block_id=block_id,
                                      train_ids=tuple(sorted(trains))))
    return conflicts


def schedule_deviation(entry: TimetableEntry, estimate: TrackEstimate,
                       now: float) -> float:
    """Signed seconds between the predicted and scheduled arrival.

    Positive means late.
    """
    if estimate.eta is None:
        raise EstimateUnavailableError(
            f"train {estimate.train_id}: no finite ETA available")
    return (now + estimate.eta) - entry.scheduled_arrival
