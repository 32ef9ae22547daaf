"""Tilt-angle gait parameters derived from joint pairs.

Three parameters are tracked, each the signed angle of the line through a
joint pair:

    V1  spine tilt     SpineShoulder-SpineBase, measured from vertical
    V2  hip tilt       HipLeft-HipRight, measured from horizontal
    V3  shoulder tilt  ShoulderLeft-ShoulderRight, measured from horizontal

For the left-right pairs the slope is (right.y - left.y) / (right.x -
left.x) and the angle is its arctangent in degrees, so a positive angle
means the right-side joint sits higher.  The spine vector is near-vertical
in upright walking; measuring it from the horizontal would park the series
at ~90 deg, so by default its angle is taken from the vertical instead
(arctan of dx/dy), putting all three parameters near 0 for an upright
subject and making the common 5-degree healthy-tilt bound meaningful for
each.  Pass ``spine_from_horizontal=True`` to get the literal
from-horizontal reading.

An exactly vertical pair (dx == 0) yields the VERTICAL slope marker and
+90 deg; at 1e-6-quantized coordinates this is a measure-zero event and is
represented rather than smoothed away.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import GaitVarError, ParseError
from .skeleton import (
    HIP_LEFT,
    HIP_RIGHT,
    JointId,
    JointSample,
    Recording,
    RecordingMeta,
    SHOULDER_LEFT,
    SHOULDER_RIGHT,
    SPINE_BASE,
    SPINE_SHOULDER,
)


class _Vertical:
    """Marker value for an exactly vertical joint pair (undefined slope)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "VERTICAL"


VERTICAL = _Vertical()

Slope = float | _Vertical


class GaitParameter(enum.Enum):
    """The three tilt parameters and their defining joint pairs."""

    SPINE_TILT = ("V1", SPINE_BASE, SPINE_SHOULDER)
    HIP_TILT = ("V2", HIP_LEFT, HIP_RIGHT)
    SHOULDER_TILT = ("V3", SHOULDER_LEFT, SHOULDER_RIGHT)

    def __init__(self, code: str, first: JointId, second: JointId):
        self.code = code
        # (left, right) for the lateral pairs; (base, shoulder) for the spine.
        self.joint_pair = (first, second)

    def __str__(self) -> str:
        return self.code

    @classmethod
    def parse(cls, code: str) -> "GaitParameter":
        for param in cls:
            if param.code == code or param.name == code:
                return param
        raise GaitVarError(f"unknown gait parameter: {code!r} (expected V1, V2 or V3)")


# Stable V1 < V2 < V3 ordering for grids, reports and plots.
PARAMETER_ORDER = (
    GaitParameter.SPINE_TILT,
    GaitParameter.HIP_TILT,
    GaitParameter.SHOULDER_TILT,
)


def pair_slope(left: JointSample, right: JointSample) -> Slope:
    """Slope of the frontal-plane line through two joints.

    Returns VERTICAL when the x coordinates coincide exactly.  Symmetric in
    its arguments: swapping the joints negates numerator and denominator.
    """
    dx = right.x - left.x
    if dx == 0.0:
        return VERTICAL
    return (right.y - left.y) / dx


def slope_to_degrees(slope: Slope) -> float:
    """Convert a slope to its angle from the horizontal, in degrees.

    Finite slopes map to arctan(slope) * 180/pi in (-90, +90); the VERTICAL
    marker maps to +90 exactly.
    """
    if isinstance(slope, _Vertical):
        return 90.0
    return math.degrees(math.atan(slope))


@dataclass(frozen=True)
class TiltSample:
    frame_index: int
    timestamp_ms: int
    slope: Slope
    angle_deg: float

    def __post_init__(self):
        if not -90.0 <= self.angle_deg <= 90.0:
            raise GaitVarError(f"angle out of [-90, 90]: {self.angle_deg}")


@dataclass(frozen=True)
class TiltSeries:
    """Per-frame tilt angles for one parameter of one walking pass."""

    parameter: GaitParameter
    samples: tuple[TiltSample, ...]
    dropout_count: int = 0
    source_meta: RecordingMeta = field(default_factory=RecordingMeta)

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(self.samples))
        indices = [s.frame_index for s in self.samples]
        for prev, cur in zip(indices, indices[1:]):
            if cur <= prev:
                raise GaitVarError("tilt samples must be ordered by frame index")

    def angles(self) -> list[float]:
        return [s.angle_deg for s in self.samples]

    def __len__(self) -> int:
        return len(self.samples)


DEFAULT_MAX_DROPOUT = 0.2


def _spine_sample(base: JointSample, shoulder: JointSample) -> tuple[Slope, float]:
    # Angle from vertical: arctan(dx/dy) of the base->shoulder vector.
    dx = shoulder.x - base.x
    dy = shoulder.y - base.y
    if dy == 0.0:
        return VERTICAL, 90.0
    slope = dx / dy
    return slope, math.degrees(math.atan(slope))


def tilt_series(
    rec: Recording,
    param: GaitParameter,
    *,
    max_dropout: float = DEFAULT_MAX_DROPOUT,
    spine_from_horizontal: bool = False,
) -> TiltSeries:
    """Compute the tilt-angle series of one parameter over a recording.

    Frames missing either joint of the pair are skipped and counted in
    dropout_count.  Raises on fewer than 2 usable frames or when dropouts
    exceed ``max_dropout`` of the frame count.
    """
    first_id, second_id = param.joint_pair
    samples = []
    dropout = 0
    for frame in rec.frames:
        first = frame.joints.get(first_id)
        second = frame.joints.get(second_id)
        if first is None or second is None:
            dropout += 1
            continue
        if param is GaitParameter.SPINE_TILT and not spine_from_horizontal:
            slope, angle = _spine_sample(first, second)
        else:
            slope = pair_slope(first, second)
            angle = slope_to_degrees(slope)
        samples.append(
            TiltSample(
                frame_index=frame.index,
                timestamp_ms=frame.timestamp_ms,
                slope=slope,
                angle_deg=angle,
            )
        )

    if len(samples) < 2:
        raise GaitVarError(
            f"insufficient frames: {param.code} usable in {len(samples)} of "
            f"{rec.frame_count()} frames"
        )
    if dropout > max_dropout * rec.frame_count():
        raise GaitVarError(
            f"excessive dropout: {param.code} missing in {dropout} of "
            f"{rec.frame_count()} frames (limit {max_dropout:.0%})"
        )
    return TiltSeries(
        parameter=param,
        samples=tuple(samples),
        dropout_count=dropout,
        source_meta=rec.meta,
    )


@dataclass(frozen=True)
class Exceedance:
    fraction_over: float
    max_abs_deg: float


def exceedance(series: TiltSeries, threshold_deg: float = 5.0) -> Exceedance:
    """Fraction of samples beyond |threshold| plus the largest |angle|."""
    if not series.samples:
        raise GaitVarError("cannot compute exceedance of an empty series")
    magnitudes = [abs(s.angle_deg) for s in series.samples]
    over = sum(1 for mag in magnitudes if mag > threshold_deg)
    return Exceedance(
        fraction_over=over / len(magnitudes),
        max_abs_deg=max(magnitudes),
    )


def emit_tilt_csv(series: TiltSeries) -> str:
    """Serialize a tilt series: metadata comments then frame,timestamp,angle rows."""
    meta = series.source_meta
    out = [
        f"# parameter={series.parameter.code}",
        f"# subject={meta.subject_label}",
        f"# direction={meta.direction}",
        f"# condition={meta.condition_label}",
        f"# path_length_m={meta.path_length_m!r}",
        "frame,timestamp_ms,angle_deg",
    ]
    for s in series.samples:
        out.append(f"{s.frame_index},{s.timestamp_ms},{s.angle_deg:.6f}")
    return "\n".join(out) + "\n"


def parse_tilt_csv(doc: str) -> TiltSeries:
    """Parse an emitted tilt CSV back into a TiltSeries.

    The slope of each sample is reconstructed from its angle; dropout
    information is not stored in the CSV and comes back as 0.
    """
    header_vals: dict[str, str] = {}
    saw_column_header = False
    samples: list[TiltSample] = []

    for lineno, raw in enumerate(doc.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if saw_column_header:
                raise ParseError("comment after data section", lineno)
            key, sep, value = line[1:].strip().partition("=")
            if sep:
                header_vals.setdefault(key.strip(), value)
            continue
        if not saw_column_header:
            if line != "frame,timestamp_ms,angle_deg":
                raise ParseError(
                    f"expected column header 'frame,timestamp_ms,angle_deg', got {line!r}",
                    lineno,
                )
            saw_column_header = True
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise ParseError(f"expected 3 columns, got {len(parts)}", lineno)
        try:
            index = int(parts[0])
            timestamp_ms = int(parts[1])
            angle = float(parts[2])
        except ValueError:
            raise ParseError(f"malformed tilt row {line!r}", lineno) from None
        slope: Slope = VERTICAL if angle == 90.0 else math.tan(math.radians(angle))
        try:
            samples.append(TiltSample(index, timestamp_ms, slope, angle))
        except GaitVarError as exc:
            raise ParseError(str(exc), lineno) from None

    if not saw_column_header or not samples:
        raise ParseError("document contains no tilt rows")
    if "parameter" not in header_vals:
        raise ParseError("missing '# parameter=' header")
    param = GaitParameter.parse(header_vals["parameter"])

    meta_kwargs: dict[str, object] = {}
    if "subject" in header_vals:
        meta_kwargs["subject_label"] = header_vals["subject"]
    if "direction" in header_vals:
        meta_kwargs["direction"] = header_vals["direction"]
    if "condition" in header_vals:
        meta_kwargs["condition_label"] = header_vals["condition"]
    if "path_length_m" in header_vals:
        try:
            meta_kwargs["path_length_m"] = float(header_vals["path_length_m"])
        except ValueError:
            raise ParseError(
                f"non-numeric header value path_length_m={header_vals['path_length_m']!r}"
            ) from None
    try:
        return TiltSeries(
            parameter=param,
            samples=tuple(samples),
            source_meta=RecordingMeta(**meta_kwargs),  # type: ignore[arg-type]
        )
    except GaitVarError as exc:
        raise ParseError(str(exc)) from None
