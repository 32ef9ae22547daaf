"""Skeleton data model and CSV ingestion/emission.

A recording is an ordered sequence of frames, each holding up to 25 joint
position samples in depth-sensor skeleton space (meters; X horizontal and
perpendicular to the camera's line of sight, Y vertical, Z depth).  Frames
are sparse: a tracker may drop joints, and downstream code decides what to
do about it.

The on-disk format is a long-format CSV, one joint sample per row:

    # fps=30.0
    # subject=S1
    # direction=forward
    # condition=healthy
    # path_length_m=3.0
    frame,timestamp_ms,joint,x,y,z
    0,0,SpineBase,0.000000,0.950000,4.000000
    ...

Unknown ``#`` header keys are ignored.  Emission is canonical: frames
ascending, joints in skeleton order within a frame, coordinates as
6-decimal fixed point.  Emitting the same recording twice is byte-stable.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import GaitVarError, ParseError


class JointId(enum.Enum):
    """The 25 joints of a Kinect-v2-style skeleton."""

    SPINE_BASE = "SpineBase"
    SPINE_MID = "SpineMid"
    SPINE_SHOULDER = "SpineShoulder"
    NECK = "Neck"
    HEAD = "Head"
    SHOULDER_LEFT = "ShoulderLeft"
    ELBOW_LEFT = "ElbowLeft"
    WRIST_LEFT = "WristLeft"
    HAND_LEFT = "HandLeft"
    SHOULDER_RIGHT = "ShoulderRight"
    ELBOW_RIGHT = "ElbowRight"
    WRIST_RIGHT = "WristRight"
    HAND_RIGHT = "HandRight"
    HIP_LEFT = "HipLeft"
    KNEE_LEFT = "KneeLeft"
    ANKLE_LEFT = "AnkleLeft"
    FOOT_LEFT = "FootLeft"
    HIP_RIGHT = "HipRight"
    KNEE_RIGHT = "KneeRight"
    ANKLE_RIGHT = "AnkleRight"
    FOOT_RIGHT = "FootRight"
    HAND_TIP_LEFT = "HandTipLeft"
    THUMB_LEFT = "ThumbLeft"
    HAND_TIP_RIGHT = "HandTipRight"
    THUMB_RIGHT = "ThumbRight"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> "JointId":
        try:
            return _JOINT_BY_NAME[name]
        except KeyError:
            raise GaitVarError(f"unknown joint name: {name!r}") from None


_JOINT_BY_NAME = {j.value: j for j in JointId}

# Canonical emission order: enum definition order.
JOINT_ORDER: tuple[JointId, ...] = tuple(JointId)
_JOINT_RANK = {j: i for i, j in enumerate(JOINT_ORDER)}

# The six joints that define the tilt parameters.
SPINE_SHOULDER = JointId.SPINE_SHOULDER
SPINE_BASE = JointId.SPINE_BASE
HIP_LEFT = JointId.HIP_LEFT
HIP_RIGHT = JointId.HIP_RIGHT
SHOULDER_LEFT = JointId.SHOULDER_LEFT
SHOULDER_RIGHT = JointId.SHOULDER_RIGHT

DIRECTIONS = ("forward", "back")

COORD_DECIMALS = 6
COORD_QUANTUM = 10.0 ** -COORD_DECIMALS


def _require_finite(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise GaitVarError(f"{what} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class JointSample:
    """One joint position in meters."""

    joint: JointId
    x: float
    y: float
    z: float

    def __post_init__(self):
        for axis in ("x", "y", "z"):
            object.__setattr__(
                self, axis, _require_finite(getattr(self, axis), f"{self.joint} {axis}")
            )

    def coord(self, axis: str) -> float:
        if axis not in ("x", "y", "z"):
            raise GaitVarError(f"unknown axis {axis!r}, expected x, y or z")
        return getattr(self, axis)


@dataclass(frozen=True)
class Frame:
    """All joint samples observed at one capture instant."""

    index: int
    timestamp_ms: int
    joints: dict[JointId, JointSample] = field(default_factory=dict)

    def __post_init__(self):
        if self.index < 0:
            raise GaitVarError(f"frame index must be >= 0, got {self.index}")
        if self.timestamp_ms < 0:
            raise GaitVarError(f"timestamp must be >= 0, got {self.timestamp_ms}")
        for joint, sample in self.joints.items():
            if sample.joint is not joint:
                raise GaitVarError(
                    f"frame {self.index}: sample for {sample.joint} stored under key {joint}"
                )


@dataclass(frozen=True)
class RecordingMeta:
    subject_label: str = ""
    direction: str = "forward"
    condition_label: str = ""
    path_length_m: float = 3.0

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise GaitVarError(
                f"direction must be one of {DIRECTIONS}, got {self.direction!r}"
            )
        if not self.path_length_m > 0:
            raise GaitVarError(f"path_length_m must be > 0, got {self.path_length_m}")


@dataclass(frozen=True)
class Recording:
    """An ordered walking-pass capture plus its metadata."""

    frames: tuple[Frame, ...]
    nominal_fps: float = 30.0
    meta: RecordingMeta = field(default_factory=RecordingMeta)

    def __post_init__(self):
        object.__setattr__(self, "frames", tuple(self.frames))
        if not self.frames:
            raise GaitVarError("recording must contain at least one frame")
        if not self.nominal_fps > 0:
            raise GaitVarError(f"nominal_fps must be > 0, got {self.nominal_fps}")
        indices = [f.index for f in self.frames]
        for prev, cur in zip(indices, indices[1:]):
            if cur <= prev:
                raise GaitVarError(
                    f"frame indices must be strictly increasing, got {prev} then {cur}"
                )

    def frame_count(self) -> int:
        return len(self.frames)


def parse_recording(doc: str) -> Recording:
    """Parse a long-format recording CSV into a Recording.

    Raises ParseError (with the offending line number) on any malformed
    input; never returns a partial recording.
    """
    header_vals: dict[str, str] = {}
    saw_column_header = False
    # frame index -> (timestamp, {joint: sample}, first line no)
    frames: dict[int, tuple[int, dict[JointId, JointSample]]] = {}

    lines = doc.split("\n")
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if saw_column_header:
                raise ParseError("comment after data section", lineno)
            body = line[1:].strip()
            key, sep, value = body.partition("=")
            if sep:
                header_vals.setdefault(key.strip(), value)
            continue
        if not saw_column_header:
            if line != "frame,timestamp_ms,joint,x,y,z":
                raise ParseError(
                    f"expected column header 'frame,timestamp_ms,joint,x,y,z', got {line!r}",
                    lineno,
                )
            saw_column_header = True
            continue

        parts = line.split(",")
        if len(parts) != 6:
            raise ParseError(f"expected 6 columns, got {len(parts)}", lineno)
        try:
            index = int(parts[0])
            timestamp_ms = int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer frame/timestamp in {line!r}", lineno) from None
        try:
            joint = JointId.parse(parts[2])
        except GaitVarError as exc:
            raise ParseError(str(exc), lineno) from None
        try:
            x, y, z = (float(p) for p in parts[3:6])
        except ValueError:
            raise ParseError(f"non-numeric coordinate in {line!r}", lineno) from None

        try:
            sample = JointSample(joint, x, y, z)
        except GaitVarError as exc:
            raise ParseError(str(exc), lineno) from None

        if index in frames:
            stored_ts, joints = frames[index]
            if timestamp_ms != stored_ts:
                raise ParseError(
                    f"frame {index} has conflicting timestamps "
                    f"({stored_ts} and {timestamp_ms})",
                    lineno,
                )
            if joint in joints:
                raise ParseError(f"duplicate sample for frame {index} joint {joint}", lineno)
            joints[joint] = sample
        else:
            if index < 0 or timestamp_ms < 0:
                raise ParseError(f"negative frame index or timestamp in {line!r}", lineno)
            frames[index] = (timestamp_ms, {joint: sample})

    if not saw_column_header or not frames:
        raise ParseError("document contains no data rows")

    meta_kwargs: dict[str, object] = {}
    if "subject" in header_vals:
        meta_kwargs["subject_label"] = header_vals["subject"]
    if "direction" in header_vals:
        meta_kwargs["direction"] = header_vals["direction"]
    if "condition" in header_vals:
        meta_kwargs["condition_label"] = header_vals["condition"]
    for float_key, attr in (("path_length_m", "path_length_m"),):
        if float_key in header_vals:
            try:
                meta_kwargs[attr] = float(header_vals[float_key])
            except ValueError:
                raise ParseError(
                    f"non-numeric header value {float_key}={header_vals[float_key]!r}"
                ) from None
    fps = 30.0
    if "fps" in header_vals:
        try:
            fps = float(header_vals["fps"])
        except ValueError:
            raise ParseError(f"non-numeric header value fps={header_vals['fps']!r}") from None

    try:
        meta = RecordingMeta(**meta_kwargs)  # type: ignore[arg-type]
        return Recording(
            frames=tuple(
                Frame(index=i, timestamp_ms=ts, joints=joints)
                for i, (ts, joints) in sorted(frames.items())
            ),
            nominal_fps=fps,
            meta=meta,
        )
    except GaitVarError as exc:
        raise ParseError(str(exc)) from None


def emit_recording(rec: Recording) -> str:
    """Serialize a Recording to its canonical CSV form.

    Deterministic: fixed header order, frames ascending, joints in
    skeleton order, coordinates rounded to 6 decimals.
    """
    out = [
        f"# fps={rec.nominal_fps!r}",
        f"# subject={rec.meta.subject_label}",
        f"# direction={rec.meta.direction}",
        f"# condition={rec.meta.condition_label}",
        f"# path_length_m={rec.meta.path_length_m!r}",
        "frame,timestamp_ms,joint,x,y,z",
    ]
    for frame in rec.frames:
        for joint in sorted(frame.joints, key=_JOINT_RANK.__getitem__):
            s = frame.joints[joint]
            out.append(
                f"{frame.index},{frame.timestamp_ms},{joint.value},"
                f"{s.x:.6f},{s.y:.6f},{s.z:.6f}"
            )
    return "\n".join(out) + "\n"


def joint_track(rec: Recording, joint: JointId, axis: str) -> list[tuple[int, float]]:
    """Extract one joint's coordinate track as (timestamp_ms, meters) pairs.

    Frames missing the joint are skipped; raises if the joint never appears.
    """
    if axis not in ("x", "y", "z"):
        raise GaitVarError(f"unknown axis {axis!r}, expected x, y or z")
    track = [
        (frame.timestamp_ms, frame.joints[joint].coord(axis))
        for frame in rec.frames
        if joint in frame.joints
    ]
    if not track:
        raise GaitVarError(f"joint never observed: {joint}")
    return track
