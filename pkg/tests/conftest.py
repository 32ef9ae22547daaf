"""Shared test helpers: seeded random-recording generation."""

from __future__ import annotations

import numpy as np

from gaitvar.skeleton import (
    Frame,
    JOINT_ORDER,
    JointSample,
    Recording,
    RecordingMeta,
)


def random_recording(
    seed: int,
    n_frames: int | None = None,
    quantized: bool = False,
    sparse: bool = False,
) -> Recording:
    """Build a random but valid Recording from a seed.

    quantized=True rounds coordinates to the 1e-6 emission grid so the
    round trip is exact.  sparse=True drops a random subset of joints per
    frame (keeping at least one).
    """
    rng = np.random.default_rng(seed)
    if n_frames is None:
        n_frames = int(rng.integers(1, 12))
    frames = []
    for i in range(n_frames):
        joints = {}
        for joint in JOINT_ORDER:
            if sparse and rng.random() < 0.3:
                continue
            x, y, z = rng.uniform(-3.0, 5.0, size=3)
            if quantized:
                x, y, z = (round(v, 6) for v in (x, y, z))
            joints[joint] = JointSample(joint, float(x), float(y), float(z))
        if not joints:
            joint = JOINT_ORDER[int(rng.integers(len(JOINT_ORDER)))]
            joints[joint] = JointSample(joint, 0.0, 0.0, 0.0)
        frames.append(Frame(index=i, timestamp_ms=i * 33, joints=joints))
    return Recording(
        frames=tuple(frames),
        nominal_fps=30.0,
        meta=RecordingMeta(
            subject_label=f"S{seed % 7}",
            direction="forward" if seed % 2 == 0 else "back",
            condition_label="rand",
            path_length_m=3.0,
        ),
    )
