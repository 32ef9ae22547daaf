"""Sample entropy of tilt-angle series.

Sample entropy (SampEn, Richman & Moorman 2000) summarizes the
irregularity of a series as -ln(A/B), where B counts pairs of length-m
templates lying within a Chebyshev tolerance r of each other and A counts
the pairs that still match when extended to length m+1.  Self-matches are
excluded, and both template index ranges stop at N - m so that every
(m+1)-match implies an m-match, which keeps A <= B and the value
nonnegative.  Lower values mean a more regular signal.

The tolerance is either a fixed angle in degrees or a factor of the
series' population standard deviation (the common convention; 0.2 by
default).  Zero-match cases raise instead of fabricating an infinite
value: a silent infinity would poison downstream replicate statistics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import GaitVarError

TOLERANCE_MODES = ("abs", "sd")


@dataclass(frozen=True)
class SampEnConfig:
    """Embedding dimension and tolerance for sample entropy.

    tolerance_mode "abs" treats tolerance as degrees; "sd" treats it as a
    multiple of the series' population standard deviation.
    """

    embedding_dim: int = 2
    tolerance: float = 0.2
    tolerance_mode: str = "sd"

    def __post_init__(self):
        if self.embedding_dim < 1:
            raise GaitVarError(f"embedding_dim must be >= 1, got {self.embedding_dim}")
        if not self.tolerance > 0:
            raise GaitVarError(f"tolerance must be > 0, got {self.tolerance}")
        if self.tolerance_mode not in TOLERANCE_MODES:
            raise GaitVarError(
                f"tolerance_mode must be one of {TOLERANCE_MODES}, got {self.tolerance_mode!r}"
            )


@dataclass(frozen=True)
class SampEnResult:
    value: float
    a_count: int
    b_count: int
    n: int
    resolved_tolerance: float


class SampEnError(GaitVarError):
    """Sample entropy could not be computed; carries the match counts."""

    def __init__(self, message: str, a_count: int = 0, b_count: int = 0):
        self.a_count = a_count
        self.b_count = b_count
        super().__init__(message)


def resolve_tolerance(series: Sequence[float], config: SampEnConfig) -> float:
    """Turn the configured tolerance into degrees for a concrete series."""
    if config.tolerance_mode == "abs":
        return config.tolerance
    if len(series) < 2:
        raise SampEnError("need at least 2 samples to resolve an SD-relative tolerance")
    sd = float(np.std(np.asarray(series, dtype=float)))
    if sd == 0.0:
        raise SampEnError("zero variance tolerance: series is constant")
    return config.tolerance * sd


def _count_template_pairs(x: np.ndarray, length: int, n_templates: int, r: float) -> int:
    """Pairs (i < j) of length-`length` templates within Chebyshev distance r.

    Only the first n_templates start indices participate, so the m and m+1
    counts range over the same index set.
    """
    templates = np.lib.stride_tricks.sliding_window_view(x, length)[:n_templates]
    count = 0
    for i in range(n_templates - 1):
        dist = np.abs(templates[i + 1 :] - templates[i]).max(axis=1)
        count += int(np.count_nonzero(dist <= r))
    return count


def sample_entropy(series: Sequence[float], config: SampEnConfig = SampEnConfig()) -> SampEnResult:
    """Sample entropy of a series under the given configuration.

    Raises SampEnError when the series is too short, when no length-m
    template pair matches, or when no matching pair survives extension to
    m+1 (the counts ride along on the exception).
    """
    x = np.asarray(series, dtype=float)
    n = len(x)
    m = config.embedding_dim
    if n < m + 2:
        raise SampEnError(f"insufficient length: need at least {m + 2} samples, got {n}")
    r = resolve_tolerance(series, config)

    n_templates = n - m
    b_count = _count_template_pairs(x, m, n_templates, r)
    a_count = _count_template_pairs(x, m + 1, n_templates, r)

    if b_count == 0:
        raise SampEnError("no template matches at length m", a_count, b_count)
    if a_count == 0:
        raise SampEnError(
            f"undefined entropy (zero A): {b_count} m-matches, none extended",
            a_count,
            b_count,
        )
    value = 0.0 if a_count == b_count else -math.log(a_count / b_count)
    return SampEnResult(
        value=value,
        a_count=a_count,
        b_count=b_count,
        n=n,
        resolved_tolerance=r,
    )


def batch_sample_entropy(
    series_set: Sequence[Sequence[float]], config: SampEnConfig = SampEnConfig()
) -> list[SampEnResult | SampEnError]:
    """Apply sample_entropy to each series, keeping per-series failures.

    The returned list matches the input order; elements are SampEnResult
    on success and the raised SampEnError otherwise.
    """
    out: list[SampEnResult | SampEnError] = []
    for series in series_set:
        try:
            out.append(sample_entropy(series, config))
        except SampEnError as exc:
            out.append(exc)
    return out
