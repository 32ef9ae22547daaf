"""Independent reference implementations used only as test oracles.

These are deliberately naive (pure-Python double loops, explicit
re-derivations from sorted values) and share no code with the package.
"""

from __future__ import annotations

import math
from itertools import combinations


def sampen_bruteforce(series: list[float], m: int, r: float):
    """Exhaustive template-pair counting for sample entropy.

    Enumerates every unordered pair of template start indices i < j with
    both index ranges running to N - m, compares templates with the
    Chebyshev distance, and returns (a_count, b_count, value).  value is
    None when either count is 0.
    """
    n = len(series)
    n_templates = n - m
    b_count = 0
    a_count = 0
    for i in range(n_templates):
        for j in range(i + 1, n_templates):
            # length-m comparison
            match_m = True
            for k in range(m):
                if abs(series[i + k] - series[j + k]) > r:
                    match_m = False
                    break
            if not match_m:
                continue
            b_count += 1
            # extend to length m+1
            if abs(series[i + m] - series[j + m]) <= r:
                a_count += 1
    if b_count == 0 or a_count == 0:
        return a_count, b_count, None
    return a_count, b_count, -math.log(a_count / b_count)


def quartiles_by_hand(values: list[float]) -> tuple[float, float, float]:
    """(q1, median, q3) by linear interpolation between order statistics."""

    def at(p: float) -> float:
        ordered = sorted(values)
        h = (len(ordered) - 1) * p
        lo = math.floor(h)
        hi = math.ceil(h)
        return ordered[lo] + (h - lo) * (ordered[hi] - ordered[lo])

    return at(0.25), at(0.5), at(0.75)


def mannwhitney_enumerate(x: list[float], y: list[float]) -> float:
    """Exact two-sided Mann-Whitney p by enumerating group assignments.

    U is computed directly from pairwise comparisons (ties count 1/2), so
    this stays correct for tied data.  Exponential in len(x)+len(y); only
    usable for tiny samples.
    """

    def u_stat(xs, ys):
        u = 0.0
        for a in xs:
            for b in ys:
                if a > b:
                    u += 1.0
                elif a == b:
                    u += 0.5
        return u

    pooled = list(x) + list(y)
    n1 = len(x)
    n1n2 = n1 * len(y)
    u_obs = u_stat(x, y)
    lo = min(u_obs, n1n2 - u_obs)
    hi = max(u_obs, n1n2 - u_obs)
    total = 0
    extreme = 0
    for picks in combinations(range(len(pooled)), n1):
        chosen = set(picks)
        xs = [pooled[i] for i in picks]
        ys = [pooled[i] for i in range(len(pooled)) if i not in chosen]
        u = u_stat(xs, ys)
        total += 1
        if u <= lo or u >= hi:
            extreme += 1
    return min(1.0, extreme / total)
