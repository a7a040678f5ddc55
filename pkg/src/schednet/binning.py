"""Shared uniform-binning helpers."""

from __future__ import annotations

import math

import numpy as np


def uniform_bin_indices(values: np.ndarray, n_bins: int) -> tuple[np.ndarray, np.ndarray]:
    """Assign values to ``n_bins`` equal-width bins over [min, max].

    The maximum value lands in the last bin; a zero-width range puts
    everything in bin 0. Returns ``(indices, edges)`` with ``len(edges)
    == n_bins + 1``.
    """
    values = np.asarray(values, dtype=np.float64)
    lo = values.min()
    hi = values.max()
    edges = np.linspace(lo, hi, n_bins + 1)
    if hi > lo:
        indices = np.floor((values - lo) / (hi - lo) * n_bins).astype(np.int64)
        np.clip(indices, 0, n_bins - 1, out=indices)
    else:
        indices = np.zeros(values.shape, dtype=np.int64)
    return indices, edges


def freedman_diaconis_bins(values: np.ndarray, lo: int = 4, hi: int = 30) -> int:
    """Freedman-Diaconis bin count, clamped to [lo, hi].

    Falls back to the square-root rule when the interquartile range is
    zero; returns 1 for constant data (the degenerate single-bin case).
    """
    values = np.asarray(values, dtype=np.float64)
    span = float(values.max() - values.min())
    if span <= 0.0:
        return 1
    n = len(values)
    q75, q25 = np.percentile(values, [75, 25])
    iqr = float(q75 - q25)
    if iqr > 0.0:
        width = 2.0 * iqr / n ** (1.0 / 3.0)
        raw = math.ceil(span / width)
    else:
        raw = math.ceil(math.sqrt(n))
    return max(lo, min(hi, raw))
