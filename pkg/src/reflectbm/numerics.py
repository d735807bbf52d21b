"""Floating-point utilities: deterministic summation and ulp distances.

All Monte Carlo estimates in this package are reduced with compensated
summation over fixed-size chunks, so a result depends only on the sample
values and their order, never on how the producing work was scheduled.
"""

from __future__ import annotations

import struct

import numpy as np

#: Chunk length for compensated reductions. Fixed so that repeated runs
#: (and any upstream parallelism) reduce in the same order.
SUM_CHUNK = 1 << 16


def kahan_sum(values, chunk: int = SUM_CHUNK) -> float:
    """Sum 1-D data with Kahan compensation over fixed-size chunks.

    Each chunk is summed by numpy (pairwise, deterministic for a given
    chunk), then chunk totals are combined left to right with a running
    compensation term.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 1:
        raise ValueError("kahan_sum expects 1-D data")
    total = 0.0
    comp = 0.0
    for start in range(0, values.size, chunk):
        part = float(np.sum(values[start : start + chunk]))
        y = part - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def kahan_mean(values, chunk: int = SUM_CHUNK) -> float:
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        raise ValueError("mean of empty data")
    return kahan_sum(values, chunk) / values.size


def mean_and_se(values, chunk: int = SUM_CHUNK) -> tuple[float, float]:
    """Deterministic sample mean and standard error of the mean.

    Uses a two-pass compensated reduction: mean first, then centered
    second moments with the sample (n-1) normalization.
    """
    values = np.asarray(values, dtype=np.float64)
    n = values.size
    if n < 2:
        raise ValueError("standard error needs at least two samples")
    m = kahan_mean(values, chunk)
    ss = kahan_sum((values - m) ** 2, chunk)
    sd = np.sqrt(ss / (n - 1))
    return m, float(sd / np.sqrt(n))


def _float_key(x: float) -> int:
    """Map a float64 to an integer so adjacent floats differ by one.

    Orders the whole finite float lattice; +0.0 and -0.0 map to the same
    key. Not defined for NaN.
    """
    (i,) = struct.unpack("<q", struct.pack("<d", float(x)))
    if i < 0:
        return -(2**63) - i
    return i


def ulp_diff(a: float, b: float) -> int:
    """Distance between two floats in units in the last place.

    Counts the representable doubles strictly between `a` and `b`, plus
    one if they differ; 0 means bit-for-bit equal (up to signed zero).
    """
    return abs(_float_key(a) - _float_key(b))
