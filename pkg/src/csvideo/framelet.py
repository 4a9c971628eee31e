"""Undecimated piecewise-linear B-spline framelet transform.

One decomposition level, separable in 2-D, with the three-filter bank

    h0 = 1/4 [1, 2, 1]        (lowpass)
    h1 = sqrt(2)/4 [1, 0, -1] (first difference)
    h2 = 1/4 [-1, 2, -1]      (second difference)

giving 9 full-resolution subbands per frame. Boundaries use half-sample
symmetric extension (edge pixel duplicated), under which the transform is
an exact tight frame: synthesis(analysis(x)) == x and energy is preserved,
up to floating point. Whole-sample reflection does not have this property,
which is why the extension mode is fixed here and not configurable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_SQ2 = np.sqrt(2.0)
FILTERS = (
    np.array([1.0, 2.0, 1.0]) / 4.0,
    np.array([1.0, 0.0, -1.0]) * (_SQ2 / 4.0),
    np.array([-1.0, 2.0, -1.0]) / 4.0,
)
N_SUBBANDS = 9


@dataclass(frozen=True)
class FrameletCoeffs:
    """Coefficient stack of one frame: subbands[i, j] pairs filter i (rows
    of the image, axis 0) with filter j (columns, axis 1); (0, 0) is the
    lowpass plane."""

    width: int
    height: int
    subbands: np.ndarray  # shape (3, 3, height, width)


def _filter_axis(x: np.ndarray, h: np.ndarray, axis: int) -> np.ndarray:
    """Correlate a 3-tap centered filter along one axis, symmetric extension."""
    pad = [(0, 0)] * x.ndim
    pad[axis] = (1, 1)
    xp = np.pad(x, pad, mode="symmetric")
    L = x.shape[axis]
    sl = lambda a, b: tuple(
        slice(a, b) if ax == axis else slice(None) for ax in range(x.ndim)
    )
    return h[0] * xp[sl(0, L)] + h[1] * xp[sl(1, L + 1)] + h[2] * xp[sl(2, L + 2)]


def _filter_axis_adjoint(y: np.ndarray, h: np.ndarray, axis: int) -> np.ndarray:
    """Exact adjoint of _filter_axis: scatter taps, fold the two boundary
    contributions back onto the edge samples."""
    L = y.shape[axis]
    shape = list(y.shape)
    shape[axis] = L + 2
    z = np.zeros(shape)
    sl = lambda a, b: tuple(
        slice(a, b) if ax == axis else slice(None) for ax in range(y.ndim)
    )
    for k in range(3):
        z[sl(k, k + L)] += h[k] * y
    z[sl(1, 2)] += z[sl(0, 1)]
    z[sl(L, L + 1)] += z[sl(L + 1, L + 2)]
    return z[sl(1, L + 1)]


def analysis(frame: np.ndarray) -> FrameletCoeffs:
    """Decompose a height x width image into 9 same-size subbands."""
    frame = np.asarray(frame, dtype=np.float64)
    if frame.ndim != 2 or frame.shape[0] < 2 or frame.shape[1] < 2:
        raise ValueError(f"expected an image of at least 2x2 pixels, got shape {frame.shape}")
    height, width = frame.shape
    bands = np.empty((3, 3, height, width))
    for i, hi in enumerate(FILTERS):
        rows = _filter_axis(frame, hi, axis=0)
        for j, hj in enumerate(FILTERS):
            bands[i, j] = _filter_axis(rows, hj, axis=1)
    return FrameletCoeffs(width=width, height=height, subbands=bands)


def synthesis(coeffs: FrameletCoeffs) -> np.ndarray:
    """Adjoint of analysis. For any x, synthesis(analysis(x)) == x."""
    bands = np.asarray(coeffs.subbands, dtype=np.float64)
    if bands.shape != (3, 3, coeffs.height, coeffs.width):
        raise ValueError(
            f"subband stack has shape {bands.shape}, "
            f"expected (3, 3, {coeffs.height}, {coeffs.width})"
        )
    out = np.zeros((coeffs.height, coeffs.width))
    for i, hi in enumerate(FILTERS):
        for j, hj in enumerate(FILTERS):
            cols = _filter_axis_adjoint(bands[i, j], hj, axis=1)
            out += _filter_axis_adjoint(cols, hi, axis=0)
    return out


def coeff_l1(coeffs: FrameletCoeffs) -> float:
    """Sum of absolute values over all 9 subbands."""
    return float(np.abs(coeffs.subbands).sum())


def analyze_columns(X: np.ndarray, height: int, width: int) -> np.ndarray:
    """Transform each column of an (n, m) matrix of flattened frames.

    Returns a (9, n, m) stack; used by the solver, which treats the whole
    batch at once. Row-major flattening (C order) is assumed throughout.
    """
    X = np.asarray(X, dtype=np.float64)
    n, m = X.shape
    if n != height * width:
        raise ValueError(f"{n} rows cannot be {height}x{width} frames")
    frames = X.T.reshape(m, height, width)
    out = np.empty((3, 3, m, height, width))
    for i, hi in enumerate(FILTERS):
        rows = _filter_axis(frames, hi, axis=1)
        for j, hj in enumerate(FILTERS):
            out[i, j] = _filter_axis(rows, hj, axis=2)
    return out.reshape(9, m, n).transpose(0, 2, 1)


def synthesize_columns(C: np.ndarray, height: int, width: int) -> np.ndarray:
    """Adjoint of analyze_columns: (9, n, m) stack back to an (n, m) matrix."""
    C = np.asarray(C, dtype=np.float64)
    nine, n, m = C.shape
    if nine != 9 or n != height * width:
        raise ValueError(f"coefficient stack has shape {C.shape}, expected (9, {height * width}, m)")
    bands = C.transpose(0, 2, 1).reshape(3, 3, m, height, width)
    out = np.zeros((m, height, width))
    for i, hi in enumerate(FILTERS):
        for j, hj in enumerate(FILTERS):
            cols = _filter_axis_adjoint(bands[i, j], hj, axis=2)
            out += _filter_axis_adjoint(cols, hi, axis=1)
    return out.reshape(m, n).T
