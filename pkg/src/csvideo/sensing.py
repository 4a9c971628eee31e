"""Walsh-Hadamard compressive measurement of video frames.

A frame of n pixels is optionally pixel-permuted, zero-padded to the next
power of two N, transformed by the fast Walsh-Hadamard transform and
subsampled on a random row subset, with a 1/sqrt(N) scale so the selected
rows are orthonormal. When n is itself a power of two (no padding) the
operator satisfies apply(adjoint(m)) == m exactly.

Randomness comes from numpy's PCG64 generator: the row subset is drawn
first, then the pixel permutation, both from the same seeded stream, so a
(n_pixels, rate, seed) triple always rebuilds the identical operator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


def next_pow2(n: int) -> int:
    """Smallest power of two >= n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return 1 << (n - 1).bit_length()


def fwht(x: np.ndarray) -> np.ndarray:
    """Unnormalized fast Walsh-Hadamard transform in natural (Sylvester) order.

    Accepts a length-N vector or an (N, m) matrix (transformed column-wise).
    Satisfies fwht(fwht(x)) == N * x.
    """
    x = np.asarray(x, dtype=np.float64)
    vec = x.ndim == 1
    if vec:
        x = x[:, None]
    elif x.ndim != 2:
        raise ValueError(f"expected 1-d or 2-d input, got ndim={x.ndim}")
    n = x.shape[0]
    if n < 1 or n & (n - 1):
        raise ValueError(f"length must be a power of two, got {n}")
    y = x.copy()
    h = 1
    while h < n:
        y = y.reshape(-1, 2, h, y.shape[-1])
        top = y[:, 0, :, :] + y[:, 1, :, :]
        bot = y[:, 0, :, :] - y[:, 1, :, :]
        y = np.stack((top, bot), axis=1)
        h *= 2
    y = y.reshape(n, -1)
    return y[:, 0] if vec else y


@dataclass(frozen=True)
class SensingOperator:
    """Seeded description of the measurement map (immutable, shareable)."""

    n_pixels: int
    padded_dim: int
    rate_r: int
    row_subset: np.ndarray            # strictly increasing, r entries in [0, N)
    pixel_perm: np.ndarray | None     # permutation of [0, n_pixels) or None
    seed: int
    _inv_perm: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.pixel_perm is not None:
            inv = np.empty_like(self.pixel_perm)
            inv[self.pixel_perm] = np.arange(self.n_pixels)
            object.__setattr__(self, "_inv_perm", inv)

    @property
    def is_tight(self) -> bool:
        """True when no padding is needed, so apply o adjoint is the identity."""
        return self.padded_dim == self.n_pixels

    def apply(self, frame: np.ndarray) -> np.ndarray:
        """Measure a frame (length n_pixels) or a stack of frames (n_pixels, m)."""
        frame = np.asarray(frame, dtype=np.float64)
        if frame.shape[0] != self.n_pixels:
            raise ValueError(
                f"frame has {frame.shape[0]} pixels, operator expects {self.n_pixels}"
            )
        vec = frame.ndim == 1
        cols = frame[:, None] if vec else frame
        if self.pixel_perm is not None:
            cols = cols[self.pixel_perm]
        padded = np.zeros((self.padded_dim, cols.shape[1]))
        padded[: self.n_pixels] = cols
        meas = fwht(padded)[self.row_subset] / math.sqrt(self.padded_dim)
        return meas[:, 0] if vec else meas

    def adjoint(self, meas: np.ndarray) -> np.ndarray:
        """Transpose map: measurements (length r or (r, m)) back to pixel space."""
        meas = np.asarray(meas, dtype=np.float64)
        if meas.shape[0] != self.rate_r:
            raise ValueError(
                f"got {meas.shape[0]} measurements, operator expects {self.rate_r}"
            )
        vec = meas.ndim == 1
        cols = meas[:, None] if vec else meas
        scattered = np.zeros((self.padded_dim, cols.shape[1]))
        scattered[self.row_subset] = cols
        out = fwht(scattered)[: self.n_pixels] / math.sqrt(self.padded_dim)
        if self.pixel_perm is not None:
            out = out[self._inv_perm]
        return out[:, 0] if vec else out


def build_operator(
    n_pixels: int, rate: float, seed: int, use_pixel_perm: bool = True
) -> SensingOperator:
    """Draw a fresh operator measuring ceil(rate * n_pixels) values per frame."""
    if n_pixels < 1:
        raise ValueError(f"n_pixels must be positive, got {n_pixels}")
    if not 0.0 < rate <= 1.0:
        raise ValueError(f"measurement rate must lie in (0, 1], got {rate}")
    r = math.ceil(rate * n_pixels)
    return build_operator_r(n_pixels, r, seed, use_pixel_perm)


def build_operator_r(
    n_pixels: int, r: int, seed: int, use_pixel_perm: bool = True
) -> SensingOperator:
    """Build from an explicit measurement count (used when replaying stream headers)."""
    if n_pixels < 1:
        raise ValueError(f"n_pixels must be positive, got {n_pixels}")
    N = next_pow2(n_pixels)
    if not 1 <= r <= N:
        raise ValueError(f"measurement count {r} outside [1, {N}]")
    rng = np.random.Generator(np.random.PCG64(seed))
    rows = np.sort(rng.choice(N, size=r, replace=False)).astype(np.int64)
    perm = rng.permutation(n_pixels).astype(np.int64) if use_pixel_perm else None
    return SensingOperator(
        n_pixels=n_pixels,
        padded_dim=N,
        rate_r=r,
        row_subset=rows,
        pixel_perm=perm,
        seed=seed,
    )
