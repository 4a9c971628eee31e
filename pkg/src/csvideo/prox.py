"""Proximal operators and norms for the low-rank + sparse solver.

Soft thresholding is the prox of the elementwise l1 norm, singular value
thresholding (SVT) the prox of the nuclear norm. Both solve

    argmin_Z  tau * penalty(Z) + 1/2 * ||Z - A||_F^2

exactly. The thin-SVD kernel they share wraps LAPACK with a fixed sign
convention so repeated runs are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Singular values below RANK_TOL * sigma_1 are treated as zero so that
# downstream rank decisions do not flip on round-off noise.
RANK_TOL = 1e-12


@dataclass(frozen=True)
class ThinSVD:
    """Thin SVD A = U @ diag(singulars) @ V.T with k = min(n, m)."""

    U: np.ndarray
    singulars: np.ndarray
    V: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.U * self.singulars) @ self.V.T


def soft_threshold(A: np.ndarray, tau: float) -> np.ndarray:
    """Elementwise shrinkage sign(a) * max(|a| - tau, 0)."""
    if tau < 0:
        raise ValueError(f"threshold must be nonnegative, got {tau}")
    A = np.asarray(A, dtype=np.float64)
    return np.sign(A) * np.maximum(np.abs(A) - tau, 0.0)


def _fix_signs(U: np.ndarray, V: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Convention: first nonzero entry of each U column is nonnegative.
    for j in range(U.shape[1]):
        col = U[:, j]
        nz = np.nonzero(np.abs(col) > RANK_TOL * max(np.abs(col).max(), 1e-300))[0]
        lead = col[nz[0]] if nz.size else 0.0
        if lead < 0:
            U[:, j] = -col
            V[:, j] = -V[:, j]
    return U, V


def thin_svd(A: np.ndarray) -> ThinSVD:
    """Thin SVD with nonincreasing singular values and fixed column signs."""
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise ValueError(f"expected a nonempty 2-d matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix contains non-finite entries")
    U, s, Vh = np.linalg.svd(A, full_matrices=False)
    V = Vh.T
    if s.size and s[0] > 0:
        s = np.where(s < RANK_TOL * s[0], 0.0, s)
    U, V = _fix_signs(U, V)
    return ThinSVD(U=U, singulars=s, V=V)


def svt(A: np.ndarray, tau: float) -> np.ndarray:
    """Singular value thresholding: shrink the spectrum of A by tau."""
    if tau < 0:
        raise ValueError(f"threshold must be nonnegative, got {tau}")
    dec = thin_svd(A)
    shrunk = np.maximum(dec.singulars - tau, 0.0)
    return (dec.U * shrunk) @ dec.V.T


def nuclear_norm(A: np.ndarray) -> float:
    """Sum of singular values."""
    A = np.asarray(A, dtype=np.float64)
    if A.size == 0:
        return 0.0
    return float(np.linalg.svd(A, compute_uv=False).sum())


def matrix_l1(A: np.ndarray) -> float:
    """Sum of absolute values of all entries."""
    return float(np.abs(np.asarray(A, dtype=np.float64)).sum())
