"""Reference compressors: orthonormal DCT-II truncation and PCA projection."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.fft import dct as _scipy_dct

from .errors import DimensionMismatch, InvalidTruncation, RankDeficientWarning


def dct_ii(x) -> np.ndarray:
    """Orthonormal DCT-II along the last axis.

    X[k] = s(k) * sum_n x[n] cos(pi (2n+1) k / (2d)) with s(0) = sqrt(1/d)
    and s(k>0) = sqrt(2/d), so the transform preserves the Euclidean norm.
    """
    arr = np.asarray(x, dtype=np.float64)
    if arr.shape[-1] < 1:
        raise InvalidTruncation("empty input")
    return _scipy_dct(arr, type=2, norm="ortho", axis=-1)


def dct_truncate(x, n: int) -> np.ndarray:
    """First n orthonormal DCT-II coefficients (the paper's DCT baseline)."""
    arr = np.asarray(x, dtype=np.float64)
    d = arr.shape[-1]
    if not 1 <= n <= d:
        raise InvalidTruncation(f"keep {n} of {d} coefficients")
    return dct_ii(arr)[..., :n]


@dataclass(frozen=True)
class PcaModel:
    """Mean vector plus top-k orthonormal components (descending variance)."""

    mean: np.ndarray
    components: np.ndarray  # (k, d), rows orthonormal
    explained_variance: np.ndarray  # (k,), non-increasing

    @property
    def k(self) -> int:
        return self.components.shape[0]

    @property
    def dim(self) -> int:
        return self.components.shape[1]


def pca_fit(matrix, k: int) -> PcaModel:
    """Fit PCA via SVD of the centered matrix.

    Components are the top right singular vectors, with a deterministic sign
    convention: each component's entry of largest magnitude is positive.
    Near-zero explained variance on the last component is reported as a
    RankDeficientWarning, not an error.
    """
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionMismatch("pca_fit expects an N x d matrix")
    n, d = m.shape
    if n < 2:
        raise ValueError("PCA needs at least 2 rows")
    if not 1 <= k <= min(n - 1, d):
        raise ValueError(f"component count {k} outside [1, {min(n - 1, d)}]")
    mean = m.mean(axis=0)
    _, s, vt = np.linalg.svd(m - mean, full_matrices=False)
    components = vt[:k]
    explained = (s[:k] ** 2) / (n - 1)
    flip = np.sign(
        components[np.arange(k), np.argmax(np.abs(components), axis=1)]
    )
    flip[flip == 0] = 1.0
    components = components * flip[:, None]
    if explained[-1] < 1e-12:
        warnings.warn(
            f"component {k} explains ~zero variance ({explained[-1]:.3e})",
            RankDeficientWarning,
            stacklevel=2,
        )
    return PcaModel(mean=mean, components=components, explained_variance=explained)


def pca_transform(model: PcaModel, matrix) -> np.ndarray:
    """Project rows onto the fitted components: (m - mean) @ components.T."""
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim == 1:
        m = m[np.newaxis, :]
    if m.shape[1] != model.dim:
        raise DimensionMismatch(
            f"matrix dim {m.shape[1]} != model dim {model.dim}"
        )
    return (m - model.mean) @ model.components.T
