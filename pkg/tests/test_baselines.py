"""DCT-II and PCA baselines against independent oracles."""

import warnings

import numpy as np
import pytest
from scipy.fft import idct

import wavepress as wp
from wavepress.errors import DimensionMismatch, InvalidTruncation, RankDeficientWarning


def naive_dct_ii(x):
    """Direct O(d^2) summation with orthonormal scaling."""
    x = np.asarray(x, dtype=np.float64)
    d = len(x)
    out = np.empty(d)
    for k in range(d):
        s = np.sqrt(1.0 / d) if k == 0 else np.sqrt(2.0 / d)
        out[k] = s * np.sum(x * np.cos(np.pi * (2 * np.arange(d) + 1) * k / (2 * d)))
    return out


class TestDct:
    def test_constant_is_pure_dc(self):
        c, d = 3.25, 20
        out = wp.dct_ii(np.full(d, c))
        assert abs(out[0] - c * np.sqrt(d)) < 1e-12
        np.testing.assert_allclose(out[1:], 0.0, atol=1e-12)

    @pytest.mark.parametrize("d", [1, 2, 5, 128, 512])
    def test_matches_naive_oracle(self, d):
        x = np.random.default_rng(d).standard_normal(d)
        np.testing.assert_allclose(wp.dct_ii(x), naive_dct_ii(x), atol=1e-10)

    def test_parseval(self):
        rng = np.random.default_rng(1)
        for d in (3, 64, 300, 768):
            x = rng.standard_normal(d)
            assert abs(np.sum(wp.dct_ii(x) ** 2) - np.sum(x**2)) < 1e-10 * np.sum(x**2)

    def test_truncate(self):
        rng = np.random.default_rng(2)
        x = rng.standard_normal(768)
        np.testing.assert_array_equal(wp.dct_truncate(x, 768), wp.dct_ii(x))
        assert wp.dct_truncate(x, 384).shape == (384,)
        np.testing.assert_array_equal(wp.dct_truncate(x, 384), wp.dct_ii(x)[:384])

    def test_truncate_constant_to_dc_reconstructs(self):
        c, d = -1.5, 16
        x = np.full(d, c)
        kept = wp.dct_truncate(x, 1)
        np.testing.assert_allclose(kept, [c * np.sqrt(d)], atol=1e-12)
        padded = np.zeros(d)
        padded[0] = kept[0]
        np.testing.assert_allclose(idct(padded, type=2, norm="ortho"), x, atol=1e-12)

    def test_invalid_truncation(self):
        x = np.zeros(8)
        for n in (0, 9, -1):
            with pytest.raises(InvalidTruncation):
                wp.dct_truncate(x, n)

    def test_batch_rows_match_vectors(self):
        rng = np.random.default_rng(3)
        m = rng.standard_normal((4, 32))
        batch = wp.dct_ii(m)
        for i in range(4):
            np.testing.assert_array_equal(batch[i], wp.dct_ii(m[i]))


def principal_angle(u, v):
    """Largest principal angle between the row spaces of u and v (radians)."""
    qu, _ = np.linalg.qr(u.T)
    qv, _ = np.linalg.qr(v.T)
    sv = np.linalg.svd(qu.T @ qv, compute_uv=False)
    return float(np.arccos(np.clip(sv.min(), -1.0, 1.0)))


class TestPca:
    def test_collinear_points(self):
        t = np.linspace(-2, 2, 9)
        m = np.stack([t, 2 * t], axis=1)
        model = wp.pca_fit(m, 1)
        direction = np.array([1.0, 2.0]) / np.sqrt(5.0)
        np.testing.assert_allclose(np.abs(model.components[0]), direction, atol=1e-12)
        # sign convention: largest-magnitude entry positive
        assert model.components[0][1] > 0
        with pytest.warns(RankDeficientWarning):
            wp.pca_fit(m, 2)

    def test_matches_covariance_eigendecomposition(self):
        rng = np.random.default_rng(4)
        m = rng.standard_normal((6, 4))
        model = wp.pca_fit(m, 2)
        cov = np.cov(m, rowvar=False)
        eigvals, eigvecs = np.linalg.eigh(cov)
        top2 = eigvecs[:, np.argsort(eigvals)[::-1][:2]].T
        assert principal_angle(model.components, top2) < 1e-10
        np.testing.assert_allclose(
            np.sort(model.explained_variance)[::-1],
            np.sort(eigvals)[::-1][:2],
            atol=1e-12,
        )

    def test_full_rank_reconstruction(self):
        rng = np.random.default_rng(5)
        m = rng.standard_normal((12, 5))
        model = wp.pca_fit(m, 5)
        z = wp.pca_transform(model, m)
        recon = z @ model.components + model.mean
        assert np.max(np.abs(recon - m)) < 1e-8

    def test_transform_contracts(self):
        rng = np.random.default_rng(6)
        m = rng.standard_normal((30, 300))
        model = wp.pca_fit(m, 150)
        assert wp.pca_transform(model, m).shape == (30, 150)
        np.testing.assert_allclose(
            wp.pca_transform(model, model.mean[np.newaxis, :]), 0.0, atol=1e-10
        )
        with pytest.raises(DimensionMismatch):
            wp.pca_transform(model, rng.standard_normal((3, 299)))

    def test_components_orthonormal_and_variance_sorted(self):
        rng = np.random.default_rng(7)
        m = rng.standard_normal((20, 6))
        model = wp.pca_fit(m, 4)
        gram = model.components @ model.components.T
        np.testing.assert_allclose(gram, np.eye(4), atol=1e-8)
        assert np.all(np.diff(model.explained_variance) <= 1e-12)
        assert np.all(model.explained_variance >= 0)

    def test_beats_random_frames(self):
        rng = np.random.default_rng(8)
        m = rng.standard_normal((15, 5))
        model = wp.pca_fit(m, 2)
        centered = m - model.mean
        fitted_err = np.sum((centered - (centered @ model.components.T) @ model.components) ** 2)
        for _ in range(200):
            q, _ = np.linalg.qr(rng.standard_normal((5, 2)))
            frame = q.T
            err = np.sum((centered - (centered @ frame.T) @ frame) ** 2)
            assert fitted_err <= err + 1e-9

    def test_preserves_distances_at_full_rank(self):
        rng = np.random.default_rng(9)
        m = rng.standard_normal((10, 4))
        model = wp.pca_fit(m, 4)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RankDeficientWarning)
            z = wp.pca_transform(model, m)
        d_orig = np.linalg.norm(m[:, None, :] - m[None, :, :], axis=2)
        d_proj = np.linalg.norm(z[:, None, :] - z[None, :, :], axis=2)
        np.testing.assert_allclose(d_proj, d_orig, atol=1e-8)

    def test_preconditions(self):
        rng = np.random.default_rng(10)
        with pytest.raises(ValueError):
            wp.pca_fit(rng.standard_normal((1, 4)), 1)
        with pytest.raises(ValueError):
            wp.pca_fit(rng.standard_normal((5, 4)), 5)
