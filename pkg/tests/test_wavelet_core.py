"""Filter-bank identities and forward/inverse transform contracts."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import wavepress as wp
from wavepress.errors import (
    DimensionTooSmall,
    LengthMismatch,
    TooManyLevels,
    UnsupportedWavelet,
)

ALL_WAVELETS = [w.name for w in wp.supported_wavelets()]
ALL_MODES = list(wp.PaddingMode)

# explicit 4x4 orthogonal Haar analysis matrix, the independent oracle for
# the stride-2 correlation convention
HAAR4 = np.array(
    [
        [1, 1, 0, 0],
        [0, 0, 1, 1],
        [1, -1, 0, 0],
        [0, 0, 1, -1],
    ]
) / np.sqrt(2)


class TestFilterTables:
    def test_haar_is_the_defining_pair(self):
        pair = wp.get_filters("haar")
        s = 1 / np.sqrt(2)
        np.testing.assert_allclose(pair.dec_lo, [s, s], atol=0)
        np.testing.assert_allclose(pair.dec_hi, [s, -s], atol=0)

    def test_db2_length_and_identities(self):
        pair = wp.get_filters("db2")
        assert len(pair) == 4
        self._check_identities(pair)

    @pytest.mark.parametrize("name", ALL_WAVELETS)
    def test_every_table_passes_identities(self, name):
        self._check_identities(wp.get_filters(name))

    @staticmethod
    def _check_identities(pair):
        lo = pair.dec_lo
        L = len(lo)
        assert abs(lo.sum() - np.sqrt(2)) < 1e-10
        for k in range(L):
            assert abs(pair.dec_hi[k] - (-1) ** k * lo[L - 1 - k]) < 1e-10
        for k in range(L // 2):
            target = 1.0 if k == 0 else 0.0
            assert abs(np.dot(lo[: L - 2 * k], lo[2 * k :]) - target) < 1e-10
        np.testing.assert_array_equal(pair.rec_lo, lo[::-1])
        np.testing.assert_array_equal(pair.rec_hi, pair.dec_hi[::-1])

    def test_out_of_range_orders_rejected(self):
        for bad in ("coif17", "db11", "sym1", "coif0", "sym11", "db0"):
            with pytest.raises(UnsupportedWavelet):
                wp.get_filters(bad)
        with pytest.raises(UnsupportedWavelet):
            wp.WaveletFamily(wp.Family.COIFLET, 17)

    def test_parse_accepts_case_and_rejects_garbage(self):
        assert wp.WaveletFamily.parse("Coif3").name == "coif3"
        assert wp.WaveletFamily.parse(" HAAR ").name == "haar"
        for bad in ("wavelet", "db", "haar2", ""):
            with pytest.raises(UnsupportedWavelet):
                wp.WaveletFamily.parse(bad)


class TestDwtLevel:
    def test_constant_signal_has_no_detail(self):
        _, cd = wp.dwt_level(np.full(4, 3.7), wp.get_filters("haar"))
        np.testing.assert_allclose(cd, 0.0, atol=1e-15)

    def test_haar_matrix_oracle(self):
        x = np.array([4.0, 6.0, 10.0, 12.0])
        expected = HAAR4 @ x
        ca, cd = wp.dwt_level(x, wp.get_filters("haar"))
        np.testing.assert_allclose(ca, expected[:2], atol=1e-14)
        np.testing.assert_allclose(cd, expected[2:], atol=1e-14)
        np.testing.assert_allclose(ca, [10 / np.sqrt(2), 22 / np.sqrt(2)])
        np.testing.assert_allclose(cd, [-2 / np.sqrt(2), -2 / np.sqrt(2)])

    @pytest.mark.parametrize("name", ["haar", "db4", "sym6", "coif2"])
    def test_dim_300_halves(self, name):
        ca, cd = wp.dwt_level(np.random.default_rng(0).standard_normal(300),
                              wp.get_filters(name))
        assert ca.shape == cd.shape == (150,)

    def test_too_small(self):
        with pytest.raises(DimensionTooSmall):
            wp.dwt_level(np.array([1.0]), wp.get_filters("haar"))

    def test_batch_matches_per_row(self):
        rng = np.random.default_rng(1)
        x = rng.standard_normal((5, 64))
        pair = wp.get_filters("sym4")
        for mode in ALL_MODES:
            ca, cd = wp.dwt_level(x, pair, mode)
            for i in range(5):
                ca_i, cd_i = wp.dwt_level(x[i], pair, mode)
                np.testing.assert_array_equal(ca[i], ca_i)
                np.testing.assert_array_equal(cd[i], cd_i)


class TestIdwtLevel:
    def test_haar_matrix_inverse_oracle(self):
        ca = np.array([10.0, 22.0]) / np.sqrt(2)
        cd = np.array([-2.0, -2.0]) / np.sqrt(2)
        expected = HAAR4.T @ np.concatenate([ca, cd])
        out = wp.idwt_level(ca, cd, wp.get_filters("haar"))
        np.testing.assert_allclose(out, expected, atol=1e-14)
        np.testing.assert_allclose(out, [4, 6, 10, 12], atol=1e-12)

    def test_coefficients_roundtrip_through_signal_domain(self):
        x = np.array([0.5, -1.25, 2.0, 3.5])
        pair = wp.get_filters("haar")
        u = wp.idwt_level(x, np.zeros(4), pair)
        ca, cd = wp.dwt_level(u, pair)
        np.testing.assert_allclose(ca, x, atol=1e-14)
        np.testing.assert_allclose(cd, 0.0, atol=1e-14)

    def test_random_roundtrip_dim_768_coif3(self):
        rng = np.random.default_rng(2)
        x = rng.standard_normal(768)
        pair = wp.get_filters("coif3")
        ca, cd = wp.dwt_level(x, pair)
        out = wp.idwt_level(ca, cd, pair, original_dim=768)
        assert np.max(np.abs(out - x)) < 1e-8

    def test_length_mismatch(self):
        pair = wp.get_filters("haar")
        with pytest.raises(LengthMismatch):
            wp.idwt_level(np.zeros(3), np.zeros(2), pair)
        with pytest.raises(LengthMismatch):
            wp.idwt_level(np.zeros(2), np.zeros(2), pair, original_dim=100)
        with pytest.raises(LengthMismatch):
            wp.idwt_level(np.zeros(2), np.zeros(2), pair,
                          wp.PaddingMode.SYMMETRIC)


@settings(max_examples=60, deadline=None)
@given(
    d=st.integers(min_value=2, max_value=1024),
    wavelet=st.sampled_from(ALL_WAVELETS),
    mode=st.sampled_from(ALL_MODES),
    seed=st.integers(min_value=0, max_value=2**31),
)
def test_perfect_reconstruction_property(d, wavelet, mode, seed):
    x = np.random.default_rng(seed).standard_normal(d)
    pair = wp.get_filters(wavelet)
    ca, cd = wp.dwt_level(x, pair, mode)
    assert ca.shape == cd.shape == (wp.coeff_len(d, len(pair), mode),)
    out = wp.idwt_level(ca, cd, pair, mode, original_dim=d)
    scale = max(1.0, np.max(np.abs(x)))
    assert np.max(np.abs(out - x)) / scale < 1e-8


def test_parseval_even_dims():
    rng = np.random.default_rng(3)
    for name in ("haar", "db6", "sym9", "coif5"):
        x = rng.standard_normal((50, 300))
        ca, cd = wp.dwt_level(x, wp.get_filters(name))
        energy = np.sum(ca**2, axis=1) + np.sum(cd**2, axis=1)
        ref = np.sum(x**2, axis=1)
        assert np.max(np.abs(energy - ref) / ref) < 1e-8


def test_linearity():
    rng = np.random.default_rng(4)
    x, y = rng.standard_normal((2, 120))
    a, b = 2.5, -1.25
    pair = wp.get_filters("db3")
    for mode in ALL_MODES:
        ca_sum, cd_sum = wp.dwt_level(a * x + b * y, pair, mode)
        ca_x, cd_x = wp.dwt_level(x, pair, mode)
        ca_y, cd_y = wp.dwt_level(y, pair, mode)
        np.testing.assert_allclose(ca_sum, a * ca_x + b * ca_y, atol=1e-10)
        np.testing.assert_allclose(cd_sum, a * cd_x + b * cd_y, atol=1e-10)


def test_output_length_formulas_all_dims():
    for name in ("haar", "db2", "coif5"):
        pair = wp.get_filters(name)
        for mode in ALL_MODES:
            for d in range(2, 1025):
                expected = wp.coeff_len(d, len(pair), mode)
                if mode is wp.PaddingMode.PERIODIZATION:
                    assert expected == (d + 1) // 2
                else:
                    assert expected == (d + len(pair) - 1) // 2
    # spot-check the formula against live transforms
    rng = np.random.default_rng(5)
    for name in ("haar", "coif5"):
        pair = wp.get_filters(name)
        for mode in ALL_MODES:
            for d in (2, 3, 17, 64, 301, 1024):
                ca, _ = wp.dwt_level(rng.standard_normal(d), pair, mode)
                assert ca.shape == (wp.coeff_len(d, len(pair), mode),)


class TestWavedec:
    def test_dim_300_two_levels(self):
        tree = wp.wavedec(np.random.default_rng(6).standard_normal(300),
                          "sym5", levels=2)
        assert tree.depth == 2
        assert set(tree.levels[0]) == {"A", "D"}
        assert set(tree.levels[1]) == {"AA", "AD", "DA", "DD"}
        assert tree.branch("A").shape == (150,)
        assert tree.branch("DA").shape == (75,)
        assert tree.original_dim == 300

    def test_dim_1024_four_levels_aaaa_is_64(self):
        tree = wp.wavedec(np.random.default_rng(7).standard_normal(1024),
                          "coif1", levels=4)
        assert tree.branch("AAAA").shape == (64,)
        assert len(tree.levels[3]) == 16

    def test_too_many_levels(self):
        with pytest.raises(TooManyLevels):
            wp.wavedec(np.array([1.0, 2.0]), "haar", levels=2)

    def test_levels_validation(self):
        with pytest.raises(ValueError):
            wp.wavedec(np.zeros(8), "haar", levels=0)

    def test_levels_match_repeated_dwt(self):
        rng = np.random.default_rng(8)
        x = rng.standard_normal(96)
        pair = wp.get_filters("db2")
        tree = wp.wavedec(x, "db2", levels=2)
        ca, cd = wp.dwt_level(x, pair)
        np.testing.assert_array_equal(tree.branch("A"), ca)
        np.testing.assert_array_equal(tree.branch("D"), cd)
        caa, cad = wp.dwt_level(ca, pair)
        cda, cdd = wp.dwt_level(cd, pair)
        np.testing.assert_array_equal(tree.branch("AA"), caa)
        np.testing.assert_array_equal(tree.branch("AD"), cad)
        np.testing.assert_array_equal(tree.branch("DA"), cda)
        np.testing.assert_array_equal(tree.branch("DD"), cdd)
