"""Selector semantics, table compression and the length formulas."""

import numpy as np
import pytest

import wavepress as wp
from wavepress.errors import EmptyTable, InsufficientDepth, TooManyLevels
from wavepress.selection import CompressionConfig, _compress_block


def make_table(n, d, seed=0):
    rng = np.random.default_rng(seed)
    return wp.EmbeddingTable(
        keys=tuple(f"k{i}" for i in range(n)),
        matrix=rng.standard_normal((n, d)),
    )


def cfg(selector, wavelet="haar", mode=wp.PaddingMode.PERIODIZATION):
    return CompressionConfig(
        wavelet=wp.WaveletFamily.parse(wavelet),
        mode=mode,
        selector=selector,
    )


class TestSelector:
    def test_parse(self):
        assert wp.Selector.parse("cA") is wp.Selector.CA
        assert wp.Selector.parse("CA+CDA") is wp.Selector.CA_PLUS_CDA
        assert wp.Selector.parse("cd+cad") is wp.Selector.CD_PLUS_CAD
        with pytest.raises(ValueError):
            wp.Selector.parse("cDD")

    def test_required_depths(self):
        depths = {
            wp.Selector.CA: 1,
            wp.Selector.CD: 1,
            wp.Selector.CAA: 2,
            wp.Selector.CDA: 2,
            wp.Selector.CA_PLUS_CDA: 2,
            wp.Selector.CD_PLUS_CAD: 2,
            wp.Selector.CAAA: 3,
            wp.Selector.CAAAA: 4,
        }
        for sel, depth in depths.items():
            assert sel.required_depth == depth

    def test_branch_label_semantics(self):
        # cDA = approximation applied to the level-1 detail branch
        assert wp.Selector.CDA.branches == ("DA",)
        assert wp.Selector.CD_PLUS_CAD.branches == ("D", "AD")


class TestSelect:
    def test_single_branch_lengths_dim_300(self):
        tree = wp.wavedec(np.random.default_rng(0).standard_normal(300),
                          "db2", levels=2)
        assert wp.select(tree, wp.Selector.CA).shape == (150,)
        assert wp.select(tree, wp.Selector.CA_PLUS_CDA).shape == (225,)

    def test_combined_puts_level1_block_first(self):
        tree = wp.wavedec(np.random.default_rng(1).standard_normal(64),
                          "sym4", levels=2)
        combined = wp.select(tree, wp.Selector.CA_PLUS_CDA)
        np.testing.assert_array_equal(combined[:32], tree.branch("A"))
        np.testing.assert_array_equal(combined[32:], tree.branch("DA"))

    def test_haar_detail_oracle(self):
        tree = wp.wavedec(np.array([4.0, 6.0, 10.0, 12.0]), "haar", levels=1)
        np.testing.assert_allclose(
            wp.select(tree, wp.Selector.CD),
            [-2 / np.sqrt(2), -2 / np.sqrt(2)],
        )

    def test_insufficient_depth(self):
        tree = wp.wavedec(np.zeros(16) + 1.0, "haar", levels=1)
        with pytest.raises(InsufficientDepth):
            wp.select(tree, wp.Selector.CAA)


class TestCompressTable:
    def test_dim_100_ca_gives_50(self):
        table = make_table(3, 100)
        out = wp.compress_table(table, cfg(wp.Selector.CA))
        assert out.dim == 50
        assert out.keys == table.keys

    def test_constant_row_cd_is_zero(self):
        table = wp.EmbeddingTable(keys=("w",), matrix=np.full((1, 32), 2.5))
        out = wp.compress_table(table, cfg(wp.Selector.CD))
        np.testing.assert_allclose(out.matrix, 0.0, atol=1e-13)

    def test_dim_1024_caaaa_gives_64(self):
        table = make_table(10, 1024)
        out = wp.compress_table(table, cfg(wp.Selector.CAAAA, "db3"))
        assert out.dim == 64

    def test_deterministic_bit_identical(self):
        table = make_table(20, 96, seed=5)
        config = cfg(wp.Selector.CA_PLUS_CDA, "coif2")
        a = wp.compress_table(table, config)
        b = wp.compress_table(table, config)
        np.testing.assert_array_equal(a.matrix, b.matrix)
        assert a.keys == b.keys

    def test_matches_wavedec_route(self):
        # the pruned block path must equal select(wavedec(...)) exactly
        table = make_table(7, 80, seed=6)
        for sel in wp.Selector:
            config = cfg(sel, "sym5")
            out = wp.compress_table(table, config)
            for i, key in enumerate(table.keys):
                tree = wp.wavedec(table.matrix[i], config.wavelet,
                                  config.mode, config.levels)
                np.testing.assert_array_equal(out.matrix[i],
                                              wp.select(tree, sel))

    def test_linearity_per_row(self):
        table = make_table(4, 64, seed=7)
        scaled = wp.EmbeddingTable(keys=table.keys, matrix=3.0 * table.matrix)
        for sel in (wp.Selector.CA, wp.Selector.CD, wp.Selector.CAA):
            config = cfg(sel, "db4")
            np.testing.assert_allclose(
                wp.compress_table(scaled, config).matrix,
                3.0 * wp.compress_table(table, config).matrix,
                atol=1e-10,
            )

    def test_empty_table(self):
        table = wp.EmbeddingTable(keys=(), matrix=np.zeros((0, 8)))
        with pytest.raises(EmptyTable):
            wp.compress_table(table, cfg(wp.Selector.CA))

    def test_depth_error_propagates_as_too_many_levels(self):
        table = make_table(2, 8)
        with pytest.raises(TooManyLevels):
            wp.compress_table(table, cfg(wp.Selector.CAAAA))

    def test_block_boundary_invariance(self):
        import wavepress.selection as sel_mod

        table = make_table(10, 32, seed=8)
        config = cfg(wp.Selector.CA, "db2")
        full = wp.compress_table(table, config)
        old = sel_mod._BLOCK_ROWS
        try:
            sel_mod._BLOCK_ROWS = 3
            chunked = wp.compress_table(table, config)
        finally:
            sel_mod._BLOCK_ROWS = old
        np.testing.assert_array_equal(full.matrix, chunked.matrix)


class TestCompressionRatio:
    def test_paper_dims(self):
        assert wp.compression_ratio(1024, wp.Selector.CAAAA) == 64 / 1024
        assert wp.compression_ratio(300, wp.Selector.CA_PLUS_CDA) == 225 / 300
        for d in (2, 50, 300, 768):
            assert wp.compression_ratio(d, wp.Selector.CA) == 0.5

    def test_subband_dims_sum_to_d(self):
        for d in (4, 64, 300, 768):
            ca = wp.compressed_dim(d, wp.Selector.CA)
            cd = wp.compressed_dim(d, wp.Selector.CD)
            assert ca + cd == d
            assert wp.compressed_dim(d, wp.Selector.CA_PLUS_CDA) == 3 * d // 4

    def test_insufficient_depth(self):
        with pytest.raises(InsufficientDepth):
            wp.compression_ratio(8, wp.Selector.CAAAA)

    def test_non_periodization_needs_wavelet(self):
        with pytest.raises(ValueError):
            wp.compression_ratio(100, wp.Selector.CA, wp.PaddingMode.SYMMETRIC)
        r = wp.compression_ratio(
            100, wp.Selector.CA, wp.PaddingMode.SYMMETRIC,
            wp.WaveletFamily.parse("db2"),
        )
        assert r == ((100 + 3) // 2) / 100


def test_compress_block_internal_matches_public():
    table = make_table(6, 48, seed=9)
    config = cfg(wp.Selector.CD_PLUS_CAD, "coif1")
    block_out = _compress_block(table.matrix, config)
    public = wp.compress_table(table, config)
    np.testing.assert_array_equal(block_out, public.matrix)
