"""Coefficient selection: turn decompositions into compressed embeddings.

Selectors name either a single branch of the coefficient tree (cA, cD, cAA,
cDA, cAAA, cAAAA) or a concatenation of two branches (cA+cDA, cD+cAD) with
the level-1 block first.  Applied row-wise to whole embedding tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .dwt import CoefficientTree, PaddingMode, coeff_len, dwt_level, wavedec
from .errors import EmptyTable, InsufficientDepth, TooManyLevels
from .filters import WaveletFamily, get_filters
from .io import EmbeddingTable


class Selector(Enum):
    CA = "cA"
    CD = "cD"
    CAA = "cAA"
    CDA = "cDA"
    CAAA = "cAAA"
    CAAAA = "cAAAA"
    CA_PLUS_CDA = "cA+cDA"
    CD_PLUS_CAD = "cD+cAD"

    @property
    def branches(self) -> tuple[str, ...]:
        return _BRANCHES[self]

    @property
    def required_depth(self) -> int:
        return max(len(b) for b in self.branches)

    @classmethod
    def parse(cls, name: str) -> "Selector":
        key = name.strip().lower().replace(" ", "")
        for sel in cls:
            if sel.value.lower() == key:
                return sel
        raise ValueError(f"unrecognized selector {name!r}")


# first letter = level-1 branch, each further letter = operation applied,
# so "DA" is the approximation of the level-1 detail
_BRANCHES = {
    Selector.CA: ("A",),
    Selector.CD: ("D",),
    Selector.CAA: ("AA",),
    Selector.CDA: ("DA",),
    Selector.CAAA: ("AAA",),
    Selector.CAAAA: ("AAAA",),
    Selector.CA_PLUS_CDA: ("A", "DA"),
    Selector.CD_PLUS_CAD: ("D", "AD"),
}


@dataclass(frozen=True)
class CompressionConfig:
    """Wavelet + boundary mode + selector; levels follow from the selector."""

    wavelet: WaveletFamily = field(
        default_factory=lambda: WaveletFamily.parse("haar")
    )
    mode: PaddingMode = PaddingMode.PERIODIZATION
    selector: Selector = Selector.CA

    @property
    def levels(self) -> int:
        return self.selector.required_depth

    def describe(self) -> str:
        return f"{self.selector.value}[{self.wavelet.name},{self.mode.value}]"


def select(tree: CoefficientTree, selector: Selector) -> np.ndarray:
    """Extract the selector's branch (or concatenated branches) from a tree."""
    if tree.depth < selector.required_depth:
        raise InsufficientDepth(
            f"{selector.value} needs depth {selector.required_depth}, "
            f"tree has {tree.depth}"
        )
    parts = [tree.branch(b) for b in selector.branches]
    if len(parts) == 1:
        return parts[0]
    return np.concatenate(parts, axis=-1)


def compressed_dim(
    original_dim: int,
    selector: Selector,
    mode: PaddingMode = PaddingMode.PERIODIZATION,
    wavelet: WaveletFamily | None = None,
) -> int:
    """Output dimension from the length formulas, without touching data."""
    if mode is PaddingMode.PERIODIZATION:
        filter_len = 2  # lengths are filter-independent under periodization
    else:
        if wavelet is None:
            raise ValueError("symmetric/zero lengths depend on the wavelet")
        filter_len = len(get_filters(wavelet))
    total = 0
    for branch in selector.branches:
        d = original_dim
        for _ in branch:
            if d < 2:
                raise InsufficientDepth(
                    f"dimension {original_dim} cannot support {selector.value}"
                )
            d = coeff_len(d, filter_len, mode)
        total += d
    return total


def compression_ratio(
    original_dim: int,
    selector: Selector,
    mode: PaddingMode = PaddingMode.PERIODIZATION,
    wavelet: WaveletFamily | None = None,
) -> float:
    """compressed_dim / original_dim, in (0, 1] for the supported selectors."""
    return compressed_dim(original_dim, selector, mode, wavelet) / original_dim


_BLOCK_ROWS = 8192


def _compress_block(block: np.ndarray, config: CompressionConfig) -> np.ndarray:
    # only ancestors of the selected branches are decomposed; the values are
    # identical to select(wavedec(...)), which materializes the full tree
    needed = set(config.selector.branches)
    prefixes = {b[:k] for b in needed for k in range(1, len(b) + 1)}
    filters = get_filters(config.wavelet)
    current: dict[str, np.ndarray] = {"": block}
    found: dict[str, np.ndarray] = {}
    for _ in range(config.levels):
        nxt: dict[str, np.ndarray] = {}
        for label, arr in current.items():
            want_a = label + "A" in prefixes
            want_d = label + "D" in prefixes
            if not (want_a or want_d):
                continue
            ca, cd = dwt_level(arr, filters, config.mode)
            if want_a:
                nxt[label + "A"] = ca
            if want_d:
                nxt[label + "D"] = cd
        for label, arr in nxt.items():
            if label in needed:
                found[label] = arr
        current = nxt
    return np.concatenate([found[b] for b in config.selector.branches], axis=1)


def compress_table(table: EmbeddingTable, config: CompressionConfig) -> EmbeddingTable:
    """Compress every row of an embedding table; keys and order are kept.

    Rows are processed in fixed-size blocks, so vocabulary-scale tables never
    need more working memory than one block plus the output matrix.
    """
    if len(table) == 0:
        raise EmptyTable("cannot compress an empty embedding table")
    try:
        out_dim = compressed_dim(
            table.dim, config.selector, config.mode, config.wavelet
        )
    except InsufficientDepth as exc:
        raise TooManyLevels(str(exc)) from None
    out = np.empty((len(table), out_dim))
    for start in range(0, len(table), _BLOCK_ROWS):
        block = table.matrix[start : start + _BLOCK_ROWS]
        out[start : start + _BLOCK_ROWS] = _compress_block(block, config)
    return EmbeddingTable(keys=table.keys, matrix=out)


def compress_vector(x: np.ndarray, config: CompressionConfig) -> np.ndarray:
    """Compress a single vector: select(wavedec(x)) under the config."""
    tree = wavedec(x, config.wavelet, config.mode, config.levels)
    return select(tree, config.selector)
