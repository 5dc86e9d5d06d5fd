"""Single- and multi-level discrete wavelet transforms on 1-D signals.

All transforms accept a single vector or a 2-D batch (rows are independent
signals transformed along the last axis).  The convention is correlation with
the decomposition filters at stride 2 starting at index 0 of the extended
signal; correctness is pinned by the perfect-reconstruction and Parseval
properties rather than agreement with any particular library.

Boundary modes:
  * Periodization (default): circular extension; odd-length inputs repeat
    their last element once, so each sub-band has ceil(d/2) coefficients and
    even dimensions halve exactly.
  * Symmetric / Zero: half-sample symmetric or zero extension, yielding
    floor((d + L - 1) / 2) coefficients per sub-band for filter length L.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionTooSmall, LengthMismatch, TooManyLevels
from .filters import FilterPair, WaveletFamily, get_filters


class PaddingMode(Enum):
    PERIODIZATION = "per"
    SYMMETRIC = "sym"
    ZERO = "zero"

    @classmethod
    def parse(cls, name: str) -> "PaddingMode":
        key = name.strip().lower()
        aliases = {
            "per": cls.PERIODIZATION,
            "periodization": cls.PERIODIZATION,
            "sym": cls.SYMMETRIC,
            "symmetric": cls.SYMMETRIC,
            "zero": cls.ZERO,
            "zpd": cls.ZERO,
        }
        if key not in aliases:
            raise ValueError(f"unrecognized padding mode {name!r}")
        return aliases[key]


def coeff_len(d: int, filter_len: int, mode: PaddingMode) -> int:
    """Length of each sub-band produced by one decomposition level."""
    if mode is PaddingMode.PERIODIZATION:
        return (d + 1) // 2
    return (d + filter_len - 1) // 2


def _fold_filter(filt: np.ndarray, n: int) -> np.ndarray:
    # periodization with a filter longer than the signal wraps multiple
    # times; folding taps mod n is exact and leaves at most one wrap
    if len(filt) <= n:
        return filt
    out = np.zeros(n)
    for i, c in enumerate(filt):
        out[i % n] += c
    return out


def _per_analysis(
    xe: np.ndarray, lo: np.ndarray, hi: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    # xe: (B, N) with N even; out[k] = sum_m filt[m] * xe[(2k + m) mod N].
    # Both sub-bands are computed in one pass so every strided slice of xe
    # is read once; the length-2 case is a single polyphase matmul.
    n = xe.shape[1]
    half = n // 2
    if len(lo) == 2:
        poly = np.ascontiguousarray(xe).reshape(xe.shape[0], half, 2)
        both = poly @ np.array([[lo[0], hi[0]], [lo[1], hi[1]]])
        return both[..., 0], both[..., 1]
    out_a = np.zeros((xe.shape[0], half))
    out_d = np.zeros((xe.shape[0], half))
    for m in range(len(lo)):
        nw = min(half, (n + 1 - m) // 2)
        if nw > 0:
            sl = xe[:, m : m + 2 * nw - 1 : 2]
            out_a[:, :nw] += lo[m] * sl
            out_d[:, :nw] += hi[m] * sl
        if nw < half:
            start = m + 2 * nw - n
            sl = xe[:, start : start + 2 * (half - nw) - 1 : 2]
            out_a[:, nw:] += lo[m] * sl
            out_d[:, nw:] += hi[m] * sl
    return out_a, out_d


def _per_synthesis(ca: np.ndarray, cd: np.ndarray, pair: FilterPair) -> np.ndarray:
    # transpose of the (orthogonal) periodized analysis operator
    half = ca.shape[1]
    n = 2 * half
    out = np.zeros((ca.shape[0], n))
    for coeffs, filt in ((ca, pair.dec_lo), (cd, pair.dec_hi)):
        folded = _fold_filter(filt, n)
        for m, c in enumerate(folded):
            nw = min(half, (n + 1 - m) // 2)
            if nw > 0:
                out[:, m : m + 2 * nw - 1 : 2] += c * coeffs[:, :nw]
            if nw < half:
                start = m + 2 * nw - n
                out[:, start : start + 2 * (half - nw) - 1 : 2] += c * coeffs[:, nw:]
    return out


def _pad_analysis(
    x: np.ndarray, lo: np.ndarray, hi: np.ndarray, mode: PaddingMode
) -> tuple[np.ndarray, np.ndarray]:
    d = x.shape[1]
    lf = len(lo)
    out_len = (d + lf - 1) // 2
    np_mode = "symmetric" if mode is PaddingMode.SYMMETRIC else "constant"
    xp = np.pad(x, ((0, 0), (lf - 2, lf - 1)), mode=np_mode)
    out_a = np.zeros((x.shape[0], out_len))
    out_d = np.zeros((x.shape[0], out_len))
    for m in range(lf):
        sl = xp[:, m : m + 2 * out_len - 1 : 2]
        out_a += lo[m] * sl
        out_d += hi[m] * sl
    return out_a, out_d


def _pad_synthesis(
    ca: np.ndarray, cd: np.ndarray, pair: FilterPair, original_dim: int
) -> np.ndarray:
    # dropped boundary coefficients never contribute inside the original
    # support, so upsample-convolve-crop reconstructs exactly for both the
    # symmetric and zero extensions
    k = ca.shape[1]
    lf = len(pair)
    buf = np.zeros((ca.shape[0], 2 * k + lf - 2))
    for coeffs, filt in ((ca, pair.dec_lo), (cd, pair.dec_hi)):
        for m, c in enumerate(filt):
            buf[:, m : m + 2 * k - 1 : 2] += c * coeffs
    return buf[:, lf - 2 : lf - 2 + original_dim]


def _as_batch(x) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 1:
        return arr[np.newaxis, :], True
    if arr.ndim == 2:
        return arr, False
    raise ValueError(f"expected a vector or a 2-D batch, got ndim={arr.ndim}")


def dwt_level(
    x,
    filters: FilterPair,
    mode: PaddingMode = PaddingMode.PERIODIZATION,
) -> tuple[np.ndarray, np.ndarray]:
    """One analysis level: returns (cA, cD).

    Accepts a vector of dimension d >= 2 or a (B, d) batch; sub-band length
    follows coeff_len(d, L, mode).
    """
    batch, squeeze = _as_batch(x)
    d = batch.shape[1]
    if d < 2:
        raise DimensionTooSmall(f"need dimension >= 2, got {d}")
    if mode is PaddingMode.PERIODIZATION:
        if d % 2:
            batch = np.concatenate([batch, batch[:, -1:]], axis=1)
        lo = _fold_filter(filters.dec_lo, batch.shape[1])
        hi = _fold_filter(filters.dec_hi, batch.shape[1])
        ca, cd = _per_analysis(batch, lo, hi)
    else:
        ca, cd = _pad_analysis(batch, filters.dec_lo, filters.dec_hi, mode)
    if squeeze:
        return ca[0], cd[0]
    return ca, cd


def idwt_level(
    ca,
    cd,
    filters: FilterPair,
    mode: PaddingMode = PaddingMode.PERIODIZATION,
    original_dim: int | None = None,
) -> np.ndarray:
    """Inverse of dwt_level.

    original_dim is required to undo odd-length periodization padding and to
    crop the redundant symmetric/zero reconstructions; when omitted it
    defaults to twice the sub-band length (even-dimension periodization).
    """
    ca_b, squeeze = _as_batch(ca)
    cd_b, _ = _as_batch(cd)
    if ca_b.shape != cd_b.shape:
        raise LengthMismatch(f"cA shape {ca_b.shape} != cD shape {cd_b.shape}")
    if original_dim is None:
        if mode is not PaddingMode.PERIODIZATION:
            raise LengthMismatch("original_dim is required for symmetric/zero modes")
        original_dim = 2 * ca_b.shape[1]
    expected = coeff_len(original_dim, len(filters), mode)
    if ca_b.shape[1] != expected:
        raise LengthMismatch(
            f"sub-band length {ca_b.shape[1]} inconsistent with original_dim "
            f"{original_dim} (expected {expected})"
        )
    if mode is PaddingMode.PERIODIZATION:
        out = _per_synthesis(ca_b, cd_b, filters)[:, :original_dim]
    else:
        out = _pad_synthesis(ca_b, cd_b, filters, original_dim)
    return out[0] if squeeze else out


@dataclass(frozen=True)
class CoefficientTree:
    """Full recursive decomposition of one signal (or batch of signals).

    levels[k-1] maps branch labels of length k (strings over {A, D}) to
    coefficient arrays; level 1 holds "A" and "D", and every deeper branch
    extends its parent label by the operation applied ("A" approximation,
    "D" detail).  cDA therefore reads: approximation of the level-1 detail.
    """

    levels: tuple[dict[str, np.ndarray], ...]
    original_dim: int
    wavelet: WaveletFamily
    mode: PaddingMode

    @property
    def depth(self) -> int:
        return len(self.levels)

    def branch(self, label: str) -> np.ndarray:
        return self.levels[len(label) - 1][label]


def wavedec(
    x,
    wavelet: WaveletFamily | str,
    mode: PaddingMode = PaddingMode.PERIODIZATION,
    levels: int = 1,
) -> CoefficientTree:
    """Materialize the full decomposition tree down to the requested depth.

    Every branch of every level is decomposed further (2^k branches at level
    k), so any selector can be served from the one tree.  Raises
    TooManyLevels once a branch would drop below length 2.
    """
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    if isinstance(wavelet, str):
        wavelet = WaveletFamily.parse(wavelet)
    batch, squeeze = _as_batch(x)
    filters = get_filters(wavelet)
    dim = batch.shape[1]

    tree: list[dict[str, np.ndarray]] = []
    current: dict[str, np.ndarray] = {"": batch}
    for level in range(1, levels + 1):
        width = next(iter(current.values())).shape[1]
        if level > 1 and width < 2:
            raise TooManyLevels(
                f"branches of length {width} at level {level - 1} cannot be "
                f"decomposed further (level {level} of {levels} requested)"
            )
        nxt: dict[str, np.ndarray] = {}
        for label, arr in current.items():
            ca, cd = dwt_level(arr, filters, mode)
            nxt[label + "A"] = ca
            nxt[label + "D"] = cd
        if squeeze:
            tree.append({k: v[0] for k, v in nxt.items()})
        else:
            tree.append(nxt)
        current = nxt
    return CoefficientTree(
        levels=tuple(tree), original_dim=dim, wavelet=wavelet, mode=mode
    )
