"""Mother-wavelet filter banks.

Supported families: Haar, Daubechies 1-10, Symlets 2-10, Coiflets 1-5.
Decomposition low-pass coefficients are embedded constants (see _tables.py);
the high-pass and reconstruction filters are derived from them through the
quadrature-mirror and time-reversal relations, so the QMF identity holds by
construction and only the low-pass tables need validating.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from ._tables import DEC_LO
from .errors import UnsupportedWavelet


class Family(Enum):
    HAAR = "haar"
    DAUBECHIES = "db"
    SYMLET = "sym"
    COIFLET = "coif"


_ORDER_RANGES = {
    Family.HAAR: (1, 1),
    Family.DAUBECHIES: (1, 10),
    Family.SYMLET: (2, 10),
    Family.COIFLET: (1, 5),
}

_NAME_RE = re.compile(r"^(haar|db|sym|coif)(\d*)$")


@dataclass(frozen=True)
class WaveletFamily:
    """A (family, order) pair naming one mother wavelet."""

    family: Family
    order: int = 1

    def __post_init__(self):
        lo, hi = _ORDER_RANGES[self.family]
        if not lo <= self.order <= hi:
            raise UnsupportedWavelet(
                f"{self.family.value} order {self.order} outside [{lo}, {hi}]"
            )

    @property
    def name(self) -> str:
        if self.family is Family.HAAR:
            return "haar"
        return f"{self.family.value}{self.order}"

    @classmethod
    def parse(cls, name: str) -> "WaveletFamily":
        """Parse names like 'haar', 'db4', 'sym8', 'coif3' (case-insensitive)."""
        m = _NAME_RE.match(name.strip().lower())
        if not m:
            raise UnsupportedWavelet(f"unrecognized wavelet name {name!r}")
        prefix, digits = m.groups()
        if prefix == "haar":
            if digits:
                raise UnsupportedWavelet(f"unrecognized wavelet name {name!r}")
            return cls(Family.HAAR, 1)
        if not digits:
            raise UnsupportedWavelet(f"wavelet {name!r} is missing its order")
        return cls(Family(prefix), int(digits))


def supported_wavelets() -> list[WaveletFamily]:
    """All supported wavelets in table order."""
    out = [WaveletFamily(Family.HAAR, 1)]
    out += [WaveletFamily(Family.DAUBECHIES, n) for n in range(1, 11)]
    out += [WaveletFamily(Family.SYMLET, n) for n in range(2, 11)]
    out += [WaveletFamily(Family.COIFLET, n) for n in range(1, 6)]
    return out


@dataclass(frozen=True)
class FilterPair:
    """Decomposition/reconstruction filter quadruple for one wavelet.

    dec_hi[k] = (-1)^k dec_lo[L-1-k] (QMF); rec_* are the time-reversed
    dec_* filters.  Arrays are float64 and write-protected.
    """

    dec_lo: np.ndarray
    dec_hi: np.ndarray
    rec_lo: np.ndarray
    rec_hi: np.ndarray

    def __len__(self) -> int:
        return self.dec_lo.shape[0]


@lru_cache(maxsize=None)
def _filters_by_name(name: str) -> FilterPair:
    dec_lo = np.array(DEC_LO[name], dtype=np.float64)
    signs = np.where(np.arange(len(dec_lo)) % 2 == 0, 1.0, -1.0)
    dec_hi = signs * dec_lo[::-1]
    pair = FilterPair(
        dec_lo=dec_lo,
        dec_hi=dec_hi,
        rec_lo=dec_lo[::-1].copy(),
        rec_hi=dec_hi[::-1].copy(),
    )
    for arr in (pair.dec_lo, pair.dec_hi, pair.rec_lo, pair.rec_hi):
        arr.setflags(write=False)
    return pair


def get_filters(wavelet: WaveletFamily | str) -> FilterPair:
    """Return the filter quadruple for a wavelet (object or name string)."""
    if isinstance(wavelet, str):
        wavelet = WaveletFamily.parse(wavelet)
    return _filters_by_name(wavelet.name)
