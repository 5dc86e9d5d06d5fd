"""Embedding tables, word-vector files, the EMB1 interchange format and
evaluation dataset loaders.

EMB1 is the binary matrix format shared with external exporters and is
normative and bit-exact: magic b"EMB1", uint32-LE row count N, uint32-LE
dimension d, N*d float32-LE values row-major, then N newline-terminated
UTF-8 keys.  Values are float32 on disk and float64 in memory.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import (
    BadMagic,
    DimensionMismatch,
    EmptyDataset,
    EmptyFile,
    InvalidDataset,
    KeyCountMismatch,
    NonNumericScore,
    TruncatedFile,
)

_MAGIC = b"EMB1"


@dataclass(frozen=True)
class EmbeddingTable:
    """Ordered mapping from string keys to rows of one fixed-dimension matrix."""

    keys: tuple[str, ...]
    matrix: np.ndarray
    skipped_count: int = 0
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=np.float64)
        if matrix.ndim != 2:
            raise DimensionMismatch(f"matrix must be 2-D, got ndim={matrix.ndim}")
        if len(self.keys) != matrix.shape[0]:
            raise KeyCountMismatch(
                f"{len(self.keys)} keys for {matrix.shape[0]} rows"
            )
        if not np.isfinite(matrix).all():
            raise InvalidDataset("embedding matrix contains NaN or Inf")
        index = {k: i for i, k in enumerate(self.keys)}
        if len(index) != len(self.keys):
            raise InvalidDataset("duplicate keys in embedding table")
        object.__setattr__(self, "keys", tuple(self.keys))
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.keys)

    @property
    def dim(self) -> int:
        return self.matrix.shape[1]

    def __contains__(self, key: str) -> bool:
        return key in self._index

    def row_index(self, key: str) -> int | None:
        return self._index.get(key)

    def vector(self, key: str) -> np.ndarray:
        return self.matrix[self._index[key]]


def load_word_vectors(path, expected_dim: int | None = None) -> EmbeddingTable:
    """Parse a GloVe/FastText-style text file of word vectors.

    A first line holding exactly two integer fields is consumed as the
    FastText "N d" header.  Rows with the wrong number of fields or
    non-finite values are skipped and counted; duplicate tokens keep their
    first occurrence.
    """
    keys: list[str] = []
    rows: list[np.ndarray] = []
    seen: set[str] = set()
    skipped = 0
    dim: int | None = None
    with open(path, encoding="utf-8", errors="replace") as fh:
        for lineno, line in enumerate(fh):
            parts = line.rstrip("\r\n").split(" ")
            parts = [p for p in parts if p]
            if not parts:
                continue
            if lineno == 0 and len(parts) == 2:
                try:
                    int(parts[0]), int(parts[1])
                    continue  # header line
                except ValueError:
                    pass
            token = parts[0]
            try:
                vec = np.array([float(v) for v in parts[1:]], dtype=np.float64)
            except ValueError:
                skipped += 1
                continue
            if dim is None:
                if len(vec) == 0:
                    skipped += 1
                    continue
                dim = len(vec)
            if len(vec) != dim or not np.isfinite(vec).all():
                skipped += 1
                continue
            if token in seen:
                skipped += 1
                continue
            seen.add(token)
            keys.append(token)
            rows.append(vec)
    if not rows:
        raise EmptyFile(f"no usable vector rows in {path}")
    if expected_dim is not None and dim != expected_dim:
        raise DimensionMismatch(f"expected dim {expected_dim}, file has {dim}")
    return EmbeddingTable(
        keys=tuple(keys), matrix=np.vstack(rows), skipped_count=skipped
    )


def save_matrix(table: EmbeddingTable, path) -> None:
    """Write an EmbeddingTable in the EMB1 binary format (float32 values)."""
    if len(table) == 0:
        raise KeyCountMismatch("refusing to write an empty EMB1 file")
    for key in table.keys:
        if "\n" in key or "\r" in key:
            raise InvalidDataset(f"key {key!r} contains a newline")
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<II", len(table), table.dim))
        fh.write(np.ascontiguousarray(table.matrix, dtype="<f4").tobytes())
        for key in table.keys:
            fh.write(key.encode("utf-8") + b"\n")


def load_matrix(path) -> EmbeddingTable:
    """Read an EMB1 file written by save_matrix or an external exporter."""
    raw = Path(path).read_bytes()
    if raw[:4] != _MAGIC:
        raise BadMagic(f"{path}: expected magic {_MAGIC!r}, got {raw[:4]!r}")
    if len(raw) < 12:
        raise TruncatedFile(f"{path}: missing header")
    n, d = struct.unpack("<II", raw[4:12])
    if n == 0:
        raise KeyCountMismatch(f"{path}: empty matrix (N=0)")
    payload_end = 12 + 4 * n * d
    if len(raw) < payload_end:
        raise TruncatedFile(
            f"{path}: declared {n}x{d} float32 payload exceeds file size"
        )
    values = np.frombuffer(raw[12:payload_end], dtype="<f4").astype(np.float64)
    tail = raw[payload_end:]
    if not tail.endswith(b"\n"):
        raise TruncatedFile(f"{path}: key block is not newline-terminated")
    keys = tail[:-1].split(b"\n")
    if len(keys) != n:
        raise KeyCountMismatch(f"{path}: header says {n} keys, found {len(keys)}")
    return EmbeddingTable(
        keys=tuple(k.decode("utf-8") for k in keys),
        matrix=values.reshape(n, d),
    )


def sniff_matrix_format(path) -> str:
    """Return "emb1" or "text" by peeking at the file's first bytes."""
    with open(path, "rb") as fh:
        return "emb1" if fh.read(4) == _MAGIC else "text"


def load_any_table(path, expected_dim: int | None = None) -> EmbeddingTable:
    """Load either format, auto-detected by magic."""
    if sniff_matrix_format(path) == "emb1":
        table = load_matrix(path)
        if expected_dim is not None and table.dim != expected_dim:
            raise DimensionMismatch(
                f"expected dim {expected_dim}, file has {table.dim}"
            )
        return table
    return load_word_vectors(path, expected_dim)


# ----------------------------------------------------------------------
# evaluation datasets (tab-separated text, '#' comments ignored)
# ----------------------------------------------------------------------


class Split(Enum):
    TRAIN = "train"
    VALIDATION = "validation"
    TEST = "test"

    @classmethod
    def parse(cls, name: str) -> "Split":
        key = name.strip().lower()
        aliases = {
            "train": cls.TRAIN,
            "validation": cls.VALIDATION,
            "val": cls.VALIDATION,
            "dev": cls.VALIDATION,
            "test": cls.TEST,
        }
        if key not in aliases:
            raise InvalidDataset(f"unrecognized split {name!r}")
        return aliases[key]


@dataclass(frozen=True)
class WordSimDataset:
    triples: tuple[tuple[str, str, float], ...]
    name: str = ""
    skipped_count: int = 0


@dataclass(frozen=True)
class CategorizationDataset:
    pairs: tuple[tuple[str, str], ...]
    name: str = ""
    skipped_count: int = 0

    @property
    def categories(self) -> tuple[str, ...]:
        return tuple(sorted({c for _, c in self.pairs}))


@dataclass(frozen=True)
class PairIndexDataset:
    triples: tuple[tuple[str, str, float], ...]
    name: str = ""
    skipped_count: int = 0


@dataclass(frozen=True)
class LabeledItem:
    keys: tuple[str, ...]  # one key, or two for pair tasks
    label: str
    split: Split


@dataclass(frozen=True)
class LabeledDataset:
    items: tuple[LabeledItem, ...]
    name: str = ""
    skipped_count: int = 0

    @property
    def classes(self) -> tuple[str, ...]:
        return tuple(sorted({it.label for it in self.items}))

    def of_split(self, split: Split) -> tuple[LabeledItem, ...]:
        return tuple(it for it in self.items if it.split is split)


def _data_lines(path):
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\r\n")
            if not line or line.lstrip().startswith("#"):
                continue
            out.append(line.split("\t"))
    return out


def _score(text: str, path) -> float:
    try:
        value = float(text)
    except ValueError:
        raise NonNumericScore(f"{path}: bad score field {text!r}") from None
    if not np.isfinite(value):
        raise NonNumericScore(f"{path}: non-finite score {text!r}")
    return value


def load_wordsim(path, name: str = "") -> WordSimDataset:
    """`word1 \\t word2 \\t score` rows (SimLex/WS353/MEN style)."""
    lines = _data_lines(path)
    triples = []
    skipped = 0
    for parts in lines:
        if len(parts) != 3:
            skipped += 1
            continue
        triples.append((parts[0], parts[1], _score(parts[2], path)))
    if len(triples) < 2:
        raise EmptyDataset(f"{path}: need at least 2 word pairs")
    return WordSimDataset(
        triples=tuple(triples), name=name or Path(path).stem, skipped_count=skipped
    )


def load_categorization(path, name: str = "") -> CategorizationDataset:
    """`word \\t category` rows (AP/BM/BLESS style)."""
    lines = _data_lines(path)
    pairs = []
    skipped = 0
    for parts in lines:
        if len(parts) != 2:
            skipped += 1
            continue
        pairs.append((parts[0], parts[1]))
    if not pairs:
        raise EmptyDataset(f"{path}: no usable rows")
    dataset = CategorizationDataset(
        pairs=tuple(pairs), name=name or Path(path).stem, skipped_count=skipped
    )
    if len(dataset.categories) < 2:
        raise InvalidDataset(f"{path}: need at least 2 distinct categories")
    return dataset


def load_pairs(path, name: str = "") -> PairIndexDataset:
    """`key1 \\t key2 \\t gold_score` rows referencing embedding-table keys."""
    lines = _data_lines(path)
    triples = []
    skipped = 0
    for parts in lines:
        if len(parts) != 3:
            skipped += 1
            continue
        triples.append((parts[0], parts[1], _score(parts[2], path)))
    if len(triples) < 2:
        raise EmptyDataset(f"{path}: need at least 2 pairs")
    return PairIndexDataset(
        triples=tuple(triples), name=name or Path(path).stem, skipped_count=skipped
    )


def load_labeled(path, name: str = "") -> LabeledDataset:
    """`key \\t label \\t split` rows; pair tasks use `key1 \\t key2 \\t label
    \\t split`.  Every class must appear in the train split and no key (or
    key pair) may appear in more than one split."""
    lines = _data_lines(path)
    items = []
    skipped = 0
    for parts in lines:
        if len(parts) == 3:
            keys: tuple[str, ...] = (parts[0],)
            label, split_name = parts[1], parts[2]
        elif len(parts) == 4:
            keys = (parts[0], parts[1])
            label, split_name = parts[2], parts[3]
        else:
            skipped += 1
            continue
        items.append(LabeledItem(keys=keys, label=label, split=Split.parse(split_name)))
    if not items:
        raise EmptyDataset(f"{path}: no usable rows")
    seen: dict[tuple[str, ...], Split] = {}
    for it in items:
        prev = seen.get(it.keys)
        if prev is not None and prev is not it.split:
            raise InvalidDataset(f"{path}: {it.keys} appears in {prev.value} and {it.split.value}")
        seen[it.keys] = it.split
    dataset = LabeledDataset(
        items=tuple(items), name=name or Path(path).stem, skipped_count=skipped
    )
    train_classes = {it.label for it in dataset.of_split(Split.TRAIN)}
    missing = set(dataset.classes) - train_classes
    if missing:
        raise InvalidDataset(f"{path}: classes missing from train split: {sorted(missing)}")
    return dataset
