"""Exception taxonomy shared by all wavepress modules."""


class WavepressError(Exception):
    """Base class for all errors raised by this package."""


# wavelet transforms
class UnsupportedWavelet(WavepressError):
    """Requested (family, order) pair is outside the supported ranges."""


class DimensionTooSmall(WavepressError):
    """Input vector is too short to transform (needs length >= 2)."""


class TooManyLevels(WavepressError):
    """A decomposition branch would drop below length 2."""


class LengthMismatch(WavepressError):
    """Coefficient vectors are inconsistent with each other or the target dim."""


# coefficient selection
class InsufficientDepth(WavepressError):
    """Selector requires a deeper decomposition than the tree provides."""


class EmptyTable(WavepressError):
    """Operation requires at least one embedding row."""


# baselines
class InvalidTruncation(WavepressError):
    """DCT truncation length outside [1, d]."""


class RankDeficientWarning(UserWarning):
    """PCA component has (near-)zero explained variance; reported, not fatal."""


# evaluation
class DimensionMismatch(WavepressError):
    """Operands have incompatible dimensions."""


class ZeroVector(WavepressError):
    """Cosine similarity is undefined for a zero vector."""


class DegenerateInput(WavepressError):
    """Rank correlation is undefined for a constant series."""


class InsufficientCoverage(WavepressError):
    """Too few dataset items resolve against the embedding table."""


class UnknownKey(WavepressError):
    """Requested key is not present in the embedding table."""


# probe training
class ClassMissingInTrain(WavepressError):
    """A class label never occurs in the training split."""


class NonFiniteLoss(WavepressError):
    """Training diverged even after halving the learning rate once."""


# file I/O
class EmptyFile(WavepressError):
    """No usable rows found in a word-vector file."""


class EmptyDataset(WavepressError):
    """No usable rows found in a dataset file."""


class NonNumericScore(WavepressError):
    """A dataset score field failed to parse as a number."""


class InvalidDataset(WavepressError):
    """Dataset violates a structural invariant (categories, splits, keys)."""


class BadMagic(WavepressError):
    """Binary matrix file does not start with the EMB1 magic bytes."""


class TruncatedFile(WavepressError):
    """Binary matrix file ends before the declared payload."""


class KeyCountMismatch(WavepressError):
    """Number of keys in a binary matrix file disagrees with its header."""
