"""Extrinsic evaluation: a small MLP probe trained on frozen embeddings.

Single hidden tanh layer (or plain multinomial logistic regression with
hidden_units=0), softmax cross-entropy with L2 weight decay, Adam updates,
early stopping on validation accuracy.  Training is fully deterministic for
a given seed.  Pair tasks use the feature map [u, v, |u-v|, u*v].
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .baselines import dct_truncate, pca_fit, pca_transform
from .errors import (
    ClassMissingInTrain,
    DimensionMismatch,
    InsufficientCoverage,
    InvalidDataset,
    NonFiniteLoss,
)
from .io import EmbeddingTable, LabeledDataset, Split
from .reports import EvalReport
from .selection import CompressionConfig, compress_table


@dataclass(frozen=True)
class MlpConfig:
    """Probe hyperparameters (SentEval-style defaults).

    Validation accuracy is checked every epoch_size epochs and patience
    counts consecutive checks without improvement, mirroring the SentEval
    tenacity/epoch_size convention.
    """

    hidden_units: int = 50
    l2: float = 1e-4
    batch_size: int = 64
    max_epochs: int = 200
    patience: int = 5
    epoch_size: int = 4
    learning_rate: float = 1e-3
    seed: int = 42

    def __post_init__(self):
        if self.hidden_units < 0 or self.l2 < 0:
            raise ValueError("hidden_units and l2 must be non-negative")
        for name in ("batch_size", "max_epochs", "patience", "epoch_size"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be positive")

    def metadata(self) -> dict[str, str]:
        return {
            "hidden": str(self.hidden_units),
            "l2": str(self.l2),
            "batch": str(self.batch_size),
            "lr": str(self.learning_rate),
            "seed": str(self.seed),
        }


@dataclass
class MlpModel:
    """Trained probe: optional tanh hidden layer plus a softmax output layer."""

    w1: np.ndarray | None
    b1: np.ndarray | None
    w2: np.ndarray
    b2: np.ndarray
    classes: tuple[str, ...]

    @property
    def input_dim(self) -> int:
        return (self.w1 if self.w1 is not None else self.w2).shape[1]

    def logits(self, x: np.ndarray) -> np.ndarray:
        if x.shape[1] != self.input_dim:
            raise DimensionMismatch(
                f"input dim {x.shape[1]} != model dim {self.input_dim}"
            )
        hidden = x if self.w1 is None else np.tanh(x @ self.w1.T + self.b1)
        return hidden @ self.w2.T + self.b2

    def predict(self, x: np.ndarray) -> np.ndarray:
        return np.argmax(self.logits(x), axis=1)


def _init_params(dim: int, n_classes: int, hidden: int, rng) -> dict[str, np.ndarray]:
    params: dict[str, np.ndarray] = {}
    if hidden > 0:
        params["w1"] = rng.standard_normal((hidden, dim)) / np.sqrt(dim)
        params["b1"] = np.zeros(hidden)
        params["w2"] = rng.standard_normal((n_classes, hidden)) / np.sqrt(hidden)
    else:
        params["w2"] = rng.standard_normal((n_classes, dim)) / np.sqrt(dim)
    params["b2"] = np.zeros(n_classes)
    return params


def loss_and_grad(
    params: dict[str, np.ndarray],
    x: np.ndarray,
    y_idx: np.ndarray,
    l2: float,
) -> tuple[float, dict[str, np.ndarray]]:
    """Mean softmax cross-entropy + l2 * sum of squared weights, with grads.

    Biases are not regularized.
    """
    n = x.shape[0]
    if "w1" in params:
        z1 = x @ params["w1"].T + params["b1"]
        a1 = np.tanh(z1)
    else:
        a1 = x
    logits = a1 @ params["w2"].T + params["b2"]
    shifted = logits - logits.max(axis=1, keepdims=True)
    exp = np.exp(shifted)
    probs = exp / exp.sum(axis=1, keepdims=True)
    nll = -np.mean(np.log(probs[np.arange(n), y_idx] + 1e-300))
    reg = l2 * sum(
        float(np.sum(params[k] ** 2)) for k in ("w1", "w2") if k in params
    )
    loss = float(nll + reg)

    dlogits = probs.copy()
    dlogits[np.arange(n), y_idx] -= 1.0
    dlogits /= n
    grads = {
        "w2": dlogits.T @ a1 + 2.0 * l2 * params["w2"],
        "b2": dlogits.sum(axis=0),
    }
    if "w1" in params:
        da1 = dlogits @ params["w2"]
        dz1 = da1 * (1.0 - a1**2)
        grads["w1"] = dz1.T @ x + 2.0 * l2 * params["w1"]
        grads["b1"] = dz1.sum(axis=0)
    return loss, grads


def _accuracy(params: dict[str, np.ndarray], x, y_idx, classes) -> float:
    model = MlpModel(
        w1=params.get("w1"),
        b1=params.get("b1"),
        w2=params["w2"],
        b2=params["b2"],
        classes=classes,
    )
    return float(np.mean(model.predict(x) == y_idx))


def _train_once(
    x: np.ndarray,
    y_idx: np.ndarray,
    train_idx: np.ndarray,
    val_idx: np.ndarray,
    n_classes: int,
    config: MlpConfig,
    lr: float,
) -> dict[str, np.ndarray] | None:
    """One full training run; returns best params or None on divergence."""
    rng = np.random.default_rng(config.seed)
    params = _init_params(x.shape[1], n_classes, config.hidden_units, rng)
    adam_m = {k: np.zeros_like(v) for k, v in params.items()}
    adam_v = {k: np.zeros_like(v) for k, v in params.items()}
    beta1, beta2, eps = 0.9, 0.999, 1e-8
    step = 0

    best_acc = -1.0
    best_params = {k: v.copy() for k, v in params.items()}
    stall = 0
    classes_stub = tuple(str(c) for c in range(n_classes))
    for epoch in range(1, config.max_epochs + 1):
        order = rng.permutation(len(train_idx))
        for start in range(0, len(order), config.batch_size):
            batch = train_idx[order[start : start + config.batch_size]]
            loss, grads = loss_and_grad(params, x[batch], y_idx[batch], config.l2)
            if not np.isfinite(loss):
                return None
            step += 1
            for k, g in grads.items():
                adam_m[k] = beta1 * adam_m[k] + (1 - beta1) * g
                adam_v[k] = beta2 * adam_v[k] + (1 - beta2) * g**2
                m_hat = adam_m[k] / (1 - beta1**step)
                v_hat = adam_v[k] / (1 - beta2**step)
                params[k] = params[k] - lr * m_hat / (np.sqrt(v_hat) + eps)
        if epoch % config.epoch_size:
            continue
        val_acc = _accuracy(params, x[val_idx], y_idx[val_idx], classes_stub)
        if val_acc > best_acc:
            best_acc = val_acc
            best_params = {k: v.copy() for k, v in params.items()}
            stall = 0
        else:
            stall += 1
            if stall >= config.patience:
                break
    return best_params


def train_probe(
    x,
    y,
    splits: tuple[np.ndarray, np.ndarray],
    config: MlpConfig = MlpConfig(),
) -> MlpModel:
    """Train the probe on x[train] and early-stop on x[validation] accuracy.

    splits is (train_indices, validation_indices); every class must occur in
    the training split.  On a non-finite loss the run restarts once with the
    learning rate halved, then fails with NonFiniteLoss.
    """
    x = np.asarray(x, dtype=np.float64)
    labels = np.asarray(y)
    train_idx = np.asarray(splits[0], dtype=np.intp)
    val_idx = np.asarray(splits[1], dtype=np.intp)
    if len(train_idx) == 0 or len(val_idx) == 0:
        raise InvalidDataset("train and validation splits must be nonempty")
    classes = tuple(sorted({str(v) for v in labels}))
    class_to_idx = {c: i for i, c in enumerate(classes)}
    y_idx = np.array([class_to_idx[str(v)] for v in labels], dtype=np.intp)
    missing = set(range(len(classes))) - set(y_idx[train_idx].tolist())
    if missing:
        raise ClassMissingInTrain(
            f"classes missing from train split: {[classes[i] for i in sorted(missing)]}"
        )
    params = _train_once(
        x, y_idx, train_idx, val_idx, len(classes), config, config.learning_rate
    )
    if params is None:
        params = _train_once(
            x, y_idx, train_idx, val_idx, len(classes), config,
            config.learning_rate / 2.0,
        )
    if params is None:
        raise NonFiniteLoss("training diverged even after halving the learning rate")
    return MlpModel(
        w1=params.get("w1"),
        b1=params.get("b1"),
        w2=params["w2"],
        b2=params["b2"],
        classes=classes,
    )


def evaluate_probe(model: MlpModel, x, y) -> float:
    """Fraction of argmax-correct predictions on (x, y)."""
    x = np.asarray(x, dtype=np.float64)
    class_to_idx = {c: i for i, c in enumerate(model.classes)}
    y_idx = np.array([class_to_idx.get(str(v), -1) for v in np.asarray(y)])
    return float(np.mean(model.predict(x) == y_idx))


# ----------------------------------------------------------------------
# variant sweep over one labeled dataset
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class BaselineSpec:
    """PCA to k dims ("pca", k) or DCT keeping a fraction ("dct", keep)."""

    kind: str
    amount: float

    def __post_init__(self):
        if self.kind not in ("pca", "dct"):
            raise ValueError(f"unknown baseline kind {self.kind!r}")
        if self.kind == "pca" and self.amount < 1:
            raise ValueError("pca baseline needs k >= 1")
        if self.kind == "dct" and not 0.0 < self.amount <= 1.0:
            raise ValueError("dct baseline needs a keep fraction in (0, 1]")

    @property
    def label(self) -> str:
        if self.kind == "pca":
            return f"pca{int(self.amount)}"
        return f"dct{self.amount:g}"


Variant = str | CompressionConfig | BaselineSpec  # "base" | DWT | baseline


def apply_variant(table: EmbeddingTable, variant: Variant) -> tuple[EmbeddingTable, str, dict[str, str]]:
    """Transform a table under one variant; returns (table, label, metadata)."""
    if isinstance(variant, str):
        if variant != "base":
            raise ValueError(f"unknown variant string {variant!r}")
        return table, "base", {}
    if isinstance(variant, CompressionConfig):
        meta = {"wavelet": variant.wavelet.name, "mode": variant.mode.value}
        return compress_table(table, variant), variant.selector.value, meta
    if isinstance(variant, BaselineSpec):
        if variant.kind == "pca":
            k = int(variant.amount)
            model = pca_fit(table.matrix, k)
            out = EmbeddingTable(keys=table.keys, matrix=pca_transform(model, table.matrix))
            return out, variant.label, {"fit": "evaluated-table"}
        keep = max(1, int(round(variant.amount * table.dim)))
        out = EmbeddingTable(keys=table.keys, matrix=dct_truncate(table.matrix, keep))
        return out, variant.label, {}
    raise TypeError(f"unsupported variant {variant!r}")


def _features(table: EmbeddingTable, keys: tuple[str, ...]) -> np.ndarray:
    if len(keys) == 1:
        return table.vector(keys[0])
    u = table.vector(keys[0])
    v = table.vector(keys[1])
    return np.concatenate([u, v, np.abs(u - v), u * v])


def run_task(
    table: EmbeddingTable,
    dataset: LabeledDataset,
    config: MlpConfig,
    variants: list[Variant],
) -> list[EvalReport]:
    """Train and evaluate the probe for every variant of one labeled task.

    Items whose keys are missing from the table are skipped (tracked in
    coverage); accuracy is reported x100 on the test split.
    """
    arities = {len(it.keys) for it in dataset.items}
    if len(arities) > 1:
        raise InvalidDataset("dataset mixes single-key and pair items")
    usable = [it for it in dataset.items if all(k in table for k in it.keys)]
    coverage = len(usable) / len(dataset.items)
    split_idx = {
        Split.TRAIN: np.array([i for i, it in enumerate(usable) if it.split is Split.TRAIN], dtype=np.intp),
        Split.VALIDATION: np.array([i for i, it in enumerate(usable) if it.split is Split.VALIDATION], dtype=np.intp),
        Split.TEST: np.array([i for i, it in enumerate(usable) if it.split is Split.TEST], dtype=np.intp),
    }
    if any(len(v) == 0 for v in split_idx.values()):
        raise InsufficientCoverage(
            f"{dataset.name}: a split has no resolvable items"
        )
    labels = np.array([it.label for it in usable])

    reports = []
    for variant in variants:
        vtable, label, meta = apply_variant(table, variant)
        x = np.vstack([_features(vtable, it.keys) for it in usable])
        model = train_probe(
            x, labels, (split_idx[Split.TRAIN], split_idx[Split.VALIDATION]), config
        )
        acc = evaluate_probe(
            model, x[split_idx[Split.TEST]], labels[split_idx[Split.TEST]]
        )
        reports.append(
            EvalReport(
                task=dataset.name or "classify",
                variant=label,
                dim=vtable.dim,
                metric_name="accuracy_x100",
                value=100.0 * acc,
                coverage=coverage,
                metadata={**meta, **config.metadata()},
            )
        )
    return reports
