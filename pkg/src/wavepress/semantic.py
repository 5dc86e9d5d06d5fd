"""Intrinsic evaluation: cosine similarity, Spearman correlation, word and
sentence similarity scoring, nearest neighbors and concept-categorization
purity (seeded k-means with k-means++ restarts)."""

from __future__ import annotations

import numpy as np

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    InsufficientCoverage,
    UnknownKey,
    ZeroVector,
)
from .io import CategorizationDataset, EmbeddingTable, PairIndexDataset, WordSimDataset
from .reports import EvalReport


def cosine(u, v) -> float:
    """u.v / (|u| |v|); both vectors must be nonzero and equal-dimension."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise DimensionMismatch(f"shapes {u.shape} and {v.shape}")
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise ZeroVector("cosine undefined for zero vectors")
    return float(np.dot(u, v) / (nu * nv))


def average_ranks(values) -> np.ndarray:
    """1-based ranks; ties receive the mean of the rank span they occupy."""
    arr = np.asarray(values, dtype=np.float64)
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(len(arr))
    sorted_vals = arr[order]
    i = 0
    while i < len(arr):
        j = i
        while j + 1 < len(arr) and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def spearman(xs, ys) -> float:
    """Spearman rank correlation: Pearson correlation of average ranks.

    Exactly +/-1 for rank-identical / rank-reversed inputs (the ranks decide,
    so no floating-point slack is introduced there).
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise DimensionMismatch(f"shapes {xs.shape} and {ys.shape}")
    if len(xs) < 2:
        raise DegenerateInput("need at least 2 observations")
    if np.all(xs == xs[0]) or np.all(ys == ys[0]):
        raise DegenerateInput("rank correlation undefined for constant series")
    rx = average_ranks(xs)
    ry = average_ranks(ys)
    if np.array_equal(rx, ry):
        return 1.0
    if np.array_equal(rx + ry, np.full(len(rx), len(rx) + 1.0)):
        return -1.0
    zx = rx - rx.mean()
    zy = ry - ry.mean()
    r = float(np.dot(zx, zy) / (np.linalg.norm(zx) * np.linalg.norm(zy)))
    return min(1.0, max(-1.0, r))


def eval_word_similarity(
    table: EmbeddingTable,
    dataset: WordSimDataset,
    variant: str = "base",
    metadata: dict[str, str] | None = None,
) -> EvalReport:
    """Spearman (x100) between pairwise cosines and gold scores.

    Pairs with an out-of-vocabulary word are skipped; coverage records the
    usable fraction.
    """
    gold = []
    predicted = []
    for w1, w2, score in dataset.triples:
        i = table.row_index(w1)
        j = table.row_index(w2)
        if i is None or j is None:
            continue
        gold.append(score)
        predicted.append(cosine(table.matrix[i], table.matrix[j]))
    if len(gold) < 2:
        raise InsufficientCoverage(
            f"{dataset.name}: only {len(gold)} of {len(dataset.triples)} pairs resolve"
        )
    return EvalReport(
        task=dataset.name or "wordsim",
        variant=variant,
        dim=table.dim,
        metric_name="spearman_x100",
        value=100.0 * spearman(gold, predicted),
        coverage=len(gold) / len(dataset.triples),
        metadata=metadata or {},
    )


def eval_sts(
    table: EmbeddingTable,
    dataset: PairIndexDataset,
    variant: str = "base",
    metadata: dict[str, str] | None = None,
) -> EvalReport:
    """STS scoring: Spearman (x100) of sentence-pair cosines vs gold."""
    gold = []
    predicted = []
    for k1, k2, score in dataset.triples:
        i = table.row_index(k1)
        j = table.row_index(k2)
        if i is None or j is None:
            continue
        gold.append(score)
        predicted.append(cosine(table.matrix[i], table.matrix[j]))
    if len(gold) < 2:
        raise InsufficientCoverage(
            f"{dataset.name}: only {len(gold)} of {len(dataset.triples)} pairs resolve"
        )
    return EvalReport(
        task=dataset.name or "sts",
        variant=variant,
        dim=table.dim,
        metric_name="spearman_x100",
        value=100.0 * spearman(gold, predicted),
        coverage=len(gold) / len(dataset.triples),
        metadata=metadata or {},
    )


def knn(
    table: EmbeddingTable,
    query_key: str,
    k: int,
    include_self: bool = True,
) -> list[tuple[str, float]]:
    """Top-k keys by cosine to the query vector, descending.

    The query itself is included by default (it ranks first at cosine 1.0),
    matching the nearest-neighbor tables where each word lists itself.
    """
    idx = table.row_index(query_key)
    if idx is None:
        raise UnknownKey(f"{query_key!r} not in table")
    limit = len(table) if include_self else len(table) - 1
    if not 1 <= k <= limit:
        raise ValueError(f"k={k} outside [1, {limit}]")
    norms = np.linalg.norm(table.matrix, axis=1)
    if norms[idx] == 0.0 or np.any(norms == 0.0):
        raise ZeroVector("knn undefined with zero rows in the table")
    sims = (table.matrix @ table.matrix[idx]) / (norms * norms[idx])
    if not include_self:
        sims[idx] = -np.inf
    order = np.argsort(-sims, kind="stable")[:k]
    return [(table.keys[i], float(sims[i])) for i in order]


def similarity_matrix(a: EmbeddingTable, b: EmbeddingTable) -> np.ndarray:
    """M[i][j] = cosine(a_i, b_j); useful for sentence-pair heatmap TSVs."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dims {a.dim} and {b.dim}")
    na = np.linalg.norm(a.matrix, axis=1)
    nb = np.linalg.norm(b.matrix, axis=1)
    if np.any(na == 0.0) or np.any(nb == 0.0):
        raise ZeroVector("similarity matrix undefined with zero rows")
    return (a.matrix / na[:, None]) @ (b.matrix / nb[:, None]).T


# ----------------------------------------------------------------------
# concept categorization: seeded k-means + purity
# ----------------------------------------------------------------------


def _kmeans_pp_init(x: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = x.shape[0]
    centers = np.empty((k, x.shape[1]))
    centers[0] = x[rng.integers(n)]
    dist2 = np.sum((x - centers[0]) ** 2, axis=1)
    for c in range(1, k):
        total = dist2.sum()
        if total <= 0.0:
            centers[c] = x[rng.integers(n)]
            continue
        centers[c] = x[rng.choice(n, p=dist2 / total)]
        dist2 = np.minimum(dist2, np.sum((x - centers[c]) ** 2, axis=1))
    return centers


def _lloyd(x: np.ndarray, centers: np.ndarray, max_iter: int = 300):
    k = centers.shape[0]
    labels = np.zeros(len(x), dtype=np.intp)
    for _ in range(max_iter):
        d2 = (
            np.sum(x**2, axis=1)[:, None]
            - 2.0 * x @ centers.T
            + np.sum(centers**2, axis=1)[None, :]
        )
        new_labels = np.argmin(d2, axis=1)
        for c in range(k):
            mask = new_labels == c
            if mask.any():
                centers[c] = x[mask].mean(axis=0)
            else:
                # reseed an empty cluster at the farthest point
                far = np.argmax(np.min(d2, axis=1))
                centers[c] = x[far]
                new_labels[far] = c
        if np.array_equal(new_labels, labels):
            break
        labels = new_labels
    d2 = (
        np.sum(x**2, axis=1)[:, None]
        - 2.0 * x @ centers.T
        + np.sum(centers**2, axis=1)[None, :]
    )
    inertia = float(np.min(d2, axis=1).sum())
    return np.argmin(d2, axis=1), inertia


def kmeans(
    x: np.ndarray,
    k: int,
    seed: int,
    restarts: int = 10,
) -> tuple[np.ndarray, float]:
    """k-means with k-means++ restarts; best inertia wins, first-seen on ties.

    Deterministic given the seed: restarts draw from one seeded generator in
    a fixed order, and the comparison is strict, so reduction order cannot
    change the winner.
    """
    rng = np.random.default_rng(seed)
    best_labels = None
    best_inertia = np.inf
    for _ in range(restarts):
        centers = _kmeans_pp_init(x, k, rng)
        labels, inertia = _lloyd(x, centers.copy())
        if inertia < best_inertia:
            best_inertia = inertia
            best_labels = labels
    return best_labels, best_inertia


def purity(labels: np.ndarray, gold: np.ndarray) -> float:
    """Fraction of points whose cluster's majority gold category matches."""
    total = 0
    for c in np.unique(labels):
        _, counts = np.unique(gold[labels == c], return_counts=True)
        total += counts.max()
    return total / len(labels)


def eval_categorization(
    table: EmbeddingTable,
    dataset: CategorizationDataset,
    seed: int = 42,
    variant: str = "base",
    metadata: dict[str, str] | None = None,
) -> EvalReport:
    """Cluster L2-normalized vectors with k = gold category count; report purity."""
    words = []
    gold_labels = []
    for word, category in dataset.pairs:
        if word in table:
            words.append(word)
            gold_labels.append(category)
    categories = sorted(set(gold_labels))
    if len(words) < 2 or len(categories) < 2:
        raise InsufficientCoverage(
            f"{dataset.name}: {len(words)} resolvable words in "
            f"{len(categories)} categories"
        )
    x = np.vstack([table.vector(w) for w in words])
    norms = np.linalg.norm(x, axis=1)
    if np.any(norms == 0.0):
        raise ZeroVector("categorization undefined with zero vectors")
    x = x / norms[:, None]
    labels, _ = kmeans(x, k=len(categories), seed=seed)
    gold = np.array([categories.index(c) for c in gold_labels])
    return EvalReport(
        task=dataset.name or "categorization",
        variant=variant,
        dim=table.dim,
        metric_name="purity",
        value=purity(labels, gold),
        coverage=len(words) / len(dataset.pairs),
        metadata={**(metadata or {}), "seed": str(seed)},
    )
