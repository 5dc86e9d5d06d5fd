"""wavepress: wavelet-based compression of word and sentence embeddings,
with PCA/DCT baselines and the semantic evaluation tasks used to judge them."""

from .baselines import PcaModel, dct_ii, dct_truncate, pca_fit, pca_transform
from .dwt import (
    CoefficientTree,
    PaddingMode,
    coeff_len,
    dwt_level,
    idwt_level,
    wavedec,
)
from .filters import Family, FilterPair, WaveletFamily, get_filters, supported_wavelets
from .io import (
    CategorizationDataset,
    EmbeddingTable,
    LabeledDataset,
    PairIndexDataset,
    Split,
    WordSimDataset,
    load_any_table,
    load_categorization,
    load_labeled,
    load_matrix,
    load_pairs,
    load_word_vectors,
    load_wordsim,
    save_matrix,
)
from .probe import (
    BaselineSpec,
    MlpConfig,
    MlpModel,
    evaluate_probe,
    run_task,
    train_probe,
)
from .reports import EvalReport, render_json_lines, render_table, render_tsv
from .selection import (
    CompressionConfig,
    Selector,
    compress_table,
    compress_vector,
    compressed_dim,
    compression_ratio,
    select,
)
from .semantic import (
    cosine,
    eval_categorization,
    eval_sts,
    eval_word_similarity,
    kmeans,
    knn,
    purity,
    similarity_matrix,
    spearman,
)

__version__ = "0.1.0"
