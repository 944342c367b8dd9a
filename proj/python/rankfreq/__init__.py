"""Rank-frequency corpus statistics: cleaning, Zipf fits, kernel boundary,
entropy, vocabulary extrapolation, transliteration, synthetic corpora."""

from ._core import (
    BoundaryMethod,
    CleanReport,
    ConfigError,
    EmptyCorpusError,
    EntropyResult,
    ExtrapolationModel,
    FrequencyTable,
    InsufficientDataError,
    KernelBoundary,
    NoValidModelError,
    RankEntry,
    TranslitError,
    TwoSegmentFit,
    Utf8Error,
    WindowSeries,
    ZipfFit,
    build_table,
    detect_kernel_boundary,
    entropy,
    fit_extrapolation,
    fit_two_segment,
    fit_zipf,
    from_latin,
    generate,
    merge_tables,
    model_frequency,
    plateau_cap,
    predict_zero_rank,
    run_pipeline,
    split_pretokenized,
    to_latin,
    tokenize,
    top_k,
    window_scan,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryMethod",
    "CleanReport",
    "ConfigError",
    "EmptyCorpusError",
    "EntropyResult",
    "ExtrapolationModel",
    "FrequencyTable",
    "InsufficientDataError",
    "KernelBoundary",
    "NoValidModelError",
    "RankEntry",
    "TranslitError",
    "TwoSegmentFit",
    "Utf8Error",
    "WindowSeries",
    "ZipfFit",
    "build_table",
    "detect_kernel_boundary",
    "entropy",
    "fit_extrapolation",
    "fit_two_segment",
    "fit_zipf",
    "from_latin",
    "generate",
    "merge_tables",
    "model_frequency",
    "plateau_cap",
    "predict_zero_rank",
    "run_pipeline",
    "split_pretokenized",
    "to_latin",
    "tokenize",
    "top_k",
    "window_scan",
]
