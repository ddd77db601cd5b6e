from ._fingerprinter import Fingerprinter, MinHashFingerprinter, ProposedFingerprinter
from ._kind import FingerprintKind
from ._sequence import (
    PROPOSED_DIMS,
    SIGNATURE_SIZE,
    Fingerprint,
    FingerprintSequence,
    MinHashSignature,
    ProposedFingerprint,
)
from ._settings import PipelineSettings
from ._window import (
    RunningMean,
    WindowConfig,
    require_window,
    sliding_windows,
    time_average,
    window_count,
    window_means,
    window_starts,
    window_timestamps,
)
from .minhash import (
    MinHashParams,
    MinHashSettings,
    fingerprint_minhash,
    haar2d,
    hamming,
    inverse_haar2d,
    minhash,
    top_wavelet_bits,
)
from .proposed import (
    PcaModel,
    PcaSettings,
    cast_half,
    delta_augment,
    fingerprint_proposed,
    load_pca,
    pca_apply,
    pca_train,
    pre_fingerprints,
    save_pca,
    standardize,
)

__all__ = ("FingerprintKind", "Fingerprint", "ProposedFingerprint", "MinHashSignature",
           "FingerprintSequence", "SIGNATURE_SIZE", "PROPOSED_DIMS", "PipelineSettings",
           "WindowConfig", "sliding_windows", "window_count", "window_starts",
           "window_timestamps", "time_average", "window_means", "require_window",
           "RunningMean", "standardize", "delta_augment", "cast_half", "PcaModel",
           "pca_train", "pca_apply", "save_pca", "load_pca", "pre_fingerprints",
           "fingerprint_proposed", "haar2d", "inverse_haar2d", "top_wavelet_bits",
           "MinHashParams", "minhash", "hamming", "fingerprint_minhash", "Fingerprinter",
           "ProposedFingerprinter", "MinHashFingerprinter", "PcaSettings", "MinHashSettings",)
