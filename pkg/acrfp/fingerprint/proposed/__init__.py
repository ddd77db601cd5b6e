from ._pca import (
    PCA_MAGIC,
    PCA_VERSION,
    PcaModel,
    decode_pca,
    encode_pca,
    load_pca,
    pca_apply,
    pca_train,
    read_pca,
    save_pca,
    write_pca,
)
from ._pca_settings import PcaSettings
from ._pipeline import fingerprint_proposed, pre_fingerprints
from ._transforms import cast_half, delta_augment, standardize

__all__ = ("standardize", "delta_augment", "cast_half", "PcaModel", "pca_train", "pca_apply",
           "encode_pca", "decode_pca", "write_pca", "read_pca", "save_pca", "load_pca",
           "PCA_MAGIC", "PCA_VERSION", "pre_fingerprints", "fingerprint_proposed",
           "PcaSettings",)
