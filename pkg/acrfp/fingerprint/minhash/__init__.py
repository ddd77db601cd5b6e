from ._bits import top_wavelet_bits
from ._haar import haar2d, haar_matrix, inverse_haar2d
from ._minhash import (
    MINHASH_CAP,
    MinHashParams,
    hamming,
    minhash,
    read_minhash_params,
    write_minhash_params,
)
from ._minhash_settings import MinHashSettings
from ._pipeline import fingerprint_minhash

__all__ = ("haar_matrix", "haar2d", "inverse_haar2d", "top_wavelet_bits", "MinHashParams",
           "minhash", "hamming", "write_minhash_params", "read_minhash_params", "MINHASH_CAP",
           "fingerprint_minhash", "MinHashSettings",)
