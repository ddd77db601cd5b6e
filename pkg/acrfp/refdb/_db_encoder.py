import struct
from pathlib import Path
from typing import TYPE_CHECKING, Union

import numpy as np

from ..core import BinaryWriter, FormatError, atomic_write_bytes, seal
from ..fingerprint import FingerprintKind, PipelineSettings, window_timestamps
from ..fingerprint.minhash import write_minhash_params
from ..fingerprint.proposed import write_pca

if TYPE_CHECKING:
    from ._reference_db import ReferenceDB

__all__ = ("DB_MAGIC", "DB_VERSION", "SETTINGS_FORMAT", "encode_db", "save_db", "db_digest",
           "write_settings", "grid_timestamps",)

DB_MAGIC = b"ACDB"
DB_VERSION = 1

# sample_rate, min_input_rate, kaiser_beta, taps_per_phase, frame_size, hop, mel_bands,
# mel_f_lo, mel_f_hi, bark_bands, bark_f_lo, bark_f_hi, log_floor, window_len, stride
SETTINGS_FORMAT = "IIdHIIHddHdddHH"


def write_settings(writer: BinaryWriter, settings: PipelineSettings) -> None:
    writer.write_struct(
        SETTINGS_FORMAT,
        settings.sample_rate, settings.min_input_rate, settings.kaiser_beta,
        settings.taps_per_phase, settings.frame_size, settings.hop, settings.mel_bands,
        settings.mel_f_lo, settings.mel_f_hi, settings.bark_bands, settings.bark_f_lo,
        settings.bark_f_hi, settings.log_floor, settings.window.window_len,
        settings.window.stride,
    )


def grid_timestamps(first: float, count: int, skip: int,
                    settings: PipelineSettings) -> np.ndarray:
    """
    Timestamps of `count` retained fingerprints starting at `first`.
    """
    steps = np.arange(count, dtype=np.int64) * (skip + 1) * settings.window.stride
    return window_timestamps(first, steps, settings.hop_seconds)


def _body(db: "ReferenceDB") -> bytes:
    writer = BinaryWriter()
    writer.write_struct("BI", db.kind.code, db.skip)
    write_settings(writer, db.settings)

    if db.kind is FingerprintKind.PROPOSED:
        writer.write_struct("B", db.pca is not None)
        if db.pca is not None:
            write_pca(writer, db.pca)
    else:
        writer.write_struct("B", db.minhash is not None)
        if db.minhash is not None:
            write_minhash_params(writer, db.minhash)

    writer.write_struct("IH", db.n_contents, db.dims)
    for entry, offset in zip(db.entries, db.offsets):
        first = float(entry.timestamps[0]) if len(entry) else 0.0
        expected = grid_timestamps(first, len(entry), db.skip, db.settings)
        if not np.array_equal(expected, entry.timestamps):
            raise FormatError(
                f"Timestamps of '{entry.content_id}' are not on the DB's fingerprint grid"
            )
        writer.write_str(entry.content_id)
        writer.write_struct("QId", int(offset), len(entry), first)

    writer.write_array(db.values, "f2" if db.kind is FingerprintKind.PROPOSED else "u1")
    return writer.getvalue()


def encode_db(db: "ReferenceDB") -> bytes:
    """
    Serialize a DB into the self-contained ``ACDB`` format.

    :raises FormatError: If some content's timestamps cannot be rebuilt from its first
                         timestamp and the DB's fingerprint spacing.
    """
    return seal(DB_MAGIC, DB_VERSION, _body(db))


def db_digest(db: "ReferenceDB") -> int:
    data = encode_db(db)
    digest, = struct.unpack("<I", data[-4:])
    return int(digest)


def save_db(path: Union[str, Path], db: "ReferenceDB") -> None:
    data = encode_db(db)
    atomic_write_bytes(Path(path), data)
