import struct
from pathlib import Path
from typing import List, Optional, Union

from ..core import (
    BinaryReader,
    DimensionMismatchError,
    DuplicateContentError,
    FormatError,
    InvalidParameterError,
    KindMismatchError,
    read_artifact,
    unseal,
)
from ..fingerprint import (
    FingerprintKind,
    FingerprintSequence,
    MinHashParams,
    PcaModel,
    PipelineSettings,
    WindowConfig,
)
from ..fingerprint.minhash import read_minhash_params
from ..fingerprint.proposed import read_pca
from ._content_entry import ContentEntry
from ._db_encoder import DB_MAGIC, DB_VERSION, SETTINGS_FORMAT, grid_timestamps
from ._reference_db import ReferenceDB

__all__ = ("decode_db", "load_db", "read_settings",)


def read_settings(reader: BinaryReader) -> PipelineSettings:
    (sample_rate, min_input_rate, kaiser_beta, taps_per_phase, frame_size, hop, mel_bands,
     mel_f_lo, mel_f_hi, bark_bands, bark_f_lo, bark_f_hi, log_floor, window_len,
     stride) = reader.read_struct(SETTINGS_FORMAT)
    try:
        return PipelineSettings(
            sample_rate=sample_rate, min_input_rate=min_input_rate, kaiser_beta=kaiser_beta,
            taps_per_phase=taps_per_phase, frame_size=frame_size, hop=hop,
            mel_bands=mel_bands, mel_f_lo=mel_f_lo, mel_f_hi=mel_f_hi, bark_bands=bark_bands,
            bark_f_lo=bark_f_lo, bark_f_hi=bark_f_hi, log_floor=log_floor,
            window=WindowConfig(window_len, stride),
        )
    except InvalidParameterError as e:
        raise FormatError(f"Corrupt pipeline settings: {e}") from None


def decode_db(data: bytes, *, name: str = "<buffer>") -> ReferenceDB:
    """
    Parse an ``ACDB`` file.

    :raises MagicMismatchError: If `data` is not an ACDB file.
    :raises VersionMismatchError: For another format version.
    :raises TruncatedFileError: If the file is cut short.
    :raises ChecksumError: If any byte was altered.
    :raises FormatError: For structurally invalid content.
    """
    body = unseal(data, DB_MAGIC, DB_VERSION, name=name)
    digest, = struct.unpack("<I", data[-4:])
    reader = BinaryReader(body, name=name)

    code, skip = reader.read_struct("BI")
    try:
        kind = FingerprintKind.from_code(code)
    except ValueError as e:
        raise FormatError(f"'{name}': {e}") from None
    settings = read_settings(reader)

    pca: Optional[PcaModel] = None
    minhash: Optional[MinHashParams] = None
    has_model, = reader.read_struct("B")
    if has_model:
        if kind is FingerprintKind.PROPOSED:
            pca = read_pca(reader)
        else:
            minhash = read_minhash_params(reader)

    n_contents, dims = reader.read_struct("IH")
    table = []
    expected_offset = 0
    for _ in range(n_contents):
        content_id = reader.read_str()
        offset, count, first = reader.read_struct("QId")
        if offset != expected_offset:
            raise FormatError(f"'{name}': content '{content_id}' starts at {offset}, "
                              f"expected {expected_offset}")
        table.append((content_id, count, first))
        expected_offset += count

    dtype = "f2" if kind is FingerprintKind.PROPOSED else "u1"
    values = reader.read_array(dtype, expected_offset * dims).reshape(expected_offset, dims)
    reader.expect_end()

    entries: List[ContentEntry] = []
    start = 0
    for content_id, count, first in table:
        timestamps = grid_timestamps(first, count, skip, settings)
        fingerprints = FingerprintSequence(values[start:start + count], timestamps, kind)
        entries.append(ContentEntry(content_id, fingerprints))
        start += count

    try:
        return ReferenceDB(kind, entries, skip, settings, pca=pca, minhash=minhash,
                           digest=int(digest))
    except (InvalidParameterError, DimensionMismatchError, DuplicateContentError,
            KindMismatchError) as e:
        raise FormatError(f"'{name}': {e}") from None


def load_db(path: Union[str, Path]) -> ReferenceDB:
    return decode_db(read_artifact(path, "reference DB"), name=str(path))
