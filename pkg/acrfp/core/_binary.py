import struct
import zlib
from pathlib import Path
from typing import Any, Tuple, Union

import numpy as np

from ._errors import (
    ArtifactNotFoundError,
    ChecksumError,
    FormatError,
    MagicMismatchError,
    TruncatedFileError,
    VersionMismatchError,
)

__all__ = ("BinaryWriter", "BinaryReader", "seal", "unseal", "read_artifact",)

# magic, version, body length
_ENVELOPE = struct.Struct("<4sHQ")
_CRC = struct.Struct("<I")


class BinaryWriter:
    """
    Little-endian writer used by every artifact codec (ACPC, ACDB, ACIX).
    """

    def __init__(self) -> None:
        self._buffer = bytearray()

    def write_struct(self, fmt: str, *values: Any) -> None:
        self._buffer += struct.pack("<" + fmt, *values)

    def write_bytes(self, data: bytes) -> None:
        self._buffer += data

    def write_str(self, value: str) -> None:
        encoded = value.encode("utf-8")
        if len(encoded) > 0xFFFF:
            raise FormatError(f"String is too long to encode ({len(encoded)} bytes)")
        self.write_struct("H", len(encoded))
        self._buffer += encoded

    def write_array(self, array: np.ndarray, dtype: str) -> None:
        """
        Append `array` in row-major order converted to the little-endian `dtype`.

        :param array: Array to serialize.
        :param dtype: Numpy dtype string without byte order, e.g. ``"f4"`` or ``"u1"``.
        """
        self._buffer += np.ascontiguousarray(array, dtype="<" + dtype).tobytes()

    def getvalue(self) -> bytes:
        return bytes(self._buffer)

    def __len__(self) -> int:
        return len(self._buffer)


class BinaryReader:
    """
    Cursor over an in-memory buffer that raises `TruncatedFileError` on short reads.
    """

    def __init__(self, data: bytes, *, name: str = "<buffer>") -> None:
        self._data = memoryview(data)
        self._pos = 0
        self._name = name

    @property
    def position(self) -> int:
        return self._pos

    @property
    def remaining(self) -> int:
        return len(self._data) - self._pos

    def read_bytes(self, size: int) -> bytes:
        if size < 0 or self._pos + size > len(self._data):
            raise TruncatedFileError(
                f"Unexpected end of '{self._name}': wanted {size} bytes at offset {self._pos}, "
                f"{self.remaining} available"
            )
        chunk = bytes(self._data[self._pos:self._pos + size])
        self._pos += size
        return chunk

    def read_struct(self, fmt: str) -> Tuple[Any, ...]:
        packer = struct.Struct("<" + fmt)
        return packer.unpack(self.read_bytes(packer.size))

    def read_str(self) -> str:
        size, = self.read_struct("H")
        try:
            return self.read_bytes(size).decode("utf-8")
        except UnicodeDecodeError as e:
            raise FormatError(f"Invalid string in '{self._name}': {e}") from None

    def read_array(self, dtype: str, count: int) -> np.ndarray:
        """
        Read `count` items of the little-endian `dtype` as a native, writable array.
        """
        le_dtype = np.dtype("<" + dtype)
        raw = self.read_bytes(le_dtype.itemsize * count)
        return np.frombuffer(raw, dtype=le_dtype).astype(le_dtype.newbyteorder("="))

    def expect_end(self) -> None:
        if self.remaining != 0:
            raise FormatError(f"'{self._name}' has {self.remaining} unexpected trailing bytes")


def seal(magic: bytes, version: int, body: bytes) -> bytes:
    """
    Wrap `body` into the common artifact envelope.

    Layout: magic (4 bytes), version u16, body length u64, body, CRC32 u32. The checksum
    covers every byte preceding it.
    """
    head = _ENVELOPE.pack(magic, version, len(body))
    payload = head + body
    return payload + _CRC.pack(zlib.crc32(payload) & 0xFFFFFFFF)


def unseal(data: bytes, magic: bytes, version: int, *, name: str = "<buffer>") -> bytes:
    """
    Validate an envelope produced by `seal` and return its body.

    Checks run in order: envelope size, magic, version, declared length, CRC32.

    :raises TruncatedFileError: If the file is shorter than its envelope declares.
    :raises MagicMismatchError: If the file does not start with `magic`.
    :raises VersionMismatchError: If the format version is not `version`.
    :raises ChecksumError: If the CRC32 trailer does not match.
    """
    if len(data) < 4:
        raise TruncatedFileError(f"'{name}' is too short to be a {magic.decode()} file")
    if data[:4] != magic:
        raise MagicMismatchError(
            f"'{name}' is not a {magic.decode()} file (magic {bytes(data[:4])!r})"
        )
    if len(data) < _ENVELOPE.size:
        raise TruncatedFileError(f"'{name}' is truncated inside its header")
    _, found_version, body_len = _ENVELOPE.unpack_from(data)
    if found_version != version:
        raise VersionMismatchError(
            f"'{name}' has {magic.decode()} version {found_version}, expected {version}"
        )
    end = _ENVELOPE.size + body_len
    if len(data) < end + _CRC.size:
        raise TruncatedFileError(
            f"'{name}' is truncated: {len(data)} bytes, expected {end + _CRC.size}"
        )
    if len(data) > end + _CRC.size:
        raise FormatError(f"'{name}' has {len(data) - end - _CRC.size} unexpected trailing bytes")
    expected, = _CRC.unpack_from(data, end)
    actual = zlib.crc32(data[:end]) & 0xFFFFFFFF
    if actual != expected:
        raise ChecksumError(
            f"Checksum mismatch in '{name}': stored {expected:08x}, computed {actual:08x}"
        )
    return bytes(data[_ENVELOPE.size:end])


def read_artifact(path: Union[str, Path], what: str) -> bytes:
    """
    Read a whole artifact file, mapping OS errors to acrfp errors.
    """
    try:
        return Path(path).read_bytes()
    except FileNotFoundError:
        raise ArtifactNotFoundError(f"{what} file '{path}' does not exist") from None
    except OSError as e:
        raise FormatError(f"Failed to read {what} file '{path}': {e}") from None
