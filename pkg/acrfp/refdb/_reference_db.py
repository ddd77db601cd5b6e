from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from ..core import (
    DimensionMismatchError,
    DuplicateContentError,
    InvalidParameterError,
    KindMismatchError,
    MissingModelError,
)
from ..fingerprint import (
    PROPOSED_DIMS,
    SIGNATURE_SIZE,
    Fingerprinter,
    FingerprintKind,
    MinHashFingerprinter,
    MinHashParams,
    PcaModel,
    PipelineSettings,
    ProposedFingerprinter,
)
from ._content_entry import ContentEntry
from ._db_encoder import db_digest

__all__ = ("ReferenceDB",)


class ReferenceDB:
    """
    Immutable collection of reference fingerprints of a single kind.

    Contents are ordered by id and fingerprints by timestamp within a content; the flat
    `position` of a fingerprint follows that order, so ordering hits by position is the
    same as ordering them by ``(content_id, timestamp)``.

    The DB keeps the pipeline settings and the PCA model or min-hash parameters it was
    built with, so queries can always be fingerprinted the same way.
    """

    def __init__(self, kind: FingerprintKind, entries: Iterable[ContentEntry], skip: int,
                 settings: Optional[PipelineSettings] = None, *,
                 pca: Optional[PcaModel] = None,
                 minhash: Optional[MinHashParams] = None,
                 digest: Optional[int] = None) -> None:
        if skip < 0:
            raise InvalidParameterError(f"Skip must be >= 0, got {skip}")
        if kind is FingerprintKind.PROPOSED and minhash is not None:
            raise InvalidParameterError("A proposed-fingerprint DB cannot hold min-hash params")
        if kind is FingerprintKind.MINHASH and pca is not None:
            raise InvalidParameterError("A min-hash DB cannot hold a PCA model")

        self._kind = kind
        self._skip = skip
        self._settings = settings or PipelineSettings()
        self._pca = pca
        self._minhash = minhash
        self._digest = digest

        self._dims = PROPOSED_DIMS if kind is FingerprintKind.PROPOSED else SIGNATURE_SIZE
        if pca is not None:
            self._dims = pca.out_dims

        by_id: Dict[str, ContentEntry] = {}
        for entry in entries:
            if entry.kind is not kind:
                raise KindMismatchError(
                    f"Content '{entry.content_id}' holds {entry.kind.value} fingerprints, "
                    f"DB kind is {kind.value}"
                )
            if len(entry) > 0 and entry.fingerprints.dims != self._dims:
                raise DimensionMismatchError(
                    f"Content '{entry.content_id}' has {entry.fingerprints.dims}-d "
                    f"fingerprints, DB expects {self._dims}"
                )
            if entry.content_id in by_id:
                raise DuplicateContentError(f"Duplicate content id '{entry.content_id}'")
            by_id[entry.content_id] = entry
        self._entries: Tuple[ContentEntry, ...] = tuple(by_id[k] for k in sorted(by_id))
        self._by_id = by_id

        counts = np.array([len(e) for e in self._entries], dtype=np.int64)
        self._offsets = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
        dtype = np.float16 if kind is FingerprintKind.PROPOSED else np.uint8
        if len(self._entries) and self._offsets[-1] > 0:
            self._values = np.concatenate([e.fingerprints.values for e in self._entries])
            self._timestamps = np.concatenate([e.timestamps for e in self._entries])
        else:
            self._values = np.zeros((0, self._dims), dtype=dtype)
            self._timestamps = np.zeros(0)
        self._content_index = np.repeat(np.arange(len(self._entries), dtype=np.int32), counts)
        self._content_ids = [e.content_id for e in self._entries]
        for array in (self._values, self._timestamps, self._content_index, self._offsets):
            array.setflags(write=False)
        self._widened: Optional[np.ndarray] = None

    @property
    def kind(self) -> FingerprintKind:
        return self._kind

    @property
    def skip(self) -> int:
        return self._skip

    @property
    def settings(self) -> PipelineSettings:
        return self._settings

    @property
    def pca(self) -> Optional[PcaModel]:
        return self._pca

    @property
    def minhash(self) -> Optional[MinHashParams]:
        return self._minhash

    @property
    def dims(self) -> int:
        return self._dims

    @property
    def entries(self) -> Tuple[ContentEntry, ...]:
        return self._entries

    @property
    def content_ids(self) -> List[str]:
        return list(self._content_ids)

    @property
    def n_contents(self) -> int:
        return len(self._entries)

    @property
    def values(self) -> np.ndarray:
        """
        All fingerprints, ``[N][dims]``, in position order.
        """
        return self._values

    @property
    def timestamps(self) -> np.ndarray:
        return self._timestamps

    @property
    def content_index(self) -> np.ndarray:
        """
        Index into `content_ids` of every fingerprint.
        """
        return self._content_index

    @property
    def offsets(self) -> np.ndarray:
        """
        Position of each content's first fingerprint, plus a final total.
        """
        return self._offsets

    @property
    def spacing(self) -> float:
        """
        Seconds between consecutive retained fingerprints of a content.
        """
        return (self._skip + 1) * self._settings.stride_seconds

    @property
    def digest(self) -> int:
        """
        CRC32 of the encoded DB; indexes record it to detect a DB swap.
        """
        if self._digest is None:
            self._digest = db_digest(self)
        return self._digest

    def widened(self) -> np.ndarray:
        """
        Fingerprints as float32 (exact for binary16) for proposed DBs, raw bytes otherwise.
        """
        if self._kind is FingerprintKind.MINHASH:
            return self._values
        if self._widened is None:
            widened = self._values.astype(np.float32)
            widened.setflags(write=False)
            self._widened = widened
        return self._widened

    def entry(self, content_id: str) -> ContentEntry:
        try:
            return self._by_id[content_id]
        except KeyError:
            raise KeyError(f"No content '{content_id}' in the DB") from None

    def content_id_at(self, position: int) -> str:
        return self._content_ids[int(self._content_index[position])]

    def make_fingerprinter(self) -> Fingerprinter:
        """
        Build a fingerprinter that reproduces this DB's fingerprints for queries.

        :raises MissingModelError: If the DB stores no PCA model / min-hash parameters.
        """
        if self._kind is FingerprintKind.PROPOSED:
            if self._pca is None:
                raise MissingModelError(
                    "DB has no PCA model; rebuild it with a model from 'acrfp train-pca'"
                )
            return ProposedFingerprinter(self._pca, self._settings)
        if self._minhash is None:
            raise MissingModelError("DB has no min-hash parameters; rebuild it")
        return MinHashFingerprinter(self._minhash, self._settings)

    def __len__(self) -> int:
        return int(self._values.shape[0])

    def __iter__(self) -> Iterator[ContentEntry]:
        return iter(self._entries)

    def __repr__(self) -> str:
        return (f"ReferenceDB(kind={self._kind.value}, skip={self._skip}, "
                f"contents={self.n_contents}, fingerprints={len(self)})")
