import logging
import threading
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple

from .._version import version
from ..audio import AudioBuffer, load_wav
from ..core import AcrfpError, InvalidParameterError, make_rng
from ..fingerprint import (
    Fingerprinter,
    FingerprintKind,
    MinHashFingerprinter,
    PcaModel,
    ProposedFingerprinter,
    load_pca,
)
from ..index import Index, IndexType, build_index
from ..refdb import (
    ReferenceDB,
    build_db_from_audio,
    load_manifest,
    sparsify_db,
    train_pca_on_audio,
)
from ._experiment_spec import ExperimentSpec
from ._rows import RowMeta

if TYPE_CHECKING:
    from .._settings import Settings

__all__ = ("EvalContext", "QueryClip",)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QueryClip:
    """
    An excerpt of a corpus clip used as a query; `start` is its offset in the clip.
    """

    content_id: str
    audio: AudioBuffer
    start: float
    number: int


class EvalContext:
    """
    Corpus audio plus the fingerprinters, DBs and indexes built from it, shared by cells.

    Everything is built on first use and cached; building is deterministic, so which cell
    triggers it does not change any result. Safe to use from several threads.
    """

    def __init__(self, spec: ExperimentSpec, settings: "Settings",
                 contents: Sequence[Tuple[str, AudioBuffer]], *,
                 pca: Optional[PcaModel] = None) -> None:
        if not contents:
            raise InvalidParameterError("The evaluation corpus is empty")
        self._spec = spec
        self._settings = settings
        self._contents = sorted(contents, key=lambda c: c[0])
        self._pca = pca
        self._meta = RowMeta(spec.seed, settings.config_hash, f"v{version}")
        self._lock = threading.RLock()
        self._fingerprinters: Dict[FingerprintKind, Fingerprinter] = {}
        self._dbs: Dict[Tuple[FingerprintKind, int], ReferenceDB] = {}
        self._indexes: Dict[Tuple[FingerprintKind, int, IndexType], Index] = {}
        self._queries: Optional[List[QueryClip]] = None

    @classmethod
    def load(cls, spec: ExperimentSpec, settings: "Settings") -> "EvalContext":
        """
        Read the corpus (and PCA model, if the experiment names one) from disk.

        Clips that cannot be decoded are logged and left out.
        """
        spec.check_files()
        contents = []
        for item in load_manifest(spec.manifest):
            try:
                audio = settings.pipeline.canonicalize(load_wav(item.path))
            except AcrfpError as e:
                logger.warning("Leaving '%s' out of the evaluation: %s", item.content_id, e)
                continue
            contents.append((item.content_id, audio))
        pca = load_pca(spec.pca) if spec.pca is not None else None
        return cls(spec, settings, contents, pca=pca)

    @property
    def spec(self) -> ExperimentSpec:
        return self._spec

    @property
    def settings(self) -> "Settings":
        return self._settings

    @property
    def meta(self) -> RowMeta:
        return self._meta

    @property
    def contents(self) -> List[Tuple[str, AudioBuffer]]:
        return list(self._contents)

    def fingerprinter(self, kind: FingerprintKind) -> Fingerprinter:
        with self._lock:
            if kind not in self._fingerprinters:
                self._fingerprinters[kind] = self._make_fingerprinter(kind)
            return self._fingerprinters[kind]

    def _make_fingerprinter(self, kind: FingerprintKind) -> Fingerprinter:
        pipeline = self._settings.pipeline
        if kind is FingerprintKind.MINHASH:
            return MinHashFingerprinter(self._settings.minhash.make_params(pipeline), pipeline)
        if self._pca is None:
            logger.info("No PCA model given; training one on the evaluation corpus")
            self._pca = train_pca_on_audio([audio for _, audio in self._contents], pipeline,
                                           self._settings.pca, threads=self._settings.threads)
        return ProposedFingerprinter(self._pca, pipeline)

    def db(self, kind: FingerprintKind, skip: int = 0) -> ReferenceDB:
        """
        The corpus DB of `kind`, sparsified to `skip` from the dense one.
        """
        with self._lock:
            key = (kind, skip)
            if key not in self._dbs:
                if skip == 0:
                    result = build_db_from_audio(self._contents, self.fingerprinter(kind), 0,
                                                 threads=self._settings.threads)
                    self._dbs[key] = result.db
                else:
                    self._dbs[key] = sparsify_db(self.db(kind, 0), skip)
            return self._dbs[key]

    def index(self, kind: FingerprintKind, skip: int, index_type: IndexType) -> Index:
        with self._lock:
            key = (kind, skip, index_type)
            if key not in self._indexes:
                settings = replace(self._settings.index, type=index_type)
                self._indexes[key] = build_index(self.db(kind, skip), settings)
            return self._indexes[key]

    def queries(self) -> List[QueryClip]:
        """
        Query excerpts of every clip, starting on the DB fingerprint grid.

        Starting on the grid makes a clean excerpt of a skip-0 DB retrieve itself exactly.
        Clips shorter than the excerpt length are used whole.
        """
        with self._lock:
            if self._queries is None:
                self._queries = self._cut_queries()
            return list(self._queries)

    def _cut_queries(self) -> List[QueryClip]:
        pipeline = self._settings.pipeline
        ev = self._settings.eval
        length = int(round(ev.query_seconds * pipeline.sample_rate))
        grid = pipeline.stride_samples
        queries = []
        for content_id, audio in self._contents:
            for number in range(ev.queries_per_clip):
                if audio.n_frames <= length:
                    start = 0
                else:
                    rng = make_rng(self._spec.seed, "excerpt", content_id, number)
                    start = int(rng.integers(0, (audio.n_frames - length) // grid + 1)) * grid
                queries.append(QueryClip(content_id, audio.excerpt(start, length),
                                         start / pipeline.sample_rate, number))
        return queries
