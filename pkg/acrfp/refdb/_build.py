import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple, Union

from ..audio import AudioBuffer, load_wav
from ..core import AcrfpError, DuplicateContentError, InvalidParameterError
from ..fingerprint import (
    Fingerprinter,
    FingerprintSequence,
    MinHashFingerprinter,
    ProposedFingerprinter,
)
from ._content_entry import ContentEntry
from ._corpus import CorpusItem
from ._reference_db import ReferenceDB

__all__ = ("BuildFailure", "BuildResult", "build_db", "build_db_from_audio", "sparsify",
           "sparsify_db", "resolve_threads",)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BuildFailure:
    content_id: str
    path: str
    reason: str


@dataclass(frozen=True)
class BuildResult:
    db: ReferenceDB
    failures: List[BuildFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


Outcome = Union[FingerprintSequence, BuildFailure]


def resolve_threads(threads: int) -> int:
    """
    Worker count for `threads`; ``0`` means one per CPU.
    """
    if threads < 0:
        raise InvalidParameterError(f"Thread count must be >= 0, got {threads}")
    return threads or (os.cpu_count() or 1)


def sparsify(fingerprints: FingerprintSequence, skip: int) -> FingerprintSequence:
    """
    Keep dense indices ``0, skip + 1, 2 (skip + 1), ...``.
    """
    return fingerprints.skip(skip)


def sparsify_db(dense: ReferenceDB, skip: int) -> ReferenceDB:
    """
    Derive a skip-`skip` DB from a skip-0 one, content by content.
    """
    if dense.skip != 0:
        raise InvalidParameterError(f"Can only sparsify a skip-0 DB, got skip {dense.skip}")
    entries = [ContentEntry(e.content_id, sparsify(e.fingerprints, skip)) for e in dense]
    return ReferenceDB(dense.kind, entries, skip, dense.settings, pca=dense.pca,
                       minhash=dense.minhash)


def _fingerprint_item(item: CorpusItem, fingerprinter: Fingerprinter) -> Outcome:
    try:
        audio = load_wav(item.path)
        return fingerprinter.fingerprint(audio)
    except AcrfpError as e:
        logger.warning("Skipping '%s' (%s): %s", item.content_id, item.path, e)
        return BuildFailure(item.content_id, str(item.path), str(e))


def _check_unique(content_ids: Sequence[str]) -> None:
    seen = set()
    for content_id in content_ids:
        if content_id in seen:
            raise DuplicateContentError(f"Duplicate content id '{content_id}' in corpus")
        seen.add(content_id)


def _assemble(content_ids: Sequence[str], outcomes: Sequence[Outcome],
              fingerprinter: Fingerprinter, skip: int) -> BuildResult:
    entries, failures = [], []
    for content_id, outcome in zip(content_ids, outcomes):
        if isinstance(outcome, BuildFailure):
            failures.append(outcome)
        else:
            entries.append(ContentEntry(content_id, sparsify(outcome, skip)))

    pca = fingerprinter.model if isinstance(fingerprinter, ProposedFingerprinter) else None
    minhash = fingerprinter.params if isinstance(fingerprinter, MinHashFingerprinter) else None
    db = ReferenceDB(fingerprinter.kind, entries, skip, fingerprinter.settings,
                     pca=pca, minhash=minhash)
    logger.info("Built %r with %d failure(s)", db, len(failures))
    return BuildResult(db, sorted(failures, key=lambda f: f.content_id))


def build_db(corpus: Sequence[CorpusItem], fingerprinter: Fingerprinter, skip: int = 0, *,
             threads: int = 0) -> BuildResult:
    """
    Fingerprint every corpus item and keep one in ``skip + 1`` fingerprints per content.

    Items that cannot be decoded or are shorter than one window are reported in
    ``BuildResult.failures`` and left out; the rest of the build continues. The result does
    not depend on `threads`.

    :param corpus: Items with unique content ids.
    :param fingerprinter: Produces the fingerprints; its model is stored in the DB.
    :param skip: Fingerprints dropped after each retained one.
    :param threads: Worker threads, ``0`` for one per CPU.
    :raises DuplicateContentError: If two items share an id (checked before any work).
    """
    if skip < 0:
        raise InvalidParameterError(f"Skip must be >= 0, got {skip}")
    _check_unique([item.content_id for item in corpus])

    workers = min(resolve_threads(threads), max(len(corpus), 1))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        outcomes = list(executor.map(lambda i: _fingerprint_item(i, fingerprinter), corpus))
    return _assemble([item.content_id for item in corpus], outcomes, fingerprinter, skip)


def build_db_from_audio(contents: Sequence[Tuple[str, AudioBuffer]],
                        fingerprinter: Fingerprinter, skip: int = 0, *,
                        threads: int = 0) -> BuildResult:
    """
    `build_db` over audio that is already in memory, as ``(content_id, audio)`` pairs.
    """
    if skip < 0:
        raise InvalidParameterError(f"Skip must be >= 0, got {skip}")
    content_ids = [content_id for content_id, _ in contents]
    _check_unique(content_ids)

    def fingerprint(content: Tuple[str, AudioBuffer]) -> Outcome:
        content_id, audio = content
        try:
            return fingerprinter.fingerprint(audio)
        except AcrfpError as e:
            logger.warning("Skipping '%s': %s", content_id, e)
            return BuildFailure(content_id, "<memory>", str(e))

    workers = min(resolve_threads(threads), max(len(contents), 1))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        outcomes = list(executor.map(fingerprint, contents))
    return _assemble(content_ids, outcomes, fingerprinter, skip)
