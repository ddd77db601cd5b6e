import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

import numpy as np

from ..audio import AudioBuffer, load_wav
from ..core import AcrfpError, InsufficientSamplesError
from ..fingerprint import PcaModel, PcaSettings, PipelineSettings, pre_fingerprints
from ._build import resolve_threads
from ._corpus import CorpusItem

__all__ = ("train_pca_on_corpus", "train_pca_on_audio",)

logger = logging.getLogger(__name__)


def _pre_fingerprints(audio: AudioBuffer, settings: PipelineSettings) -> Optional[np.ndarray]:
    try:
        _, values = pre_fingerprints(audio, settings)
    except AcrfpError as e:
        logger.warning("No pre-fingerprints from %r: %s", audio, e)
        return None
    return values


def train_pca_on_audio(audios: Sequence[AudioBuffer],
                       pipeline: Optional[PipelineSettings] = None,
                       pca: Optional[PcaSettings] = None, *, threads: int = 0) -> PcaModel:
    """
    Fit the PCA model on the pre-fingerprints of every buffer in `audios`.

    Buffers shorter than one window contribute nothing. Rows are stacked in input order, so
    the model does not depend on `threads`.

    :raises InsufficientSamplesError: If fewer than ``pca.min_samples`` rows are collected.
    """
    pipeline = pipeline or PipelineSettings()
    pca = pca or PcaSettings()
    workers = min(resolve_threads(threads), max(len(audios), 1))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        parts = list(executor.map(lambda a: _pre_fingerprints(a, pipeline), audios))
    rows = [p for p in parts if p is not None and p.shape[0] > 0]
    if not rows:
        raise InsufficientSamplesError("No audio long enough to extract pre-fingerprints")
    samples = np.concatenate(rows)
    logger.info("Training PCA on %d pre-fingerprints", samples.shape[0])
    return pca.train(samples)


def train_pca_on_corpus(corpus: Sequence[CorpusItem],
                        pipeline: Optional[PipelineSettings] = None,
                        pca: Optional[PcaSettings] = None, *, threads: int = 0) -> PcaModel:
    """
    Load every corpus item and fit the PCA model on their pre-fingerprints.

    Unreadable files are logged and skipped.
    """
    audios = []
    for item in corpus:
        try:
            audios.append(load_wav(item.path))
        except AcrfpError as e:
            logger.warning("Skipping '%s' (%s): %s", item.content_id, item.path, e)
    return train_pca_on_audio(audios, pipeline, pca, threads=threads)
