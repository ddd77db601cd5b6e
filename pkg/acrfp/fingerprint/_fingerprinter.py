from abc import ABC, abstractmethod
from typing import Optional

from ..audio import AudioBuffer
from ._kind import FingerprintKind
from ._sequence import PROPOSED_DIMS, SIGNATURE_SIZE, FingerprintSequence
from ._settings import PipelineSettings
from .minhash import MinHashParams, fingerprint_minhash
from .proposed import PcaModel, fingerprint_proposed

__all__ = ("Fingerprinter", "ProposedFingerprinter", "MinHashFingerprinter",)


class Fingerprinter(ABC):
    """
    Turns audio into a fingerprint sequence of one kind with fixed settings.

    Implementations are immutable and safe to share between worker threads.
    """

    def __init__(self, settings: Optional[PipelineSettings] = None) -> None:
        self._settings = settings or PipelineSettings()

    @property
    def settings(self) -> PipelineSettings:
        return self._settings

    @property
    @abstractmethod
    def kind(self) -> FingerprintKind:
        pass

    @property
    @abstractmethod
    def dims(self) -> int:
        pass

    @abstractmethod
    def fingerprint(self, audio: AudioBuffer) -> FingerprintSequence:
        pass

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(kind={self.kind.value})"


class ProposedFingerprinter(Fingerprinter):
    def __init__(self, model: PcaModel, settings: Optional[PipelineSettings] = None) -> None:
        super().__init__(settings)
        self._model = model

    @property
    def model(self) -> PcaModel:
        return self._model

    @property
    def kind(self) -> FingerprintKind:
        return FingerprintKind.PROPOSED

    @property
    def dims(self) -> int:
        return PROPOSED_DIMS

    def fingerprint(self, audio: AudioBuffer) -> FingerprintSequence:
        return fingerprint_proposed(audio, self._model, settings=self._settings)


class MinHashFingerprinter(Fingerprinter):
    def __init__(self, params: MinHashParams,
                 settings: Optional[PipelineSettings] = None) -> None:
        super().__init__(settings)
        self._params = params

    @property
    def params(self) -> MinHashParams:
        return self._params

    @property
    def kind(self) -> FingerprintKind:
        return FingerprintKind.MINHASH

    @property
    def dims(self) -> int:
        return SIGNATURE_SIZE

    def fingerprint(self, audio: AudioBuffer) -> FingerprintSequence:
        return fingerprint_minhash(audio, self._params, settings=self._settings)
