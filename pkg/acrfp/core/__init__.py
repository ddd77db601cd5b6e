from ._atomic import atomic_write_bytes, atomic_write_text
from ._binary import BinaryReader, BinaryWriter, read_artifact, seal, unseal
from ._dispatcher import Dispatcher, EventHandler, Subscriber
from ._errors import (
    AcrfpError,
    ArtifactNotFoundError,
    AudioDecodeError,
    AudioError,
    ChecksumError,
    ConfigError,
    DegradationError,
    DimensionMismatchError,
    DuplicateContentError,
    EmptyAudioError,
    EmptyDatabaseError,
    ExitCode,
    FormatError,
    HalfPrecisionOverflowError,
    IndexBindingError,
    InsufficientSamplesError,
    InvalidParameterError,
    KindMismatchError,
    MagicMismatchError,
    ManifestError,
    MissingModelError,
    ModelError,
    NoiseSkipped,
    SampleRateError,
    SignalTooShortError,
    TranscoderUnavailableError,
    TruncatedFileError,
    UnsupportedEncodingError,
    VersionMismatchError,
)
from ._event import Event, event_types
from ._logging import configure_logging, make_console, make_error_console
from ._seeding import derive_seed, make_rng
from .config_loader import (
    Config,
    ConfigDumper,
    ConfigFileLoader,
    ConfigType,
    Section,
    config_digest,
)

__all__ = ("Config", "Section", "ConfigType", "ConfigFileLoader",
           "ConfigDumper", "config_digest", "Event", "event_types", "Dispatcher", "Subscriber",
           "EventHandler", "BinaryReader", "BinaryWriter", "seal", "unseal", "read_artifact",
           "atomic_write_bytes", "atomic_write_text", "derive_seed", "make_rng",
           "configure_logging", "make_console", "make_error_console",
           "ExitCode", "AcrfpError", "ConfigError", "InvalidParameterError", "ManifestError",
           "AudioError", "AudioDecodeError", "UnsupportedEncodingError", "EmptyAudioError",
           "SampleRateError", "SignalTooShortError", "HalfPrecisionOverflowError",
           "ModelError", "InsufficientSamplesError", "DimensionMismatchError",
           "MissingModelError", "FormatError", "ArtifactNotFoundError", "MagicMismatchError",
           "VersionMismatchError",
           "TruncatedFileError", "ChecksumError", "IndexBindingError",
           "DuplicateContentError", "KindMismatchError", "EmptyDatabaseError",
           "DegradationError", "NoiseSkipped", "TranscoderUnavailableError",)
