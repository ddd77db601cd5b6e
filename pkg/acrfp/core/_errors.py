from enum import IntEnum

__all__ = ("ExitCode", "AcrfpError", "ConfigError", "InvalidParameterError", "ManifestError",
           "AudioError", "AudioDecodeError", "UnsupportedEncodingError", "EmptyAudioError",
           "SampleRateError", "SignalTooShortError", "HalfPrecisionOverflowError",
           "ModelError", "InsufficientSamplesError", "DimensionMismatchError",
           "MissingModelError", "FormatError", "ArtifactNotFoundError", "MagicMismatchError",
           "VersionMismatchError",
           "TruncatedFileError", "ChecksumError", "IndexBindingError",
           "DuplicateContentError", "KindMismatchError", "EmptyDatabaseError",
           "DegradationError", "NoiseSkipped", "TranscoderUnavailableError",)


class ExitCode(IntEnum):
    """
    Process exit codes returned by the `acrfp` command-line interface.

    Every `AcrfpError` subclass maps to exactly one of these codes, so scripts driving the
    CLI can tell a bad flag from a corrupt file without parsing stderr.
    """

    OK = 0
    """
    The command completed.
    """

    FAILURE = 1
    """
    Generic failure, also used when an experiment cell fails to run.
    """

    USAGE = 2
    """
    Invalid command-line usage or parameter value (argparse uses the same code).
    """

    CONFIG = 3
    """
    The configuration file is missing, malformed or names unknown keys.
    """

    FILE = 4
    """
    An input file could not be read or has an invalid binary layout.
    """

    DATA = 5
    """
    Inputs are readable but unusable (too short, wrong fingerprint kind, duplicate ids).
    """

    SKIPPED = 6
    """
    The requested work was deliberately not performed (e.g. no transcoder available).
    """


class AcrfpError(Exception):
    exit_code: ExitCode = ExitCode.FAILURE


class ConfigError(AcrfpError):
    exit_code = ExitCode.CONFIG


class InvalidParameterError(AcrfpError, ValueError):
    exit_code = ExitCode.USAGE


class ManifestError(AcrfpError):
    exit_code = ExitCode.FILE


class AudioError(AcrfpError):
    exit_code = ExitCode.FILE


class AudioDecodeError(AudioError):
    pass


class UnsupportedEncodingError(AudioError):
    pass


class EmptyAudioError(AudioError):
    pass


class SampleRateError(AudioError):
    exit_code = ExitCode.DATA


class SignalTooShortError(AcrfpError):
    exit_code = ExitCode.DATA


class HalfPrecisionOverflowError(AcrfpError):
    exit_code = ExitCode.DATA


class ModelError(AcrfpError):
    exit_code = ExitCode.DATA


class InsufficientSamplesError(ModelError):
    pass


class DimensionMismatchError(ModelError):
    pass


class MissingModelError(ModelError):
    exit_code = ExitCode.USAGE


class FormatError(AcrfpError):
    exit_code = ExitCode.FILE


class ArtifactNotFoundError(FormatError):
    pass


class MagicMismatchError(FormatError):
    pass


class VersionMismatchError(FormatError):
    pass


class TruncatedFileError(FormatError):
    pass


class ChecksumError(FormatError):
    pass


class IndexBindingError(FormatError):
    pass


class DuplicateContentError(AcrfpError):
    exit_code = ExitCode.DATA


class KindMismatchError(AcrfpError):
    exit_code = ExitCode.DATA


class EmptyDatabaseError(AcrfpError):
    exit_code = ExitCode.DATA


class DegradationError(AcrfpError):
    exit_code = ExitCode.DATA


class NoiseSkipped(AcrfpError):
    """
    Raised when a degradation cannot run in this environment.

    Callers report the affected work as skipped instead of counting it as a pass or a failure.
    """

    exit_code = ExitCode.SKIPPED


class TranscoderUnavailableError(NoiseSkipped):
    pass
