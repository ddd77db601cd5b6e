import pytest
from baby_steps import given, then, when

from acrfp.core import (
    AcrfpError,
    ChecksumError,
    ConfigError,
    ExitCode,
    FormatError,
    InvalidParameterError,
    MissingModelError,
    NoiseSkipped,
    SignalTooShortError,
    TranscoderUnavailableError,
)


@pytest.mark.parametrize(("error", "exit_code"), [
    (AcrfpError, ExitCode.FAILURE),
    (ConfigError, ExitCode.CONFIG),
    (InvalidParameterError, ExitCode.USAGE),
    (MissingModelError, ExitCode.USAGE),
    (ChecksumError, ExitCode.FILE),
    (SignalTooShortError, ExitCode.DATA),
    (TranscoderUnavailableError, ExitCode.SKIPPED),
])
def test_exit_code(error, exit_code):
    with when:
        res = error("message").exit_code

    with then:
        assert res == exit_code


def test_invalid_parameter_is_value_error():
    with when:
        error = InvalidParameterError("bad value")

    with then:
        assert isinstance(error, ValueError)
        assert isinstance(error, AcrfpError)


def test_error_families():
    with given:
        checksum = ChecksumError("checksum")
        transcoder = TranscoderUnavailableError("no ffmpeg")

    with then:
        assert isinstance(checksum, FormatError)
        assert isinstance(transcoder, NoiseSkipped)


def test_exit_codes_distinct():
    with when:
        values = [code.value for code in ExitCode]

    with then:
        assert values == [0, 1, 2, 3, 4, 5, 6]
