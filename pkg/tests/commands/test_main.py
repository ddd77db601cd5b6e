import importlib
from pathlib import Path

import pytest
from baby_steps import given, then, when
from pytest import raises

from acrfp import __version__, main
from acrfp._main import COMMANDS, _split
from acrfp.core import ExitCode

from ._utils import run_cli


@pytest.mark.parametrize(("argv", "expected"), [
    ([], ([], None, [])),
    (["version"], ([], "version", [])),
    (["-v", "query", "--db", "x"], (["-v"], "query", ["--db", "x"])),
    (["--config", "c.json", "--threads", "2", "bench", "-k", "3"],
     (["--config", "c.json", "--threads", "2"], "bench", ["-k", "3"])),
    (["-q"], (["-q"], None, [])),
])
def test_split(argv, expected):
    with when:
        res = _split(argv)

    with then:
        assert res == expected


def test_commands():
    with when:
        names = list(COMMANDS)

    with then:
        assert names == ["fingerprint", "train-pca", "build-db", "build-index", "degrade",
                         "query", "eval", "bench", "inspect", "config", "version"]


async def test_version():
    with when:
        code, out, err = await run_cli("version")

    with then:
        assert code == ExitCode.OK
        assert out == f"acrfp {__version__}\n"
        assert err == ""


async def test_no_command():
    with when:
        code, out, _ = await run_cli()

    with then:
        assert code == ExitCode.USAGE
        assert out == ""


def test_package_imports():
    with when:
        module = importlib.import_module("acrfp")

    with then:
        assert module.main is main
        assert callable(module.run)


async def test_help(capsys):
    with when, raises(SystemExit) as exc_info:
        await main(["--help"])

    with then:
        assert exc_info.value.code == 0
        out = capsys.readouterr().out
        assert out.startswith("usage: acrfp [options] <command> [args]\n")
        assert "Compact audio fingerprints for content recognition" in out
        assert "commands: fingerprint, train-pca, build-db" in out


async def test_unknown_command():
    with when, raises(SystemExit) as exc_info:
        await run_cli("frobnicate")

    with then:
        assert exc_info.value.code == 2


async def test_negative_threads():
    with when:
        code, _, err = await run_cli("--threads", "-1", "version")

    with then:
        assert code == ExitCode.USAGE
        assert err == "error: --threads must be >= 0, got -1\n"


async def test_missing_config(tmp_path: Path):
    with given:
        path = tmp_path / "missing.json"

    with when:
        code, _, err = await run_cli("--config", str(path), "version")

    with then:
        assert code == ExitCode.CONFIG
        assert err == f"error: Config file '{path}' does not exist\n"


async def test_invalid_config_value(tmp_path: Path):
    with given:
        path = tmp_path / "acrfp.json"
        path.write_text('{"Window": {"window_len": 8, "stride": 8}}')

    with when:
        code, _, err = await run_cli("--config", str(path), "version")

    with then:
        assert code == ExitCode.USAGE
        assert err.startswith("error: ")


async def test_missing_db(tmp_path: Path):
    with when:
        code, out, err = await run_cli("query", "--db", str(tmp_path / "refs.acdb"),
                                       "--audio", str(tmp_path / "q.wav"))

    with then:
        assert code == ExitCode.FILE
        assert out == ""
        assert err == f"error: reference DB file '{tmp_path / 'refs.acdb'}' does not exist\n"


async def test_proposed_needs_model(tmp_path: Path):
    with given:
        manifest = tmp_path / "manifest.json"
        manifest.write_text("[]")

    with when:
        code, _, err = await run_cli("build-db", "--corpus", str(manifest),
                                     "--out", str(tmp_path / "refs.acdb"))

    with then:
        assert code == ExitCode.USAGE
        assert "train-pca" in err
