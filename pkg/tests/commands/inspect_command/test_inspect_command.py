from pathlib import Path
from typing import List
from unittest.mock import Mock

import pytest
from baby_steps import given, then, when
from pytest import raises
from rich.console import Console
from rich.table import Table

from acrfp import Config
from acrfp.commands import CommandArgumentParser, InspectCommand
from acrfp.core import ArtifactNotFoundError, ExitCode, MagicMismatchError
from acrfp.fingerprint import save_pca
from acrfp.index import ExhaustiveIndex, save_index
from acrfp.refdb import save_db

from ..._utils import make_db
from ...fingerprint._utils import random_pca


@pytest.fixture()
def console_() -> Console:
    return Mock(Console)


def make_command(console_: Mock, *argv: str) -> InspectCommand:
    return InspectCommand(Config, CommandArgumentParser(argv=list(argv)),
                          console_factory=lambda: console_)


def printed(console_: Mock) -> List[str]:
    return [str(c.args[0]) for c in console_.out.call_args_list]


async def test_db(*, console_: Mock, tmp_path: Path):
    with given:
        path = tmp_path / "refs.acdb"
        db = make_db({"a": 10, "b": 5}, skip=2)
        save_db(path, db)

    with when:
        result = await make_command(console_, str(path)).run()

    with then:
        assert result == ExitCode.OK
        lines = printed(console_)
        assert lines[0] == "Reference DB"
        assert lines[1:] == ["  kind: ", "proposed", "  skip: ", "2", "  contents: ", "2",
                             "  fingerprints: ", "15", "  dims: ", "32",
                             "  spacing: ", "0.384000s", "  model: ", "none",
                             "  digest: ", f"{db.digest:08x}"]
        assert not console_.print.called


async def test_db_contents(*, console_: Mock, tmp_path: Path):
    with given:
        path = tmp_path / "refs.acdb"
        save_db(path, make_db({"a": 10, "b": 5}))

    with when:
        await make_command(console_, str(path), "--contents").run()

    with then:
        table = console_.print.call_args[0][0]
        assert isinstance(table, Table)
        assert table.row_count == 2


async def test_index(*, console_: Mock, tmp_path: Path):
    with given:
        path = tmp_path / "refs.acix"
        db = make_db({"a": 10})
        save_index(path, ExhaustiveIndex(db))

    with when:
        await make_command(console_, str(path)).run()

    with then:
        lines = printed(console_)
        assert lines[0] == "Index"
        assert lines[1:5] == ["  type: ", "exhaustive", "  kind: ", "proposed"]
        assert lines[-2:] == ["  db digest: ", f"{db.digest:08x}"]


async def test_pca(*, console_: Mock, tmp_path: Path):
    with given:
        path = tmp_path / "model.acpc"
        save_pca(path, random_pca())

    with when:
        await make_command(console_, str(path)).run()

    with then:
        lines = printed(console_)
        assert lines[:7] == ["PCA model", "  in dims: ", "127", "  out dims: ", "32",
                             "  trained on: ", "2000"]


async def test_unknown_magic(*, console_: Mock, tmp_path: Path):
    with given:
        path = tmp_path / "notes.txt"
        path.write_bytes(b"hello world")

    with when, raises(MagicMismatchError) as exc_info:
        await make_command(console_, str(path)).run()

    with then:
        assert str(exc_info.value) == f"'{path}' is not an ACDB, ACIX or ACPC file " \
                                      f"(magic b'hell')"


async def test_missing(*, console_: Mock, tmp_path: Path):
    with when, raises(ArtifactNotFoundError):
        await make_command(console_, str(tmp_path / "missing.acdb")).run()
