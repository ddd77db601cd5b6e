from unittest.mock import MagicMock, call

from baby_steps import given, then, when

from acrfp.core import atomic_write_bytes, atomic_write_text


def test_atomic_write_bytes(tmp_path):
    with given:
        path = tmp_path / "nested" / "out.bin"

    with when:
        atomic_write_bytes(path, b"data")

    with then:
        assert path.read_bytes() == b"data"
        assert [p.name for p in path.parent.iterdir() if p.suffix == ".tmp"] == []


def test_atomic_write_replaces(tmp_path):
    with given:
        path = tmp_path / "out.txt"
        path.write_text("old")

    with when:
        atomic_write_text(path, "new")

    with then:
        assert path.read_text() == "new"


def test_atomic_write_locks(tmp_path):
    with given:
        path = tmp_path / "out.bin"
        lock_ = MagicMock()

    with when:
        atomic_write_bytes(path, b"x", lock_factory=lock_)

    with then:
        assert lock_.mock_calls[0] == call(tmp_path / "out.bin.lock")
        assert path.read_bytes() == b"x"
