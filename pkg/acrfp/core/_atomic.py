import os
from functools import partial
from pathlib import Path
from tempfile import NamedTemporaryFile as TemporaryFile
from typing import Callable

from filelock import FileLock

__all__ = ("atomic_write_bytes", "atomic_write_text", "LockFactory",)

LockFactory = Callable[[Path], FileLock]
_lock_factory: LockFactory = partial(FileLock, timeout=10)


def atomic_write_bytes(path: Path, data: bytes, *,
                       lock_factory: LockFactory = _lock_factory) -> None:
    """
    Write `data` to `path` so that readers never observe a partial file.

    The bytes go to a temporary file in the target directory, which then replaces `path`
    while holding `<path>.lock`. The temporary file is removed if the replace fails.

    :param path: Destination file. Missing parent directories are created.
    :param data: Complete file content.
    :param lock_factory: Factory creating the lock guarding the destination.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lock_path = path.with_name(path.name + ".lock")

    with lock_factory(lock_path):
        with TemporaryFile("wb", dir=str(path.parent), suffix=".tmp", delete=False) as f:
            tmp_file_name = f.name
            f.write(data)
        try:
            os.replace(tmp_file_name, path)
        except BaseException:
            os.unlink(tmp_file_name)
            raise


def atomic_write_text(path: Path, text: str, *,
                      lock_factory: LockFactory = _lock_factory) -> None:
    atomic_write_bytes(path, text.encode("utf-8"), lock_factory=lock_factory)
