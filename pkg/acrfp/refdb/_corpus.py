import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Union

from ..core import ManifestError, atomic_write_text

__all__ = ("CorpusItem", "load_manifest", "save_manifest",)

PathLike = Union[str, Path]


@dataclass(frozen=True)
class CorpusItem:
    content_id: str
    path: Path


def load_manifest(path: PathLike) -> List[CorpusItem]:
    """
    Read a corpus manifest: a JSON list of ``{"id": ..., "path": ...}`` objects.

    Relative audio paths are resolved against the manifest's directory. Duplicate ids are
    kept here and rejected by `build_db`.

    :raises ManifestError: If the file is missing, not JSON or has malformed entries.
    """
    path = Path(path)
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ManifestError(f"Manifest '{path}' does not exist") from None
    except (OSError, ValueError) as e:
        raise ManifestError(f"Failed to read manifest '{path}': {e}") from None

    if not isinstance(document, list):
        raise ManifestError(f"Manifest '{path}' must be a JSON list of {{id, path}} objects")

    items = []
    for index, entry in enumerate(document):
        if not isinstance(entry, dict) or set(entry) != {"id", "path"}:
            raise ManifestError(f"Manifest entry #{index} must have exactly 'id' and 'path'")
        content_id, audio_path = entry["id"], entry["path"]
        if not isinstance(content_id, str) or not content_id:
            raise ManifestError(f"Manifest entry #{index} has an invalid id {content_id!r}")
        if not isinstance(audio_path, str) or not audio_path:
            raise ManifestError(f"Manifest entry #{index} has an invalid path {audio_path!r}")
        items.append(CorpusItem(content_id, path.parent / audio_path))
    return items


def save_manifest(path: PathLike, items: Sequence[CorpusItem]) -> None:
    path = Path(path)
    base = path.parent.absolute()
    document = []
    for item in items:
        audio_path = Path(item.path).absolute()
        try:
            stored = Path(os.path.relpath(audio_path, base)).as_posix()
        except ValueError:  # another drive on Windows
            stored = audio_path.as_posix()
        document.append({"id": item.content_id, "path": stored})
    atomic_write_text(path, json.dumps(document, indent=2) + "\n")
