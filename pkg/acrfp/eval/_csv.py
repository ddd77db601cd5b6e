import csv
import io
from pathlib import Path
from typing import Sequence, Type

from ..core import FormatError, atomic_write_text
from ._rows import Row, row_fields

__all__ = ("write_rows", "merge_csv",)


def write_rows(path: Path, row_type: Type[Row], rows: Sequence[Row]) -> None:
    """
    Write `rows` as UTF-8 CSV with a header row, replacing `path` atomically.
    """
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=row_fields(row_type), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.to_dict())
    atomic_write_text(path, buffer.getvalue())


def merge_csv(parts: Sequence[Path], out: Path) -> int:
    """
    Concatenate CSV files sharing one header into `out`, in the order given.

    :return: Number of data rows written.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = None
    count = 0
    for part in parts:
        with open(part, newline="", encoding="utf-8") as f:
            reader = csv.reader(f)
            part_header = next(reader, None)
            if part_header is None:
                continue
            if header is None:
                header = part_header
                writer.writerow(header)
            elif part_header != header:
                raise FormatError(f"CSV '{part}' has a different header")
            for record in reader:
                writer.writerow(record)
                count += 1
    atomic_write_text(out, buffer.getvalue())
    return count
