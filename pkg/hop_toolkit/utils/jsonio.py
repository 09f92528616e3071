"""Canonical JSON and JSON Lines helpers.

Every artifact the toolkit writes goes through ``canonical_dumps`` so two
runs with the same inputs produce byte-identical files.
"""

import json
from pathlib import Path
from typing import Any, Iterable, Iterator, Mapping, Tuple, Union

from ..exceptions import DatasetFormatError


def canonical_dumps(obj: Any) -> str:
    """Serialize with sorted keys, no extra whitespace and raw UTF-8."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def read_jsonl(path: Union[str, Path]) -> Iterator[Tuple[int, Any]]:
    """
    Iterate over (line number, object) pairs of a JSON Lines file.

    Blank lines are skipped. Line numbers start at 1.

    Raises:
        DatasetFormatError: If a line is not valid JSON
        OSError: If the file cannot be opened
    """
    with open(path, "r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                yield line_no, json.loads(line)
            except json.JSONDecodeError as e:
                raise DatasetFormatError(
                    f"invalid JSON ({e.msg})", path=str(path), line=line_no
                ) from e


def write_jsonl(path: Union[str, Path], records: Iterable[Any]) -> int:
    """
    Write records as canonical JSON Lines.

    Returns:
        Number of records written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for record in records:
            f.write(canonical_dumps(record))
            f.write("\n")
            count += 1
    return count


def write_json(path: Union[str, Path], obj: Mapping) -> Path:
    """Write one canonical JSON object followed by a newline."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(canonical_dumps(obj) + "\n", encoding="utf-8")
    return path


def read_json(path: Union[str, Path]) -> Any:
    """
    Read a JSON document.

    Raises:
        DatasetFormatError: If the file is not valid JSON
    """
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise DatasetFormatError(f"invalid JSON ({e.msg})", path=str(path), line=e.lineno) from e
