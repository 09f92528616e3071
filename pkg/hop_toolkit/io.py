"""
Dataset, prediction and report files.

Datasets and predictions are canonical JSON Lines; reading a canonical
file and writing it back reproduces it byte for byte.
"""

import csv
from pathlib import Path
from typing import Iterable, List, Sequence, Set, Tuple, Union

from .baselines.base import Prediction
from .exceptions import DatasetFormatError
from .induce.sample import Sample
from .utils.jsonio import read_jsonl, write_json, write_jsonl

PathLike = Union[str, Path]

_REQUIRED = (
    ("id", str),
    ("query", dict),
    ("answer", str),
    ("candidates", list),
    ("supports", list),
    ("gold_paths", list),
    ("candidate_paths", dict),
)


def _check_sample_record(record, path: str, line: int) -> None:
    if not isinstance(record, dict):
        raise DatasetFormatError("record must be a JSON object", path=path, line=line)
    for name, kind in _REQUIRED:
        if name not in record:
            raise DatasetFormatError("missing", path=path, line=line, field=name)
        if not isinstance(record[name], kind):
            raise DatasetFormatError(f"must be a {kind.__name__}", path=path, line=line, field=name)
    for key in ("subject", "relation"):
        if not isinstance(record["query"].get(key), str):
            raise DatasetFormatError("missing or not a string", path=path, line=line, field=f"query.{key}")
    if not all(isinstance(c, str) for c in record["candidates"]):
        raise DatasetFormatError("must hold strings", path=path, line=line, field="candidates")
    for index, support in enumerate(record["supports"]):
        for key in ("doc_id", "title", "text"):
            if not isinstance(support, dict) or not isinstance(support.get(key), str):
                raise DatasetFormatError(
                    "missing or not a string", path=path, line=line, field=f"supports[{index}].{key}"
                )
    for chain in record["gold_paths"]:
        if not isinstance(chain, list) or not all(isinstance(d, str) for d in chain):
            raise DatasetFormatError("must hold lists of doc ids", path=path, line=line, field="gold_paths")
    for candidate, count in record["candidate_paths"].items():
        if not isinstance(count, int) or isinstance(count, bool):
            raise DatasetFormatError(
                f"count of {candidate!r} must be an integer", path=path, line=line, field="candidate_paths"
            )
    if "mask_map" in record and not isinstance(record["mask_map"], dict):
        raise DatasetFormatError("must be an object", path=path, line=line, field="mask_map")


def read_dataset(path: PathLike) -> List[Sample]:
    """
    Read a dataset JSON Lines file.

    Raises:
        DatasetFormatError: Naming the line and field of a schema violation
    """
    samples = []
    seen: Set[str] = set()
    for line_no, record in read_jsonl(path):
        _check_sample_record(record, str(path), line_no)
        if record["id"] in seen:
            raise DatasetFormatError(f"duplicate id '{record['id']}'", path=str(path), line=line_no, field="id")
        seen.add(record["id"])
        samples.append(Sample.from_dict(record))
    return samples


def write_dataset(path: PathLike, samples: Iterable[Sample]) -> int:
    """Write samples as canonical JSON Lines; returns the number written."""
    return write_jsonl(path, (s.to_dict() for s in samples))


def read_predictions(path: PathLike) -> List[Prediction]:
    """
    Read a predictions file of {"id", "predicted", "score"?} lines.

    Raises:
        DatasetFormatError: If a line lacks id or predicted
    """
    predictions = []
    for line_no, record in read_jsonl(path):
        if not isinstance(record, dict):
            raise DatasetFormatError("record must be a JSON object", path=str(path), line=line_no)
        for key in ("id", "predicted"):
            if not isinstance(record.get(key), str):
                raise DatasetFormatError("missing or not a string", path=str(path), line=line_no, field=key)
        score = record.get("score")
        predictions.append(Prediction(record["id"], record["predicted"],
                                      float(score) if score is not None else None))
    return predictions


def write_predictions(path: PathLike, predictions: Iterable[Prediction]) -> int:
    return write_jsonl(path, (p.to_dict() for p in predictions))


def write_report(path: PathLike, report: dict) -> Path:
    """Write a ledger, stats or evaluation report as canonical JSON."""
    return write_json(path, report)


def read_id_list(path: PathLike) -> List[str]:
    """One id per line; blank lines and '#' comments are ignored."""
    ids = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if line and not line.startswith("#"):
                ids.append(line)
    return ids


def write_histogram_csv(path: PathLike, rows: Sequence[Tuple[int, int, int]]) -> Path:
    """Write histogram rows under the header bin_start,bin_end,count."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["bin_start", "bin_end", "count"])
        writer.writerows(rows)
    return path
