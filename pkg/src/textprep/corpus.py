"""Labeled corpus loading and deterministic stratified splits.

Datasets load from JSONL/TSV/CSV with configurable column names. Split
assignment samples each class proportionally to its corpus frequency
(floor allocation, remainder seats to the largest classes), capped at the
available documents, and is reproducible from a fixed seed using the
PCG64 generator.
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

logger = logging.getLogger(__name__)

LANGUAGES = ("en", "fr", "de", "it", "pt", "es")
SPLITS = ("train", "validation", "test", "unassigned")

RNG_NAME = "numpy-pcg64"


class CorpusError(ValueError):
    """Raised for malformed dataset files or invalid parameters."""


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    label: str
    language: str
    split: str = "unassigned"

    def __post_init__(self):
        if self.language not in LANGUAGES:
            raise CorpusError(f"unknown language code: {self.language!r}")
        if self.split not in SPLITS:
            raise CorpusError(f"unknown split: {self.split!r}")


@dataclass(frozen=True)
class SplitSpec:
    max_train: int = 3000
    max_test: int = 3000
    validation_size: int = 2000
    seed: int = 0

    def __post_init__(self):
        if min(self.max_train, self.max_test, self.validation_size) < 0:
            raise CorpusError("split sizes must be >= 0")


Corpus = list


@dataclass
class ColumnMap:
    text: str = "text"
    label: str = "label"
    id: str | None = None


def _record_to_document(
    record: dict, line_no: int, source: str, language: str, columns: ColumnMap
) -> Document:
    for column in (columns.text, columns.label):
        if column not in record or record[column] is None:
            raise CorpusError(f"line {line_no}: missing field {column!r}")
    doc_id = (
        str(record[columns.id])
        if columns.id and record.get(columns.id) is not None
        else f"{source}:{line_no}"
    )
    return Document(
        id=doc_id,
        text=str(record[columns.text]),
        label=str(record[columns.label]),
        language=language,
    )


def load_corpus(
    path: str | Path,
    format: str,
    language: str,
    columns: ColumnMap | None = None,
) -> Corpus:
    """Load documents in file order; ids default to ``<filename>:<line>``."""
    if language not in LANGUAGES:
        raise CorpusError(f"unknown language code: {language!r}")
    if format not in ("jsonl", "tsv", "csv"):
        raise CorpusError(f"unknown corpus format: {format!r}")
    columns = columns or ColumnMap()
    path = Path(path)
    source = path.name
    docs: Corpus = []

    if format == "jsonl":
        with open(path, encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise CorpusError(f"line {line_no}: invalid JSON ({exc.msg})") from exc
                if not isinstance(record, dict):
                    raise CorpusError(f"line {line_no}: expected a JSON object")
                docs.append(_record_to_document(record, line_no, source, language, columns))
    else:
        delimiter = "\t" if format == "tsv" else ","
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh, delimiter=delimiter)
            for line_no, record in enumerate(reader, start=2):  # header is line 1
                record = {k: v for k, v in record.items() if k is not None}
                docs.append(_record_to_document(record, line_no, source, language, columns))

    seen: set[str] = set()
    for doc in docs:
        if doc.id in seen:
            raise CorpusError(f"duplicate document id: {doc.id!r}")
        seen.add(doc.id)
    return docs


def _allocate(counts: dict[str, int], total: int, available: dict[str, int]) -> dict[str, int]:
    """Floor-proportional seats per class; remainders to the largest classes.

    Classes that run out of available documents hand their unused seats to
    the next largest classes.
    """
    corpus_size = sum(counts.values())
    if corpus_size == 0 or total <= 0:
        return {label: 0 for label in counts}
    total = min(total, sum(available.values()))
    # largest first, ties by label
    order = sorted(counts, key=lambda lab: (-counts[lab], lab))
    seats = {lab: min((total * counts[lab]) // corpus_size, available[lab]) for lab in order}
    remaining = total - sum(seats.values())
    while remaining > 0:
        progressed = False
        for lab in order:
            if remaining == 0:
                break
            if seats[lab] < available[lab]:
                seats[lab] += 1
                remaining -= 1
                progressed = True
        if not progressed:
            break
    return seats


def stratified_split(corpus: Corpus, spec: SplitSpec) -> Corpus:
    """Assign train/validation/test splits, preserving class proportions.

    Test documents are drawn first, validation comes from the remaining
    pool (the training side), and the train split is then capped at
    ``max_train``. Classes keep their corpus proportions within one
    document per class in every split.
    """
    rng = np.random.default_rng(spec.seed)
    by_label: dict[str, list[int]] = {}
    for idx, doc in enumerate(corpus):
        by_label.setdefault(doc.label, []).append(idx)

    for label, members in by_label.items():
        if len(members) == 1:
            logger.warning("class %r has a single document", label)

    counts = {label: len(members) for label, members in by_label.items()}
    shuffled: dict[str, list[int]] = {}
    for label in sorted(by_label):
        members = by_label[label]
        order = rng.permutation(len(members))
        shuffled[label] = [members[i] for i in order]

    assignment = ["unassigned"] * len(corpus)
    cursor = {label: 0 for label in by_label}

    def take(label: str, n: int, split: str) -> None:
        start = cursor[label]
        for idx in shuffled[label][start : start + n]:
            assignment[idx] = split
        cursor[label] = start + n

    available = {label: counts[label] for label in counts}
    test_seats = _allocate(counts, spec.max_test, available)
    for label, n in test_seats.items():
        take(label, n, "test")

    available = {label: counts[label] - cursor[label] for label in counts}
    val_seats = _allocate(counts, spec.validation_size, available)
    for label, n in val_seats.items():
        take(label, n, "validation")

    available = {label: counts[label] - cursor[label] for label in counts}
    train_seats = _allocate(counts, spec.max_train, available)
    for label, n in train_seats.items():
        take(label, n, "train")

    return [replace(doc, split=assignment[idx]) for idx, doc in enumerate(corpus)]


def split_sizes(corpus: Corpus) -> dict[str, int]:
    sizes = {name: 0 for name in SPLITS}
    for doc in corpus:
        sizes[doc.split] += 1
    return sizes


def export_splits(corpus: Corpus, path: str | Path) -> None:
    """Write the sidecar JSONL of {id, split} assignments."""
    with open(path, "w", encoding="utf-8") as fh:
        for doc in corpus:
            fh.write(json.dumps({"id": doc.id, "split": doc.split}) + "\n")


def apply_splits(corpus: Corpus, path: str | Path) -> Corpus:
    """Re-apply a sidecar JSONL of split assignments."""
    mapping: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                record = json.loads(line)
                mapping[record["id"]] = record["split"]
    return [replace(doc, split=mapping.get(doc.id, doc.split)) for doc in corpus]
