"""SQLite-backed store for submitted examples and figure annotations.

Append-plus-flags model: records are never deleted, admins flip
``is_invalid`` / ``is_harmful`` / ``is_verified`` instead, so referential
integrity holds by construction. All mutations are serialized through one
writer lock; readers see committed state only.
"""

from __future__ import annotations

import json
import random
import sqlite3
import threading
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from typing import Iterator, Sequence

from ..ontology import FigureCatalog, Iri
from .verification import check_lexical_repetition


class ProvenanceError(ValueError):
    """Submission lacks both author and source."""


class NoEligibleExampleError(LookupError):
    """No example is available for annotation."""


class UnknownRecordError(LookupError):
    pass


class DuplicateAnnotationError(ValueError):
    def __init__(self, example_id: int, figure_iri: str):
        super().__init__(f"example {example_id} already annotated with {figure_iri}")
        self.example_id = example_id
        self.figure_iri = figure_iri


class RepetitionCheckError(ValueError):
    """A perfect-repetition figure was chosen for a text without repetition."""

    def __init__(self, figure_label: str):
        super().__init__(
            f"figure {figure_label} requires at least one word repeated in "
            f"identical form, none found in the text"
        )
        self.figure_label = figure_label


@dataclass(frozen=True)
class ExampleRecord:
    id: int
    text: str
    context: str | None
    author: str | None
    source: str | None
    is_invalid: bool
    is_harmful: bool
    created_at: str

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class AnnotationRecord:
    id: int
    example_id: int
    figure_iri: str
    figure_name: str
    is_verified: bool
    created_at: str

    def to_dict(self) -> dict:
        return asdict(self)


_SCHEMA = """
CREATE TABLE IF NOT EXISTS example (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    text TEXT NOT NULL,
    context TEXT,
    author TEXT,
    source TEXT,
    is_invalid INTEGER NOT NULL DEFAULT 0,
    is_harmful INTEGER NOT NULL DEFAULT 0,
    created_at TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS figure (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    name TEXT NOT NULL,
    iri TEXT NOT NULL UNIQUE
);
CREATE TABLE IF NOT EXISTS annotation (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    example_id INTEGER NOT NULL REFERENCES example(id),
    figure_id INTEGER NOT NULL REFERENCES figure(id),
    is_verified INTEGER NOT NULL DEFAULT 0,
    created_at TEXT NOT NULL,
    UNIQUE(example_id, figure_id)
);
"""


def _utcnow() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class AnnotationStore:
    def __init__(self, path: str):
        self.path = path
        self._conn = sqlite3.connect(path, check_same_thread=False)
        self._conn.row_factory = sqlite3.Row
        self._conn.execute("PRAGMA foreign_keys = ON")
        self._write_lock = threading.Lock()
        with self._conn:
            self._conn.executescript(_SCHEMA)

    def close(self) -> None:
        self._conn.close()

    # -- examples ---------------------------------------------------------

    def add_example(
        self,
        text: str,
        context: str | None = None,
        author: str | None = None,
        source: str | None = None,
        *,
        is_invalid: bool = False,
    ) -> ExampleRecord:
        if not (author and author.strip()) and not (source and source.strip()):
            raise ProvenanceError("author or source required")
        with self._write_lock, self._conn:
            cursor = self._conn.execute(
                "INSERT INTO example (text, context, author, source, is_invalid, created_at)"
                " VALUES (?, ?, ?, ?, ?, ?)",
                (text, context, author, source, int(is_invalid), _utcnow()),
            )
            return self.get_example(cursor.lastrowid)

    def get_example(self, example_id: int) -> ExampleRecord:
        row = self._conn.execute(
            "SELECT * FROM example WHERE id = ?", (example_id,)
        ).fetchone()
        if row is None:
            raise UnknownRecordError(f"unknown example id {example_id}")
        return self._example(row)

    def random_example(self, rng: random.Random | None = None) -> ExampleRecord:
        """Uniformly random among examples that are neither invalid nor harmful."""
        rng = rng or random.Random()
        rows = self._conn.execute(
            "SELECT id FROM example WHERE is_invalid = 0 AND is_harmful = 0 ORDER BY id"
        ).fetchall()
        if not rows:
            raise NoEligibleExampleError("no eligible example")
        chosen = rng.choice([row["id"] for row in rows])
        return self.get_example(chosen)

    def eligible_count(self) -> int:
        row = self._conn.execute(
            "SELECT COUNT(*) AS n FROM example WHERE is_invalid = 0 AND is_harmful = 0"
        ).fetchone()
        return row["n"]

    # -- annotations ------------------------------------------------------

    def annotate(
        self,
        example_id: int,
        figure_iris: Sequence[Iri],
        catalog: FigureCatalog,
        repetition_figures: set[Iri] | None = None,
    ) -> list[AnnotationRecord]:
        """Record one annotation per chosen figure, all-or-nothing."""
        example = self.get_example(example_id)
        if not figure_iris:
            raise ValueError("at least one figure required")
        repetition_figures = (
            catalog.repetition_figures() if repetition_figures is None else repetition_figures
        )

        unique: list[Iri] = []
        for iri in figure_iris:
            if iri not in catalog:
                raise UnknownRecordError(f"unknown figure {iri.value}")
            if iri not in unique:
                unique.append(iri)

        for iri in unique:
            if iri in repetition_figures and not check_lexical_repetition(example.text):
                raise RepetitionCheckError(catalog.info(iri).label)

        with self._write_lock, self._conn:
            created = []
            for iri in unique:
                figure_id = self._figure_id(iri)
                existing = self._conn.execute(
                    "SELECT id FROM annotation WHERE example_id = ? AND figure_id = ?",
                    (example_id, figure_id),
                ).fetchone()
                if existing is not None:
                    raise DuplicateAnnotationError(example_id, iri.value)
                cursor = self._conn.execute(
                    "INSERT INTO annotation (example_id, figure_id, created_at)"
                    " VALUES (?, ?, ?)",
                    (example_id, figure_id, _utcnow()),
                )
                created.append(cursor.lastrowid)
        return [self.get_annotation(annotation_id) for annotation_id in created]

    def _figure_id(self, iri: Iri) -> int:
        row = self._conn.execute(
            "SELECT id FROM figure WHERE iri = ?", (iri.value,)
        ).fetchone()
        if row is not None:
            return row["id"]
        cursor = self._conn.execute(
            "INSERT INTO figure (name, iri) VALUES (?, ?)", (iri.localname(), iri.value)
        )
        return cursor.lastrowid

    def get_annotation(self, annotation_id: int) -> AnnotationRecord:
        row = self._conn.execute(
            "SELECT a.*, f.iri AS figure_iri, f.name AS figure_name"
            " FROM annotation a JOIN figure f ON f.id = a.figure_id WHERE a.id = ?",
            (annotation_id,),
        ).fetchone()
        if row is None:
            raise UnknownRecordError(f"unknown annotation id {annotation_id}")
        return self._annotation(row)

    def annotations(self, example_id: int | None = None) -> list[AnnotationRecord]:
        sql = (
            "SELECT a.*, f.iri AS figure_iri, f.name AS figure_name"
            " FROM annotation a JOIN figure f ON f.id = a.figure_id"
        )
        params: tuple = ()
        if example_id is not None:
            sql += " WHERE a.example_id = ?"
            params = (example_id,)
        rows = self._conn.execute(sql + " ORDER BY a.id", params).fetchall()
        return [self._annotation(row) for row in rows]

    # -- admin flags ------------------------------------------------------

    def set_flags(
        self,
        example_id: int | None = None,
        is_harmful: bool | None = None,
        annotation_id: int | None = None,
        is_verified: bool | None = None,
    ) -> tuple[ExampleRecord | None, AnnotationRecord | None]:
        """Update the given flags; untouched fields keep their values."""
        example = annotation = None
        with self._write_lock, self._conn:
            if example_id is not None and is_harmful is not None:
                self.get_example(example_id)
                self._conn.execute(
                    "UPDATE example SET is_harmful = ? WHERE id = ?",
                    (int(is_harmful), example_id),
                )
            if annotation_id is not None and is_verified is not None:
                self.get_annotation(annotation_id)
                self._conn.execute(
                    "UPDATE annotation SET is_verified = ? WHERE id = ?",
                    (int(is_verified), annotation_id),
                )
        if example_id is not None:
            example = self.get_example(example_id)
        if annotation_id is not None:
            annotation = self.get_annotation(annotation_id)
        return example, annotation

    # -- export -----------------------------------------------------------

    def export_jsonl(self) -> Iterator[str]:
        """All records as JSON Lines for offline audit."""
        for row in self._conn.execute("SELECT * FROM example ORDER BY id"):
            payload = {"record": "example", **self._example(row).to_dict()}
            yield json.dumps(payload, ensure_ascii=False)
        for record in self.annotations():
            yield json.dumps({"record": "annotation", **record.to_dict()}, ensure_ascii=False)

    # -- row mapping ------------------------------------------------------

    @staticmethod
    def _example(row: sqlite3.Row) -> ExampleRecord:
        return ExampleRecord(
            id=row["id"],
            text=row["text"],
            context=row["context"],
            author=row["author"],
            source=row["source"],
            is_invalid=bool(row["is_invalid"]),
            is_harmful=bool(row["is_harmful"]),
            created_at=row["created_at"],
        )

    @staticmethod
    def _annotation(row: sqlite3.Row) -> AnnotationRecord:
        return AnnotationRecord(
            id=row["id"],
            example_id=row["example_id"],
            figure_iri=row["figure_iri"],
            figure_name=row["figure_name"],
            is_verified=bool(row["is_verified"]),
            created_at=row["created_at"],
        )
