"""Ground-truth datasets: template competency questions and JSON Lines IO.

The file format is one UTF-8, NFC-normalized JSON object per line with the
fields ``question``, ``ground_truth``, ``contexts``. Answer files mirror the
format and add ``answer`` and ``retrieved_contexts``. Externally authored
question sets are imported through the same files.
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass

from ..ontology import FigureCatalog, Iri, TripleStore
from ..rag.serialize import DEFAULT_TEMPLATES, figure_block

QUESTION_TEMPLATES = {
    "definition": "Was ist die Definition der rhetorischen Figur {name}?",
    "example": "Was ist ein Beispiel für die rhetorische Figur {name}?",
    "operation": "Was ist die Operation der rhetorischen Figur {name}?",
    "affected_element": "Was ist das betroffene Element der rhetorischen Figur {name}?",
    "operational_form": "Was ist die Operationsform der rhetorischen Figur {name}?",
    "position": "Was ist die Position der rhetorischen Figur {name}?",
    "area": "Was ist der Bereich der rhetorischen Figur {name}?",
}

PROPERTY_ORDER = (
    "definition",
    "example",
    "operation",
    "affected_element",
    "operational_form",
    "position",
    "area",
)


@dataclass(frozen=True)
class GroundTruthRecord:
    question: str
    ground_truth: str
    reference_contexts: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.question or not self.ground_truth:
            raise ValueError("question and ground_truth must be non-empty")


@dataclass(frozen=True)
class EvalRecord:
    question: str
    ground_truth: str
    reference_contexts: tuple[str, ...]
    answer: str
    retrieved_contexts: tuple[str, ...]


def _property_values(catalog: FigureCatalog, figure: Iri, prop: str) -> list[str]:
    info = catalog.info(figure)
    if prop == "definition":
        return [d.text.lexical for d in info.definitions]
    if prop == "example":
        return [e.text.lexical for e in info.examples]
    predicate = catalog.vocab.dimension_predicates[prop]
    values = [o for o in catalog.store.objects(figure, predicate) if isinstance(o, Iri)]
    return [v.localname() for v in sorted(values, key=lambda i: i.value)]


def generate_template_cqs(
    store_or_catalog: TripleStore | FigureCatalog,
    templates: dict[str, str] | None = None,
) -> list[GroundTruthRecord]:
    """One German question per figure and available property.

    Ground truths come straight from the ontology; the reference context is
    the figure's serialized prose block. Figures lacking a property skip it.
    """
    catalog = (
        store_or_catalog
        if isinstance(store_or_catalog, FigureCatalog)
        else FigureCatalog(store_or_catalog)
    )
    templates = templates or DEFAULT_TEMPLATES
    records = []
    for figure in catalog.figures():
        block = figure_block(catalog, figure.iri, templates)
        for prop in PROPERTY_ORDER:
            values = _property_values(catalog, figure.iri, prop)
            if not values:
                continue
            records.append(
                GroundTruthRecord(
                    question=QUESTION_TEMPLATES[prop].format(name=figure.label),
                    ground_truth="; ".join(values),
                    reference_contexts=(block,),
                )
            )
    return records


def _nfc(value: str) -> str:
    return unicodedata.normalize("NFC", value)


def save_ground_truth(records: list[GroundTruthRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(
                json.dumps(
                    {
                        "question": _nfc(record.question),
                        "ground_truth": _nfc(record.ground_truth),
                        "contexts": [_nfc(c) for c in record.reference_contexts],
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )


def load_ground_truth(path) -> list[GroundTruthRecord]:
    records = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            if not line.strip():
                continue
            data = json.loads(line)
            records.append(
                GroundTruthRecord(
                    question=_nfc(data["question"]),
                    ground_truth=_nfc(data["ground_truth"]),
                    reference_contexts=tuple(_nfc(c) for c in data.get("contexts", [])),
                )
            )
    return records


def save_eval_records(records: list[EvalRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(
                json.dumps(
                    {
                        "question": _nfc(record.question),
                        "ground_truth": _nfc(record.ground_truth),
                        "contexts": [_nfc(c) for c in record.reference_contexts],
                        "answer": _nfc(record.answer),
                        "retrieved_contexts": [_nfc(c) for c in record.retrieved_contexts],
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )


def load_eval_records(path) -> list[EvalRecord]:
    records = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            if not line.strip():
                continue
            data = json.loads(line)
            records.append(
                EvalRecord(
                    question=_nfc(data["question"]),
                    ground_truth=_nfc(data["ground_truth"]),
                    reference_contexts=tuple(_nfc(c) for c in data.get("contexts", [])),
                    answer=_nfc(data["answer"]),
                    retrieved_contexts=tuple(_nfc(c) for c in data.get("retrieved_contexts", [])),
                )
            )
    return records
