"""Render the reified ontology as a German prose document for retrieval.

Each figure becomes one contiguous block: heading, superclasses, the
construction properties as short sentences, then all definitions and
examples with their provenance. The sentence templates are configuration;
retrievers and the LLM consume prose, not raw triples.
"""

from __future__ import annotations

import json

from ..ontology import FigureCatalog, Iri, TripleStore
from ..ontology.figures import FigureInfo
from ..ontology.vocab import FigureVocab

DEFAULT_TEMPLATES = {
    "figure": "Die rhetorische Figur {label}.",
    "subclass": "{label} ist eine Unterart der Figur {parent}.",
    "operation": "Die Operation der Figur {label} ist {value}.",
    "affected_element": "Das betroffene Element der Figur {label} ist {value}.",
    "operational_form": "Die Operationsform der Figur {label} ist {value}.",
    "position": "Die Position der Figur {label} ist {value}.",
    "area": "Der Bereich der Figur {label} ist {value}.",
    "definition": "Eine Definition der Figur {label} lautet: {text}",
    "definition_author": " (Autor: {author})",
    "example": "Ein Beispiel für die Figur {label} lautet: {text}",
    "example_author": " (Autor: {author})",
    "example_source": " (Quelle: {source})",
}


def load_templates(path) -> dict[str, str]:
    with open(path, encoding="utf-8") as handle:
        templates = dict(DEFAULT_TEMPLATES)
        templates.update(json.load(handle))
        return templates


def _info_block(
    catalog: FigureCatalog,
    figure: Iri,
    info: FigureInfo,
    templates: dict[str, str],
) -> str:
    lines = [templates["figure"].format(label=info.label)]
    for parent in info.parents:
        parent_label = catalog.info(parent).label
        lines.append(templates["subclass"].format(label=info.label, parent=parent_label))
    for dimension, predicate in catalog.vocab.dimension_predicates.items():
        values = [
            o for o in catalog.store.objects(figure, predicate) if isinstance(o, Iri)
        ]
        for value in sorted(values, key=lambda i: i.value):
            lines.append(
                templates[dimension].format(label=info.label, value=value.localname())
            )
    for definition in info.definitions:
        line = templates["definition"].format(label=info.label, text=definition.text.lexical)
        if definition.author is not None:
            line += templates["definition_author"].format(author=definition.author.lexical)
        lines.append(line)
    for example in info.examples:
        line = templates["example"].format(label=info.label, text=example.text.lexical)
        if example.author is not None:
            line += templates["example_author"].format(author=example.author.lexical)
        if example.source is not None:
            line += templates["example_source"].format(source=example.source.lexical)
        lines.append(line)
    return "\n".join(lines)


def figure_block(
    store_or_catalog: TripleStore | FigureCatalog,
    figure: Iri,
    templates: dict[str, str] | None = None,
) -> str:
    catalog = _as_catalog(store_or_catalog)
    return _info_block(catalog, figure, catalog.info(figure), templates or DEFAULT_TEMPLATES)


def serialize_ontology(
    store_or_catalog: TripleStore | FigureCatalog,
    templates: dict[str, str] | None = None,
) -> str:
    """One block per figure, in deterministic (sorted IRI) order."""
    catalog = _as_catalog(store_or_catalog)
    templates = templates or DEFAULT_TEMPLATES
    blocks = [
        _info_block(catalog, figure.iri, catalog.info(figure.iri), templates)
        for figure in catalog.figures()
    ]
    return "\n\n".join(blocks)


def _as_catalog(store_or_catalog: TripleStore | FigureCatalog) -> FigureCatalog:
    if isinstance(store_or_catalog, FigureCatalog):
        return store_or_catalog
    return FigureCatalog(store_or_catalog)
