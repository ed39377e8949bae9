"""Figure catalog: search by construction properties, figure info, vocabularies."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .store import Conjunct, QueryPattern, TripleStore, query
from .terms import (
    Iri,
    Literal,
    RDF_TYPE,
    RDFS_LABEL,
    RDFS_SUBCLASSOF,
    Var,
    term_sort_key,
)
from .vocab import DIMENSIONS, FigureVocab


class UnknownFigureError(KeyError):
    pass


class OntologyCycleError(ValueError):
    pass


class NoIdea:
    """Wildcard for a property dimension the user cannot name."""

    _instance: "NoIdea | None" = None

    def __new__(cls) -> "NoIdea":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NO_IDEA"


NO_IDEA = NoIdea()

Selection = Union[Iri, NoIdea]


@dataclass(frozen=True)
class PropertySelection:
    """One choice (or NO_IDEA) per dropdown dimension."""

    operation: Selection = NO_IDEA
    affected_element: Selection = NO_IDEA
    operational_form: Selection = NO_IDEA
    position: Selection = NO_IDEA
    area: Selection = NO_IDEA

    def chosen(self) -> dict[str, Iri]:
        out = {}
        for dimension in DIMENSIONS:
            value = getattr(self, dimension)
            if not isinstance(value, NoIdea):
                out[dimension] = value
        return out


@dataclass(frozen=True)
class FigureClass:
    iri: Iri
    label: str
    parents: tuple[Iri, ...] = ()


@dataclass(frozen=True)
class Definition:
    id: Iri
    text: Literal
    author: Literal | None = None


@dataclass(frozen=True)
class FigureExample:
    id: Iri
    text: Literal
    author: Literal | None = None
    source: Literal | None = None


@dataclass(frozen=True)
class FigureInfo:
    label: str
    definitions: tuple[Definition, ...]
    examples: tuple[FigureExample, ...]
    parents: tuple[Iri, ...]


def figure_iris(store: TripleStore, vocab: FigureVocab) -> list[Iri]:
    """Figure identifiers: direct instances of the root plus subclass closure."""
    figures = {t.subject for t in store.by_predicate(RDF_TYPE) if t.object == vocab.figure_root}
    children: dict[Iri, set[Iri]] = {}
    for t in store.by_predicate(RDFS_SUBCLASSOF):
        if isinstance(t.object, Iri):
            children.setdefault(t.object, set()).add(t.subject)
    frontier = {vocab.figure_root} | set(figures)
    seen: set[Iri] = set()
    while frontier:
        node = frontier.pop()
        if node in seen:
            continue
        seen.add(node)
        below = children.get(node, set())
        figures |= below
        frontier |= below
    return sorted(figures, key=lambda i: i.value)


def check_acyclic_hierarchy(store: TripleStore) -> None:
    """Raise when the subclass hierarchy contains a cycle."""
    edges: dict[Iri, set[Iri]] = {}
    for t in store.by_predicate(RDFS_SUBCLASSOF):
        if isinstance(t.object, Iri):
            edges.setdefault(t.subject, set()).add(t.object)
    done: set[Iri] = set()
    active: set[Iri] = set()

    def visit(node: Iri, trail: list[Iri]) -> None:
        if node in done:
            return
        if node in active:
            names = " -> ".join(i.localname() for i in trail + [node])
            raise OntologyCycleError(f"subclass cycle: {names}")
        active.add(node)
        for parent in edges.get(node, ()):
            visit(parent, trail + [node])
        active.discard(node)
        done.add(node)

    for node in list(edges):
        visit(node, [])


def _label_of(store: TripleStore, figure: Iri) -> str:
    labels = [o for o in store.objects(figure, RDFS_LABEL) if isinstance(o, Literal)]
    if labels:
        return sorted(labels, key=term_sort_key)[0].lexical
    return figure.localname()


def _figure_parents(store: TripleStore, figure: Iri, figures: set[Iri]) -> tuple[Iri, ...]:
    parents = [
        o
        for o in store.objects(figure, RDFS_SUBCLASSOF)
        if isinstance(o, Iri) and o in figures
    ]
    return tuple(sorted(parents, key=lambda i: i.value))


def _figure_class(store: TripleStore, figure: Iri, figures: set[Iri]) -> FigureClass:
    return FigureClass(figure, _label_of(store, figure), _figure_parents(store, figure, figures))


def search_figures(
    store: TripleStore,
    selection: PropertySelection,
    vocab: FigureVocab | None = None,
) -> list[FigureClass]:
    """Figures whose reified construction triples satisfy every chosen dimension."""
    vocab = vocab or FigureVocab.from_prefixes(store.prefixes)
    all_figures = figure_iris(store, vocab)
    figure_set = set(all_figures)
    chosen = selection.chosen()
    if not chosen:
        matched = all_figures
    else:
        predicates = vocab.dimension_predicates
        var = Var("f")
        conjuncts = tuple(
            Conjunct(var, predicates[dimension], value) for dimension, value in chosen.items()
        )
        bindings = query(store, QueryPattern(conjuncts))
        matched = sorted(
            {b["f"] for b in bindings if isinstance(b["f"], Iri) and b["f"] in figure_set},
            key=lambda i: i.value,
        )
    return [_figure_class(store, f, figure_set) for f in matched]


def figure_info(
    store: TripleStore,
    figure: Iri,
    vocab: FigureVocab | None = None,
) -> FigureInfo:
    """Label, definitions, examples, and parent figures for one figure class."""
    vocab = vocab or FigureVocab.from_prefixes(store.prefixes)
    figures = set(figure_iris(store, vocab))
    if figure not in figures:
        raise UnknownFigureError(f"unknown figure {figure.value}")

    definitions = []
    for obj in store.objects(figure, vocab.has_definition):
        if not isinstance(obj, Iri):
            continue
        texts = [t for t in store.objects(obj, vocab.is_definition) if isinstance(t, Literal)]
        authors = [a for a in store.objects(obj, vocab.has_author) if isinstance(a, Literal)]
        if texts:
            definitions.append(Definition(obj, texts[0], authors[0] if authors else None))
    definitions.sort(key=lambda d: d.id.value)

    examples = []
    for obj in store.objects(figure, vocab.has_example):
        if not isinstance(obj, Iri):
            continue
        texts = [t for t in store.objects(obj, vocab.is_example) if isinstance(t, Literal)]
        authors = [a for a in store.objects(obj, vocab.has_author) if isinstance(a, Literal)]
        sources = [s for s in store.objects(obj, vocab.has_source) if isinstance(s, Literal)]
        if texts:
            examples.append(
                FigureExample(
                    obj,
                    texts[0],
                    authors[0] if authors else None,
                    sources[0] if sources else None,
                )
            )
    examples.sort(key=lambda e: e.id.value)

    return FigureInfo(
        label=_label_of(store, figure),
        definitions=tuple(definitions),
        examples=tuple(examples),
        parents=_figure_parents(store, figure, figures),
    )


def property_vocabulary(
    store: TripleStore,
    dimension: str,
    vocab: FigureVocab | None = None,
) -> list[Iri]:
    """Distinct IRI values observed for one dropdown dimension, sorted."""
    vocab = vocab or FigureVocab.from_prefixes(store.prefixes)
    predicates = vocab.dimension_predicates
    if dimension not in predicates:
        raise ValueError(f"unknown dimension '{dimension}'")
    values = {t.object for t in store.by_predicate(predicates[dimension]) if isinstance(t.object, Iri)}
    return sorted(values, key=lambda i: i.value)


class FigureCatalog:
    """Read-only view over a reified store, shared by service request handlers."""

    def __init__(self, store: TripleStore, vocab: FigureVocab | None = None):
        self.store = store
        self.vocab = vocab or FigureVocab.from_prefixes(store.prefixes)
        check_acyclic_hierarchy(store)
        self._figures = figure_iris(store, self.vocab)
        self._figure_set = set(self._figures)

    def __len__(self) -> int:
        return len(self._figures)

    def __contains__(self, figure: Iri) -> bool:
        return figure in self._figure_set

    def figures(self) -> list[FigureClass]:
        return [_figure_class(self.store, f, self._figure_set) for f in self._figures]

    def by_name(self, name: str) -> Iri:
        folded = name.casefold()
        for figure in self._figures:
            if figure.localname().casefold() == folded:
                return figure
        for figure in self._figures:
            if _label_of(self.store, figure).casefold() == folded:
                return figure
        raise UnknownFigureError(f"unknown figure '{name}'")

    def info(self, figure: Iri) -> FigureInfo:
        return figure_info(self.store, figure, self.vocab)

    def search(self, selection: PropertySelection) -> list[FigureClass]:
        return search_figures(self.store, selection, self.vocab)

    def vocabulary(self, dimension: str) -> list[Iri]:
        return property_vocabulary(self.store, dimension, self.vocab)

    def repetition_figures(self) -> set[Iri]:
        """Figures constructed as perfect lexical repetition (same-form)."""
        pattern = QueryPattern.of(
            (Var("f"), self.vocab.has_operation, self.vocab.term("Repetition")),
            (Var("f"), self.vocab.has_operation_form, self.vocab.term("SameForm")),
        )
        return {
            b["f"] for b in query(self.store, pattern)
            if isinstance(b["f"], Iri) and b["f"] in self._figure_set
        }
