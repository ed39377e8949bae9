"""Reification: compound construction relations become fine-grained triples,
inline definitions and examples become first-class individuals, and figure
individuals are promoted to classes.

The compound-relation expansion is driven by an editable mapping file so the
ontology owner can cover new relations without code changes. One mapping per
line::

    isRepeatableElementOfSameForm -> hasOperation=Repetition; affectedElement=$OBJECT; hasOperationForm=SameForm

``$OBJECT`` substitutes the object of the original triple. Names resolve
against the document's default prefix; prefixed names (``rdfs:subClassOf``)
are honored.

Inline definition and example literals may carry provenance in a trailing
parenthetical: ``(Author)`` for definitions, ``(Author, Source)`` for
examples. The parenthetical is stripped from the text and emitted as
``hasAuthor`` / ``hasSource`` triples on the new individual.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .figures import figure_iris
from .store import TripleStore
from .terms import Iri, Literal, RDF_TYPE, RDFS_COMMENT, RDFS_LABEL, RDFS_SUBCLASSOF, Triple
from .vocab import FigureVocab

OBJECT_PLACEHOLDER = "$OBJECT"


@dataclass(frozen=True)
class MappingRule:
    compound: str
    outputs: tuple[tuple[str, str], ...]  # (predicate name, object name or $OBJECT)


class MappingSyntaxError(ValueError):
    pass


def parse_mapping(text: str) -> list[MappingRule]:
    """Parse the compound-relation mapping configuration."""
    rules = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise MappingSyntaxError(f"line {number}: expected 'compound -> expansions'")
        lhs, rhs = line.split("->", 1)
        compound = lhs.strip()
        if not compound:
            raise MappingSyntaxError(f"line {number}: empty compound predicate")
        outputs = []
        for part in rhs.split(";"):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise MappingSyntaxError(f"line {number}: expected 'predicate=object' in {part!r}")
            predicate, obj = (s.strip() for s in part.split("=", 1))
            if not predicate or not obj:
                raise MappingSyntaxError(f"line {number}: incomplete expansion {part!r}")
            outputs.append((predicate, obj))
        if not outputs:
            raise MappingSyntaxError(f"line {number}: mapping produces no triples")
        rules.append(MappingRule(compound, tuple(outputs)))
    return rules


def load_mapping(path) -> list[MappingRule]:
    with open(path, encoding="utf-8") as handle:
        return parse_mapping(handle.read())


@dataclass
class ReifyReport:
    """Relations the transformation could not interpret; passed through as-is."""

    unmapped: list[tuple[Iri, int]] = field(default_factory=list)

    def render(self, prefixes: dict[str, str] | None = None) -> str:
        if not self.unmapped:
            return "no unmapped relations\n"
        lines = ["unmapped relations:"]
        for predicate, count in self.unmapped:
            shown = predicate.curie(prefixes) if prefixes else predicate.value
            lines.append(f"  {shown} ({count} occurrence{'s' if count != 1 else ''})")
        return "\n".join(lines) + "\n"


@dataclass
class ReifyResult:
    store: TripleStore
    report: ReifyReport


_PROVENANCE_RE = re.compile(r"\(([^()]*)\)\s*$")


def split_provenance(text: str, *, with_source: bool) -> tuple[str, str | None, str | None]:
    """Split a trailing ``(Author)`` / ``(Author, Source)`` clause off a literal."""
    match = _PROVENANCE_RE.search(text)
    if not match:
        return text.strip(), None, None
    body = text[: match.start()].strip()
    inner = match.group(1).strip()
    if not body or not inner:
        return text.strip(), None, None
    if with_source and "," in inner:
        author, source = (s.strip() for s in inner.split(",", 1))
        return body, author or None, source or None
    return body, inner, None


class _IndividualNamer:
    """Allocates fresh IRIs for definition/example individuals."""

    def __init__(self, store: TripleStore, base: str):
        self.base = base
        self.used: set[str] = set()
        for triple in store:
            self.used.add(triple.subject.value)
            if isinstance(triple.object, Iri):
                self.used.add(triple.object.value)

    def fresh(self, stem: str, start: int = 1) -> tuple[Iri, int]:
        index = start
        while f"{self.base}{stem}{index}" in self.used:
            index += 1
        iri = Iri(f"{self.base}{stem}{index}")
        self.used.add(iri.value)
        return iri, index


def reify(
    store: TripleStore,
    rules: list[MappingRule] | None = None,
    vocab: FigureVocab | None = None,
) -> ReifyResult:
    """Apply the reification transformation; idempotent on reified stores."""
    rules = rules or []
    vocab = vocab or FigureVocab.from_prefixes(store.prefixes)
    figures = set(figure_iris(store, vocab))

    rule_by_predicate: dict[Iri, MappingRule] = {}
    for rule in rules:
        rule_by_predicate[store.resolve(rule.compound)] = rule

    known = {
        RDF_TYPE,
        RDFS_LABEL,
        RDFS_COMMENT,
        RDFS_SUBCLASSOF,
        vocab.has_operation,
        vocab.affected_element,
        vocab.has_operation_form,
        vocab.is_in_position,
        vocab.is_in_area,
        vocab.has_definition,
        vocab.is_definition,
        vocab.has_example,
        vocab.is_example,
        vocab.has_author,
        vocab.has_source,
    }

    # Subjects that already are definition/example individuals must not be
    # re-interpreted; they are recognizable as objects of the linking relations.
    individuals = {
        t.object
        for t in store
        if t.predicate in (vocab.has_example, vocab.has_definition) and isinstance(t.object, Iri)
    }

    out = TripleStore(prefixes=store.prefixes)
    namer = _IndividualNamer(store, vocab.base)
    definition_counters: dict[Iri, int] = {}
    unmapped: dict[Iri, int] = {}

    # Existing reified examples keep their identity; identical inline texts
    # elsewhere in the document link to them instead of minting duplicates.
    example_registry: dict[tuple[str, str | None, str | None], Iri] = {}
    for individual in individuals:
        texts = [o for o in store.objects(individual, vocab.is_example) if isinstance(o, Literal)]
        if not texts:
            continue
        authors = [o for o in store.objects(individual, vocab.has_author) if isinstance(o, Literal)]
        sources = [o for o in store.objects(individual, vocab.has_source) if isinstance(o, Literal)]
        key = (
            texts[0].lexical,
            authors[0].lexical if authors else None,
            sources[0].lexical if sources else None,
        )
        example_registry.setdefault(key, individual)

    for triple in store:
        subject, predicate, obj = triple.subject, triple.predicate, triple.object

        if predicate == RDF_TYPE and isinstance(obj, Iri) and (
            obj == vocab.figure_root or obj in figures
        ):
            out.add(subject, RDFS_SUBCLASSOF, obj)
            continue

        rule = rule_by_predicate.get(predicate)
        if rule is not None:
            for out_predicate, out_object in rule.outputs:
                target = obj if out_object == OBJECT_PLACEHOLDER else store.resolve(out_object)
                out.add(subject, store.resolve(out_predicate), target)
            continue

        if predicate in (RDFS_COMMENT, vocab.has_definition) and isinstance(obj, Literal):
            text, author, _ = split_provenance(obj.lexical, with_source=False)
            count = definition_counters.get(subject, 0) + 1
            definition_iri, index = namer.fresh(f"Definition{subject.localname()}", count)
            definition_counters[subject] = index
            out.add(subject, vocab.has_definition, definition_iri)
            if author:
                out.add(definition_iri, vocab.has_author, Literal(author))
            out.add(definition_iri, vocab.is_definition, Literal(text, obj.lang))
            continue

        if (
            predicate in (vocab.is_example, vocab.has_example)
            and isinstance(obj, Literal)
            and subject not in individuals
        ):
            text, author, source = split_provenance(obj.lexical, with_source=True)
            key = (text, author, source)
            example_iri = example_registry.get(key)
            if example_iri is None:
                example_iri, _ = namer.fresh("Example")
                example_registry[key] = example_iri
                out.add(subject, vocab.has_example, example_iri)
                if author:
                    out.add(example_iri, vocab.has_author, Literal(author))
                if source:
                    out.add(example_iri, vocab.has_source, Literal(source))
                out.add(example_iri, vocab.is_example, Literal(text, obj.lang))
            else:
                out.add(subject, vocab.has_example, example_iri)
            continue

        if subject in figures and predicate not in known and isinstance(obj, Iri):
            unmapped[predicate] = unmapped.get(predicate, 0) + 1

        out.add_triple(triple)

    report = ReifyReport(sorted(unmapped.items(), key=lambda kv: kv[0].value))
    return ReifyResult(out, report)
