"""Triple store with set semantics and a conjunctive pattern query engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Union

from .terms import RDF_NS, RDFS_NS, Iri, Literal, Term, Triple, Var, term_sort_key

PatternSubject = Union[Var, Iri]
PatternObject = Union[Var, Iri, Literal]


class TripleStore:
    """Ordered, duplicate-free collection of triples plus a prefix map.

    Insertion order is preserved so transformations and serializations are
    deterministic. Stores are treated as immutable once loaded and reified;
    all readers may share one instance.
    """

    def __init__(
        self,
        triples: Iterable[Triple] = (),
        prefixes: Mapping[str, str] | None = None,
    ):
        self.prefixes: dict[str, str] = dict(prefixes or {})
        self._triples: list[Triple] = []
        self._seen: set[Triple] = set()
        self._by_predicate: dict[Iri, list[Triple]] | None = None
        for triple in triples:
            self.add_triple(triple)

    def add(self, subject: Iri, predicate: Iri, obj: Term) -> bool:
        return self.add_triple(Triple(subject, predicate, obj))

    def add_triple(self, triple: Triple) -> bool:
        """Insert a triple; returns False when it was already present."""
        if triple in self._seen:
            return False
        self._seen.add(triple)
        self._triples.append(triple)
        self._by_predicate = None
        return True

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __len__(self) -> int:
        return len(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._seen

    def __eq__(self, other) -> bool:
        if not isinstance(other, TripleStore):
            return NotImplemented
        return self._seen == other._seen

    def triples(
        self,
        subject: Iri | None = None,
        predicate: Iri | None = None,
        obj: Term | None = None,
    ) -> Iterator[Triple]:
        for triple in self._triples:
            if subject is not None and triple.subject != subject:
                continue
            if predicate is not None and triple.predicate != predicate:
                continue
            if obj is not None and triple.object != obj:
                continue
            yield triple

    def objects(self, subject: Iri | None, predicate: Iri | None) -> list[Term]:
        return [t.object for t in self.triples(subject, predicate)]

    def subjects(self, predicate: Iri | None = None, obj: Term | None = None) -> list[Iri]:
        seen: list[Iri] = []
        for triple in self.triples(None, predicate, obj):
            if triple.subject not in seen:
                seen.append(triple.subject)
        return seen

    def by_predicate(self, predicate: Iri) -> list[Triple]:
        if self._by_predicate is None:
            buckets: dict[Iri, list[Triple]] = {}
            for triple in self._triples:
                buckets.setdefault(triple.predicate, []).append(triple)
            self._by_predicate = buckets
        return self._by_predicate.get(predicate, [])

    def copy(self) -> "TripleStore":
        return TripleStore(self._triples, self.prefixes)

    def resolve(self, name: str) -> Iri:
        """Resolve an absolute IRI, prefixed name, or bare local name.

        rdf:/rdfs: fall back to their well-known namespaces when the
        document does not declare them.
        """
        if name.startswith("<") and name.endswith(">"):
            return Iri(name[1:-1])
        if "://" in name:
            return Iri(name)
        if ":" in name:
            prefix, local = name.split(":", 1)
            namespace = self.prefixes.get(prefix)
            if namespace is None:
                namespace = {"rdf": RDF_NS, "rdfs": RDFS_NS}.get(prefix)
            if namespace is None:
                raise KeyError(f"unknown prefix '{prefix}:'")
            return Iri(namespace + local)
        if "" not in self.prefixes:
            raise KeyError("no default prefix declared")
        return Iri(self.prefixes[""] + name)


@dataclass(frozen=True)
class Conjunct:
    subject: PatternSubject
    predicate: Iri
    object: PatternObject

    def __post_init__(self) -> None:
        if not isinstance(self.predicate, Iri):
            raise TypeError("conjunct predicate must be a concrete IRI")


@dataclass(frozen=True)
class QueryPattern:
    conjuncts: tuple[Conjunct, ...]

    def __post_init__(self) -> None:
        if not self.conjuncts:
            raise ValueError("pattern needs at least one conjunct")

    @classmethod
    def of(cls, *conjuncts: tuple) -> "QueryPattern":
        return cls(tuple(Conjunct(s, p, o) for s, p, o in conjuncts))


Binding = dict[str, Term]


def _match_slot(slot, term: Term, binding: Binding) -> Binding | None:
    """Unify one pattern slot against a concrete term; None when incompatible."""
    if isinstance(slot, Var):
        bound = binding.get(slot.name)
        if bound is None:
            extended = dict(binding)
            extended[slot.name] = term
            return extended
        return binding if bound == term else None
    return binding if slot == term else None


def binding_sort_key(binding: Binding) -> tuple:
    return tuple((name, term_sort_key(binding[name])) for name in sorted(binding))


def query(store: TripleStore, pattern: QueryPattern) -> list[Binding]:
    """All binding sets satisfying every conjunct, sorted by bound values."""
    results: dict[tuple, Binding] = {}

    def extend(index: int, binding: Binding) -> None:
        if index == len(pattern.conjuncts):
            results.setdefault(binding_sort_key(binding), binding)
            return
        conjunct = pattern.conjuncts[index]
        for triple in store.by_predicate(conjunct.predicate):
            after_subject = _match_slot(conjunct.subject, triple.subject, binding)
            if after_subject is None:
                continue
            after_object = _match_slot(conjunct.object, triple.object, after_subject)
            if after_object is None:
                continue
            extend(index + 1, after_object)

    extend(0, {})
    return [results[key] for key in sorted(results)]
