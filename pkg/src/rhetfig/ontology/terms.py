"""RDF-style terms: IRIs, literals, triples, and query variables."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"

RDF_TYPE_IRI = RDF_NS + "type"
RDFS_LABEL_IRI = RDFS_NS + "label"
RDFS_COMMENT_IRI = RDFS_NS + "comment"
RDFS_SUBCLASSOF_IRI = RDFS_NS + "subClassOf"

_LOCALNAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_\-]*$")


@dataclass(frozen=True)
class Iri:
    """An absolute IRI. Prefixed names are expanded while parsing."""

    value: str

    def __post_init__(self) -> None:
        if not self.value:
            raise ValueError("IRI must be non-empty")

    def localname(self) -> str:
        for sep in ("#", "/"):
            if sep in self.value:
                return self.value.rsplit(sep, 1)[1]
        return self.value

    def namespace(self) -> str:
        return self.value[: len(self.value) - len(self.localname())]

    def curie(self, prefixes: Mapping[str, str]) -> str:
        """Render as prefix:local when a declared namespace matches, else <iri>."""
        best: tuple[str, str] | None = None
        for prefix, ns in prefixes.items():
            if self.value.startswith(ns) and (best is None or len(ns) > len(best[1])):
                local = self.value[len(ns):]
                if _LOCALNAME_RE.match(local):
                    best = (prefix, ns)
        if best is None:
            return f"<{self.value}>"
        prefix, ns = best
        return f"{prefix}:{self.value[len(ns):]}"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Literal:
    """A string literal with an optional BCP-47 language tag."""

    lexical: str
    lang: str | None = None

    def __str__(self) -> str:
        return self.lexical


Term = Union[Iri, Literal]


@dataclass(frozen=True)
class Triple:
    subject: Iri
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.subject, Iri) or not isinstance(self.predicate, Iri):
            raise TypeError("subject and predicate must be IRIs")
        if not isinstance(self.object, (Iri, Literal)):
            raise TypeError("object must be an IRI or a literal")


@dataclass(frozen=True)
class Var:
    """A named query variable; equal names unify across conjuncts."""

    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("variable name must be non-empty")


RDF_TYPE = Iri(RDF_TYPE_IRI)
RDFS_LABEL = Iri(RDFS_LABEL_IRI)
RDFS_COMMENT = Iri(RDFS_COMMENT_IRI)
RDFS_SUBCLASSOF = Iri(RDFS_SUBCLASSOF_IRI)


def term_sort_key(term: Term) -> tuple:
    """Total order over terms: IRIs first (by value), then literals."""
    if isinstance(term, Iri):
        return (0, term.value, "")
    return (1, term.lexical, term.lang or "")


def triple_sort_key(triple: Triple) -> tuple:
    return (triple.subject.value, triple.predicate.value, term_sort_key(triple.object))
