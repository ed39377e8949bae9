from .terms import Iri, Literal, Triple, Var
from .store import Conjunct, QueryPattern, TripleStore, query
from .turtle import TurtleParseError, parse_ontology, serialize_turtle
from .reify import MappingRule, ReifyReport, ReifyResult, parse_mapping, reify
from .vocab import FigureVocab
from .figures import (
    NO_IDEA,
    Definition,
    FigureCatalog,
    FigureClass,
    FigureExample,
    FigureInfo,
    NoIdea,
    PropertySelection,
    UnknownFigureError,
    figure_info,
    property_vocabulary,
    search_figures,
)

__all__ = [
    "Conjunct",
    "Definition",
    "FigureCatalog",
    "FigureClass",
    "FigureExample",
    "FigureInfo",
    "FigureVocab",
    "Iri",
    "Literal",
    "MappingRule",
    "NO_IDEA",
    "NoIdea",
    "PropertySelection",
    "QueryPattern",
    "ReifyReport",
    "ReifyResult",
    "Triple",
    "TripleStore",
    "TurtleParseError",
    "UnknownFigureError",
    "Var",
    "figure_info",
    "parse_mapping",
    "parse_ontology",
    "property_vocabulary",
    "query",
    "reify",
    "search_figures",
    "serialize_turtle",
]
