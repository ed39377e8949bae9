import pytest

from rhetfig.ontology import Iri, Literal, parse_ontology, reify
from rhetfig.ontology.figures import figure_iris
from rhetfig.ontology.reify import MappingSyntaxError, parse_mapping, split_provenance
from rhetfig.ontology.terms import RDFS_SUBCLASSOF
from rhetfig.ontology.vocab import FigureVocab

NS = "http://example.org/rhetfig#"
PREFIX = (
    "@prefix : <http://example.org/rhetfig#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
)

REPETITION_RULE = (
    "isRepeatableElementOfSameForm -> "
    "hasOperation=Repetition; affectedElement=$OBJECT; hasOperationForm=SameForm"
)


def iri(local: str) -> Iri:
    return Iri(NS + local)


def triples_of(store):
    return {(t.subject, t.predicate, t.object) for t in store}


def test_mapping_parser_round_trip():
    rules = parse_mapping(REPETITION_RULE + "\n# comment\nisOmittableElement -> hasOperation=Omission; affectedElement=$OBJECT\n")
    assert rules[0].compound == "isRepeatableElementOfSameForm"
    assert rules[0].outputs == (
        ("hasOperation", "Repetition"),
        ("affectedElement", "$OBJECT"),
        ("hasOperationForm", "SameForm"),
    )
    assert len(rules) == 2


@pytest.mark.parametrize(
    "line",
    ["no arrow here", "x ->", "x -> broken", " -> a=b"],
)
def test_mapping_parser_rejects_malformed_lines(line):
    with pytest.raises(MappingSyntaxError):
        parse_mapping(line)


def test_compound_relation_expands_to_bundle():
    store = parse_ontology(PREFIX + ":RF :isRepeatableElementOfSameForm :Word .")
    result = reify(store, parse_mapping(REPETITION_RULE))
    assert triples_of(result.store) == {
        (iri("RF"), iri("hasOperation"), iri("Repetition")),
        (iri("RF"), iri("affectedElement"), iri("Word")),
        (iri("RF"), iri("hasOperationForm"), iri("SameForm")),
    }


def test_definition_literal_becomes_individual():
    store = parse_ontology(
        PREFIX + ':RF rdfs:comment "Wiederholung des ersten Wortes (Gerd Berner)" .'
    )
    result = reify(store)
    assert triples_of(result.store) == {
        (iri("RF"), iri("hasDefinition"), iri("DefinitionRF1")),
        (iri("DefinitionRF1"), iri("hasAuthor"), Literal("Gerd Berner")),
        (iri("DefinitionRF1"), iri("isDefinition"), Literal("Wiederholung des ersten Wortes")),
    }


def test_example_literal_becomes_individual_with_source():
    store = parse_ontology(
        PREFIX
        + ':RF :isExample "Das Wasser steigt. Das Wasser fällt. '
        '(Johann Wolfgang von Goethe, Der Zauberlehrling)" .'
    )
    result = reify(store)
    assert triples_of(result.store) == {
        (iri("RF"), iri("hasExample"), iri("Example1")),
        (iri("Example1"), iri("hasAuthor"), Literal("Johann Wolfgang von Goethe")),
        (iri("Example1"), iri("hasSource"), Literal("Der Zauberlehrling")),
        (iri("Example1"), iri("isExample"), Literal("Das Wasser steigt. Das Wasser fällt.")),
    }


def test_identical_examples_are_shared():
    store = parse_ontology(
        PREFIX
        + ':A :isExample "Gleich und gleich. (Volksmund)" .\n'
        + ':B :isExample "Gleich und gleich. (Volksmund)" .'
    )
    result = reify(store)
    example_links = [t for t in result.store if t.predicate == iri("hasExample")]
    assert {t.subject for t in example_links} == {iri("A"), iri("B")}
    assert {t.object for t in example_links} == {iri("Example1")}


def test_figures_promoted_to_classes():
    store = parse_ontology(PREFIX + ":Epiphora a :RhetoricalFigure .")
    result = reify(store)
    assert triples_of(result.store) == {
        (iri("Epiphora"), RDFS_SUBCLASSOF, iri("RhetoricalFigure")),
    }


def test_reify_is_idempotent(raw_store, mapping_rules):
    once = reify(raw_store, mapping_rules).store
    twice = reify(once, mapping_rules).store
    assert twice == once


def test_reify_preserves_figure_identifiers(raw_store, mapping_rules):
    vocab = FigureVocab.from_prefixes(raw_store.prefixes)
    before = set(figure_iris(raw_store, vocab))
    after = set(figure_iris(reify(raw_store, mapping_rules).store, vocab))
    assert before == after


def test_triple_growth_matches_manual_expansion():
    # 10 figures, 4 compound relations. Manual expansion: the three-triple
    # repetition bundle grows by 2 per occurrence (3 occurrences), the
    # two-triple omission bundle by 1 (1 occurrence) -> 27 + 3*2 + 1 = 34.
    lines = [PREFIX]
    for index in range(10):
        lines.append(f":F{index} a :RhetoricalFigure .")
        lines.append(f":F{index} :isInArea :Sentence .")
    lines.append(":F0 :isRepeatableElementOfSameForm :Word .")
    lines.append(":F1 :isRepeatableElementOfSameForm :Sound .")
    lines.append(":F2 :isRepeatableElementOfSameForm :WordGroup .")
    lines.append(":F3 :isOmittableElement :Word .")
    store = parse_ontology("\n".join(lines))
    assert len(store) == 24
    rules = parse_mapping(
        REPETITION_RULE + "\nisOmittableElement -> hasOperation=Omission; affectedElement=$OBJECT"
    )
    result = reify(store, rules)
    assert len(result.store) == 24 + 3 * 2 + 1 * 1


def test_unmapped_compound_relation_reported_and_passed_through():
    store = parse_ontology(
        PREFIX
        + ":RF a :RhetoricalFigure ; :isMysteriousRelationOf :Word ; :isInArea :Sentence ."
    )
    result = reify(store)
    assert (iri("RF"), iri("isMysteriousRelationOf"), iri("Word")) in triples_of(result.store)
    assert [p.localname() for p, _ in result.report.unmapped] == ["isMysteriousRelationOf"]
    rendered = result.report.render(result.store.prefixes)
    assert ":isMysteriousRelationOf" in rendered


def test_clean_reification_reports_nothing(raw_store, mapping_rules):
    report = reify(raw_store, mapping_rules).report
    assert report.unmapped == []
    assert "no unmapped relations" in report.render()


def test_subclass_mapping_builds_hierarchy(reified_store):
    anti = reified_store.resolve(":Antimetabole")
    chiasmus = reified_store.resolve(":Chiasmus")
    assert (
        len([t for t in reified_store.triples(anti, RDFS_SUBCLASSOF, chiasmus)]) == 1
    )


@pytest.mark.parametrize(
    "text,with_source,expected",
    [
        ("Nur Text ohne Klammer", False, ("Nur Text ohne Klammer", None, None)),
        ("Text (Autorin)", False, ("Text", "Autorin", None)),
        ("Text (A, B)", True, ("Text", "A", "B")),
        ("Text (A, B)", False, ("Text", "A, B", None)),
        ("Text (A, B, C)", True, ("Text", "A", "B, C")),
        ("(alles in Klammern)", True, ("(alles in Klammern)", None, None)),
        ("Text ()", True, ("Text ()", None, None)),
    ],
)
def test_split_provenance(text, with_source, expected):
    assert split_provenance(text, with_source=with_source) == expected
