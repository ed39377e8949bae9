from rhetfig.ontology import FigureCatalog, TripleStore, parse_ontology, reify
from rhetfig.rag import figure_block, serialize_ontology
from rhetfig.rag.serialize import DEFAULT_TEMPLATES


def test_epiphora_block_contains_definition_and_example_verbatim(catalog, reified_store):
    block = figure_block(catalog, reified_store.resolve(":Epiphora"))
    assert block.startswith("Die rhetorische Figur Epiphora.")
    assert "Wiederholung eines Wortes oder einer Wortgruppe am Ende" in block
    assert "Er sieht das Meer. Sie liebt das Meer." in block
    assert "Gerd Berner" in block
    assert "Volksgut" in block
    assert "Die Operation der Figur Epiphora ist Repetition." in block
    assert "Die Position der Figur Epiphora ist Beginning." in block


def test_empty_store_serializes_to_empty_document():
    store = TripleStore(prefixes={"": "http://example.org/rhetfig#"})
    assert serialize_ontology(FigureCatalog(store)) == ""


def test_shared_example_text_appears_in_both_blocks(catalog, reified_store):
    anaphora = figure_block(catalog, reified_store.resolve(":Anaphora"))
    parallelismus = figure_block(catalog, reified_store.resolve(":Parallelismus"))
    assert "Das Wasser steigt. Das Wasser fällt." in anaphora
    assert "Das Wasser steigt. Das Wasser fällt." in parallelismus


def test_subclass_line_rendered():
    document = (
        "@prefix : <http://example.org/rhetfig#> .\n"
        ":Chiasmus a :RhetoricalFigure .\n"
        ":Antimetabole a :RhetoricalFigure .\n"
        ":Antimetabole :isSpecialisationOf :Chiasmus .\n"
    )
    from rhetfig.ontology.reify import parse_mapping

    store = reify(
        parse_ontology(document), parse_mapping("isSpecialisationOf -> rdfs:subClassOf=$OBJECT")
    ).store
    # rdfs prefix missing in the document; resolve() handles prefixed targets
    block = figure_block(FigureCatalog(store), store.resolve(":Antimetabole"))
    assert "Antimetabole ist eine Unterart der Figur Chiasmus." in block


def test_document_order_is_deterministic(catalog):
    first = serialize_ontology(catalog)
    second = serialize_ontology(catalog)
    assert first == second
    blocks = first.split("\n\n")
    labels = [block.splitlines()[0] for block in blocks]
    assert labels == sorted(labels)


def test_templates_are_overridable(catalog, reified_store):
    templates = dict(DEFAULT_TEMPLATES)
    templates["figure"] = "Figur: {label}"
    block = figure_block(catalog, reified_store.resolve(":Klimax"), templates)
    assert block.startswith("Figur: Klimax")
