import json
import random

import pytest

from rhetfig.annotation import (
    AnnotationStore,
    DuplicateAnnotationError,
    NoEligibleExampleError,
    ProvenanceError,
    RepetitionCheckError,
    UnknownRecordError,
)

WASSER = "Das Wasser steigt. Das Wasser fällt."
ROM = "Alle Wege führen nach Rom"


@pytest.fixture
def store(tmp_path):
    store = AnnotationStore(str(tmp_path / "annotations.db"))
    yield store
    store.close()


def test_add_example_requires_provenance(store):
    with pytest.raises(ProvenanceError):
        store.add_example("Text ohne Herkunft")
    with pytest.raises(ProvenanceError):
        store.add_example("Text", author="   ", source="")
    record = store.add_example("Text", source="Zeitung")
    assert record.source == "Zeitung"
    assert not record.is_invalid and not record.is_harmful
    assert record.created_at.endswith("+00:00")


def test_warn_confirmed_submission_is_flagged_invalid(store):
    record = store.add_example("komischer Text", author="X", is_invalid=True)
    assert record.is_invalid is True


def test_random_example_only_returns_eligible(store):
    eligible_ids = {store.add_example(f"Beispiel {i} Text", author="A").id for i in range(3)}
    harmful = store.add_example("böser Text hier", author="B")
    store.set_flags(example_id=harmful.id, is_harmful=True)
    invalid = store.add_example("kaputter Text hier", author="C", is_invalid=True)

    rng = random.Random(7)
    seen = set()
    for _ in range(10_000):
        record = store.random_example(rng)
        assert not record.is_harmful and not record.is_invalid
        assert record.id not in (harmful.id, invalid.id)
        seen.add(record.id)
    assert seen == eligible_ids  # every eligible id observed


def test_random_example_single_record(store):
    only = store.add_example("einziges Beispiel", author="A")
    assert store.random_example(random.Random(1)).id == only.id


def test_random_example_seed_replay(store):
    for i in range(5):
        store.add_example(f"Beispiel Nummer {i}", author="A")
    rng1, rng2 = random.Random(1234), random.Random(1234)
    first = [store.random_example(rng1).id for _ in range(20)]
    second = [store.random_example(rng2).id for _ in range(20)]
    assert first == second


def test_random_example_empty_store_raises(store):
    with pytest.raises(NoEligibleExampleError):
        store.random_example(random.Random(0))


def test_annotate_multiple_figures(store, catalog, reified_store):
    example = store.add_example(WASSER, author="Goethe")
    figures = [reified_store.resolve(":Anaphora"), reified_store.resolve(":Parallelismus")]
    records = store.annotate(example.id, figures, catalog)
    assert len(records) == 2
    assert {r.figure_name for r in records} == {"Anaphora", "Parallelismus"}
    assert all(r.is_verified is False for r in records)
    assert all(r.example_id == example.id for r in records)


def test_annotate_unknown_figure_rejected(store, catalog, reified_store):
    example = store.add_example(WASSER, author="Goethe")
    with pytest.raises(UnknownRecordError):
        store.annotate(example.id, [reified_store.resolve(":Oxymoron")], catalog)
    assert store.annotations(example.id) == []


def test_repetition_figure_requires_repetition(store, catalog, reified_store):
    example = store.add_example(ROM, author="Sprichwort")
    with pytest.raises(RepetitionCheckError) as excinfo:
        store.annotate(example.id, [reified_store.resolve(":Epiphora")], catalog)
    assert "Epiphora" in str(excinfo.value)
    assert store.annotations(example.id) == []
    # Non-repetition figures attach fine to the same text.
    records = store.annotate(example.id, [reified_store.resolve(":Metapher")], catalog)
    assert len(records) == 1


def test_duplicate_annotation_rejected_first_intact(store, catalog, reified_store):
    example = store.add_example(WASSER, author="Goethe")
    anaphora = reified_store.resolve(":Anaphora")
    first = store.annotate(example.id, [anaphora], catalog)
    with pytest.raises(DuplicateAnnotationError):
        store.annotate(example.id, [anaphora], catalog)
    remaining = store.annotations(example.id)
    assert [r.id for r in remaining] == [first[0].id]


def test_flags_persist_across_reopen(tmp_path, catalog, reified_store):
    path = str(tmp_path / "persist.db")
    store = AnnotationStore(path)
    example = store.add_example(WASSER, author="Goethe")
    annotation = store.annotate(example.id, [reified_store.resolve(":Anaphora")], catalog)[0]
    store.set_flags(annotation_id=annotation.id, is_verified=True)
    store.close()

    reopened = AnnotationStore(path)
    assert reopened.get_annotation(annotation.id).is_verified is True
    reopened.close()


def test_set_flags_unknown_ids_mutate_nothing(store):
    example = store.add_example(WASSER, author="Goethe")
    with pytest.raises(UnknownRecordError):
        store.set_flags(example_id=999, is_harmful=True)
    with pytest.raises(UnknownRecordError):
        store.set_flags(annotation_id=999, is_verified=True)
    assert store.get_example(example.id).is_harmful is False


def test_set_flags_partial_updates(store):
    example = store.add_example(WASSER, author="Goethe")
    updated, annotation = store.set_flags(example_id=example.id, is_harmful=True)
    assert updated.is_harmful is True and annotation is None
    again, _ = store.set_flags(example_id=example.id)  # no flag given: no change
    assert again.is_harmful is True


def test_export_jsonl_contains_all_records(store, catalog, reified_store):
    example = store.add_example(WASSER, author="Goethe")
    store.annotate(example.id, [reified_store.resolve(":Anaphora")], catalog)
    lines = list(store.export_jsonl())
    payloads = [json.loads(line) for line in lines]
    kinds = [p["record"] for p in payloads]
    assert kinds == ["example", "annotation"]
    assert payloads[0]["text"] == WASSER
    assert payloads[1]["figure_name"] == "Anaphora"
