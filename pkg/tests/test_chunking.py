import random

import pytest
from hypothesis import given, settings, strategies as st

from rhetfig.rag import chunk_basic, chunk_hierarchical


def words(n: int, rng: random.Random | None = None) -> str:
    rng = rng or random.Random(0)
    return " ".join(f"w{rng.randint(0, 500)}x{i}" for i in range(n))


def test_basic_chunk_arithmetic():
    chunks = chunk_basic(words(10), 4)
    assert [len(c.text.split()) for c in chunks] == [4, 4, 2]
    assert [c.span for c in chunks] == [(0, 4), (4, 8), (8, 10)]
    assert all(c.level == 0 and c.parent_id is None for c in chunks)


def test_basic_single_chunk_when_size_covers_text():
    chunks = chunk_basic(words(7), 100)
    assert len(chunks) == 1
    assert chunks[0].span == (0, 7)


def test_basic_empty_text():
    assert chunk_basic("", 8) == []


def test_basic_size_must_be_positive():
    with pytest.raises(ValueError):
        chunk_basic("a b c", 0)


def test_basic_reconstruction_on_large_random_text():
    text = words(5000, random.Random(9))
    chunks = chunk_basic(text, 2048)
    assert " ".join(c.text for c in chunks).split() == text.split()


@given(st.lists(st.text(alphabet="abcdef", min_size=1, max_size=5), max_size=200), st.integers(1, 50))
def test_basic_reconstruction_property(tokens, size):
    text = " ".join(tokens)
    chunks = chunk_basic(text, size)
    assert " ".join(c.text for c in chunks).split() == text.split()


def test_hierarchical_structure_for_paper_sizes():
    text = words(4096, random.Random(1))
    tree = chunk_hierarchical(text, [2048, 512, 128])
    roots, mids, leaves = tree.levels
    assert len(roots) == 2
    assert len(mids) <= 8
    assert len(leaves) <= 32
    assert [c.level for c in roots] == [2, 2]
    assert all(c.level == 1 for c in mids)
    assert all(c.level == 0 for c in leaves)
    for leaf in leaves:
        parent = tree.by_id[leaf.parent_id]
        assert parent.span[0] <= leaf.span[0] <= leaf.span[1] <= parent.span[1]


def test_short_text_gives_single_chain():
    tree = chunk_hierarchical("nur vier kleine tokens", [100, 50, 10])
    assert [len(level) for level in tree.levels] == [1, 1, 1]
    root, mid, leaf = (level[0] for level in tree.levels)
    assert leaf.parent_id == mid.id and mid.parent_id == root.id
    assert root.text == mid.text == leaf.text


def test_levels_partition_parents():
    text = words(1000, random.Random(3))
    tree = chunk_hierarchical(text, [256, 64])
    for parent in tree.levels[0]:
        child_spans = sorted(
            tree.by_id[cid].span for cid in tree.children[parent.id]
        )
        assert child_spans[0][0] == parent.span[0]
        assert child_spans[-1][1] == parent.span[1]
        for (_, end_a), (start_b, _) in zip(child_spans, child_spans[1:]):
            assert end_a == start_b  # disjoint and gap-free


def test_hierarchical_rejects_bad_sizes():
    with pytest.raises(ValueError):
        chunk_hierarchical("a b c", [128])
    with pytest.raises(ValueError):
        chunk_hierarchical("a b c", [128, 128])
    with pytest.raises(ValueError):
        chunk_hierarchical("a b c", [64, 128])


@settings(max_examples=40)
@given(st.integers(0, 700), st.integers(0, 10_000))
def test_hierarchical_containment_property(token_count, seed):
    text = words(token_count, random.Random(seed)) if token_count else ""
    tree = chunk_hierarchical(text, [64, 16, 4])
    ids = [c.id for level in tree.levels for c in level]
    assert len(ids) == len(set(ids))
    for level in tree.levels[1:]:
        for chunk in level:
            parent = tree.by_id[chunk.parent_id]
            assert parent.span[0] <= chunk.span[0] <= chunk.span[1] <= parent.span[1]
