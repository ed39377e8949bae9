"""Whitespace-token chunking: flat windows and the hierarchical tree used
for auto-merging retrieval.

Tokens are whitespace-delimited; chunks never overlap. Spans are token
offsets into the source document, so every child span lies inside its
parent's span and the leaf spans partition each parent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence


@dataclass(frozen=True)
class Chunk:
    id: int
    text: str
    level: int  # 0 = leaf
    parent_id: int | None
    span: tuple[int, int]  # token offsets, end exclusive


def _windows(tokens: Sequence[str], size: int, offset: int) -> list[tuple[int, int]]:
    spans = []
    start = 0
    while start < len(tokens):
        end = min(start + size, len(tokens))
        spans.append((offset + start, offset + end))
        start = end
    return spans


def chunk_basic(text: str, size: int) -> list[Chunk]:
    """Consecutive non-overlapping windows of at most `size` tokens."""
    if size < 1:
        raise ValueError("chunk size must be >= 1")
    tokens = text.split()
    chunks = []
    for chunk_id, (start, end) in enumerate(_windows(tokens, size, 0)):
        chunks.append(
            Chunk(chunk_id, " ".join(tokens[start:end]), 0, None, (start, end))
        )
    return chunks


@dataclass
class ChunkTree:
    """Chunk levels from coarsest to finest; leaves are the retrieval units."""

    levels: list[list[Chunk]]
    sizes: list[int]

    @cached_property
    def by_id(self) -> dict[int, Chunk]:
        return {chunk.id: chunk for level in self.levels for chunk in level}

    @cached_property
    def children(self) -> dict[int, list[int]]:
        mapping: dict[int, list[int]] = {}
        for level in self.levels[1:]:
            for chunk in level:
                mapping.setdefault(chunk.parent_id, []).append(chunk.id)
        return mapping

    def leaves(self) -> list[Chunk]:
        return self.levels[-1] if self.levels else []

    def roots(self) -> list[Chunk]:
        return self.levels[0] if self.levels else []


def chunk_hierarchical(text: str, sizes: Sequence[int]) -> ChunkTree:
    """Build the tree: the coarsest size first, each level re-chunks its parents."""
    sizes = list(sizes)
    if len(sizes) < 2:
        raise ValueError("hierarchical chunking needs at least two sizes")
    if any(s < 1 for s in sizes):
        raise ValueError("chunk sizes must be >= 1")
    if any(smaller >= larger for smaller, larger in zip(sizes[1:], sizes)):
        raise ValueError("chunk sizes must be strictly decreasing")

    tokens = text.split()
    next_id = 0
    levels: list[list[Chunk]] = []
    depth = len(sizes)

    root_level = []
    for start, end in _windows(tokens, sizes[0], 0):
        root_level.append(
            Chunk(next_id, " ".join(tokens[start:end]), depth - 1, None, (start, end))
        )
        next_id += 1
    levels.append(root_level)

    for level_index, size in enumerate(sizes[1:], start=1):
        level = []
        for parent in levels[level_index - 1]:
            parent_tokens = tokens[parent.span[0] : parent.span[1]]
            for start, end in _windows(parent_tokens, size, parent.span[0]):
                level.append(
                    Chunk(
                        next_id,
                        " ".join(tokens[start:end]),
                        depth - 1 - level_index,
                        parent.id,
                        (start, end),
                    )
                )
                next_id += 1
        levels.append(level)

    return ChunkTree(levels, sizes)
