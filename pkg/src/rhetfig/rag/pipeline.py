"""Retrieval-augmented answering: retrieve, optionally auto-merge, rerank,
assemble the German-only prompt, and call the chat model.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, Union

from .chunking import Chunk, ChunkTree, chunk_basic, chunk_hierarchical
from .index import VectorIndex, build_index, retrieve
from .interfaces import ChatModel, Embedder, LlmTransportError, Reranker, RerankerError

GERMAN_ONLY_DIRECTIVE = "Bitte antworte nur auf Deutsch!"
DEFAULT_TEMPERATURE = 0.1

METHOD_BASIC = "basic"
METHOD_AUTO_MERGING = "auto_merging"


@dataclass(frozen=True)
class RagConfig:
    chunk_sizes: tuple[int, ...]
    method: str = METHOD_BASIC
    retrieve_k: int = 12
    rerank_k: int = 6
    merge_threshold: float = 0.5

    def __post_init__(self) -> None:
        object.__setattr__(self, "chunk_sizes", tuple(self.chunk_sizes))
        if self.method not in (METHOD_BASIC, METHOD_AUTO_MERGING):
            raise ValueError(f"unknown chunking method '{self.method}'")
        if not self.chunk_sizes:
            raise ValueError("at least one chunk size required")
        if self.method == METHOD_BASIC and len(self.chunk_sizes) != 1:
            raise ValueError("basic chunking takes exactly one chunk size")
        if self.method == METHOD_AUTO_MERGING and len(self.chunk_sizes) < 2:
            raise ValueError("auto-merging chunking needs at least two sizes")
        if self.rerank_k > self.retrieve_k:
            raise ValueError("rerank_k must not exceed retrieve_k")
        if not (0.0 < self.merge_threshold <= 1.0):
            raise ValueError("merge_threshold must be in (0, 1]")

    @property
    def reranker_label(self) -> str:
        return f"top-{self.retrieve_k}/{self.rerank_k}"

    def to_dict(self) -> dict:
        return {
            "chunk_sizes": list(self.chunk_sizes),
            "method": self.method,
            "retrieve_k": self.retrieve_k,
            "rerank_k": self.rerank_k,
            "merge_threshold": self.merge_threshold,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RagConfig":
        return cls(
            chunk_sizes=tuple(data["chunk_sizes"]),
            method=data.get("method", METHOD_BASIC),
            retrieve_k=data.get("retrieve_k", 12),
            rerank_k=data.get("rerank_k", 6),
            merge_threshold=data.get("merge_threshold", 0.5),
        )


def load_rag_config(path) -> RagConfig:
    with open(path, encoding="utf-8") as handle:
        return RagConfig.from_dict(json.load(handle))


def load_rag_configs(path) -> list[RagConfig]:
    """A JSON list of configurations (or {"configs": [...]})."""
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    if isinstance(data, dict):
        data = data["configs"]
    return [RagConfig.from_dict(item) for item in data]


@dataclass(frozen=True)
class PromptBundle:
    system_instruction: str
    context_chunks: tuple[str, ...]
    question: str

    def __post_init__(self) -> None:
        if GERMAN_ONLY_DIRECTIVE not in self.system_instruction:
            raise ValueError("system instruction must contain the German-only directive")


def build_system_instruction() -> str:
    return (
        "Du bist ein Assistent für deutsche rhetorische Figuren. "
        "Beantworte die Frage ausschließlich anhand des bereitgestellten Kontexts. "
        + GERMAN_ONLY_DIRECTIVE
    )


def auto_merge(retrieved: Sequence[int], tree: ChunkTree, threshold: float) -> list[str]:
    """Replace retrieved siblings by their parent once their share reaches
    the threshold, recursively upward; order follows each survivor's best
    retrieval rank. The output never contains a chunk and one of its
    descendants.
    """
    leaf_ids = {chunk.id for chunk in tree.leaves()}
    for chunk_id in retrieved:
        if chunk_id not in leaf_ids:
            raise ValueError(f"retrieved id {chunk_id} is not a leaf of the tree")

    leaf_rank: dict[int, int] = {}
    for rank, chunk_id in enumerate(retrieved):
        leaf_rank.setdefault(chunk_id, rank)

    covered: set[int] = set(leaf_rank)
    for level in reversed(tree.levels[:-1]):
        for parent in level:
            kids = tree.children.get(parent.id, [])
            if kids and sum(1 for k in kids if k in covered) / len(kids) >= threshold:
                covered.add(parent.id)

    def covered_ancestor(chunk_id: int) -> int | None:
        current = tree.by_id[chunk_id].parent_id
        found = None
        while current is not None:
            if current in covered:
                found = current
            current = tree.by_id[current].parent_id
        return found

    # Survivors are maximal covered nodes; every retrieved leaf below an
    # emitted ancestor contributes its rank to that ancestor.
    survivor_rank: dict[int, int] = {}
    for leaf_id, rank in leaf_rank.items():
        survivor = covered_ancestor(leaf_id)
        if survivor is None:
            survivor = leaf_id
        survivor_rank[survivor] = min(rank, survivor_rank.get(survivor, rank))

    ordered = sorted((rank, chunk_id) for chunk_id, rank in survivor_rank.items())
    return [tree.by_id[chunk_id].text for _, chunk_id in ordered]


def rerank(query: str, candidates: Sequence[str], reranker: Reranker, rerank_k: int) -> list[str]:
    """Top rerank_k candidates by reranker score; ties keep retrieval order."""
    if rerank_k > len(candidates):
        raise ValueError("rerank_k must not exceed the number of candidates")
    scores = reranker.scores(query, candidates)
    if len(scores) != len(candidates):
        raise RerankerError("reranker returned a mismatched score count")
    order = sorted(range(len(candidates)), key=lambda i: (-scores[i], i))
    return [candidates[i] for i in order[:rerank_k]]


@dataclass
class RagAnswer:
    text: str
    contexts: list[str]
    rerank_fallback: bool = False


def answer(
    question: str,
    config: RagConfig,
    index: VectorIndex,
    source: Union[ChunkTree, Sequence[Chunk]],
    embedder: Embedder,
    reranker: Reranker,
    llm: ChatModel,
) -> RagAnswer:
    """Full pipeline for one question.

    An LLM transport failure is surfaced to the caller with the retrieved
    contexts attached to the exception.
    """
    hits = retrieve(index, question, config.retrieve_k, embedder)
    hit_ids = [chunk_id for chunk_id, _ in hits]

    if config.method == METHOD_AUTO_MERGING:
        if not isinstance(source, ChunkTree):
            raise TypeError("auto-merging answering needs the chunk tree")
        candidates = auto_merge(hit_ids, source, config.merge_threshold)
    else:
        chunks = source.leaves() if isinstance(source, ChunkTree) else list(source)
        by_id = {chunk.id: chunk for chunk in chunks}
        candidates = [by_id[chunk_id].text for chunk_id in hit_ids]

    k = min(config.rerank_k, len(candidates))
    fallback = False
    try:
        contexts = rerank(question, candidates, reranker, k)
    except RerankerError:
        contexts = list(candidates[:k])
        fallback = True

    bundle = PromptBundle(build_system_instruction(), tuple(contexts), question)
    try:
        text = llm.complete(bundle, DEFAULT_TEMPERATURE)
    except LlmTransportError as exc:
        exc.contexts = list(contexts)
        raise
    return RagAnswer(text, list(contexts), fallback)


@dataclass
class RagPipeline:
    """A built retrieval pipeline: chunks plus index for one configuration."""

    config: RagConfig
    source: Union[ChunkTree, list[Chunk]]
    index: VectorIndex
    embedder: Embedder
    reranker: Reranker
    llm: ChatModel

    @classmethod
    def build(
        cls,
        document: str,
        config: RagConfig,
        embedder: Embedder,
        reranker: Reranker,
        llm: ChatModel,
        index: VectorIndex | None = None,
    ) -> "RagPipeline":
        if config.method == METHOD_AUTO_MERGING:
            source: Union[ChunkTree, list[Chunk]] = chunk_hierarchical(
                document, list(config.chunk_sizes)
            )
        else:
            source = chunk_basic(document, config.chunk_sizes[0])
        if index is None:
            index = build_index(source, embedder)
        return cls(config, source, index, embedder, reranker, llm)

    def answer(self, question: str) -> RagAnswer:
        return answer(
            question,
            self.config,
            self.index,
            self.source,
            self.embedder,
            self.reranker,
            self.llm,
        )


_QUOTE_PAIRS = {"„": "“", "‚": "‘"}  # „ -> “ and ‚ -> ‘
_SELF_PAIRED = {'"', "'"}
_ALL_QUOTES = set(_QUOTE_PAIRS) | set(_QUOTE_PAIRS.values()) | _SELF_PAIRED


def _unmatched_quote_positions(text: str) -> list[int]:
    stacks: dict[str, list[int]] = {opening: [] for opening in _QUOTE_PAIRS}
    self_stacks: dict[str, list[int]] = {ch: [] for ch in _SELF_PAIRED}
    unmatched: list[int] = []
    for position, char in enumerate(text):
        if char not in _ALL_QUOTES:
            continue
        if char == "'":
            before = text[position - 1] if position > 0 else ""
            after = text[position + 1] if position + 1 < len(text) else ""
            if before.isalpha() and after.isalpha():
                continue  # apostrophe inside a word (geht's), not a quote
        if char in _QUOTE_PAIRS:
            stacks[char].append(position)
        elif char in _QUOTE_PAIRS.values():
            opening = next(o for o, c in _QUOTE_PAIRS.items() if c == char)
            if stacks[opening]:
                stacks[opening].pop()
            else:
                unmatched.append(position)
        else:
            stack = self_stacks[char]
            if stack:
                stack.pop()
            else:
                stack.append(position)
    for stack in stacks.values():
        unmatched.extend(stack)
    for stack in self_stacks.values():
        unmatched.extend(stack)
    return sorted(unmatched)


def postprocess_answer(text: str) -> str:
    """Strip unmatched quotation characters, keeping balanced pairs.

    Removal can change which characters look like apostrophes, so the scan
    repeats until the text is stable; the result is idempotent.
    """
    while True:
        positions = _unmatched_quote_positions(text)
        if not positions:
            return text
        remove = set(positions)
        text = "".join(ch for i, ch in enumerate(text) if i not in remove)
