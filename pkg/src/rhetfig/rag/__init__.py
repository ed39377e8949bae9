from .chunking import Chunk, ChunkTree, chunk_basic, chunk_hierarchical
from .index import VectorIndex, build_index, retrieve
from .interfaces import (
    ChatModel,
    Embedder,
    EchoChatModel,
    HashedBowEmbedder,
    HttpChatModel,
    HttpEmbedder,
    HttpEndpoint,
    HttpReranker,
    LlmTransportError,
    OverlapReranker,
    Reranker,
    RerankerError,
)
from .pipeline import (
    DEFAULT_TEMPERATURE,
    GERMAN_ONLY_DIRECTIVE,
    PromptBundle,
    RagAnswer,
    RagConfig,
    RagPipeline,
    answer,
    auto_merge,
    build_system_instruction,
    postprocess_answer,
    rerank,
)
from .serialize import figure_block, serialize_ontology

__all__ = [
    "Chunk",
    "ChunkTree",
    "ChatModel",
    "DEFAULT_TEMPERATURE",
    "EchoChatModel",
    "Embedder",
    "GERMAN_ONLY_DIRECTIVE",
    "HashedBowEmbedder",
    "HttpChatModel",
    "HttpEmbedder",
    "HttpEndpoint",
    "HttpReranker",
    "LlmTransportError",
    "OverlapReranker",
    "PromptBundle",
    "RagAnswer",
    "RagConfig",
    "RagPipeline",
    "Reranker",
    "RerankerError",
    "VectorIndex",
    "answer",
    "auto_merge",
    "build_index",
    "build_system_instruction",
    "chunk_basic",
    "chunk_hierarchical",
    "figure_block",
    "postprocess_answer",
    "rerank",
    "retrieve",
    "serialize_ontology",
]
