"""Single-file vector index with exact cosine top-k retrieval.

The persisted format is deliberately simple instead of a vector database:
a header of (dim, count) followed by length-prefixed (chunk_id, vector)
records, little-endian with 32-bit floats. Saving a loaded index reproduces
the file byte for byte.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .chunking import Chunk, ChunkTree
from .interfaces import Embedder

_HEADER = struct.Struct("<II")
_RECORD_LENGTH = struct.Struct("<I")
_CHUNK_ID = struct.Struct("<i")


@dataclass
class VectorIndex:
    dim: int
    ids: list[int]
    vectors: np.ndarray  # (n, dim) float32

    def __post_init__(self) -> None:
        if len(self.ids) != len(set(self.ids)):
            raise ValueError("chunk ids must be unique")
        self.vectors = np.ascontiguousarray(self.vectors, dtype=np.float32).reshape(
            len(self.ids), self.dim
        )

    def __len__(self) -> int:
        return len(self.ids)

    def save(self, path) -> None:
        with open(path, "wb") as handle:
            handle.write(_HEADER.pack(self.dim, len(self.ids)))
            for chunk_id, vector in zip(self.ids, self.vectors):
                record = _CHUNK_ID.pack(chunk_id) + vector.tobytes()
                handle.write(_RECORD_LENGTH.pack(len(record)))
                handle.write(record)

    @classmethod
    def load(cls, path) -> "VectorIndex":
        with open(path, "rb") as handle:
            dim, count = _HEADER.unpack(handle.read(_HEADER.size))
            ids = []
            vectors = np.empty((count, dim), dtype=np.float32)
            for row in range(count):
                (length,) = _RECORD_LENGTH.unpack(handle.read(_RECORD_LENGTH.size))
                record = handle.read(length)
                if len(record) != length:
                    raise ValueError("truncated index file")
                (chunk_id,) = _CHUNK_ID.unpack(record[: _CHUNK_ID.size])
                ids.append(chunk_id)
                vectors[row] = np.frombuffer(record[_CHUNK_ID.size :], dtype="<f4")
        return cls(dim, ids, vectors)


def build_index(source: Union[ChunkTree, Sequence[Chunk]], embedder: Embedder) -> VectorIndex:
    """Embed the retrieval units: leaves of a tree, or every flat chunk.

    Any embedder failure aborts the build; no partial index is produced.
    """
    chunks = source.leaves() if isinstance(source, ChunkTree) else list(source)
    if not chunks:
        return VectorIndex(embedder.dim, [], np.empty((0, embedder.dim), dtype=np.float32))
    vectors = np.asarray(embedder.embed([c.text for c in chunks]), dtype=np.float32)
    if vectors.shape != (len(chunks), embedder.dim):
        raise ValueError(
            f"embedder returned shape {vectors.shape}, expected {(len(chunks), embedder.dim)}"
        )
    return VectorIndex(embedder.dim, [c.id for c in chunks], vectors)


def retrieve(
    index: VectorIndex, query: str, k: int, embedder: Embedder
) -> list[tuple[int, float]]:
    """Exact top-k by cosine similarity; ties broken by ascending chunk id."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(index) == 0:
        return []
    query_vector = np.asarray(embedder.embed([query])[0], dtype=np.float64)
    matrix = index.vectors.astype(np.float64)
    # Row-wise reduction instead of BLAS gemv: identical vectors must yield
    # bit-identical scores so the chunk-id tie-break is meaningful.
    scores = (matrix * query_vector).sum(axis=1)
    norms = np.sqrt((matrix * matrix).sum(axis=1))
    query_norm = float(np.sqrt(float(query_vector @ query_vector)))
    denominator = norms * query_norm
    scores = np.where(denominator > 0, scores / np.where(denominator == 0, 1, denominator), 0.0)
    ranked = sorted(
        zip(index.ids, scores.tolist()), key=lambda pair: (-pair[1], pair[0])
    )
    return ranked[: min(k, len(ranked))]
