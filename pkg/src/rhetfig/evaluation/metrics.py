"""The six answer/context quality metrics.

Judge and embedder are injected so scores are reproducible with
deterministic doubles. Every metric yields a value in [0, 1] or an explicit
not-applicable result; an absent judgement never silently becomes 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Protocol, Sequence

import numpy as np

from ..rag.interfaces import Embedder
from .dataset import EvalRecord

_SENTENCE_RE = re.compile(r"(?<=[.!?])\s+")


def split_sentences(text: str) -> list[str]:
    """Deterministic sentence split on terminal punctuation + whitespace."""
    parts = [part.strip() for part in _SENTENCE_RE.split(text.strip())]
    return [part for part in parts if part]


@dataclass(frozen=True)
class Claim:
    text: str
    supported: bool


@dataclass(frozen=True)
class MetricResult:
    value: float | None
    note: str | None = None

    @property
    def defined(self) -> bool:
        return self.value is not None


class EvalJudge(Protocol):
    def claim_supported(self, claim: str, contexts: Sequence[str]) -> bool: ...

    def context_relevant(self, context: str, ground_truth: str) -> bool: ...

    def sentence_attributable(self, sentence: str, contexts: Sequence[str]) -> bool: ...

    def questions_from_answer(self, answer: str, n: int) -> list[str]: ...

    def classify_claims(
        self, answer_sentences: Sequence[str], truth_sentences: Sequence[str]
    ) -> tuple[int, int, int]:
        """(tp, fp, fn): statements in both, answer-only, ground-truth-only."""


def _clamped_cosine(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    denominator = float(np.linalg.norm(a) * np.linalg.norm(b))
    if denominator == 0:
        return 0.0
    return float(min(1.0, max(0.0, float(a @ b) / denominator)))


def faithfulness(record: EvalRecord, judge: EvalJudge) -> MetricResult:
    """Fraction of answer claims supported by the retrieved contexts."""
    sentences = split_sentences(record.answer)
    claims = [
        Claim(s, judge.claim_supported(s, record.retrieved_contexts)) for s in sentences
    ]
    if not claims:
        return MetricResult(None, "no claims in answer")
    supported = sum(1 for claim in claims if claim.supported)
    return MetricResult(supported / len(claims))


def context_precision(record: EvalRecord, judge: EvalJudge) -> MetricResult:
    """Rank-weighted precision of the retrieved contexts w.r.t. the ground truth."""
    contexts = record.retrieved_contexts
    if not contexts:
        return MetricResult(None, "no retrieved contexts")
    relevant = [judge.context_relevant(c, record.ground_truth) for c in contexts]
    total_relevant = sum(relevant)
    if total_relevant == 0:
        return MetricResult(0.0)
    score = 0.0
    seen_relevant = 0
    for k, rel in enumerate(relevant, start=1):
        if rel:
            seen_relevant += 1
            score += seen_relevant / k
    return MetricResult(score / total_relevant)


def context_recall(record: EvalRecord, judge: EvalJudge) -> MetricResult:
    """Fraction of ground-truth sentences attributable to the retrieved contexts."""
    sentences = split_sentences(record.ground_truth)
    if not sentences:
        return MetricResult(None, "empty ground truth")
    if not record.retrieved_contexts:
        return MetricResult(0.0)
    attributable = sum(
        1 for s in sentences if judge.sentence_attributable(s, record.retrieved_contexts)
    )
    return MetricResult(attributable / len(sentences))


def answer_relevancy(
    record: EvalRecord, judge: EvalJudge, embedder: Embedder, n: int = 3
) -> MetricResult:
    """Mean cosine between the question and questions regenerated from the answer."""
    if n < 1:
        raise ValueError("n must be >= 1")
    generated = judge.questions_from_answer(record.answer, n)
    if not generated:
        return MetricResult(None, "judge generated no questions")
    vectors = embedder.embed([record.question] + list(generated))
    question_vector = vectors[0]
    similarities = [_clamped_cosine(question_vector, v) for v in vectors[1:]]
    note = f"judge returned {len(generated)} of {n} questions" if len(generated) < n else None
    return MetricResult(sum(similarities) / len(similarities), note)


def answer_similarity(record: EvalRecord, embedder: Embedder) -> MetricResult:
    """Cosine similarity between answer and ground truth embeddings."""
    if not record.answer or not record.ground_truth:
        return MetricResult(None, "empty answer or ground truth")
    vectors = embedder.embed([record.answer, record.ground_truth])
    return MetricResult(_clamped_cosine(vectors[0], vectors[1]))


def answer_correctness(
    record: EvalRecord,
    judge: EvalJudge,
    embedder: Embedder,
    weights: tuple[float, float] = (0.75, 0.25),
) -> MetricResult:
    """Weighted claim-level F1 plus semantic similarity."""
    factual_weight, similarity_weight = weights
    similarity = answer_similarity(record, embedder)
    if not similarity.defined:
        return similarity
    tp, fp, fn = judge.classify_claims(
        split_sentences(record.answer), split_sentences(record.ground_truth)
    )
    if tp + fp + fn == 0:
        return MetricResult(
            similarity_weight * similarity.value, "no claims; similarity component only"
        )
    f1 = 2 * tp / (2 * tp + fp + fn)
    return MetricResult(factual_weight * f1 + similarity_weight * similarity.value)


_NORMALIZE_RE = re.compile(r"[\W_]+", re.UNICODE)


def _normalize(text: str) -> str:
    return _NORMALIZE_RE.sub(" ", text).casefold().strip()


class HeuristicJudge:
    """Deterministic text-overlap judge for offline runs and tests."""

    def claim_supported(self, claim: str, contexts: Sequence[str]) -> bool:
        needle = _normalize(claim)
        return any(needle and needle in _normalize(c) for c in contexts)

    def context_relevant(self, context: str, ground_truth: str) -> bool:
        truth = _normalize(ground_truth)
        ctx = _normalize(context)
        if not truth or not ctx:
            return False
        if truth in ctx or ctx in truth:
            return True
        truth_tokens = set(truth.split())
        ctx_tokens = set(ctx.split())
        union = truth_tokens | ctx_tokens
        return bool(union) and len(truth_tokens & ctx_tokens) / len(union) >= 0.5

    def sentence_attributable(self, sentence: str, contexts: Sequence[str]) -> bool:
        return self.claim_supported(sentence, contexts)

    def questions_from_answer(self, answer: str, n: int) -> list[str]:
        return [f"Welche Aussage wird hier gemacht: {answer}"] * n

    def classify_claims(
        self, answer_sentences: Sequence[str], truth_sentences: Sequence[str]
    ) -> tuple[int, int, int]:
        answers = {_normalize(s) for s in answer_sentences if _normalize(s)}
        truths = {_normalize(s) for s in truth_sentences if _normalize(s)}
        tp = len(answers & truths)
        return tp, len(answers - truths), len(truths - answers)
