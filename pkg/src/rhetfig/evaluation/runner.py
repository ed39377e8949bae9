"""Evaluation runner: score every configuration over the question set and
emit the six-metric comparison report (machine-readable and plain table).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Protocol, Sequence

from ..rag.interfaces import Embedder
from ..rag.pipeline import RagAnswer, RagConfig, postprocess_answer
from .dataset import EvalRecord, GroundTruthRecord
from .metrics import (
    EvalJudge,
    MetricResult,
    answer_correctness,
    answer_relevancy,
    answer_similarity,
    context_precision,
    context_recall,
    faithfulness,
)

logger = logging.getLogger(__name__)

METRIC_NAMES = (
    "faithfulness",
    "context_precision",
    "context_recall",
    "answer_correctness",
    "answer_similarity",
    "answer_relevancy",
)


class AnswerPipeline(Protocol):
    config: RagConfig

    def answer(self, question: str) -> RagAnswer: ...


PipelineBuilder = Callable[[RagConfig], AnswerPipeline]


@dataclass
class ReportRow:
    config: RagConfig
    scores: dict[str, float | None]
    undefined: dict[str, int]
    records: int
    failures: int

    def to_dict(self) -> dict:
        return {
            "chunk_sizes": list(self.config.chunk_sizes),
            "method": self.config.method,
            "reranker": self.config.reranker_label,
            "scores": self.scores,
            "undefined": self.undefined,
            "records": self.records,
            "failures": self.failures,
        }


@dataclass
class EvaluationReport:
    rows: list[ReportRow]
    metric_names: tuple[str, ...] = METRIC_NAMES

    def best_rows(self) -> dict[str, list[int]]:
        """Row indices holding the best (maximum) value per metric column."""
        best: dict[str, list[int]] = {}
        for metric in self.metric_names:
            values = [
                (i, row.scores.get(metric))
                for i, row in enumerate(self.rows)
                if row.scores.get(metric) is not None
            ]
            if not values:
                best[metric] = []
                continue
            maximum = max(v for _, v in values)
            best[metric] = [i for i, v in values if v == maximum]
        return best

    def to_dict(self) -> dict:
        return {
            "metrics": list(self.metric_names),
            "rows": [row.to_dict() for row in self.rows],
            "best": self.best_rows(),
        }

    def render_table(self) -> str:
        """Plain-text table; the best value per metric column is starred."""
        best = self.best_rows()
        header = ["chunk_sizes", "method", "reranker", *self.metric_names]
        lines = [header]
        for i, row in enumerate(self.rows):
            cells = [
                ", ".join(str(s) for s in row.config.chunk_sizes),
                row.config.method,
                row.config.reranker_label,
            ]
            for metric in self.metric_names:
                value = row.scores.get(metric)
                if value is None:
                    cells.append("n/a")
                else:
                    mark = "*" if i in best[metric] else ""
                    cells.append(f"{value:.4f}{mark}")
            lines.append(cells)
        widths = [max(len(line[col]) for line in lines) for col in range(len(header))]
        rendered = []
        for line in lines:
            rendered.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)))
        rendered.insert(1, "-" * len(rendered[0]))
        return "\n".join(rendered) + "\n"


def _score_record(
    record: EvalRecord,
    judge: EvalJudge,
    embedder: Embedder,
    relevancy_n: int,
    correctness_weights: tuple[float, float],
) -> dict[str, MetricResult]:
    return {
        "faithfulness": faithfulness(record, judge),
        "context_precision": context_precision(record, judge),
        "context_recall": context_recall(record, judge),
        "answer_correctness": answer_correctness(record, judge, embedder, correctness_weights),
        "answer_similarity": answer_similarity(record, embedder),
        "answer_relevancy": answer_relevancy(record, judge, embedder, relevancy_n),
    }


def run_evaluation(
    dataset: Sequence[GroundTruthRecord],
    configs: Sequence[RagConfig],
    build_pipeline: PipelineBuilder,
    judge: EvalJudge,
    embedder: Embedder,
    relevancy_n: int = 3,
    correctness_weights: tuple[float, float] = (0.75, 0.25),
) -> EvaluationReport:
    """Answer every question under every configuration and average the metrics.

    Record-level failures are logged and excluded from the averages; the
    per-row failure count keeps them visible.
    """
    if not dataset:
        raise ValueError("evaluation dataset is empty")
    rows = []
    for config in configs:
        pipeline = build_pipeline(config)
        sums = {metric: 0.0 for metric in METRIC_NAMES}
        counts = {metric: 0 for metric in METRIC_NAMES}
        undefined = {metric: 0 for metric in METRIC_NAMES}
        failures = 0
        for ground_truth in dataset:
            try:
                result = pipeline.answer(ground_truth.question)
                record = EvalRecord(
                    question=ground_truth.question,
                    ground_truth=ground_truth.ground_truth,
                    reference_contexts=ground_truth.reference_contexts,
                    answer=postprocess_answer(result.text),
                    retrieved_contexts=tuple(result.contexts),
                )
            except Exception:
                logger.exception("answering failed for %r", ground_truth.question)
                failures += 1
                continue
            for metric, outcome in _score_record(
                record, judge, embedder, relevancy_n, correctness_weights
            ).items():
                if outcome.defined:
                    sums[metric] += outcome.value
                    counts[metric] += 1
                else:
                    undefined[metric] += 1
        scores = {
            metric: (sums[metric] / counts[metric] if counts[metric] else None)
            for metric in METRIC_NAMES
        }
        rows.append(
            ReportRow(
                config=config,
                scores=scores,
                undefined=undefined,
                records=len(dataset),
                failures=failures,
            )
        )
    return EvaluationReport(rows)
