from .dataset import (
    EvalRecord,
    GroundTruthRecord,
    generate_template_cqs,
    load_eval_records,
    load_ground_truth,
    save_eval_records,
    save_ground_truth,
)
from .metrics import (
    Claim,
    EvalJudge,
    HeuristicJudge,
    MetricResult,
    answer_correctness,
    answer_relevancy,
    answer_similarity,
    context_precision,
    context_recall,
    faithfulness,
    split_sentences,
)
from .runner import EvaluationReport, ReportRow, run_evaluation

__all__ = [
    "Claim",
    "EvalJudge",
    "EvalRecord",
    "EvaluationReport",
    "GroundTruthRecord",
    "HeuristicJudge",
    "MetricResult",
    "ReportRow",
    "answer_correctness",
    "answer_relevancy",
    "answer_similarity",
    "context_precision",
    "context_recall",
    "faithfulness",
    "generate_template_cqs",
    "load_eval_records",
    "load_ground_truth",
    "run_evaluation",
    "save_eval_records",
    "save_ground_truth",
    "split_sentences",
]
