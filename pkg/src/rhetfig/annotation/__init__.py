from .verification import (
    GibberishJudge,
    GrammarChecker,
    HeuristicGermanDetector,
    JudgeUnavailableError,
    LanguageDetector,
    MAX_TEXT_LENGTH,
    MIN_TEXT_LENGTH,
    PermissiveGrammarChecker,
    StaticGibberishJudge,
    StaticLanguageDetector,
    VerificationReport,
    check_lexical_repetition,
    verify_text,
)
from .storage import (
    AnnotationRecord,
    AnnotationStore,
    DuplicateAnnotationError,
    ExampleRecord,
    NoEligibleExampleError,
    ProvenanceError,
    RepetitionCheckError,
    UnknownRecordError,
)

__all__ = [
    "AnnotationRecord",
    "AnnotationStore",
    "DuplicateAnnotationError",
    "ExampleRecord",
    "GibberishJudge",
    "GrammarChecker",
    "HeuristicGermanDetector",
    "JudgeUnavailableError",
    "LanguageDetector",
    "MAX_TEXT_LENGTH",
    "MIN_TEXT_LENGTH",
    "NoEligibleExampleError",
    "PermissiveGrammarChecker",
    "ProvenanceError",
    "RepetitionCheckError",
    "StaticGibberishJudge",
    "StaticLanguageDetector",
    "UnknownRecordError",
    "VerificationReport",
    "check_lexical_repetition",
    "verify_text",
]
