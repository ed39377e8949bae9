"""Verification of user-submitted example texts.

Three basic checks (language, length, grammar) run on every submission.
Only when at least one of them fails is the gibberish judge consulted; its
verdict decides between ``accept`` and ``warn``. A judge outage also yields
``warn`` so a human admin reviews the text (fail-open).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Protocol

MIN_TEXT_LENGTH = 10
MAX_TEXT_LENGTH = 1000

OVERALL_ACCEPT = "accept"
OVERALL_WARN = "warn"


class JudgeUnavailableError(RuntimeError):
    """The gibberish judge could not be reached."""


class LanguageDetector(Protocol):
    def detect(self, text: str) -> str | None:
        """ISO-639-1 code of the detected language, or None."""


class GrammarChecker(Protocol):
    def check(self, text: str) -> bool:
        """True when the text passes the grammar check."""


class GibberishJudge(Protocol):
    def is_gibberish(self, text: str) -> bool:
        """May raise JudgeUnavailableError on transport problems."""


@dataclass(frozen=True)
class VerificationReport:
    language_ok: bool
    length_ok: bool
    grammar_ok: bool
    gibberish_flag: bool | None
    overall: str
    note: str | None = None

    @property
    def basic_ok(self) -> bool:
        return self.language_ok and self.length_ok and self.grammar_ok

    def to_dict(self) -> dict:
        return {
            "language_ok": self.language_ok,
            "length_ok": self.length_ok,
            "grammar_ok": self.grammar_ok,
            "gibberish_flag": self.gibberish_flag,
            "overall": self.overall,
            "note": self.note,
        }


def verify_text(
    text: str,
    detector: LanguageDetector,
    grammar: GrammarChecker,
    judge: GibberishJudge,
) -> VerificationReport:
    """Run the submission checks; consult the judge only after a basic failure."""
    language_ok = detector.detect(text) == "de"
    length_ok = MIN_TEXT_LENGTH <= len(text) <= MAX_TEXT_LENGTH
    grammar_ok = grammar.check(text)

    gibberish: bool | None = None
    note: str | None = None
    if not (language_ok and length_ok and grammar_ok):
        try:
            gibberish = judge.is_gibberish(text)
        except JudgeUnavailableError as exc:
            note = f"judge unavailable: {exc}"

    overall = OVERALL_WARN if (gibberish is True or note is not None) else OVERALL_ACCEPT
    return VerificationReport(language_ok, length_ok, grammar_ok, gibberish, overall, note)


_GERMAN_HINTS = {
    "der", "die", "das", "und", "ist", "sind", "ein", "eine", "nicht", "ich",
    "du", "er", "sie", "es", "wir", "ihr", "im", "am", "zum", "zur", "mit",
    "auf", "für", "von", "aus", "bei", "nach", "über", "um", "man", "sich",
    "den", "dem", "des", "war", "wird", "auch", "nur", "als", "wie", "so",
}


class HeuristicGermanDetector:
    """Offline stand-in for a language-detection service.

    Flags a text as German when it contains umlauts/ß or enough German
    function words. Good enough for local runs and deterministic tests;
    production deployments plug in an HTTP detector.
    """

    def detect(self, text: str) -> str | None:
        if not text.strip():
            return None
        if re.search(r"[äöüÄÖÜß]", text):
            return "de"
        tokens = [t.strip(".,;:!?\"'()").casefold() for t in text.split()]
        hits = sum(1 for t in tokens if t in _GERMAN_HINTS)
        if hits >= 1 and tokens:
            return "de"
        return "unknown"


class StaticLanguageDetector:
    def __init__(self, language: str | None = "de"):
        self.language = language

    def detect(self, text: str) -> str | None:
        return self.language


class PermissiveGrammarChecker:
    """Accepts everything; rhetorical figures often break grammar on purpose."""

    def check(self, text: str) -> bool:
        return True


class StaticGibberishJudge:
    def __init__(self, verdict: bool = False):
        self.verdict = verdict
        self.calls = 0

    def is_gibberish(self, text: str) -> bool:
        self.calls += 1
        return self.verdict


_TOKEN_STRIP = re.compile(r"^\W+|\W+$", re.UNICODE)


def check_lexical_repetition(text: str) -> bool:
    """True when some token of length >= 2 recurs in identical surface form.

    Tokens are case-folded and stripped of surrounding punctuation first,
    so "Die ... die" counts as a repetition.
    """
    counts: dict[str, int] = {}
    for raw in text.split():
        token = _TOKEN_STRIP.sub("", raw).casefold()
        if len(token) < 2:
            continue
        counts[token] = counts.get(token, 0) + 1
        if counts[token] >= 2:
            return True
    return False
