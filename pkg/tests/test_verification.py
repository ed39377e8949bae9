import pytest
from hypothesis import given, strategies as st

from rhetfig.annotation import (
    HeuristicGermanDetector,
    PermissiveGrammarChecker,
    StaticLanguageDetector,
    check_lexical_repetition,
    verify_text,
)
from rhetfig.annotation.verification import OVERALL_ACCEPT, OVERALL_WARN
from tests.conftest import RecordingJudge, ScriptedDetector, ScriptedGrammar, UnavailableJudge

GERMAN_SENTENCE = "Die Sonne scheint heute über der alten Stadt."


def verify(text, detector=None, grammar=None, judge=None):
    return verify_text(
        text,
        detector or StaticLanguageDetector("de"),
        grammar or PermissiveGrammarChecker(),
        judge if judge is not None else RecordingJudge(),
    )


def test_clean_text_passes_without_judge():
    judge = RecordingJudge()
    report = verify(GERMAN_SENTENCE, judge=judge)
    assert report.language_ok and report.length_ok and report.grammar_ok
    assert report.gibberish_flag is None
    assert report.overall == OVERALL_ACCEPT
    assert judge.calls == []


def test_short_text_consults_judge():
    judge = RecordingJudge()
    report = verify("Neunzeich", judge=judge)  # 9 characters
    assert len("Neunzeich") == 9
    assert not report.length_ok
    assert judge.calls == ["Neunzeich"]
    assert report.gibberish_flag is False
    assert report.overall == OVERALL_ACCEPT


@pytest.mark.parametrize(
    "length,ok", [(9, False), (10, True), (1000, True), (1001, False)]
)
def test_length_boundaries(length, ok):
    report = verify("a" * length)
    assert report.length_ok is ok


def test_empty_text_fails_language_and_length():
    report = verify("", detector=HeuristicGermanDetector())
    assert not report.language_ok
    assert not report.length_ok


def test_non_german_text_flags_language():
    detector = ScriptedDetector({"The quick brown fox jumps.": "en"})
    judge = RecordingJudge()
    report = verify("The quick brown fox jumps.", detector=detector, judge=judge)
    assert not report.language_ok
    assert judge.calls, "judge must be consulted after a failed basic check"


def test_gibberish_verdict_warns():
    judge = RecordingJudge(default=True)
    report = verify("asdf qwer", judge=judge)
    assert report.gibberish_flag is True
    assert report.overall == OVERALL_WARN


def test_judge_consulted_iff_basic_check_fails():
    judge = RecordingJudge()
    verify(GERMAN_SENTENCE, judge=judge)
    assert len(judge.calls) == 0
    verify("zu kurz", judge=judge)
    assert len(judge.calls) == 1
    verify(GERMAN_SENTENCE, grammar=ScriptedGrammar({GERMAN_SENTENCE}), judge=judge)
    assert len(judge.calls) == 2


def test_unavailable_judge_fails_open_to_warn():
    report = verify("zu kurz", judge=UnavailableJudge())
    assert report.gibberish_flag is None
    assert report.overall == OVERALL_WARN
    assert "judge unavailable" in report.note


def test_heuristic_detector_recognizes_german():
    detector = HeuristicGermanDetector()
    assert detector.detect("Die Bäume blühen im Frühling.") == "de"
    assert detector.detect("zzz qqq xxx") != "de"
    assert detector.detect("") is None


# -- lexical repetition -------------------------------------------------------


def test_repetition_found_in_wasser_sentence():
    assert check_lexical_repetition("Das Wasser steigt. Das Wasser fällt.") is True


def test_no_repetition_in_rom_sentence():
    assert check_lexical_repetition("Alle Wege führen nach Rom") is False


def test_case_folding_counts_repetition():
    assert check_lexical_repetition("die Die DIE") is True


def test_single_letter_tokens_ignored():
    assert check_lexical_repetition("a a a b b b") is False


def test_punctuation_stripped_before_counting():
    assert check_lexical_repetition("Mutter! Mutter?") is True


@given(st.text(alphabet="abäxyz .,!?", min_size=0, max_size=80))
def test_repetition_invariant_under_whitespace_padding(text):
    padded = f"  \t{text}\n "
    assert check_lexical_repetition(padded) == check_lexical_repetition(text)


@given(
    st.lists(
        st.text(alphabet="abcdefäöü", min_size=2, max_size=6), min_size=0, max_size=12
    )
)
def test_repetition_matches_token_frequency_oracle(tokens):
    # Oracle: direct frequency count over the raw token list.
    expected = any(tokens.count(token) >= 2 for token in set(tokens))
    assert check_lexical_repetition(" ".join(tokens)) == expected
