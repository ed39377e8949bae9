"""Shared fixtures: bundled sample ontology, deterministic stubs."""

from __future__ import annotations

import numpy as np
import pytest

from rhetfig.annotation.verification import JudgeUnavailableError
from rhetfig.ontology import FigureCatalog, parse_ontology, reify
from rhetfig.ontology.reify import load_mapping
from rhetfig.rag import serialize_ontology
from rhetfig.service.settings import Settings


@pytest.fixture(scope="session")
def sample_paths():
    settings = Settings()
    return settings.ontology_path, settings.mapping_path


@pytest.fixture(scope="session")
def mapping_rules(sample_paths):
    return load_mapping(sample_paths[1])


@pytest.fixture(scope="session")
def raw_store(sample_paths):
    with open(sample_paths[0], encoding="utf-8") as handle:
        return parse_ontology(handle.read())


@pytest.fixture(scope="session")
def reified_store(raw_store, mapping_rules):
    return reify(raw_store, mapping_rules).store


@pytest.fixture(scope="session")
def catalog(reified_store):
    return FigureCatalog(reified_store)


@pytest.fixture(scope="session")
def document(catalog):
    return serialize_ontology(catalog)


class ScriptedDetector:
    """Maps exact texts to languages; defaults to German."""

    def __init__(self, overrides: dict[str, str | None] | None = None):
        self.overrides = overrides or {}

    def detect(self, text: str) -> str | None:
        if text in self.overrides:
            return self.overrides[text]
        return "de"


class ScriptedGrammar:
    def __init__(self, failing: set[str] | None = None):
        self.failing = failing or set()

    def check(self, text: str) -> bool:
        return text not in self.failing


class RecordingJudge:
    """Counts consultations and answers from a fixed verdict table."""

    def __init__(self, verdicts: dict[str, bool] | None = None, default: bool = False):
        self.verdicts = verdicts or {}
        self.default = default
        self.calls: list[str] = []

    def is_gibberish(self, text: str) -> bool:
        self.calls.append(text)
        return self.verdicts.get(text, self.default)


class UnavailableJudge:
    def is_gibberish(self, text: str) -> bool:
        raise JudgeUnavailableError("connection refused")


class RecordingChatModel:
    """Echo model that records every (bundle, temperature) call."""

    def __init__(self):
        self.calls: list[tuple] = []

    def complete(self, bundle, temperature: float) -> str:
        self.calls.append((bundle, temperature))
        joined = " ".join(bundle.context_chunks)
        return f"Antwort auf '{bundle.question}': {joined}"


class FailingChatModel:
    def complete(self, bundle, temperature: float) -> str:
        from rhetfig.rag.interfaces import LlmTransportError

        raise LlmTransportError("upstream timeout")


class FailingReranker:
    def scores(self, query, texts):
        from rhetfig.rag.interfaces import RerankerError

        raise RerankerError("reranker down")


class MappedEmbedder:
    """Embeds exact texts to preset vectors; unknown texts get a fallback."""

    def __init__(self, mapping: dict[str, list[float]], dim: int):
        self.mapping = mapping
        self.dim = dim

    def embed(self, texts):
        out = np.zeros((len(texts), self.dim), dtype=np.float32)
        for row, text in enumerate(texts):
            vector = self.mapping.get(text)
            if vector is None:
                out[row, self.dim - 1] = 1.0
            else:
                out[row, : len(vector)] = vector
        return out


@pytest.fixture
def scripted_detector():
    return ScriptedDetector


@pytest.fixture
def recording_judge():
    return RecordingJudge
