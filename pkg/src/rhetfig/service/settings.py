"""Service configuration from environment variables (prefix ``RF_``)."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..rag.interfaces import HttpEndpoint


def _default_data(name: str) -> str:
    return str(resources.files("rhetfig").joinpath("data", name))


def _endpoint_from_env(prefix: str) -> HttpEndpoint | None:
    url = os.environ.get(f"{prefix}_URL")
    if not url:
        return None
    return HttpEndpoint(
        url=url,
        api_key=os.environ.get(f"{prefix}_API_KEY"),
        model=os.environ.get(f"{prefix}_MODEL"),
        timeout=float(os.environ.get(f"{prefix}_TIMEOUT", "30")),
    )


@dataclass
class Settings:
    ontology_path: str = field(default_factory=lambda: _default_data("figures.ttl"))
    mapping_path: str = field(default_factory=lambda: _default_data("reify_mapping.txt"))
    storage_path: str = "rhetfig.db"
    rag_config_path: str | None = None
    templates_path: str | None = None
    index_path: str | None = None
    build_index_on_startup: bool = True
    admin_token: str | None = None
    test_seed: int | None = None
    embedding_dim: int = 64
    relevancy_n: int = 3
    # None -> deterministic offline double
    embedder_endpoint: HttpEndpoint | None = None
    reranker_endpoint: HttpEndpoint | None = None
    llm_endpoint: HttpEndpoint | None = None
    detector_endpoint: HttpEndpoint | None = None
    grammar_endpoint: HttpEndpoint | None = None
    judge_endpoint: HttpEndpoint | None = None

    @classmethod
    def from_env(cls) -> "Settings":
        env = os.environ
        seed = env.get("RF_TEST_SEED")
        return cls(
            ontology_path=env.get("RF_ONTOLOGY", _default_data("figures.ttl")),
            mapping_path=env.get("RF_REIFY_MAPPING", _default_data("reify_mapping.txt")),
            storage_path=env.get("RF_DB", "rhetfig.db"),
            rag_config_path=env.get("RF_RAG_CONFIG"),
            templates_path=env.get("RF_TEMPLATES"),
            index_path=env.get("RF_INDEX_FILE"),
            build_index_on_startup=env.get("RF_BUILD_INDEX", "1") not in ("0", "false", "no"),
            admin_token=env.get("RF_ADMIN_TOKEN"),
            test_seed=int(seed) if seed else None,
            embedding_dim=int(env.get("RF_EMBEDDING_DIM", "64")),
            relevancy_n=int(env.get("RF_RELEVANCY_N", "3")),
            embedder_endpoint=_endpoint_from_env("RF_EMBEDDER"),
            reranker_endpoint=_endpoint_from_env("RF_RERANKER"),
            llm_endpoint=_endpoint_from_env("RF_LLM"),
            detector_endpoint=_endpoint_from_env("RF_DETECTOR"),
            grammar_endpoint=_endpoint_from_env("RF_GRAMMAR"),
            judge_endpoint=_endpoint_from_env("RF_JUDGE"),
        )
