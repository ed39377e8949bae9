"""HTTP API binding the ontology, annotation, rag, and evaluation modules.

User-facing error messages are German; admin/ops messages are English.
External model interfaces default to the deterministic offline doubles and
switch to HTTP adapters when endpoints are configured, so every endpoint
works without live services.
"""

from __future__ import annotations

import json
import logging
import random
import time
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Header, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from ..annotation import (
    AnnotationStore,
    DuplicateAnnotationError,
    HeuristicGermanDetector,
    NoEligibleExampleError,
    PermissiveGrammarChecker,
    ProvenanceError,
    RepetitionCheckError,
    StaticGibberishJudge,
    UnknownRecordError,
    verify_text,
)
from ..annotation.adapters import HttpGibberishJudge, HttpGrammarChecker, HttpLanguageDetector
from ..annotation.verification import OVERALL_WARN
from ..ontology import (
    FigureCatalog,
    Iri,
    NO_IDEA,
    PropertySelection,
    TripleStore,
    UnknownFigureError,
    parse_ontology,
    reify,
)
from ..ontology.reify import load_mapping
from ..ontology.vocab import DIMENSIONS
from ..rag import (
    EchoChatModel,
    HashedBowEmbedder,
    HttpChatModel,
    HttpEmbedder,
    HttpReranker,
    LlmTransportError,
    OverlapReranker,
    RagConfig,
    RagPipeline,
    VectorIndex,
    serialize_ontology,
)
from ..rag.pipeline import load_rag_config
from ..rag.serialize import DEFAULT_TEMPLATES, load_templates
from . import schemas
from .settings import Settings

logger = logging.getLogger("rhetfig.service")

DEFAULT_RAG_CONFIG = RagConfig(chunk_sizes=(2048,), method="basic", retrieve_k=12, rerank_k=6)


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, details: dict | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.details = details


@dataclass
class AppContext:
    settings: Settings
    store: TripleStore
    catalog: FigureCatalog
    annotations: AnnotationStore
    document: str
    rag_config: RagConfig
    pipeline: RagPipeline | None
    detector: object
    grammar: object
    judge: object
    rng: random.Random

    @property
    def index_built(self) -> bool:
        return self.pipeline is not None


def build_context(settings: Settings, **overrides) -> AppContext:
    """Load ontology + storage and wire the external interfaces."""
    document_text = Path(settings.ontology_path).read_text(encoding="utf-8")
    raw_store = parse_ontology(document_text)
    rules = load_mapping(settings.mapping_path)
    store = reify(raw_store, rules).store
    catalog = FigureCatalog(store)

    templates = (
        load_templates(settings.templates_path) if settings.templates_path else DEFAULT_TEMPLATES
    )
    document = serialize_ontology(catalog, templates)

    rag_config = (
        load_rag_config(settings.rag_config_path)
        if settings.rag_config_path
        else DEFAULT_RAG_CONFIG
    )

    embedder = overrides.get("embedder") or (
        HttpEmbedder(settings.embedder_endpoint, settings.embedding_dim)
        if settings.embedder_endpoint
        else HashedBowEmbedder(settings.embedding_dim)
    )
    reranker = overrides.get("reranker") or (
        HttpReranker(settings.reranker_endpoint)
        if settings.reranker_endpoint
        else OverlapReranker()
    )
    llm = overrides.get("llm") or (
        HttpChatModel(settings.llm_endpoint) if settings.llm_endpoint else EchoChatModel()
    )
    detector = overrides.get("detector") or (
        HttpLanguageDetector(settings.detector_endpoint)
        if settings.detector_endpoint
        else HeuristicGermanDetector()
    )
    grammar = overrides.get("grammar") or (
        HttpGrammarChecker(settings.grammar_endpoint)
        if settings.grammar_endpoint
        else PermissiveGrammarChecker()
    )
    judge = overrides.get("judge") or (
        HttpGibberishJudge(settings.judge_endpoint)
        if settings.judge_endpoint
        else StaticGibberishJudge(False)
    )

    index = None
    if settings.index_path and Path(settings.index_path).exists():
        index = VectorIndex.load(settings.index_path)
    pipeline = None
    if index is not None or settings.build_index_on_startup:
        pipeline = RagPipeline.build(document, rag_config, embedder, reranker, llm, index=index)

    annotations = AnnotationStore(settings.storage_path)
    rng = random.Random(settings.test_seed) if settings.test_seed is not None else random.Random()

    return AppContext(
        settings=settings,
        store=store,
        catalog=catalog,
        annotations=annotations,
        document=document,
        rag_config=rag_config,
        pipeline=pipeline,
        detector=detector,
        grammar=grammar,
        judge=judge,
        rng=rng,
    )


def _example_out(record) -> schemas.ExampleOut:
    return schemas.ExampleOut(**record.to_dict())


def _annotation_out(record) -> schemas.AnnotationOut:
    return schemas.AnnotationOut(**record.to_dict())


def _figure_detail(ctx: AppContext, iri: Iri) -> schemas.FigureDetailOut:
    info = ctx.catalog.info(iri)
    prefixes = ctx.store.prefixes
    return schemas.FigureDetailOut(
        iri=iri.curie(prefixes),
        label=info.label,
        parents=[p.curie(prefixes) for p in info.parents],
        definitions=[
            schemas.DefinitionOut(
                id=d.id.curie(prefixes),
                text=d.text.lexical,
                author=d.author.lexical if d.author else None,
            )
            for d in info.definitions
        ],
        examples=[
            schemas.FigureExampleOut(
                id=e.id.curie(prefixes),
                text=e.text.lexical,
                author=e.author.lexical if e.author else None,
                source=e.source.lexical if e.source else None,
            )
            for e in info.examples
        ],
    )


def create_app(settings: Settings | None = None, **overrides) -> FastAPI:
    settings = settings or Settings.from_env()
    ctx = build_context(settings, **overrides)
    app = FastAPI(title="rhetfig", version="0.1.0")
    app.state.ctx = ctx

    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.middleware("http")
    async def request_log(request: Request, call_next):
        started = time.monotonic()
        response = await call_next(request)
        logger.info(
            json.dumps(
                {
                    "method": request.method,
                    "path": request.url.path,
                    "status": response.status_code,
                    "duration_ms": round((time.monotonic() - started) * 1000, 2),
                }
            )
        )
        return response

    @app.exception_handler(ApiError)
    async def api_error_handler(_request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={
                "error": {"code": exc.code, "message": exc.message, "details": exc.details}
            },
        )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(_request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={
                "error": {
                    "code": "validation_error",
                    "message": "Ungültige Anfrage.",
                    "details": {"errors": exc.errors()},
                }
            },
        )

    def _require_admin(authorization: str | None) -> None:
        if not ctx.settings.admin_token:
            raise ApiError(401, "unauthorized", "admin token not configured")
        if authorization != f"Bearer {ctx.settings.admin_token}":
            raise ApiError(401, "unauthorized", "invalid admin token")

    def _resolve_value(dimension: str, value: str) -> Iri:
        try:
            iri = ctx.store.resolve(value)
        except KeyError:
            raise ApiError(
                422,
                "unknown_property_value",
                f"Unbekannter Wert für {dimension}: {value}",
            )
        if iri not in ctx.catalog.vocabulary(dimension):
            raise ApiError(
                422,
                "unknown_property_value",
                f"Unbekannter Wert für {dimension}: {value}",
            )
        return iri

    # -- examples ----------------------------------------------------------

    @app.post("/examples", response_model=schemas.SubmitExampleOut, status_code=201)
    def submit_example(payload: schemas.SubmitExampleIn):
        if not (payload.author and payload.author.strip()) and not (
            payload.source and payload.source.strip()
        ):
            raise ApiError(
                422,
                "provenance_required",
                "Bitte geben Sie mindestens Autor oder Quelle an.",
            )
        report = verify_text(payload.text, ctx.detector, ctx.grammar, ctx.judge)
        if report.overall == OVERALL_WARN and not payload.confirm:
            raise ApiError(
                409,
                "confirmation_required",
                "Der Text könnte ungültig sein. Bitte bestätigen Sie die Übermittlung.",
                details={"verification": report.to_dict()},
            )
        record = ctx.annotations.add_example(
            payload.text,
            payload.context,
            payload.author,
            payload.source,
            is_invalid=(report.overall == OVERALL_WARN),
        )
        return schemas.SubmitExampleOut(
            example=_example_out(record),
            verification=schemas.VerificationOut(**report.to_dict()),
        )

    @app.get("/examples/random", response_model=schemas.ExampleOut)
    def random_example():
        try:
            record = ctx.annotations.random_example(ctx.rng)
        except NoEligibleExampleError:
            raise ApiError(404, "no_example", "Kein Beispiel verfügbar.")
        return _example_out(record)

    # -- guided figure finding ---------------------------------------------

    @app.get("/fyf/vocabulary", response_model=schemas.VocabularyOut)
    def vocabulary():
        prefixes = ctx.store.prefixes
        return schemas.VocabularyOut(
            **{
                dimension: [iri.curie(prefixes) for iri in ctx.catalog.vocabulary(dimension)]
                for dimension in DIMENSIONS
            }
        )

    @app.post("/fyf/search", response_model=list[schemas.SearchHitOut])
    def search(payload: schemas.SearchIn):
        values = {}
        for dimension in DIMENSIONS:
            raw = getattr(payload, dimension)
            values[dimension] = _resolve_value(dimension, raw) if raw else NO_IDEA
        selection = PropertySelection(**values)
        hits = ctx.catalog.search(selection)
        out = []
        for hit in hits:
            detail = _figure_detail(ctx, hit.iri)
            out.append(
                schemas.SearchHitOut(
                    figure=schemas.FigureSummaryOut(
                        iri=detail.iri, label=detail.label, parents=detail.parents
                    ),
                    definitions=detail.definitions,
                    examples=detail.examples,
                )
            )
        return out

    @app.post("/fyf/annotate", response_model=list[schemas.AnnotationOut], status_code=201)
    def annotate(payload: schemas.AnnotateIn):
        iris = []
        for name in payload.figure_iris:
            try:
                iri = ctx.store.resolve(name)
            except KeyError:
                raise ApiError(422, "unknown_figure", f"Unbekannte rhetorische Figur: {name}")
            if iri not in ctx.catalog:
                raise ApiError(422, "unknown_figure", f"Unbekannte rhetorische Figur: {name}")
            iris.append(iri)
        try:
            records = ctx.annotations.annotate(payload.example_id, iris, ctx.catalog)
        except UnknownRecordError as exc:
            raise ApiError(404, "unknown_example", f"Unbekanntes Beispiel: {exc}")
        except RepetitionCheckError as exc:
            raise ApiError(
                422,
                "repetition_check_failed",
                (
                    f"Die Figur {exc.figure_label} erfordert mindestens ein in gleicher "
                    f"Form wiederholtes Wort; im Text wurde keine Wiederholung gefunden."
                ),
            )
        except DuplicateAnnotationError:
            raise ApiError(
                409,
                "duplicate_annotation",
                "Dieses Beispiel wurde bereits mit dieser Figur annotiert.",
            )
        return [_annotation_out(r) for r in records]

    # -- chat ---------------------------------------------------------------

    @app.post("/chat", response_model=schemas.ChatOut)
    def chat(payload: schemas.ChatIn):
        if ctx.pipeline is None:
            raise ApiError(503, "index_missing", "Der Suchindex wurde noch nicht erstellt.")
        question = payload.question
        if payload.example_id is not None:
            try:
                example = ctx.annotations.get_example(payload.example_id)
            except UnknownRecordError:
                raise ApiError(
                    404, "unknown_example", f"Unbekanntes Beispiel: {payload.example_id}"
                )
            question = f"{question}\n\nText: {example.text}"
        try:
            result = ctx.pipeline.answer(question)
        except LlmTransportError as exc:
            raise ApiError(
                502,
                "llm_unavailable",
                "Das Sprachmodell ist derzeit nicht erreichbar.",
                details={"contexts": exc.contexts},
            )
        return schemas.ChatOut(
            answer=result.text,
            contexts=result.contexts,
            rerank_fallback=result.rerank_fallback,
        )

    # -- figure browsing -----------------------------------------------------

    @app.get("/figures", response_model=list[schemas.FigureSummaryOut])
    def figures():
        prefixes = ctx.store.prefixes
        return [
            schemas.FigureSummaryOut(
                iri=f.iri.curie(prefixes),
                label=f.label,
                parents=[p.curie(prefixes) for p in f.parents],
            )
            for f in ctx.catalog.figures()
        ]

    @app.get("/figures/{name}", response_model=schemas.FigureDetailOut)
    def figure_detail(name: str):
        try:
            iri = ctx.catalog.by_name(name)
        except UnknownFigureError:
            raise ApiError(404, "unknown_figure", f"Unbekannte rhetorische Figur: {name}")
        return _figure_detail(ctx, iri)

    # -- admin ----------------------------------------------------------------

    @app.post("/admin/flags", response_model=schemas.FlagsOut)
    def set_flags(payload: schemas.FlagsIn, authorization: str | None = Header(default=None)):
        _require_admin(authorization)
        try:
            example, annotation = ctx.annotations.set_flags(
                example_id=payload.example_id,
                is_harmful=payload.is_harmful,
                annotation_id=payload.annotation_id,
                is_verified=payload.is_verified,
            )
        except UnknownRecordError as exc:
            raise ApiError(404, "unknown_record", str(exc))
        return schemas.FlagsOut(
            example=_example_out(example) if example else None,
            annotation=_annotation_out(annotation) if annotation else None,
        )

    @app.get("/admin/export", response_class=PlainTextResponse)
    def export(authorization: str | None = Header(default=None)):
        _require_admin(authorization)
        return "\n".join(ctx.annotations.export_jsonl()) + "\n"

    # -- meta -------------------------------------------------------------------

    @app.get("/health", response_model=schemas.HealthOut)
    def health():
        return schemas.HealthOut(
            status="ok",
            ontology_figures=len(ctx.catalog),
            index_built=ctx.index_built,
        )

    @app.get("/meta/prefixes")
    def prefixes():
        return ctx.store.prefixes

    return app
