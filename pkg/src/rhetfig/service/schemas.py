"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class ApiErrorModel(BaseModel):
    code: str
    message: str
    details: Optional[dict[str, Any]] = None


class ErrorEnvelope(BaseModel):
    error: ApiErrorModel


class VerificationOut(BaseModel):
    language_ok: bool
    length_ok: bool
    grammar_ok: bool
    gibberish_flag: Optional[bool] = None
    overall: str
    note: Optional[str] = None


class SubmitExampleIn(BaseModel):
    text: str
    context: Optional[str] = None
    author: Optional[str] = None
    source: Optional[str] = None
    confirm: bool = False


class ExampleOut(BaseModel):
    id: int
    text: str
    context: Optional[str]
    author: Optional[str]
    source: Optional[str]
    is_invalid: bool
    is_harmful: bool
    created_at: str


class SubmitExampleOut(BaseModel):
    example: ExampleOut
    verification: VerificationOut


class DefinitionOut(BaseModel):
    id: str
    text: str
    author: Optional[str] = None


class FigureExampleOut(BaseModel):
    id: str
    text: str
    author: Optional[str] = None
    source: Optional[str] = None


class FigureSummaryOut(BaseModel):
    iri: str
    label: str
    parents: list[str] = Field(default_factory=list)


class FigureDetailOut(BaseModel):
    iri: str
    label: str
    parents: list[str]
    definitions: list[DefinitionOut]
    examples: list[FigureExampleOut]


class SearchIn(BaseModel):
    operation: Optional[str] = None
    affected_element: Optional[str] = None
    operational_form: Optional[str] = None
    position: Optional[str] = None
    area: Optional[str] = None


class SearchHitOut(BaseModel):
    figure: FigureSummaryOut
    definitions: list[DefinitionOut]
    examples: list[FigureExampleOut]


class AnnotateIn(BaseModel):
    example_id: int
    figure_iris: list[str]


class AnnotationOut(BaseModel):
    id: int
    example_id: int
    figure_iri: str
    figure_name: str
    is_verified: bool
    created_at: str


class ChatIn(BaseModel):
    question: str
    example_id: Optional[int] = None


class ChatOut(BaseModel):
    answer: str
    contexts: list[str]
    rerank_fallback: bool = False


class FlagsIn(BaseModel):
    example_id: Optional[int] = None
    is_harmful: Optional[bool] = None
    annotation_id: Optional[int] = None
    is_verified: Optional[bool] = None


class FlagsOut(BaseModel):
    example: Optional[ExampleOut] = None
    annotation: Optional[AnnotationOut] = None


class HealthOut(BaseModel):
    status: str
    ontology_figures: int
    index_built: bool


class VocabularyOut(BaseModel):
    operation: list[str]
    affected_element: list[str]
    operational_form: list[str]
    position: list[str]
    area: list[str]
