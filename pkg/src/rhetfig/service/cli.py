"""Command-line entry points: serve, reify, index, gen-cqs, eval.

The batch commands are thin wrappers over the core package: files in,
files out. ``serve`` runs the HTTP API.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from ..evaluation import generate_template_cqs, load_ground_truth, run_evaluation, save_ground_truth
from ..evaluation.metrics import HeuristicJudge
from ..ontology import FigureCatalog, parse_ontology, reify, serialize_turtle
from ..ontology.reify import load_mapping
from ..rag import EchoChatModel, HashedBowEmbedder, OverlapReranker, RagPipeline, serialize_ontology
from ..rag.pipeline import load_rag_config, load_rag_configs
from ..rag.serialize import DEFAULT_TEMPLATES, load_templates
from .settings import Settings


@click.group()
def main() -> None:
    """Annotation service and RAG tooling for German rhetorical figures."""


def _load_reified(ontology: str, mapping: str):
    store = parse_ontology(Path(ontology).read_text(encoding="utf-8"))
    rules = load_mapping(mapping)
    return reify(store, rules)


def _default_mapping() -> str:
    return Settings().mapping_path


def _default_ontology() -> str:
    return Settings().ontology_path


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Run the HTTP API (configuration via RF_* environment variables)."""
    import uvicorn

    from .app import create_app

    try:
        app = create_app()
    except Exception as exc:  # malformed ontology or config must not boot
        click.echo(f"startup failed: {exc}", err=True)
        sys.exit(1)
    uvicorn.run(app, host=host, port=port)


@main.command("reify")
@click.option("--ontology", "-i", default=_default_ontology, show_default="bundled sample")
@click.option("--mapping", "-m", default=_default_mapping, show_default="bundled mapping")
@click.option("--output", "-o", required=True, type=click.Path())
@click.option("--report", type=click.Path(), default=None, help="Transformation report file.")
def reify_command(ontology: str, mapping: str, output: str, report: str | None) -> None:
    """Reify an ontology file; write the transformed ontology and a report."""
    result = _load_reified(ontology, mapping)
    Path(output).write_text(serialize_turtle(result.store), encoding="utf-8")
    rendered = result.report.render(result.store.prefixes)
    if report:
        Path(report).write_text(rendered, encoding="utf-8")
    else:
        click.echo(rendered, nl=False)
    click.echo(f"wrote {len(result.store)} triples to {output}")


@main.command("index")
@click.option("--ontology", "-i", default=_default_ontology, show_default="bundled sample")
@click.option("--mapping", "-m", default=_default_mapping, show_default="bundled mapping")
@click.option("--config", "-c", "config_path", type=click.Path(exists=True), default=None)
@click.option("--templates", type=click.Path(exists=True), default=None)
@click.option("--output", "-o", required=True, type=click.Path())
@click.option("--dim", default=64, show_default=True, type=int, help="Embedding dimension (offline embedder).")
def index_command(
    ontology: str,
    mapping: str,
    config_path: str | None,
    templates: str | None,
    output: str,
    dim: int,
) -> None:
    """Build the vector index file for the serialized ontology."""
    from .app import DEFAULT_RAG_CONFIG

    result = _load_reified(ontology, mapping)
    catalog = FigureCatalog(result.store)
    template_map = load_templates(templates) if templates else DEFAULT_TEMPLATES
    document = serialize_ontology(catalog, template_map)
    config = load_rag_config(config_path) if config_path else DEFAULT_RAG_CONFIG
    pipeline = RagPipeline.build(
        document, config, HashedBowEmbedder(dim), OverlapReranker(), EchoChatModel()
    )
    pipeline.index.save(output)
    click.echo(f"indexed {len(pipeline.index)} chunks -> {output}")


@main.command("gen-cqs")
@click.option("--ontology", "-i", default=_default_ontology, show_default="bundled sample")
@click.option("--mapping", "-m", default=_default_mapping, show_default="bundled mapping")
@click.option("--output", "-o", required=True, type=click.Path())
def gen_cqs(ontology: str, mapping: str, output: str) -> None:
    """Generate the template competency-question ground-truth file."""
    result = _load_reified(ontology, mapping)
    records = generate_template_cqs(FigureCatalog(result.store))
    save_ground_truth(records, output)
    click.echo(f"wrote {len(records)} competency questions to {output}")


@main.command("eval")
@click.option("--dataset", "-d", required=True, type=click.Path(exists=True))
@click.option("--configs", "-c", "configs_path", required=True, type=click.Path(exists=True))
@click.option("--ontology", "-i", default=_default_ontology, show_default="bundled sample")
@click.option("--mapping", "-m", default=_default_mapping, show_default="bundled mapping")
@click.option("--output", "-o", type=click.Path(), default=None, help="Machine-readable report (JSON).")
@click.option("--table/--no-table", default=True, show_default=True)
@click.option("--dim", default=64, show_default=True, type=int)
def eval_command(
    dataset: str,
    configs_path: str,
    ontology: str,
    mapping: str,
    output: str | None,
    table: bool,
    dim: int,
) -> None:
    """Score all configurations over a ground-truth file (offline doubles)."""
    records = load_ground_truth(dataset)
    configs = load_rag_configs(configs_path)
    result = _load_reified(ontology, mapping)
    document = serialize_ontology(FigureCatalog(result.store))
    embedder = HashedBowEmbedder(dim)

    report = run_evaluation(
        records,
        configs,
        lambda config: RagPipeline.build(
            document, config, embedder, OverlapReranker(), EchoChatModel()
        ),
        HeuristicJudge(),
        embedder,
    )
    if output:
        Path(output).write_text(
            json.dumps(report.to_dict(), ensure_ascii=False, indent=2), encoding="utf-8"
        )
        click.echo(f"wrote report to {output}")
    if table:
        click.echo(report.render_table(), nl=False)
