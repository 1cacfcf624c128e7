"""Command-line front door: fixture synthesis, ingestion, annotation,
summaries, table exploration and the HTTP service."""
from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from . import explore, fixture, occurrences, summary
from .dataset import ConfigError, Dataset, load_config, load_datasets
from .explore import FilterParseError, FilterSet, WorldAssumption
from .parse import RdfSyntaxError, serialize_graph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class DataError(click.ClickException):
    exit_code = EXIT_DATA


def _load_all(config_path: str) -> dict[str, Dataset]:
    try:
        return load_datasets(load_config(config_path))
    except (ConfigError, RdfSyntaxError, occurrences.TemplateError) as exc:
        raise DataError(str(exc))


def _single_dataset(config_path: str) -> Dataset:
    datasets = _load_all(config_path)
    if not datasets:
        raise DataError("config defines no datasets")
    return next(iter(datasets.values()))


@click.group()
def cli():
    """Pattern-based knowledge graph summarization and exploration."""


@cli.command()
@click.argument("out_dir", type=click.Path(file_okay=False))
@click.option("--seed", default=42, show_default=True, type=int)
@click.option("--properties", "n_properties", default=200, show_default=True, type=int)
@click.option("--part-of", "n_part_of", default=49, show_default=True, type=int)
@click.option("--titl", "n_titl", default=270, show_default=True, type=int)
@click.option("--mc", "n_mc", default=158, show_default=True, type=int)
@click.option("--with-config", is_flag=True, help="Also write a ready-to-use dataset config.")
def synth(out_dir, seed, n_properties, n_part_of, n_titl, n_mc, with_config):
    """Generate the synthetic fixture dataset with ground truth."""
    try:
        spec = fixture.FixtureSpec(
            seed=seed,
            n_properties=n_properties,
            n_part_of=n_part_of,
            n_titl=n_titl,
            n_mc=n_mc,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc))
    try:
        ground_truth = fixture.synth(spec, out_dir)
    except OSError as exc:
        raise DataError(f"cannot write fixture: {exc}")
    if with_config:
        config_path = Path(out_dir) / "config.json"
        config_path.write_text(
            json.dumps(fixture.default_config(out_dir), indent=2) + "\n", encoding="utf-8"
        )
        click.echo(f"config: {config_path}")
    click.echo(f"fixture written to {out_dir} ({len(ground_truth['queries'])} ground-truth queries)")


@cli.command()
@click.argument("config_path", type=click.Path())
def ingest(config_path):
    """Parse all configured files and print a load report."""
    datasets = _load_all(config_path)
    for ds in datasets.values():
        report = ds.report
        click.echo(f"dataset {ds.config.id}:")
        click.echo(f"  ontologyTriples: {report.ontology_triples}")
        click.echo(f"  dataTriples: {report.data_triples}")
        click.echo(f"  annotationTriples: {report.annotation_triples}")
        click.echo(f"  warnings: {len(report.warnings)}")
        for warning in report.warnings:
            click.echo(f"    - {warning}")


@cli.command("annotate")
@click.argument("config_path", type=click.Path())
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
def annotate_cmd(config_path, out_path):
    """Detect occurrences for every template and write OPLa annotations."""
    ds = _single_dataset(config_path)
    all_occurrences = []
    for template in ds.templates:
        occs = ds.occurrences[template.pattern_id]
        all_occurrences.extend(occs)
        click.echo(f"{template.label}: {len(occs)}")
    graph = occurrences.annotate(all_occurrences)
    Path(out_path).write_text(serialize_graph(graph), encoding="utf-8")


@cli.command("summarize")
@click.argument("config_path", type=click.Path())
@click.option("--threshold", default=None, type=int)
@click.option("--json", "as_json", is_flag=True)
def summarize_cmd(config_path, threshold, as_json):
    """Print the ODP-level summary graph."""
    ds = _single_dataset(config_path)
    effective = threshold if threshold is not None else ds.config.key_concept_threshold
    if effective < 0:
        raise click.UsageError("threshold must be non-negative")
    graph = summary.build_summary(ds.ontology, ds.registry, ds.occurrence_counts, effective)
    if as_json:
        from .service import summary_to_dict

        click.echo(json.dumps(summary_to_dict(graph), indent=2))
        return
    click.echo(f"{'KIND':<11} {'SIZE':>8}  {'OCCURRENCES':>11}  LABEL")
    for node in graph.nodes:
        occ = "" if node.occurrences is None else str(node.occurrences)
        click.echo(f"{node.kind:<11} {node.size:>8.4f}  {occ:>11}  {node.label} <{node.id}>")
    for source, label, target in graph.edges:
        click.echo(f"edge: <{source}> {label} <{target}>")


@cli.command("explore")
@click.argument("config_path", type=click.Path())
@click.argument("pattern_iri")
@click.option("--filter", "filter_expr", default="")
@click.option("--world", default="open", type=click.Choice(["open", "closed"]))
@click.option("--count", "count_only", is_flag=True)
@click.option("--offset", default=0, type=int)
@click.option("--limit", default=50, type=int)
def explore_cmd(config_path, pattern_iri, filter_expr, world, count_only, offset, limit):
    """Print the exploration table for one pattern."""
    ds = _single_dataset(config_path)
    if pattern_iri not in ds.schemas:
        raise DataError(f"unknown pattern {pattern_iri!r}")
    schema = ds.schemas[pattern_iri]
    try:
        filters = explore.parse_filter_expression(filter_expr, schema)
    except FilterParseError as exc:
        raise click.UsageError(str(exc))
    filter_set = FilterSet(filters, WorldAssumption(world))
    rows, total = explore.build_table(
        schema, ds.occurrences.get(pattern_iri, []), ds.data, filter_set, offset, limit
    )
    if count_only:
        click.echo(str(total))
        return
    header = " | ".join(c.name for c in schema.columns)
    click.echo(header)
    click.echo("-" * len(header))
    for row in rows:
        click.echo(" | ".join("" if c is None else str(c) for c in row.cells))
    click.echo(f"total: {total}")


@cli.command()
@click.argument("config_path", type=click.Path())
@click.option("--port", default=None, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui-dir", default=None, type=click.Path(file_okay=False))
def serve(config_path, port, host, ui_dir):
    """Load datasets and serve the JSON API until interrupted."""
    import uvicorn

    from .service import create_app

    datasets = _load_all(config_path)
    app = create_app(datasets, ui_dir=ui_dir)
    effective_port = port if port is not None else int(os.environ.get("PORT", "8080"))
    uvicorn.run(app, host=host, port=effective_port, log_level="warning")


def main():
    try:
        cli.main(standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(EXIT_USAGE)
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(exc.exit_code)
    except click.exceptions.Abort:
        sys.exit(EXIT_USAGE)


if __name__ == "__main__":
    main()
