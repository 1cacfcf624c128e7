"""Dataset configuration and the single-writer loading phase.  A loaded
dataset is sealed and read-only; every service/CLI query runs against it."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import explore, frames, occurrences
from .graph import Graph, GraphPart, merge, skolemize
from .occurrences import Occurrence, PatternTemplate
from .opla import PatternRegistry, load_registry
from .parse import RdfSyntaxError, parse_document
from .terms import Iri, Term


class ConfigError(Exception):
    pass


@dataclass
class DatasetConfig:
    id: str
    ontology_files: list[str]
    data_files: list[str]
    template_file: str
    annotation_files: list[str] = field(default_factory=list)
    key_concept_threshold: int = 0

    @staticmethod
    def from_dict(raw: dict) -> "DatasetConfig":
        try:
            return DatasetConfig(
                id=raw["id"],
                ontology_files=list(raw.get("ontology_files", [])),
                data_files=list(raw.get("data_files", [])),
                template_file=raw["template_file"],
                annotation_files=list(raw.get("annotation_files", [])),
                key_concept_threshold=int(raw.get("key_concept_threshold", 0)),
            )
        except KeyError as exc:
            raise ConfigError(f"dataset config missing key {exc}")


def load_config(path: str | Path) -> list[DatasetConfig]:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid config JSON in {path}: {exc}")
    entries = raw.get("datasets", [])
    configs = [DatasetConfig.from_dict(e) for e in entries]
    ids = [c.id for c in configs]
    if len(ids) != len(set(ids)):
        raise ConfigError("dataset ids must be unique")
    return configs


@dataclass
class LoadReport:
    ontology_triples: int = 0
    data_triples: int = 0
    annotation_triples: int = 0
    warnings: list[str] = field(default_factory=list)


def _load_part(paths: list[str], part: GraphPart) -> Graph:
    graphs = []
    for path_str in paths:
        path = Path(path_str)
        if not path.exists():
            raise ConfigError(f"file not found: {path}")
        fmt = "turtle" if path.suffix == ".ttl" else "ntriples"
        parsed = parse_document(path.read_text(encoding="utf-8"), format=fmt)
        graphs.append(skolemize(parsed, path.name))
    return merge(part, graphs)


class Dataset:
    """Sealed graphs plus registry, templates, detected occurrences and
    derived indexes for one configured knowledge graph."""

    def __init__(self, config: DatasetConfig):
        self.config = config
        self.report = LoadReport()

        self.ontology = _load_part(config.ontology_files, GraphPart.ONTOLOGY)
        self.data = _load_part(config.data_files, GraphPart.DATA)
        self.report.ontology_triples = len(self.ontology)
        self.report.data_triples = len(self.data)

        self.registry: PatternRegistry = load_registry(self.ontology)

        template_path = Path(config.template_file)
        if not template_path.exists():
            raise ConfigError(f"template file not found: {template_path}")
        self.templates: list[PatternTemplate] = occurrences.parse_templates(
            template_path.read_text(encoding="utf-8")
        )

        self.occurrences: dict[str, list[Occurrence]] = {}
        for template in self.templates:
            self.occurrences[template.pattern_id] = occurrences.detect_occurrences(self.data, template)

        if config.annotation_files:
            self.annotations = _load_part(config.annotation_files, GraphPart.ANNOTATION)
        else:
            self.annotations = occurrences.annotate(
                [occ for occs in self.occurrences.values() for occ in occs]
            )
        self.report.annotation_triples = len(self.annotations)

        self.instance_index: dict[str, Occurrence] = {
            occ.instance_iri: occ for occs in self.occurrences.values() for occ in occs
        }
        self.schemas: dict[str, explore.TableSchema] = {}
        for template in self.templates:
            try:
                self.schemas[template.pattern_id] = explore.table_schema(
                    template.pattern_id, self.registry
                )
            except Exception:
                self.report.warnings.append(
                    f"no built-in table schema for pattern {template.pattern_id}"
                )

        for graph in (self.ontology, self.data, self.annotations):
            graph.seal()

    @property
    def occurrence_counts(self) -> dict[str, int]:
        counts = {pid: 0 for pid in self.registry.patterns}
        for pid, occs in self.occurrences.items():
            counts[pid] = len(occs)
        return counts

    def resource_view(self, resource: Term) -> frames.ResourceView:
        return frames.mosaic(resource, self.data, self.annotations, self.instance_index, self.registry)


def load_datasets(configs: list[DatasetConfig]) -> dict[str, Dataset]:
    return {config.id: Dataset(config) for config in configs}
