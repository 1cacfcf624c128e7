"""ODP-level summary: degree-centrality key concepts and the summary graph."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import Graph
from .opla import PatternRegistry, pattern_relation_edges
from .terms import OWL, RDF_TYPE, RDFS, RDFS_LABEL, Iri, Literal, local_name

OWL_CLASS = Iri(OWL + "Class")
RDFS_CLASS = Iri(RDFS + "Class")


@dataclass
class KeyConcept:
    class_iri: str
    importance: int


@dataclass
class SummaryNode:
    id: str
    kind: str  # "Pattern" | "KeyConcept"
    label: str
    size: float
    occurrences: int | None = None


@dataclass
class SummaryGraph:
    nodes: list[SummaryNode] = field(default_factory=list)
    edges: list[tuple[str, str, str]] = field(default_factory=list)


def degree_centrality(ontology: Graph, class_iri: str) -> int:
    """Number of ontology triples in which the class appears as subject or
    object (a self-loop triple counts once)."""
    node = Iri(class_iri)
    return len(ontology.triples(subject=node) | ontology.triples(object=node))


def declared_classes(ontology: Graph, registry: PatternRegistry) -> set[str]:
    classes = {
        t.subject.value
        for cls in (OWL_CLASS, RDFS_CLASS)
        for t in ontology.triples(predicate=Iri(RDF_TYPE), object=cls)
        if isinstance(t.subject, Iri)
    }
    for descriptor in registry.patterns.values():
        classes |= descriptor.native_classes
    return classes


def key_concepts(ontology: Graph, registry: PatternRegistry, threshold: int) -> list[KeyConcept]:
    """Classes at or above the importance threshold, most important first."""
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    concepts = [
        KeyConcept(cls, degree_centrality(ontology, cls))
        for cls in declared_classes(ontology, registry)
    ]
    concepts = [k for k in concepts if k.importance >= threshold]
    concepts.sort(key=lambda k: (-k.importance, k.class_iri))
    return concepts


def node_size(occurrence_count: int) -> float:
    if occurrence_count < 0:
        raise ValueError("occurrence count must be non-negative")
    return math.log(occurrence_count + 1)


def _label(ontology: Graph, iri: str) -> str:
    value = ontology.value(Iri(iri), Iri(RDFS_LABEL))
    if isinstance(value, Literal):
        return value.lexical
    return local_name(iri)


def build_summary(
    ontology: Graph,
    registry: PatternRegistry,
    occurrence_counts: dict[str, int],
    threshold: int,
) -> SummaryGraph:
    """Patterns plus key concepts, with specialization and hasView edges.
    Pattern node sizes are ln(occurrences + 1); zero-occurrence patterns are
    kept so the schema-level structure stays visible."""
    summary = SummaryGraph()
    for pid in sorted(registry.patterns):
        count = occurrence_counts.get(pid, 0)
        summary.nodes.append(
            SummaryNode(
                id=pid,
                kind="Pattern",
                label=registry.patterns[pid].label,
                size=node_size(count),
                occurrences=count,
            )
        )
    concepts = key_concepts(ontology, registry, threshold)
    for concept in concepts:
        summary.nodes.append(
            SummaryNode(
                id=concept.class_iri,
                kind="KeyConcept",
                label=_label(ontology, concept.class_iri),
                size=float(concept.importance),
            )
        )
    summary.edges.extend(pattern_relation_edges(registry))
    concept_iris = [k.class_iri for k in concepts]
    for pid in sorted(registry.patterns):
        native = registry.patterns[pid].native_classes
        for cls in concept_iris:
            if cls in native:
                summary.edges.append((cls, "hasView", pid))
    return summary
