"""OPLa vocabulary, pattern registry and TBox implementation extraction."""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .terms import (
    RDFS_LABEL,
    BlankNode,
    Iri,
    Literal,
    Term,
    Triple,
    is_skolem,
    local_name,
)

OPLA = "http://ontologydesignpatterns.org/opla/"

IS_NATIVE_TO = Iri(OPLA + "isNativeTo")
SPECIALIZATION_OF_PATTERN = Iri(OPLA + "specializationOfPattern")
PATTERN = Iri(OPLA + "Pattern")
PATTERN_INSTANCE = Iri(OPLA + "PatternInstance")
IS_PATTERN_INSTANCE_OF = Iri(OPLA + "isPatternInstanceOf")
BELONGS_TO_PATTERN_INSTANCE = Iri(OPLA + "belongsToPatternInstance")
HAS_PATTERN_INSTANCE_MEMBER = Iri(OPLA + "hasPatternInstanceMember")

AXIOM_CLOSURE_DEPTH = 3


class CyclicSpecialization(Exception):
    def __init__(self, cycle: list[str]):
        super().__init__("cyclic pattern specialization: " + " -> ".join(cycle))
        self.cycle = cycle


class UnknownPattern(Exception):
    def __init__(self, iri: str):
        super().__init__(f"unknown pattern {iri}")
        self.iri = iri


@dataclass
class PatternDescriptor:
    id: str
    label: str
    native_classes: set[str] = field(default_factory=set)
    specializes: set[str] = field(default_factory=set)


@dataclass
class PatternRegistry:
    patterns: dict[str, PatternDescriptor] = field(default_factory=dict)

    def __contains__(self, iri: str) -> bool:
        return iri in self.patterns

    def __len__(self) -> int:
        return len(self.patterns)

    def get(self, iri: str) -> PatternDescriptor:
        if iri not in self.patterns:
            raise UnknownPattern(iri)
        return self.patterns[iri]


@dataclass
class PatternImplementation:
    pattern_id: str
    subgraph: Graph


def _label_for(ontology: Graph, iri: str) -> str:
    lbl = ontology.value(Iri(iri), Iri(RDFS_LABEL))
    if isinstance(lbl, Literal):
        return lbl.lexical
    return local_name(iri)


def load_registry(ontology: Graph) -> PatternRegistry:
    """Build the registry from opla:isNativeTo and
    opla:specializationOfPattern triples of the ontology part.  Dangling
    specialization targets become stub descriptors."""
    registry = PatternRegistry()

    def ensure(iri: str) -> PatternDescriptor:
        if iri not in registry.patterns:
            registry.patterns[iri] = PatternDescriptor(iri, _label_for(ontology, iri))
        return registry.patterns[iri]

    for t in ontology.triples(predicate=IS_NATIVE_TO):
        if isinstance(t.object, Iri) and isinstance(t.subject, Iri):
            ensure(t.object.value).native_classes.add(t.subject.value)
    for t in ontology.triples(predicate=SPECIALIZATION_OF_PATTERN):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
            ensure(t.subject.value).specializes.add(t.object.value)
            ensure(t.object.value)

    _check_acyclic(registry)
    return registry


def _check_acyclic(registry: PatternRegistry) -> None:
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[str, int] = {pid: 0 for pid in registry.patterns}

    def visit(node: str, path: list[str]) -> None:
        color[node] = GRAY
        path.append(node)
        for target in sorted(registry.patterns[node].specializes):
            if target not in color:
                continue
            if color[target] == GRAY:
                cycle = path[path.index(target):] + [target]
                raise CyclicSpecialization(cycle)
            if color[target] == WHITE:
                visit(target, path)
        path.pop()
        color[node] = BLACK

    for pid in sorted(color):
        if color[pid] == WHITE:
            visit(pid, [])


def implementation_of(registry: PatternRegistry, ontology: Graph, pattern: str) -> PatternImplementation:
    """TBox subgraph of a pattern: all ontology triples whose subject is a
    native class, plus blank-node/skolem axiom structures reachable from a
    native class up to a fixed depth."""
    descriptor = registry.get(pattern)
    subgraph = Graph(part=ontology.part)
    frontier: set[Term] = {Iri(c) for c in descriptor.native_classes}
    for _ in range(AXIOM_CLOSURE_DEPTH + 1):
        next_frontier: set[Term] = set()
        for node in frontier:
            for t in ontology.triples(subject=node):
                if t not in subgraph:
                    subgraph.add(t)
                    if isinstance(t.object, BlankNode) or is_skolem(t.object):
                        next_frontier.add(t.object)
        frontier = next_frontier
        if not frontier:
            break
    return PatternImplementation(pattern, subgraph)


def pattern_relation_edges(registry: PatternRegistry) -> list[tuple[str, str, str]]:
    """Direct specialization edges only; no transitive closure."""
    edges = []
    for pid in sorted(registry.patterns):
        for target in sorted(registry.patterns[pid].specializes):
            edges.append((pid, "specializes", target))
    return edges
