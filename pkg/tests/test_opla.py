import pytest

from odpkit.graph import Graph
from odpkit.opla import (
    IS_NATIVE_TO,
    SPECIALIZATION_OF_PATTERN,
    CyclicSpecialization,
    UnknownPattern,
    implementation_of,
    load_registry,
    pattern_relation_edges,
)
from odpkit.terms import RDF_TYPE, RDFS_LABEL, BlankNode, Iri, Literal, Triple

ODP = "http://ontologydesignpatterns.org/cp/"
EX = "http://e/"


def ontology_graph():
    g = Graph()
    g.add(Triple(Iri(EX + "Whole"), IS_NATIVE_TO, Iri(ODP + "PartOf")))
    g.add(Triple(Iri(EX + "Part"), IS_NATIVE_TO, Iri(ODP + "PartOf")))
    g.add(Triple(Iri(EX + "Component"), IS_NATIVE_TO, Iri(ODP + "ComponentOf")))
    g.add(Triple(Iri(ODP + "ComponentOf"), SPECIALIZATION_OF_PATTERN, Iri(ODP + "PartOf")))
    g.add(Triple(Iri(ODP + "PartOf"), Iri(RDFS_LABEL), Literal("Part Of")))
    return g


def test_registry_from_native_and_specialization():
    registry = load_registry(ontology_graph())
    assert set(registry.patterns) == {ODP + "PartOf", ODP + "ComponentOf"}
    part_of = registry.get(ODP + "PartOf")
    assert part_of.native_classes == {EX + "Whole", EX + "Part"}
    assert part_of.label == "Part Of"
    component = registry.get(ODP + "ComponentOf")
    assert component.specializes == {ODP + "PartOf"}
    assert component.label == "ComponentOf"


def test_specialization_target_gets_stub_descriptor():
    g = Graph()
    g.add(Triple(Iri(EX + "A"), SPECIALIZATION_OF_PATTERN, Iri(EX + "B")))
    registry = load_registry(g)
    assert set(registry.patterns) == {EX + "A", EX + "B"}
    assert registry.get(EX + "B").native_classes == set()


def test_cycle_detection():
    g = Graph()
    g.add(Triple(Iri(EX + "A"), SPECIALIZATION_OF_PATTERN, Iri(EX + "B")))
    g.add(Triple(Iri(EX + "B"), SPECIALIZATION_OF_PATTERN, Iri(EX + "C")))
    g.add(Triple(Iri(EX + "C"), SPECIALIZATION_OF_PATTERN, Iri(EX + "A")))
    with pytest.raises(CyclicSpecialization):
        load_registry(g)


def test_unknown_pattern_lookup():
    registry = load_registry(ontology_graph())
    with pytest.raises(UnknownPattern):
        registry.get(EX + "nope")


def test_relation_edges():
    edges = pattern_relation_edges(load_registry(ontology_graph()))
    assert (ODP + "ComponentOf", "specializes", ODP + "PartOf") in edges


def test_implementation_subject_filter_oracle():
    g = ontology_graph()
    g.add(Triple(Iri(EX + "Whole"), Iri(RDF_TYPE), Iri("http://www.w3.org/2002/07/owl#Class")))
    g.add(Triple(Iri(EX + "Unrelated"), Iri(RDFS_LABEL), Literal("x")))
    registry = load_registry(g)
    impl = implementation_of(registry, g, ODP + "PartOf")
    natives = registry.get(ODP + "PartOf").native_classes
    expected = {t for t in g if isinstance(t.subject, Iri) and t.subject.value in natives}
    assert set(impl.subgraph) == expected


def test_implementation_follows_blank_axioms_to_depth():
    g = ontology_graph()
    chain = [Iri(EX + "Whole"), BlankNode("b1"), BlankNode("b2"), BlankNode("b3"), BlankNode("b4"), BlankNode("b5")]
    for i in range(len(chain) - 1):
        g.add(Triple(chain[i], Iri(EX + "axiom"), chain[i + 1]))
    impl = implementation_of(load_registry(g), g, ODP + "PartOf")
    # depth 3: triples from Whole, b1, b2, b3 are in; b4's outgoing triple is not
    assert Triple(chain[3], Iri(EX + "axiom"), chain[4]) in impl.subgraph
    assert Triple(chain[4], Iri(EX + "axiom"), chain[5]) not in impl.subgraph


def test_implementation_not_transitive_over_specialization():
    g = ontology_graph()
    impl = implementation_of(load_registry(g), g, ODP + "ComponentOf")
    subjects = {t.subject for t in impl.subgraph}
    assert subjects == {Iri(EX + "Component")}


def test_implementation_idempotent():
    g = ontology_graph()
    registry = load_registry(g)
    first = set(implementation_of(registry, g, ODP + "PartOf").subgraph)
    second = set(implementation_of(registry, g, ODP + "PartOf").subgraph)
    assert first == second
