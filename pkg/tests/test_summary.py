import math

from odpkit.graph import Graph
from odpkit.opla import IS_NATIVE_TO, SPECIALIZATION_OF_PATTERN, load_registry
from odpkit.summary import (
    OWL_CLASS,
    build_summary,
    declared_classes,
    degree_centrality,
    key_concepts,
    node_size,
)
from odpkit.terms import RDF_TYPE, RDFS_LABEL, Iri, Literal, Triple

EX = "http://e/"
ODP = "http://patterns.org/"


def iri(name):
    return Iri(EX + name)


def ontology():
    g = Graph()
    g.add(Triple(iri("A"), Iri(RDF_TYPE), OWL_CLASS))
    g.add(Triple(iri("B"), Iri(RDF_TYPE), OWL_CLASS))
    g.add(Triple(iri("A"), iri("rel"), iri("B")))
    g.add(Triple(iri("A"), iri("rel2"), iri("C")))
    g.add(Triple(iri("C"), iri("rel3"), iri("A")))
    g.add(Triple(iri("A"), Iri(RDFS_LABEL), Literal("Class A")))
    g.add(Triple(iri("A"), IS_NATIVE_TO, Iri(ODP + "P1")))
    g.add(Triple(iri("B"), IS_NATIVE_TO, Iri(ODP + "P2")))
    g.add(Triple(Iri(ODP + "P1"), SPECIALIZATION_OF_PATTERN, Iri(ODP + "P2")))
    return g


def test_degree_counts_subject_and_object_triples():
    g = ontology()
    # A: 5 subject triples + 1 object triple (C rel3 A)
    assert degree_centrality(g, EX + "A") == 6
    assert degree_centrality(g, EX + "B") == 3
    assert degree_centrality(g, EX + "missing") == 0


def test_declared_classes_include_native():
    g = ontology()
    assert {EX + "A", EX + "B"} <= declared_classes(g, load_registry(g))


def test_key_concepts_threshold_and_order():
    g = ontology()
    registry = load_registry(g)
    high = key_concepts(g, registry, threshold=6)
    assert [(k.class_iri, k.importance) for k in high] == [(EX + "A", 6)]
    both = key_concepts(g, registry, threshold=3)
    assert [k.class_iri for k in both] == [EX + "A", EX + "B"]
    assert key_concepts(g, registry, threshold=99) == []


def test_node_size_is_log_count_plus_one():
    assert node_size(0) == 0.0
    assert abs(node_size(49) - math.log(50)) < 1e-12


def test_build_summary_structure():
    g = ontology()
    registry = load_registry(g)
    s = build_summary(g, registry, {ODP + "P1": 49}, threshold=6)
    nodes = {n.id: n for n in s.nodes}
    assert nodes[ODP + "P1"].kind == "Pattern"
    assert nodes[ODP + "P1"].occurrences == 49
    assert abs(nodes[ODP + "P1"].size - math.log(50)) < 1e-12
    assert nodes[ODP + "P2"].occurrences == 0
    assert nodes[EX + "A"].kind == "KeyConcept"
    assert nodes[EX + "A"].size == 6.0
    assert nodes[EX + "A"].label == "Class A"
    assert (ODP + "P1", "specializes", ODP + "P2") in s.edges
    assert (EX + "A", "hasView", ODP + "P1") in s.edges
    assert not any(e[1] == "hasView" and e[0] == EX + "B" for e in s.edges)


def test_raising_threshold_only_removes_nodes():
    g = ontology()
    registry = load_registry(g)
    low = build_summary(g, registry, {}, threshold=3)
    high = build_summary(g, registry, {}, threshold=6)
    low_ids = {n.id for n in low.nodes}
    high_ids = {n.id for n in high.nodes}
    assert high_ids <= low_ids
    assert set(high.edges) <= set(low.edges)
