import random
import string

import pytest

from odpkit.graph import Graph
from odpkit.parse import RdfSyntaxError, parse_document, serialize_graph
from odpkit.terms import BlankNode, Iri, Literal, Triple, XSD


def test_single_ntriples_statement():
    g = parse_document("<http://e/a> <http://e/b> <http://e/c> .", "ntriples")
    assert set(g) == {Triple(Iri("http://e/a"), Iri("http://e/b"), Iri("http://e/c"))}


def test_empty_document():
    assert len(parse_document("", "ntriples")) == 0
    assert len(parse_document("# only a comment\n", "turtle")) == 0


def test_turtle_prefix_expansion():
    g = parse_document("@prefix ex: <http://e/> . ex:a ex:b ex:c .", "turtle")
    assert set(g) == {Triple(Iri("http://e/a"), Iri("http://e/b"), Iri("http://e/c"))}


def test_turtle_predicate_and_object_lists():
    text = """
    @prefix ex: <http://e/> .
    ex:s ex:p ex:o1, ex:o2 ;
         a ex:Thing ;
         ex:q "v"@en, "3.2"^^ex:num .
    """
    g = parse_document(text, "turtle")
    assert len(g) == 5
    assert Triple(Iri("http://e/s"), Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"), Iri("http://e/Thing")) in g
    assert Triple(Iri("http://e/s"), Iri("http://e/q"), Literal("v", language="en")) in g
    assert Triple(Iri("http://e/s"), Iri("http://e/q"), Literal("3.2", datatype="http://e/num")) in g


def test_turtle_blank_node_labels():
    g = parse_document("@prefix ex: <http://e/> . _:b1 ex:p _:b2 .", "turtle")
    (t,) = g
    assert t.subject == BlankNode("b1")
    assert t.object == BlankNode("b2")


def test_escapes_round_trip_through_lexer():
    g = parse_document(r'<http://e/a> <http://e/b> "line\nbreak\t\"quoted\" \\ é" .', "ntriples")
    (t,) = g
    assert t.object == Literal('line\nbreak\t"quoted" \\ é')


def test_syntax_error_has_position():
    with pytest.raises(RdfSyntaxError) as err:
        parse_document("<http://e/a> <http://e/b> .", "ntriples")
    assert err.value.line == 1
    assert err.value.column > 0


def test_relative_iri_without_base_rejected():
    with pytest.raises(RdfSyntaxError):
        parse_document("<a> <http://e/b> <http://e/c> .", "ntriples")


def test_relative_iri_with_base():
    g = parse_document("<a> <http://e/b> <http://e/c> .", "ntriples", base="http://base.org")
    (t,) = g
    assert t.subject == Iri("http://base.org/a")


def test_ntriples_rejects_turtle_features():
    with pytest.raises(RdfSyntaxError):
        parse_document("@prefix ex: <http://e/> .", "ntriples")
    with pytest.raises(RdfSyntaxError):
        parse_document("<http://e/s> a <http://e/C> .", "ntriples")


def test_undefined_prefix():
    with pytest.raises(RdfSyntaxError):
        parse_document("ex:a ex:b ex:c .", "turtle")


def test_serialize_empty_and_single():
    assert serialize_graph(Graph()) == ""
    g = Graph()
    g.add(Triple(Iri("http://e/a"), Iri("http://e/b"), Literal("x")))
    out = serialize_graph(g)
    assert out.rstrip("\n").endswith(" .")
    assert len(out.splitlines()) == 1


def random_graph(rng: random.Random, n_triples: int) -> Graph:
    nasty = ['plain', 'with "quotes"', "tab\there", "line\nbreak", "back\\slash", "unicode é中"]
    def iri():
        return Iri("http://ex.org/" + "".join(rng.choices(string.ascii_letters + string.digits, k=6)))
    def term():
        roll = rng.random()
        if roll < 0.5:
            return iri()
        if roll < 0.6:
            return BlankNode("b" + str(rng.randint(0, 20)))
        lex = rng.choice(nasty)
        if rng.random() < 0.3:
            return Literal(lex, language=rng.choice(["en", "it", "de-AT"]))
        if rng.random() < 0.5:
            return Literal(lex, datatype=XSD + rng.choice(["integer", "decimal", "gYear"]))
        return Literal(lex)
    g = Graph()
    while len(g) < n_triples:
        subject = iri() if rng.random() < 0.8 else BlankNode("s" + str(rng.randint(0, 9)))
        g.add(Triple(subject, iri(), term()))
    return g


def test_round_trip_random_graphs():
    rng = random.Random(7)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 50))
        assert set(parse_document(serialize_graph(g), "ntriples")) == set(g)


def test_serializer_output_is_sorted_and_stable():
    rng = random.Random(3)
    g = random_graph(rng, 40)
    assert serialize_graph(g) == serialize_graph(Graph(triples=set(g)))
