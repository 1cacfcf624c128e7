import itertools
import random

from odpkit.bgp import BasicGraphPattern, Variable, extend_optional, match_bgp
from odpkit.graph import Graph
from odpkit.terms import Iri, Literal, Triple

EX = "http://e/"


def iri(name):
    return Iri(EX + name)


def tp(s, p, o):
    return (s, p, o)


def test_single_pattern_match():
    g = Graph(triples=[
        Triple(iri("a"), iri("p"), iri("b")),
        Triple(iri("a"), iri("p"), iri("c")),
        Triple(iri("a"), iri("q"), iri("d")),
    ])
    result = match_bgp(g, BasicGraphPattern([tp(Variable("s"), iri("p"), Variable("o"))]))
    assert {(sol["s"], sol["o"]) for sol in result} == {(iri("a"), iri("b")), (iri("a"), iri("c"))}


def test_join_on_shared_variable():
    g = Graph(triples=[
        Triple(iri("a"), iri("p"), iri("b")),
        Triple(iri("b"), iri("q"), iri("c")),
        Triple(iri("b"), iri("q"), iri("d")),
        Triple(iri("x"), iri("q"), iri("y")),
    ])
    result = match_bgp(g, BasicGraphPattern([
        tp(Variable("s"), iri("p"), Variable("m")),
        tp(Variable("m"), iri("q"), Variable("o")),
    ]))
    assert {(sol["s"], sol["m"], sol["o"]) for sol in result} == {
        (iri("a"), iri("b"), iri("c")),
        (iri("a"), iri("b"), iri("d")),
    }


def test_repeated_variable_in_one_pattern():
    g = Graph(triples=[
        Triple(iri("a"), iri("p"), iri("a")),
        Triple(iri("a"), iri("p"), iri("b")),
    ])
    result = match_bgp(g, BasicGraphPattern([tp(Variable("x"), iri("p"), Variable("x"))]))
    assert [sol["x"] for sol in result] == [iri("a")]


def test_no_match_yields_empty():
    g = Graph(triples=[Triple(iri("a"), iri("p"), iri("b"))])
    result = match_bgp(g, BasicGraphPattern([tp(Variable("s"), iri("zzz"), Variable("o"))]))
    assert len(result) == 0


def test_optional_keeps_unmatched_rows():
    g = Graph(triples=[
        Triple(iri("a"), iri("p"), iri("b")),
        Triple(iri("c"), iri("p"), iri("d")),
        Triple(iri("b"), iri("label"), Literal("B")),
    ])
    base = match_bgp(g, BasicGraphPattern([tp(Variable("s"), iri("p"), Variable("o"))]))
    extended = extend_optional(g, list(base), tp(Variable("o"), iri("label"), Variable("l")))
    by_subject = {sol["s"]: sol for sol in extended}
    assert by_subject[iri("a")]["l"] == Literal("B")
    assert "l" not in by_subject[iri("c")]


def test_optional_with_unbound_dependent_var_passes_through():
    g = Graph(triples=[
        Triple(iri("a"), iri("p"), iri("b")),
        Triple(iri("x"), iri("start"), Literal("1900")),
    ])
    base = match_bgp(g, BasicGraphPattern([tp(Variable("s"), iri("p"), Variable("o"))]))
    sols = extend_optional(g, list(base), tp(Variable("t"), iri("has"), Variable("u")))
    # ?t was introduced by an earlier optional that never matched: the row
    # must survive untouched instead of joining against the whole graph.
    sols = extend_optional(g, sols, tp(Variable("t"), iri("start"), Variable("v")),
                           dependent_vars={"t"})
    assert len(sols) == 1
    assert "v" not in sols[0]


def brute_force(graph, patterns):
    """Enumerate all triple assignments and keep consistent ones."""
    triples = sorted(graph, key=str)
    solutions = set()
    for combo in itertools.product(triples, repeat=len(patterns)):
        binding = {}
        ok = True
        for pattern, triple in zip(patterns, combo):
            for part, term in zip(pattern, (triple.subject, triple.predicate, triple.object)):
                if isinstance(part, Variable):
                    if part.name in binding and binding[part.name] != term:
                        ok = False
                        break
                    binding[part.name] = term
                elif part != term:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            solutions.add(tuple(sorted(binding.items())))
    return solutions


def random_setup(rng):
    iris = [iri(f"n{i}") for i in range(rng.randint(2, 6))]
    preds = [iri(f"p{i}") for i in range(rng.randint(1, 3))]
    g = Graph()
    for _ in range(rng.randint(1, 30)):
        g.add(Triple(rng.choice(iris), rng.choice(preds), rng.choice(iris)))
    variables = [Variable(v) for v in "xyz"]
    patterns = []
    for _ in range(rng.randint(1, 3)):
        def part(pool):
            return rng.choice(variables) if rng.random() < 0.6 else rng.choice(pool)
        patterns.append(tp(part(iris), part(preds), part(iris)))
    return g, patterns


def test_matcher_agrees_with_brute_force_on_random_graphs():
    rng = random.Random(11)
    for _ in range(200):
        g, patterns = random_setup(rng)
        result = match_bgp(g, BasicGraphPattern(patterns))
        got = {tuple(sorted(sol.items())) for sol in result}
        assert got == brute_force(g, patterns)


def test_results_are_deterministically_ordered():
    rng = random.Random(5)
    g, patterns = random_setup(rng)
    first = [tuple(sorted(sol.items())) for sol in match_bgp(g, BasicGraphPattern(patterns))]
    second = [tuple(sorted(sol.items())) for sol in match_bgp(g, BasicGraphPattern(patterns))]
    assert first == second
