"""Indexed in-memory triple storage with set semantics."""
from __future__ import annotations

from collections import defaultdict
from enum import Enum
from typing import Iterable, Iterator

from .terms import BlankNode, Iri, Literal, Term, Triple, SKOLEM_PREFIX


class GraphPart(Enum):
    ONTOLOGY = "ontology"
    DATA = "data"
    ANNOTATION = "annotation"


class SealedGraphError(Exception):
    pass


class Graph:
    """A set of triples with subject-first, predicate-first and object-first
    indexes.  Built in a single-writer phase, then sealed and shared."""

    def __init__(self, part: GraphPart | None = None, triples: Iterable[Triple] = ()):
        self.part = part
        self._triples: set[Triple] = set()
        self._by_s: dict[Term, set[Triple]] = defaultdict(set)
        self._by_p: dict[Term, set[Triple]] = defaultdict(set)
        self._by_o: dict[Term, set[Triple]] = defaultdict(set)
        self._sealed = False
        for t in triples:
            self.add(t)

    def add(self, triple: Triple) -> None:
        if self._sealed:
            raise SealedGraphError("cannot add to a sealed graph")
        if triple in self._triples:
            return
        self._triples.add(triple)
        self._by_s[triple.subject].add(triple)
        self._by_p[triple.predicate].add(triple)
        self._by_o[triple.object].add(triple)

    def update(self, triples: Iterable[Triple]) -> None:
        for t in triples:
            self.add(t)

    def seal(self) -> "Graph":
        self._sealed = True
        return self

    @property
    def sealed(self) -> bool:
        return self._sealed

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def triples(
        self,
        subject: Term | None = None,
        predicate: Term | None = None,
        object: Term | None = None,
    ) -> set[Triple]:
        """All triples matching the given bound positions (None = wildcard).
        The smallest applicable index drives the scan."""
        candidates: set[Triple] | None = None
        if subject is not None:
            candidates = self._by_s.get(subject, set())
        if predicate is not None:
            bucket = self._by_p.get(predicate, set())
            candidates = bucket if candidates is None else (candidates & bucket if len(bucket) < len(candidates) else candidates)
        if object is not None:
            bucket = self._by_o.get(object, set())
            candidates = bucket if candidates is None else (candidates & bucket if len(bucket) < len(candidates) else candidates)
        if candidates is None:
            candidates = self._triples
        return {
            t
            for t in candidates
            if (subject is None or t.subject == subject)
            and (predicate is None or t.predicate == predicate)
            and (object is None or t.object == object)
        }

    def subjects(self, predicate: Term | None = None, object: Term | None = None) -> set[Term]:
        return {t.subject for t in self.triples(predicate=predicate, object=object)}

    def objects(self, subject: Term | None = None, predicate: Term | None = None) -> set[Term]:
        return {t.object for t in self.triples(subject=subject, predicate=predicate)}

    def value(self, subject: Term, predicate: Term) -> Term | None:
        """One object of (subject, predicate), deterministic on ties."""
        objs = self.objects(subject=subject, predicate=predicate)
        if not objs:
            return None
        return min(objs, key=str)


def neighborhood(graph: Graph, node: Term) -> set[Triple]:
    """All triples with the node in subject position."""
    return graph.triples(subject=node)


def skolemize(graph: Graph, doc_id: str) -> Graph:
    """Replace blank nodes with stable IRIs scoped by document id, so
    occurrences and annotations can reference them across runs."""
    def conv(term: Term) -> Term:
        if isinstance(term, BlankNode):
            return Iri(f"{SKOLEM_PREFIX}{doc_id}:{term.label}")
        return term

    out = Graph(part=graph.part)
    for t in graph:
        out.add(Triple(conv(t.subject), t.predicate, conv(t.object)))
    return out


def merge(part: GraphPart | None, graphs: Iterable[Graph]) -> Graph:
    out = Graph(part=part)
    for g in graphs:
        out.update(g)
    return out
