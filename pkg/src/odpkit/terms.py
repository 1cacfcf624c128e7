"""RDF term model: IRIs, blank nodes, literals and triples."""
from __future__ import annotations

from dataclasses import dataclass, field

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
XSD = "http://www.w3.org/2001/XMLSchema#"
FOAF = "http://xmlns.com/foaf/0.1/"

RDF_TYPE = RDF + "type"
RDF_LANGSTRING = RDF + "langString"
RDFS_LABEL = RDFS + "label"
XSD_STRING = XSD + "string"
FOAF_DEPICTION = FOAF + "depiction"

SKOLEM_PREFIX = "urn:skolem:"


@dataclass(frozen=True, slots=True)
class Iri:
    value: str

    def __post_init__(self):
        if ":" not in self.value:
            raise ValueError(f"not an absolute IRI: {self.value!r}")

    def __str__(self):
        return f"<{self.value}>"


@dataclass(frozen=True, slots=True)
class BlankNode:
    label: str

    def __str__(self):
        return f"_:{self.label}"


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: str = ""
    language: str | None = None

    def __post_init__(self):
        # language-tagged literals are rdf:langString; plain ones xsd:string
        if self.language:
            object.__setattr__(self, "datatype", RDF_LANGSTRING)
        elif not self.datatype:
            object.__setattr__(self, "datatype", XSD_STRING)

    def __str__(self):
        out = '"' + escape_literal(self.lexical) + '"'
        if self.language:
            return out + "@" + self.language
        if self.datatype != XSD_STRING:
            return out + "^^<" + self.datatype + ">"
        return out


Term = Iri | BlankNode | Literal


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise ValueError("triple subject cannot be a literal")
        if not isinstance(self.predicate, Iri):
            raise ValueError("triple predicate must be an IRI")

    def __str__(self):
        return f"{self.subject} {self.predicate} {self.object} ."


def escape_literal(text: str) -> str:
    return (
        text.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace("\t", "\\t")
    )


def local_name(iri: str) -> str:
    """Last path segment of an IRI, used as a human-readable fallback."""
    for sep in ("#", "/", ":"):
        idx = iri.rfind(sep)
        if 0 <= idx < len(iri) - 1:
            return iri[idx + 1 :]
    return iri


def is_skolem(term: Term) -> bool:
    return isinstance(term, Iri) and term.value.startswith(SKOLEM_PREFIX)
