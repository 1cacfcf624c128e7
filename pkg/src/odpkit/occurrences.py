"""Pattern occurrence detection, instance IRI minting, OPLa annotation
emission and annotation read-back."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from . import opla
from .bgp import (
    BasicGraphPattern,
    Solution,
    TriplePattern,
    Variable,
    extend_optional,
    is_member_candidate,
    match_bgp,
)
from .graph import Graph, GraphPart
from .terms import RDF_TYPE, Iri, Literal, Term, Triple, local_name


class EmptyMembers(Exception):
    pass


class MalformedAnnotation(Exception):
    def __init__(self, instance_iri: str, reason: str):
        super().__init__(f"{instance_iri}: {reason}")
        self.instance_iri = instance_iri
        self.reason = reason


class TemplateError(Exception):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass
class PatternTemplate:
    pattern_id: str
    anchor: Variable
    required: list[TriplePattern]
    optional: list[TriplePattern] = field(default_factory=list)
    member_vars: list[str] = field(default_factory=list)
    label: str = ""

    def __post_init__(self):
        if not self.label:
            self.label = local_name(self.pattern_id)
        if self.anchor.name not in self.member_vars:
            raise ValueError("anchor variable must be a member variable")
        required_vars = BasicGraphPattern(self.required).variables()
        if self.anchor.name not in required_vars:
            raise ValueError("anchor variable must occur in a required pattern")
        for tp in self.optional:
            opt_vars = {p.name for p in tp if isinstance(p, Variable)}
            if not (opt_vars & required_vars):
                # chained optionals may hang off earlier optional bindings
                required_vars |= opt_vars


@dataclass
class Occurrence:
    pattern_id: str
    instance_iri: str
    members: frozenset[Term]
    triples: frozenset[Triple]
    anchor: Term | None = None
    solutions: tuple[Solution, ...] = ()

    def sorted_members(self) -> list[Term]:
        return sorted(self.members, key=str)


def mint_instance_iri(pattern: str, members: frozenset[Term] | set[Term]) -> str:
    """Deterministic, order-insensitive instance IRI for (pattern, members)."""
    if not members:
        raise EmptyMembers("cannot mint an instance IRI for an empty member set")
    digest = hashlib.sha256(
        "\n".join(sorted(str(m) for m in members)).encode("utf-8")
    ).hexdigest()[:16]
    return f"urn:opla-instance:{local_name(pattern)}:{digest}"


def detect_occurrences(data: Graph, template: PatternTemplate) -> list[Occurrence]:
    """One occurrence per distinct anchor binding, aggregating all solutions
    that share the anchor.  Ordered by anchor."""
    bindings = match_bgp(data, BasicGraphPattern(list(template.required)))
    solutions = list(bindings.solutions)
    seen_vars = BasicGraphPattern(list(template.required)).variables()
    for tp in template.optional:
        tp_vars = {p.name for p in tp if isinstance(p, Variable)}
        solutions = extend_optional(data, solutions, tp, dependent_vars=tp_vars & seen_vars)
        seen_vars |= tp_vars

    groups: dict[Term, list[Solution]] = {}
    for sol in solutions:
        anchor = sol.get(template.anchor.name)
        if anchor is not None:
            groups.setdefault(anchor, []).append(sol)

    occurrences = []
    for anchor in sorted(groups, key=str):
        rows = groups[anchor]
        members: set[Term] = set()
        triples: set[Triple] = set()
        for sol in rows:
            for var in template.member_vars:
                term = sol.get(var)
                if term is not None and is_member_candidate(term):
                    members.add(term)
            for tp in template.required + template.optional:
                triple = _instantiate(tp, sol)
                if triple is not None and triple in data:
                    triples.add(triple)
        occurrences.append(
            Occurrence(
                pattern_id=template.pattern_id,
                instance_iri=mint_instance_iri(template.pattern_id, members),
                members=frozenset(members),
                triples=frozenset(triples),
                anchor=anchor,
                solutions=tuple(rows),
            )
        )
    return occurrences


def _instantiate(tp: TriplePattern, sol: Solution) -> Triple | None:
    terms = []
    for pos in tp:
        if isinstance(pos, Variable):
            term = sol.get(pos.name)
            if term is None:
                return None
            terms.append(term)
        else:
            terms.append(pos)
    if isinstance(terms[0], Literal) or not isinstance(terms[1], Iri):
        return None
    return Triple(*terms)


def annotate(occurrences: list[Occurrence]) -> Graph:
    """Extended-OPLa annotation triples: 2 + 2*|members| per occurrence."""
    graph = Graph(part=GraphPart.ANNOTATION)
    for occ in occurrences:
        instance = Iri(occ.instance_iri)
        graph.add(Triple(instance, Iri(RDF_TYPE), opla.PATTERN_INSTANCE))
        graph.add(Triple(instance, opla.IS_PATTERN_INSTANCE_OF, Iri(occ.pattern_id)))
        for member in occ.sorted_members():
            graph.add(Triple(member, opla.BELONGS_TO_PATTERN_INSTANCE, instance))
            graph.add(Triple(instance, opla.HAS_PATTERN_INSTANCE_MEMBER, member))
    return graph


def occurrences_of(data: Graph, annotations: Graph, pattern: str) -> list[Occurrence]:
    """Reconstruct occurrences purely from annotation triples.  The subgraph
    is the member-induced data subgraph (conservative superset of the
    original template match)."""
    occurrences = []
    for node in sorted(annotations.subjects(Iri(RDF_TYPE), opla.PATTERN_INSTANCE), key=str):
        pattern_iris = annotations.objects(node, opla.IS_PATTERN_INSTANCE_OF)
        if not pattern_iris:
            raise MalformedAnnotation(str(node), "missing opla:isPatternInstanceOf")
        members = annotations.objects(node, opla.HAS_PATTERN_INSTANCE_MEMBER)
        if not members:
            raise MalformedAnnotation(str(node), "instance has zero members")
        if Iri(pattern) not in pattern_iris:
            continue
        triples = {
            t
            for m in members
            for t in data.triples(subject=m)
            if t.object in members
        }
        instance_iri = node.value if isinstance(node, Iri) else str(node)
        occurrences.append(
            Occurrence(
                pattern_id=pattern,
                instance_iri=instance_iri,
                members=frozenset(members),
                triples=frozenset(triples),
                anchor=_infer_anchor(members, triples),
            )
        )
    return occurrences


def _infer_anchor(members: set[Term], triples: set[Triple]) -> Term | None:
    """The member that points at other members but is pointed at by none."""
    sources = {t.subject for t in triples}
    targets = {t.object for t in triples}
    roots = sorted((m for m in members if m in sources and m not in targets), key=str)
    if roots:
        return roots[0]
    return None


# --- template file parsing -------------------------------------------------

def parse_templates(text: str) -> list[PatternTemplate]:
    """Line-oriented template documents: PATTERN, LABEL, ANCHOR, REQUIRED,
    OPTIONAL, MEMBERS.  A new PATTERN line starts a new template."""
    templates: list[PatternTemplate] = []
    current: dict | None = None

    def flush(line_no: int) -> None:
        nonlocal current
        if current is None:
            return
        if current["anchor"] is None:
            raise TemplateError(line_no, f"template {current['pattern']} has no ANCHOR")
        if not current["required"]:
            raise TemplateError(line_no, f"template {current['pattern']} has no REQUIRED pattern")
        if not current["members"]:
            raise TemplateError(line_no, f"template {current['pattern']} has no MEMBERS")
        try:
            templates.append(
                PatternTemplate(
                    pattern_id=current["pattern"],
                    anchor=Variable(current["anchor"]),
                    required=current["required"],
                    optional=current["optional"],
                    member_vars=current["members"],
                    label=current["label"],
                )
            )
        except ValueError as exc:
            raise TemplateError(line_no, str(exc)) from exc
        current = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "PATTERN":
            flush(line_no)
            current = {
                "pattern": _parse_iri(rest, line_no),
                "label": "",
                "anchor": None,
                "required": [],
                "optional": [],
                "members": [],
            }
            continue
        if current is None:
            raise TemplateError(line_no, f"{keyword} before any PATTERN line")
        if keyword == "LABEL":
            current["label"] = rest
        elif keyword == "ANCHOR":
            current["anchor"] = _parse_var(rest, line_no)
        elif keyword in ("REQUIRED", "OPTIONAL"):
            current["required" if keyword == "REQUIRED" else "optional"].append(
                _parse_triple_pattern(rest, line_no)
            )
        elif keyword == "MEMBERS":
            current["members"] = [_parse_var(tok, line_no) for tok in rest.split()]
        else:
            raise TemplateError(line_no, f"unknown directive {keyword!r}")
    flush(len(text.splitlines()))
    return templates


def _parse_iri(token: str, line_no: int) -> str:
    if token.startswith("<") and token.endswith(">") and len(token) > 2:
        return token[1:-1]
    raise TemplateError(line_no, f"expected <iri>, got {token!r}")


def _parse_var(token: str, line_no: int) -> str:
    if token.startswith("?") and len(token) > 1:
        return token[1:]
    raise TemplateError(line_no, f"expected ?variable, got {token!r}")


def _parse_triple_pattern(rest: str, line_no: int) -> TriplePattern:
    tokens = rest.split()
    if len(tokens) != 3:
        raise TemplateError(line_no, f"expected 3 terms in triple pattern, got {len(tokens)}")
    out = []
    for token in tokens:
        if token.startswith("?"):
            out.append(Variable(_parse_var(token, line_no)))
        elif token == "a":
            out.append(Iri(RDF_TYPE))
        elif token.startswith("<"):
            out.append(Iri(_parse_iri(token, line_no)))
        elif token.startswith('"') and token.endswith('"') and len(token) >= 2:
            out.append(Literal(token[1:-1]))
        else:
            raise TemplateError(line_no, f"cannot parse term {token!r}")
    return tuple(out)  # type: ignore[return-value]
