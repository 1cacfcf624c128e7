"""Basic graph pattern matching over indexed graphs."""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .terms import Literal, Term, Triple


@dataclass(frozen=True, slots=True)
class Variable:
    name: str

    def __str__(self):
        return "?" + self.name


Pattern = Term | Variable
TriplePattern = tuple[Pattern, Pattern, Pattern]
Solution = dict[str, Term]


@dataclass
class BasicGraphPattern:
    patterns: list[TriplePattern]
    group_by: Variable | None = None

    def __post_init__(self):
        if self.group_by is not None and self.group_by.name not in self.variables():
            raise ValueError(f"group-by variable {self.group_by} not used in any pattern")

    def variables(self) -> set[str]:
        return {
            pos.name
            for tp in self.patterns
            for pos in tp
            if isinstance(pos, Variable)
        }


@dataclass
class BindingSet:
    variables: tuple[str, ...]
    solutions: list[Solution] = field(default_factory=list)

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def grouped(self, var: Variable) -> dict[Term, list[Solution]]:
        groups: dict[Term, list[Solution]] = {}
        for sol in self.solutions:
            anchor = sol.get(var.name)
            if anchor is None:
                continue
            groups.setdefault(anchor, []).append(sol)
        return groups


def _bind(tp: TriplePattern, sol: Solution) -> TriplePattern:
    out = []
    for pos in tp:
        if isinstance(pos, Variable) and pos.name in sol:
            out.append(sol[pos.name])
        else:
            out.append(pos)
    return tuple(out)  # type: ignore[return-value]


def _candidates(graph: Graph, tp: TriplePattern) -> set[Triple]:
    s, p, o = tp
    return graph.triples(
        subject=None if isinstance(s, Variable) else s,
        predicate=None if isinstance(p, Variable) else p,
        object=None if isinstance(o, Variable) else o,
    )


def _extend(sol: Solution, tp: TriplePattern, triple: Triple) -> Solution | None:
    out = dict(sol)
    for pos, term in zip(tp, (triple.subject, triple.predicate, triple.object)):
        if isinstance(pos, Variable):
            bound = out.get(pos.name)
            if bound is None:
                out[pos.name] = term
            elif bound != term:
                return None
        elif pos != term:
            return None
    return out


def match_bgp(graph: Graph, pattern: BasicGraphPattern) -> BindingSet:
    """Conjunctive matching with join on shared variables.  Solutions are
    deduplicated after projection to the pattern's variables."""
    variables = tuple(sorted(pattern.variables()))
    solutions: list[Solution] = [{}]
    for tp in pattern.patterns:
        next_solutions: list[Solution] = []
        for sol in solutions:
            for triple in _candidates(graph, _bind(tp, sol)):
                extended = _extend(sol, tp, triple)
                if extended is not None:
                    next_solutions.append(extended)
        solutions = next_solutions
        if not solutions:
            break
    seen = set()
    deduped: list[Solution] = []
    for sol in solutions:
        key = tuple(sol.get(v) for v in variables)
        if key not in seen:
            seen.add(key)
            deduped.append(sol)
    deduped.sort(key=lambda s: tuple(str(s.get(v, "")) for v in variables))
    return BindingSet(variables, deduped)


def extend_optional(
    graph: Graph,
    solutions: list[Solution],
    tp: TriplePattern,
    dependent_vars: set[str] | None = None,
) -> list[Solution]:
    """Left-join one optional triple pattern: solutions that match are
    extended (possibly into several rows), the rest pass through unchanged.
    A row whose binding for a previously-introduced variable is absent is
    passed through rather than joined unconstrained."""
    dependent = dependent_vars or set()
    out: list[Solution] = []
    for sol in solutions:
        if any(v not in sol for v in dependent):
            out.append(sol)
            continue
        matched = False
        for triple in _candidates(graph, _bind(tp, sol)):
            extended = _extend(sol, tp, triple)
            if extended is not None:
                out.append(extended)
                matched = True
        if not matched:
            out.append(sol)
    return out


def is_member_candidate(term: Term) -> bool:
    """Literals never become occurrence members."""
    return not isinstance(term, Literal)
