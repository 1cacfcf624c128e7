"""Visualization level: pattern-specific visual frame builders and the
per-resource mosaic.  Frames are pure data; rendering is the UI's job."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import opla
from .explore import parse_numeric, parse_year, pattern_kind, term_text
from .graph import Graph, neighborhood
from .occurrences import Occurrence
from .opla import PatternRegistry
from .terms import FOAF_DEPICTION, RDFS_LABEL, Iri, Literal, Term, local_name


class UnsupportedPattern(Exception):
    def __init__(self, iri: str):
        super().__init__(f"no visual frame registered for pattern {iri}")
        self.iri = iri


class MalformedOccurrence(Exception):
    pass


@dataclass
class FrameEntity:
    iri: str
    label: str
    depiction: str | None = None


@dataclass
class PartOfFrame:
    whole: FrameEntity
    parts: list[FrameEntity]
    warnings: list[str] = field(default_factory=list)
    frame_type: str = "partOf"


@dataclass
class Measure:
    type: str
    value: float
    unit: str


@dataclass
class MeasurementFrame:
    subject: FrameEntity
    measures: list[Measure]
    warnings: list[str] = field(default_factory=list)
    frame_type: str = "measurementCollection"


@dataclass
class TimedLocationEntry:
    location_type: str
    place_label: str
    lat: float | None = None
    lon: float | None = None
    start: int | None = None
    end: int | None = None


@dataclass
class TimedLocationFrame:
    subject: FrameEntity
    entries: list[TimedLocationEntry]
    warnings: list[str] = field(default_factory=list)
    frame_type: str = "timedLocation"


VisualFrame = PartOfFrame | MeasurementFrame | TimedLocationFrame


@dataclass
class ResourceView:
    resource_iri: str
    properties: list[tuple[str, str]]
    frames: list[VisualFrame]


def _entity(term: Term, data: Graph) -> FrameEntity:
    iri = term.value if isinstance(term, Iri) else str(term)
    label_term = data.value(term, Iri(RDFS_LABEL))
    label = label_term.lexical if isinstance(label_term, Literal) else local_name(iri)
    depiction_term = data.value(term, Iri(FOAF_DEPICTION))
    depiction = depiction_term.value if isinstance(depiction_term, Iri) else None
    return FrameEntity(iri=iri, label=label, depiction=depiction)


def _bound(occurrence: Occurrence, var: str) -> list[Term]:
    seen: list[Term] = []
    for sol in occurrence.solutions:
        term = sol.get(var)
        if term is not None and term not in seen:
            seen.append(term)
    return sorted(seen, key=str)


def frame_part_of(occurrence: Occurrence, data: Graph) -> PartOfFrame:
    whole = occurrence.anchor or (_bound(occurrence, "whole") or [None])[0]
    if whole is None:
        raise MalformedOccurrence("no anchor identifiable for part-of occurrence")
    parts = _bound(occurrence, "part")
    if not parts:
        # reconstructed occurrences carry no solutions; fall back to the
        # member-induced subgraph: parts are the anchored-at members
        parts = sorted(
            {t.object for t in occurrence.triples if t.subject == whole and t.object in occurrence.members},
            key=str,
        )
    if not parts:
        raise MalformedOccurrence("part-of occurrence has no parts")
    return PartOfFrame(
        whole=_entity(whole, data),
        parts=[_entity(p, data) for p in parts],
    )


def frame_measurement_collection(occurrence: Occurrence, data: Graph) -> MeasurementFrame:
    subject_term = (_bound(occurrence, "prop") or [occurrence.anchor])[0]
    if subject_term is None:
        raise MalformedOccurrence("no subject identifiable for measurement occurrence")
    measures: list[Measure] = []
    warnings: list[str] = []
    seen: set[tuple[Term, ...]] = set()
    for sol in occurrence.solutions:
        mtype, mval = sol.get("mtype"), sol.get("mval")
        if mtype is None or mval is None:
            continue
        key = (sol.get("m"), mtype, mval)
        if key in seen:
            continue
        seen.add(key)
        value = parse_numeric(mval)
        if value is None:
            warnings.append(f"unparsable measure value {term_text(mval)!r} for type {term_text(mtype)!r}")
            continue
        unit_term = sol.get("munit")
        measures.append(Measure(term_text(mtype), value, term_text(unit_term) if unit_term else ""))
    measures.sort(key=lambda m: (m.type, m.value))
    return MeasurementFrame(subject=_entity(subject_term, data), measures=measures, warnings=warnings)


def frame_titl(occurrence: Occurrence, data: Graph) -> TimedLocationFrame:
    subject_term = (_bound(occurrence, "prop") or [occurrence.anchor])[0]
    if subject_term is None:
        raise MalformedOccurrence("no subject identifiable for timed-location occurrence")
    entries: list[TimedLocationEntry] = []
    warnings: list[str] = []
    seen: set[tuple] = set()
    for sol in occurrence.solutions:
        type_term, place_term = sol.get("type"), sol.get("place")
        if type_term is None or place_term is None:
            continue
        key = (type_term, place_term)
        if key in seen:
            continue
        seen.add(key)
        place_label_term = sol.get("placeLabel")
        place_label = term_text(place_label_term) if place_label_term else term_text(place_term)
        lat = parse_numeric(sol["lat"]) if sol.get("lat") is not None else None
        lon = parse_numeric(sol["lon"]) if sol.get("lon") is not None else None
        if (lat is None) != (lon is None):
            lat = lon = None
        if lat is not None and lon is not None and not (-90 <= lat <= 90 and -180 <= lon <= 180):
            warnings.append(f"coordinates out of range for {place_label}: ({lat}, {lon})")
            lat = lon = None
        start = parse_year(sol["start"]) if sol.get("start") is not None else None
        end = parse_year(sol["end"]) if sol.get("end") is not None else None
        entries.append(
            TimedLocationEntry(
                location_type=term_text(type_term),
                place_label=place_label,
                lat=lat,
                lon=lon,
                start=start,
                end=end,
            )
        )
    entries.sort(key=lambda e: (e.start is None, e.start if e.start is not None else 0, e.place_label))
    return TimedLocationFrame(subject=_entity(subject_term, data), entries=entries, warnings=warnings)


_BUILDERS = {
    "partOf": frame_part_of,
    "measurementCollection": frame_measurement_collection,
    "timedLocation": frame_titl,
}


def vmap(
    pattern: str,
    occurrence: Occurrence,
    data: Graph,
    registry: PatternRegistry | None = None,
) -> VisualFrame:
    kind = pattern_kind(pattern, registry)
    if kind is None:
        raise UnsupportedPattern(pattern)
    return _BUILDERS[kind](occurrence, data)


def mosaic(
    resource: Term,
    data: Graph,
    annotations: Graph,
    instance_index: dict[str, Occurrence],
    registry: PatternRegistry | None = None,
) -> ResourceView:
    """Property-value pairs plus every frame the resource participates in.
    `instance_index` maps instance IRIs to occurrences (with solutions)."""
    properties = [
        (t.predicate.value, term_text(t.object) if isinstance(t.object, Literal) else str(t.object).strip("<>"))
        for t in sorted(neighborhood(data, resource), key=str)
    ]
    instance_terms = annotations.objects(resource, opla.BELONGS_TO_PATTERN_INSTANCE)
    memberships: list[Occurrence] = []
    for term in instance_terms:
        iri = term.value if isinstance(term, Iri) else str(term)
        occ = instance_index.get(iri)
        if occ is not None:
            memberships.append(occ)
    memberships.sort(key=lambda o: (o.pattern_id, o.instance_iri))
    frames = []
    for occ in memberships:
        if pattern_kind(occ.pattern_id, registry) is not None:
            frames.append(vmap(occ.pattern_id, occ, data, registry))
    resource_iri = resource.value if isinstance(resource, Iri) else str(resource)
    return ResourceView(resource_iri=resource_iri, properties=properties, frames=frames)
