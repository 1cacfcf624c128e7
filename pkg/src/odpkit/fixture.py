"""Deterministic synthetic cultural-heritage dataset with recorded ground
truth.  Ground-truth counts are tallied while generating (simple arithmetic
over the values being written), so they are independent of the query engine
they later validate."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .graph import Graph
from .parse import serialize_graph
from .terms import FOAF_DEPICTION, RDF_TYPE, RDFS_LABEL, XSD, Iri, Literal, Triple

EX = "http://example.org/kg/"
ODP = "http://example.org/odp/"

PATTERN_CPCO = ODP + "CulturalPropertyComponentOf"
PATTERN_PART_OF = ODP + "PartOf"
PATTERN_MC = ODP + "MeasurementCollection"
PATTERN_COLLECTION = ODP + "Collection"
PATTERN_TITL = ODP + "TimeIndexedTypedLocation"
PATTERN_TIS = ODP + "TimeIndexedSituation"

XSD_DECIMAL = XSD + "decimal"
XSD_GYEAR = XSD + "gYear"

DEFAULT_PLACES = [
    ("Firenze", 43.7696, 11.2558),
    ("Bologna", 44.4949, 11.3426),
    ("Roma", 41.9028, 12.4964),
    ("Torino", 45.0703, 7.6869),
    ("Caravino", 45.4000, 7.9622),
    ("Vittorio Veneto", 45.9894, 12.2972),
    ("Paris", 48.8566, 2.3522),
]

DEFAULT_AUTHORS = [
    "Prampolini Enrico",
    "Boccioni Umberto",
    "Balla Giacomo",
    "Severini Gino",
    "Carra Carlo",
    "Modigliani Amedeo",
]

LOCATION_TYPES = ["CurrentLocation", "StorageLocation", "ExpositionLocation"]
MEASURE_TYPES = ["height", "width", "depth", "length", "weight"]

# rectangle around Paris for the polygon scenario (lat lon ring)
PARIS_POLYGON = "48.6 2.1;49.1 2.1;49.1 2.6;48.6 2.6"
PARIS_LAT = (48.6, 49.1)
PARIS_LON = (2.1, 2.6)


@dataclass
class FixtureSpec:
    seed: int = 42
    n_properties: int = 200
    n_part_of: int = 49
    n_titl: int = 270
    n_mc: int = 158
    places: list[tuple[str, float, float]] = field(default_factory=lambda: list(DEFAULT_PLACES))
    authors: list[str] = field(default_factory=lambda: list(DEFAULT_AUTHORS))

    def __post_init__(self):
        for name in ("n_properties", "n_part_of", "n_titl", "n_mc"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.n_part_of > self.n_properties or self.n_mc > self.n_properties:
            raise ValueError("per-property pattern counts cannot exceed n_properties")


ONTOLOGY_TTL = """\
@prefix ex: <http://example.org/kg/> .
@prefix odp: <http://example.org/odp/> .
@prefix opla: <http://ontologydesignpatterns.org/opla/> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .

odp:PartOf a opla:Pattern ; rdfs:label "Part Of" .
odp:Collection a opla:Pattern ; rdfs:label "Collection" .
odp:TimeIndexedSituation a opla:Pattern ; rdfs:label "Time Indexed Situation" .
odp:CulturalPropertyComponentOf a opla:Pattern ;
    rdfs:label "Cultural Property Component Of" ;
    opla:specializationOfPattern odp:PartOf .
odp:MeasurementCollection a opla:Pattern ;
    rdfs:label "Measurement Collection" ;
    opla:specializationOfPattern odp:Collection .
odp:TimeIndexedTypedLocation a opla:Pattern ;
    rdfs:label "Time Indexed Typed Location" ;
    opla:specializationOfPattern odp:TimeIndexedSituation .

ex:CulturalProperty a owl:Class ;
    rdfs:label "Cultural Property" ;
    opla:isNativeTo odp:CulturalPropertyComponentOf .
ex:MeasurementCollection a owl:Class ;
    rdfs:label "Measurement Collection" ;
    opla:isNativeTo odp:MeasurementCollection .
ex:Measure a owl:Class ; rdfs:label "Measure" .
ex:TimeIndexedTypedLocation a owl:Class ;
    rdfs:label "Time Indexed Typed Location" ;
    opla:isNativeTo odp:TimeIndexedTypedLocation .
ex:TimeInterval a owl:Class ; rdfs:label "Time Interval" .
ex:Place a owl:Class ; rdfs:label "Place" .
ex:LocationType a owl:Class ; rdfs:label "Location Type" .

ex:hasPart rdfs:label "has part" ;
    rdfs:domain ex:CulturalProperty ;
    rdfs:range ex:CulturalProperty .
ex:author rdfs:label "author" ;
    rdfs:domain ex:CulturalProperty .
ex:hasMeasurementCollection rdfs:label "has measurement collection" ;
    rdfs:domain ex:CulturalProperty ;
    rdfs:range ex:MeasurementCollection .
ex:hasMember rdfs:label "has member" ;
    rdfs:domain ex:MeasurementCollection ;
    rdfs:range ex:Measure .
ex:measurementType rdfs:label "measurement type" ; rdfs:domain ex:Measure .
ex:value rdfs:label "value" ; rdfs:domain ex:Measure .
ex:unit rdfs:label "unit" ; rdfs:domain ex:Measure .
ex:hasTimeIndexedTypedLocation rdfs:label "has time indexed typed location" ;
    rdfs:domain ex:CulturalProperty ;
    rdfs:range ex:TimeIndexedTypedLocation .
ex:atLocation rdfs:label "at location" ;
    rdfs:domain ex:TimeIndexedTypedLocation ;
    rdfs:range ex:Place .
ex:hasLocationType rdfs:label "has location type" ; rdfs:range ex:LocationType .
ex:atTime rdfs:label "at time" ; rdfs:range ex:TimeInterval .
ex:start rdfs:label "start" ; rdfs:domain ex:TimeInterval .
ex:end rdfs:label "end" ; rdfs:domain ex:TimeInterval .
ex:lat rdfs:label "latitude" ; rdfs:domain ex:Place .
ex:long rdfs:label "longitude" ; rdfs:domain ex:Place .
"""

TEMPLATES_TXT = """\
# Occurrence templates for the synthetic cultural-heritage dataset.

PATTERN <http://example.org/odp/CulturalPropertyComponentOf>
LABEL PartOf
ANCHOR ?whole
REQUIRED ?whole <http://example.org/kg/hasPart> ?part
OPTIONAL ?whole <http://www.w3.org/2000/01/rdf-schema#label> ?label
MEMBERS ?whole ?part

PATTERN <http://example.org/odp/TimeIndexedTypedLocation>
LABEL TITL
ANCHOR ?situation
REQUIRED ?prop <http://example.org/kg/hasTimeIndexedTypedLocation> ?situation
REQUIRED ?situation <http://example.org/kg/atLocation> ?place
REQUIRED ?situation <http://example.org/kg/hasLocationType> ?type
OPTIONAL ?situation <http://example.org/kg/atTime> ?time
OPTIONAL ?time <http://example.org/kg/start> ?start
OPTIONAL ?time <http://example.org/kg/end> ?end
OPTIONAL ?place <http://www.w3.org/2000/01/rdf-schema#label> ?placeLabel
OPTIONAL ?place <http://example.org/kg/lat> ?lat
OPTIONAL ?place <http://example.org/kg/long> ?lon
OPTIONAL ?prop <http://www.w3.org/2000/01/rdf-schema#label> ?label
OPTIONAL ?prop <http://example.org/kg/author> ?author
MEMBERS ?prop ?situation ?place ?type ?time

PATTERN <http://example.org/odp/MeasurementCollection>
LABEL MC
ANCHOR ?collection
REQUIRED ?prop <http://example.org/kg/hasMeasurementCollection> ?collection
OPTIONAL ?collection <http://example.org/kg/hasMember> ?m
OPTIONAL ?m <http://example.org/kg/measurementType> ?mtype
OPTIONAL ?m <http://example.org/kg/value> ?mval
OPTIONAL ?m <http://example.org/kg/unit> ?munit
OPTIONAL ?prop <http://www.w3.org/2000/01/rdf-schema#label> ?label
MEMBERS ?prop ?collection ?m
"""


def _iri(local: str) -> Iri:
    return Iri(EX + local)


def synth(spec: FixtureSpec, out_dir: str | Path) -> dict:
    """Write ontology.ttl, data.nt, templates.txt and groundtruth.json.
    Returns the ground-truth document."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(spec.seed)
    data = Graph()

    def add(s, p, o):
        data.add(Triple(s, p, o))

    rdf_type = Iri(RDF_TYPE)
    rdfs_label = Iri(RDFS_LABEL)
    cls_property = _iri("CulturalProperty")

    # shared nodes: location types and places
    for lt in LOCATION_TYPES:
        add(_iri(lt), rdf_type, _iri("LocationType"))
        add(_iri(lt), rdfs_label, Literal(lt))
    place_nodes = {}
    for label, lat, lon in spec.places:
        node = _iri("place_" + label.replace(" ", "_"))
        place_nodes[label] = (node, lat, lon)
        add(node, rdf_type, _iri("Place"))
        add(node, rdfs_label, Literal(label))
        add(node, _iri("lat"), Literal(f"{lat}", datatype=XSD_DECIMAL))
        add(node, _iri("long"), Literal(f"{lon}", datatype=XSD_DECIMAL))

    props = [f"property{i:03d}" for i in range(spec.n_properties)]
    authors = {}
    for name in props:
        node = _iri(name)
        add(node, rdf_type, cls_property)
        add(node, rdfs_label, Literal(f"Cultural property {name[-3:]}"))
        author = rng.choice(spec.authors) if spec.authors else "Unknown"
        authors[name] = author
        add(node, _iri("author"), Literal(author))

    counts = {
        "es_task_1": 0,   # MC: height >= 2 m
        "es_task_2": 0,   # CPCO: at least 8 components
        "es_task_3": 0,   # TITL: current location Firenze
        "es_task_4": 0,   # TITL: in Firenze before 1945
        "es_task_5": 0,   # TITL: Prampolini Enrico in Bologna
        "paris_1856": 0,  # TITL: inside the Paris rectangle in 1856
    }

    # --- Part Of occurrences (one per whole with parts) --------------------
    part_of_props = sorted(rng.sample(props, spec.n_part_of)) if spec.n_part_of else []
    for name in part_of_props:
        whole = _iri(name)
        n_parts = rng.randint(1, 12)
        if n_parts >= 8:
            counts["es_task_2"] += 1
        if rng.random() < 0.5:
            add(whole, Iri(FOAF_DEPICTION), Iri(f"http://example.org/img/{name}.jpg"))
        for j in range(n_parts):
            part = _iri(f"{name}_part{j}")
            add(whole, _iri("hasPart"), part)
            add(part, rdf_type, cls_property)
            add(part, rdfs_label, Literal(f"Component {j} of {name[-3:]}"))
            if rng.random() < 0.3:
                add(part, Iri(FOAF_DEPICTION), Iri(f"http://example.org/img/{name}_part{j}.jpg"))

    # --- Measurement Collection occurrences (one collection per property) --
    mc_props = sorted(rng.sample(props, spec.n_mc)) if spec.n_mc else []
    for idx, name in enumerate(mc_props):
        prop = _iri(name)
        collection = _iri(f"{name}_measures")
        add(prop, _iri("hasMeasurementCollection"), collection)
        add(collection, rdf_type, _iri("MeasurementCollection"))
        chosen = [t for t in MEASURE_TYPES if rng.random() < (0.6 if t == "height" else 0.35)]
        if not chosen:
            chosen = ["height"]
        for mtype in chosen:
            node = _iri(f"{name}_measure_{mtype}")
            if mtype == "height":
                value = round(rng.uniform(0.2, 4.0), 2)
                unit = "m"
                if value >= 2.0:
                    counts["es_task_1"] += 1
            elif mtype == "weight":
                value = round(rng.uniform(0.5, 500.0), 2)
                unit = "kg"
            else:
                value = round(rng.uniform(0.1, 3.0), 2)
                unit = "m"
            add(collection, _iri("hasMember"), node)
            add(node, rdf_type, _iri("Measure"))
            add(node, _iri("measurementType"), Literal(mtype))
            add(node, _iri("value"), Literal(f"{value:.2f}", datatype=XSD_DECIMAL))
            add(node, _iri("unit"), Literal(unit))
        if idx == 0:
            # exactly one dirty literal for diagnostics behavior
            node = _iri(f"{name}_measure_diameter")
            add(collection, _iri("hasMember"), node)
            add(node, rdf_type, _iri("Measure"))
            add(node, _iri("measurementType"), Literal("diameter"))
            add(node, _iri("value"), Literal("n/a"))
            add(node, _iri("unit"), Literal("m"))

    # --- Time Indexed Typed Location occurrences ---------------------------
    titl_per_prop = {name: 0 for name in props}
    uncovered = [n for n in props if n not in set(part_of_props) and n not in set(mc_props)]
    remaining = spec.n_titl
    for name in uncovered:
        if remaining == 0:
            break
        titl_per_prop[name] += 1
        remaining -= 1
    if props:
        for _ in range(remaining):
            titl_per_prop[rng.choice(props)] += 1

    for name in props:
        prop = _iri(name)
        author = authors[name]
        for j in range(titl_per_prop[name]):
            situation = _iri(f"{name}_loc{j}")
            add(prop, _iri("hasTimeIndexedTypedLocation"), situation)
            add(situation, rdf_type, _iri("TimeIndexedTypedLocation"))
            lt = "CurrentLocation" if j == 0 else rng.choice(LOCATION_TYPES[1:])
            add(situation, _iri("hasLocationType"), _iri(lt))
            place_label = rng.choice([p[0] for p in spec.places])
            place_node, lat, lon = place_nodes[place_label]
            add(situation, _iri("atLocation"), place_node)

            has_time = rng.random() < 0.85
            start = end = None
            if has_time:
                start = rng.randint(1700, 2000)
                end = start + rng.randint(0, 120)
                interval = _iri(f"{name}_loc{j}_time")
                add(situation, _iri("atTime"), interval)
                add(interval, rdf_type, _iri("TimeInterval"))
                add(interval, _iri("start"), Literal(str(start), datatype=XSD_GYEAR))
                add(interval, _iri("end"), Literal(str(end), datatype=XSD_GYEAR))

            # ground-truth tallies, straight from the values just written
            if place_label == "Firenze" and lt == "CurrentLocation":
                counts["es_task_3"] += 1
            if place_label == "Firenze" and start is not None and start <= 1945:
                counts["es_task_4"] += 1
            if place_label == "Bologna" and author == "Prampolini Enrico":
                counts["es_task_5"] += 1
            in_paris_box = PARIS_LAT[0] <= lat <= PARIS_LAT[1] and PARIS_LON[0] <= lon <= PARIS_LON[1]
            if in_paris_box and start is not None and end is not None and start <= 1856 <= end:
                counts["paris_1856"] += 1

    ground_truth = {
        "counts": {
            "PartOf": len(part_of_props),
            "MC": len(mc_props),
            "TITL": sum(titl_per_prop.values()),
        },
        "queries": [
            {"name": "es_task_1", "pattern": PATTERN_MC, "filters": "height:gte:2",
             "world": "closed", "expected": counts["es_task_1"]},
            {"name": "es_task_2", "pattern": PATTERN_CPCO, "filters": "components:gte:8",
             "world": "open", "expected": counts["es_task_2"]},
            {"name": "es_task_3", "pattern": PATTERN_TITL,
             "filters": "place:in:Firenze,locationType:in:CurrentLocation",
             "world": "open", "expected": counts["es_task_3"]},
            {"name": "es_task_4", "pattern": PATTERN_TITL,
             "filters": "place:in:Firenze,time:lte:1945",
             "world": "closed", "expected": counts["es_task_4"]},
            {"name": "es_task_5", "pattern": PATTERN_TITL,
             "filters": "author:in:Prampolini Enrico,place:in:Bologna",
             "world": "open", "expected": counts["es_task_5"]},
            {"name": "paris_1856", "pattern": PATTERN_TITL,
             "filters": f"coordinates:within:{PARIS_POLYGON},time:between:1856..1856",
             "world": "closed", "expected": counts["paris_1856"]},
        ]
    }

    (out / "ontology.ttl").write_text(ONTOLOGY_TTL, encoding="utf-8")
    (out / "data.nt").write_text(serialize_graph(data), encoding="utf-8")
    (out / "templates.txt").write_text(TEMPLATES_TXT, encoding="utf-8")
    (out / "groundtruth.json").write_text(
        json.dumps(ground_truth, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return ground_truth


def default_config(fixture_dir: str | Path, threshold: int = 7) -> dict:
    """Dataset configuration pointing at a synthesized fixture directory."""
    base = Path(fixture_dir)
    return {
        "datasets": [
            {
                "id": "fixture",
                "ontology_files": [str(base / "ontology.ttl")],
                "data_files": [str(base / "data.nt")],
                "annotation_files": [],
                "template_file": str(base / "templates.txt"),
                "key_concept_threshold": threshold,
            }
        ]
    }
