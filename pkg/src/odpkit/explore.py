"""Exploration level: table schemas, semantic filters with open/closed-world
handling, row projection and pagination.

Dimension values are read from the solution rows a detected occurrence
carries, addressed by template variable names.  Schemas therefore work on any
knowledge graph whose template binds the same variable roles.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from .geometry import DegeneratePolygon, Point, point_in_polygon
from .graph import Graph
from .occurrences import Occurrence
from .opla import PatternRegistry, UnknownPattern
from .terms import XSD, Iri, Literal, Term, local_name

log = logging.getLogger(__name__)

XSD_GYEAR = XSD + "gYear"
XSD_DATETIME = XSD + "dateTime"
XSD_NUMERIC = {XSD + "integer", XSD + "decimal", XSD + "double", XSD + "float",
               XSD + "int", XSD + "long", XSD + "nonNegativeInteger"}


class FilterParseError(Exception):
    def __init__(self, token: str, message: str):
        super().__init__(f"{message} (at {token!r})")
        self.token = token


class SchemaMismatch(Exception):
    pass


class WorldAssumption(Enum):
    OPEN = "open"
    CLOSED = "closed"


class Outcome(Enum):
    PASS = "pass"
    FAIL = "fail"
    MISSING = "missing"


EXCLUDED = object()


# --- filters ---------------------------------------------------------------

@dataclass(frozen=True)
class NumericRange:
    dimension: str
    min: float | None = None
    max: float | None = None
    unit: str | None = None

    def __post_init__(self):
        if self.min is not None and self.max is not None and self.min > self.max:
            raise ValueError("numeric range min > max")


@dataclass(frozen=True)
class TimeInterval:
    dimension: str
    start: int | None = None
    end: int | None = None


@dataclass(frozen=True)
class GeoPolygon:
    dimension: str
    vertices: tuple[Point, ...]

    def __post_init__(self):
        ring = list(self.vertices)
        if ring and ring[0] == ring[-1]:
            ring = ring[:-1]
        if len(ring) < 3:
            raise ValueError("polygon needs at least 3 vertices")


@dataclass(frozen=True)
class Category:
    dimension: str
    allowed: frozenset[str]


@dataclass(frozen=True)
class TextContains:
    dimension: str
    needle: str


Filter = NumericRange | TimeInterval | GeoPolygon | Category | TextContains


@dataclass(frozen=True)
class FilterSet:
    filters: tuple[Filter, ...] = ()
    world: WorldAssumption = WorldAssumption.OPEN

    def __post_init__(self):
        dims = [f.dimension for f in self.filters]
        if len(dims) != len(set(dims)):
            raise ValueError("at most one filter per dimension")


# --- schemas ---------------------------------------------------------------

class ColumnKind(Enum):
    TEXT = "Text"
    INTEGER = "Integer"
    DECIMAL = "Decimal"
    DATETIME_YEAR = "DateTimeYear"
    GEO_POINT = "GeoPoint"
    CATEGORY = "Category"


@dataclass(frozen=True)
class ValueSource:
    var: str


@dataclass(frozen=True)
class CountSource:
    var: str


@dataclass(frozen=True)
class PointSource:
    lat_var: str
    lon_var: str


@dataclass(frozen=True)
class IntervalSource:
    start_var: str
    end_var: str


@dataclass(frozen=True)
class MeasureSource:
    type_var: str
    value_var: str


Source = ValueSource | CountSource | PointSource | IntervalSource | MeasureSource


@dataclass(frozen=True)
class Column:
    name: str
    kind: ColumnKind
    source: Source


@dataclass(frozen=True)
class FilterDimension:
    name: str
    kind: ColumnKind
    source: Source


@dataclass
class TableSchema:
    pattern_id: str
    columns: list[Column]
    dimensions: dict[str, FilterDimension] = field(default_factory=dict)
    measure_source: MeasureSource | None = None

    def dimension(self, name: str) -> FilterDimension:
        if name in self.dimensions:
            return self.dimensions[name]
        if self.measure_source is not None:
            # measurement-type dimensions resolve dynamically by type name
            return FilterDimension(name, ColumnKind.DECIMAL, self.measure_source)
        raise SchemaMismatch(f"dimension {name!r} not defined for {self.pattern_id}")


@dataclass
class TableRow:
    instance_iri: str
    cells: list[str | int | float | None]


_PART_OF_LOCALS = {"PartOf", "CulturalPropertyComponentOf"}
_MC_LOCALS = {"MeasurementCollection"}
_TITL_LOCALS = {"TimeIndexedTypedLocation", "TITL"}


def _part_of_schema(pattern_id: str) -> TableSchema:
    return TableSchema(
        pattern_id=pattern_id,
        columns=[
            Column("label", ColumnKind.TEXT, ValueSource("label")),
            Column("parts", ColumnKind.INTEGER, CountSource("part")),
        ],
        dimensions={
            "label": FilterDimension("label", ColumnKind.TEXT, ValueSource("label")),
            "components": FilterDimension("components", ColumnKind.INTEGER, CountSource("part")),
        },
    )


def _mc_schema(pattern_id: str) -> TableSchema:
    return TableSchema(
        pattern_id=pattern_id,
        columns=[
            Column("label", ColumnKind.TEXT, ValueSource("label")),
            Column("measures", ColumnKind.INTEGER, CountSource("m")),
        ],
        dimensions={
            "label": FilterDimension("label", ColumnKind.TEXT, ValueSource("label")),
            "measures": FilterDimension("measures", ColumnKind.INTEGER, CountSource("m")),
        },
        measure_source=MeasureSource("mtype", "mval"),
    )


def _titl_schema(pattern_id: str) -> TableSchema:
    return TableSchema(
        pattern_id=pattern_id,
        columns=[
            Column("label", ColumnKind.TEXT, ValueSource("label")),
            Column("locationType", ColumnKind.CATEGORY, ValueSource("type")),
            Column("place", ColumnKind.TEXT, ValueSource("placeLabel")),
            Column("start", ColumnKind.DATETIME_YEAR, ValueSource("start")),
            Column("end", ColumnKind.DATETIME_YEAR, ValueSource("end")),
            Column("coordinates", ColumnKind.GEO_POINT, PointSource("lat", "lon")),
        ],
        dimensions={
            "label": FilterDimension("label", ColumnKind.TEXT, ValueSource("label")),
            "place": FilterDimension("place", ColumnKind.CATEGORY, ValueSource("placeLabel")),
            "locationType": FilterDimension("locationType", ColumnKind.CATEGORY, ValueSource("type")),
            "time": FilterDimension("time", ColumnKind.DATETIME_YEAR, IntervalSource("start", "end")),
            "coordinates": FilterDimension("coordinates", ColumnKind.GEO_POINT, PointSource("lat", "lon")),
            "author": FilterDimension("author", ColumnKind.CATEGORY, ValueSource("author")),
        },
    )


_BUILTIN_BUILDERS = {
    "partOf": _part_of_schema,
    "measurementCollection": _mc_schema,
    "timedLocation": _titl_schema,
}


def pattern_kind(pattern_id: str, registry: PatternRegistry | None = None) -> str | None:
    """Frame/schema family of a pattern, by local name or specialization."""
    local = local_name(pattern_id)
    if local in _PART_OF_LOCALS:
        return "partOf"
    if local in _MC_LOCALS:
        return "measurementCollection"
    if local in _TITL_LOCALS:
        return "timedLocation"
    if registry is not None and pattern_id in registry:
        for parent in sorted(registry.patterns[pattern_id].specializes):
            kind = pattern_kind(parent, registry)
            if kind is not None:
                return kind
    return None


def table_schema(pattern_id: str, registry: PatternRegistry | None = None) -> TableSchema:
    kind = pattern_kind(pattern_id, registry)
    if kind is None:
        raise UnknownPattern(pattern_id)
    return _BUILTIN_BUILDERS[kind](pattern_id)


# --- dimension value extraction -------------------------------------------

def parse_numeric(term: Term) -> float | None:
    if not isinstance(term, Literal):
        return None
    if term.datatype in XSD_NUMERIC or term.datatype == XSD + "string":
        try:
            return float(term.lexical)
        except ValueError:
            return None
    return None


def parse_year(term: Term) -> int | None:
    if not isinstance(term, Literal):
        return None
    lex = term.lexical.strip()
    try:
        if term.datatype == XSD_GYEAR:
            return int(lex)
        if term.datatype == XSD_DATETIME:
            return int(lex.split("-", 1)[0]) if not lex.startswith("-") else int("-" + lex[1:].split("-", 1)[0])
    except ValueError:
        return None
    return None


def term_text(term: Term) -> str:
    if isinstance(term, Literal):
        return term.lexical
    if isinstance(term, Iri):
        return local_name(term.value)
    return str(term)


def _distinct_values(occurrence: Occurrence, var: str) -> list[Term]:
    seen = []
    for sol in occurrence.solutions:
        term = sol.get(var)
        if term is not None and term not in seen:
            seen.append(term)
    return sorted(seen, key=str)


def _measure_values(occurrence: Occurrence, source: MeasureSource, type_name: str) -> tuple[list[float], int]:
    """(parsed values of the named measurement type, raw count)."""
    values = []
    raw = 0
    for sol in occurrence.solutions:
        mtype = sol.get(source.type_var)
        mval = sol.get(source.value_var)
        if mtype is None or mval is None:
            continue
        if term_text(mtype) != type_name:
            continue
        raw += 1
        parsed = parse_numeric(mval)
        if parsed is None:
            log.warning("unparsable literal for dimension %r: %r", type_name, mval)
        else:
            values.append(parsed)
    return values, raw


def _points(occurrence: Occurrence, source: PointSource) -> list[Point]:
    points = []
    for sol in occurrence.solutions:
        lat = parse_numeric(sol.get(source.lat_var)) if sol.get(source.lat_var) else None
        lon = parse_numeric(sol.get(source.lon_var)) if sol.get(source.lon_var) else None
        if lat is not None and lon is not None and (lat, lon) not in points:
            points.append((lat, lon))
    return points


def _interval(occurrence: Occurrence, source: IntervalSource) -> tuple[int | None, int | None] | None:
    starts = [y for t in _distinct_values(occurrence, source.start_var) if (y := parse_year(t)) is not None]
    ends = [y for t in _distinct_values(occurrence, source.end_var) if (y := parse_year(t)) is not None]
    if not starts and not ends:
        return None
    return (min(starts) if starts else None, max(ends) if ends else None)


# --- filter evaluation -----------------------------------------------------

def eval_filter(schema: TableSchema, filt: Filter, occurrence: Occurrence, data: Graph) -> Outcome:
    """Tri-state evaluation: Pass / Fail / value Missing in the KG."""
    dim = schema.dimension(filt.dimension)
    source = dim.source

    if isinstance(filt, NumericRange):
        if isinstance(source, CountSource):
            values: list[float] = [float(len(_distinct_values(occurrence, source.var)))]
        elif isinstance(source, MeasureSource):
            parsed, raw = _measure_values(occurrence, source, filt.dimension)
            if raw == 0:
                return Outcome.MISSING
            if not parsed:
                return Outcome.MISSING  # only unparsable literals present
            values = parsed
        elif isinstance(source, ValueSource):
            raw_terms = _distinct_values(occurrence, source.var)
            if not raw_terms:
                return Outcome.MISSING
            values = [v for t in raw_terms if (v := parse_numeric(t)) is not None]
            if not values:
                return Outcome.MISSING
        else:
            raise SchemaMismatch(f"dimension {filt.dimension!r} is not numeric")
        lo = filt.min if filt.min is not None else float("-inf")
        hi = filt.max if filt.max is not None else float("inf")
        return Outcome.PASS if any(lo <= v <= hi for v in values) else Outcome.FAIL

    if isinstance(filt, TimeInterval):
        if not isinstance(source, IntervalSource):
            raise SchemaMismatch(f"dimension {filt.dimension!r} is not an interval")
        interval = _interval(occurrence, source)
        if interval is None:
            return Outcome.MISSING
        start, end = interval
        s = start if start is not None else float("-inf")
        e = end if end is not None else float("inf")
        fs = filt.start if filt.start is not None else float("-inf")
        fe = filt.end if filt.end is not None else float("inf")
        return Outcome.PASS if s <= fe and e >= fs else Outcome.FAIL

    if isinstance(filt, GeoPolygon):
        if not isinstance(source, PointSource):
            raise SchemaMismatch(f"dimension {filt.dimension!r} is not geographic")
        points = _points(occurrence, source)
        if not points:
            return Outcome.MISSING
        ring = list(filt.vertices)
        return Outcome.PASS if any(point_in_polygon(p, ring) for p in points) else Outcome.FAIL

    if isinstance(filt, Category):
        terms = _distinct_values(occurrence, _value_var(source, filt.dimension))
        if not terms:
            return Outcome.MISSING
        return Outcome.PASS if any(term_text(t) in filt.allowed for t in terms) else Outcome.FAIL

    if isinstance(filt, TextContains):
        terms = _distinct_values(occurrence, _value_var(source, filt.dimension))
        if not terms:
            return Outcome.MISSING
        needle = filt.needle.lower()
        return Outcome.PASS if any(needle in term_text(t).lower() for t in terms) else Outcome.FAIL

    raise SchemaMismatch(f"unsupported filter {filt!r}")


def _value_var(source: Source, dimension: str) -> str:
    if isinstance(source, ValueSource):
        return source.var
    raise SchemaMismatch(f"dimension {dimension!r} does not hold discrete values")


# --- emap and tables -------------------------------------------------------

def _cell(schema_column: Column, occurrence: Occurrence) -> str | int | float | None:
    source = schema_column.source
    if isinstance(source, CountSource):
        return len(_distinct_values(occurrence, source.var))
    if isinstance(source, PointSource):
        points = _points(occurrence, source)
        if not points:
            return None
        lat, lon = points[0]
        return f"{lat:g},{lon:g}"
    if isinstance(source, ValueSource):
        terms = _distinct_values(occurrence, source.var)
        if not terms:
            return None
        term = terms[0]
        if schema_column.kind == ColumnKind.INTEGER:
            value = parse_numeric(term)
            return int(value) if value is not None else None
        if schema_column.kind == ColumnKind.DECIMAL:
            return parse_numeric(term)
        if schema_column.kind == ColumnKind.DATETIME_YEAR:
            return parse_year(term)
        return term_text(term)
    raise SchemaMismatch(f"column {schema_column.name!r} has unsupported source")


def emap(schema: TableSchema, occurrence: Occurrence, data: Graph, filters: FilterSet):
    """Project an occurrence to its table row, or EXCLUDED when a filter
    fails — or, under the closed-world assumption, when one is missing."""
    if occurrence.pattern_id != schema.pattern_id:
        raise SchemaMismatch(
            f"occurrence pattern {occurrence.pattern_id} does not match schema {schema.pattern_id}"
        )
    for filt in filters.filters:
        outcome = eval_filter(schema, filt, occurrence, data)
        if outcome == Outcome.FAIL:
            return EXCLUDED
        if outcome == Outcome.MISSING and filters.world == WorldAssumption.CLOSED:
            return EXCLUDED
    return TableRow(
        instance_iri=occurrence.instance_iri,
        cells=[_cell(col, occurrence) for col in schema.columns],
    )


def build_table(
    schema: TableSchema,
    occurrences: list[Occurrence],
    data: Graph,
    filters: FilterSet,
    offset: int = 0,
    limit: int = 50,
) -> tuple[list[TableRow], int]:
    if limit < 1:
        raise ValueError("limit must be >= 1")
    rows = []
    for occ in sorted(occurrences, key=lambda o: o.instance_iri):
        row = emap(schema, occ, data, filters)
        if row is not EXCLUDED:
            rows.append(row)
    return rows[offset : offset + limit], len(rows)


# --- wire grammar ----------------------------------------------------------

_OPS = {"gte", "lte", "between", "in", "contains", "within"}


def parse_filter_expression(expression: str, schema: TableSchema) -> tuple[Filter, ...]:
    """`dim:op:value` items separated by commas; `within` values are
    semicolon-separated `lat lon` vertices; `between` values are `lo..hi`;
    `in` values are `|`-separated."""
    filters: list[Filter] = []
    if not expression.strip():
        return ()
    for item in expression.split(","):
        item = item.strip()
        parts = item.split(":", 2)
        if len(parts) != 3:
            raise FilterParseError(item, "expected dim:op:value")
        dim_name, op, value = parts
        if op not in _OPS:
            raise FilterParseError(op, f"unknown filter operator")
        try:
            dim = schema.dimension(dim_name)
        except SchemaMismatch:
            raise FilterParseError(dim_name, "unknown filter dimension")
        filters.append(_build_filter(dim, op, value))
    result = tuple(filters)
    if len({f.dimension for f in result}) != len(result):
        raise FilterParseError(expression, "duplicate filter dimension")
    return result


def _build_filter(dim: FilterDimension, op: str, value: str) -> Filter:
    is_temporal = dim.kind == ColumnKind.DATETIME_YEAR
    if op == "within":
        if dim.kind != ColumnKind.GEO_POINT:
            raise FilterParseError(dim.name, "'within' applies to geographic dimensions")
        try:
            vertices = tuple(
                (float(lat), float(lon))
                for lat, lon in (v.split() for v in value.split(";") if v.strip())
            )
            return GeoPolygon(dim.name, vertices)
        except (ValueError, DegeneratePolygon) as exc:
            raise FilterParseError(value, f"bad polygon: {exc}")
    if op == "in":
        allowed = frozenset(v.strip() for v in value.split("|") if v.strip())
        if not allowed:
            raise FilterParseError(value, "empty category set")
        return Category(dim.name, allowed)
    if op == "contains":
        if not value:
            raise FilterParseError(value, "empty text needle")
        return TextContains(dim.name, value)
    # numeric / temporal range operators
    try:
        if op == "between":
            lo_s, _, hi_s = value.partition("..")
            if is_temporal:
                return TimeInterval(dim.name, start=int(lo_s), end=int(hi_s))
            return NumericRange(dim.name, min=float(lo_s), max=float(hi_s))
        if op == "gte":
            if is_temporal:
                return TimeInterval(dim.name, start=int(value))
            return NumericRange(dim.name, min=float(value))
        # lte
        if is_temporal:
            return TimeInterval(dim.name, end=int(value))
        return NumericRange(dim.name, max=float(value))
    except ValueError as exc:
        raise FilterParseError(value, f"bad range value: {exc}")
