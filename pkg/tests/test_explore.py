import pytest

from odpkit import fixture
from odpkit.explore import (
    EXCLUDED,
    Category,
    FilterParseError,
    FilterSet,
    GeoPolygon,
    NumericRange,
    Outcome,
    SchemaMismatch,
    TextContains,
    TimeInterval,
    WorldAssumption,
    build_table,
    emap,
    eval_filter,
    parse_filter_expression,
    parse_numeric,
    parse_year,
    pattern_kind,
    table_schema,
)
from odpkit.terms import Literal, XSD


@pytest.fixture(scope="module")
def schemas(fixture_dataset):
    return fixture_dataset.schemas


def test_pattern_kind_resolution(fixture_dataset):
    registry = fixture_dataset.registry
    assert pattern_kind(fixture.PATTERN_CPCO, registry) == "partOf"
    assert pattern_kind(fixture.PATTERN_TITL, registry) == "timedLocation"
    assert pattern_kind(fixture.PATTERN_MC, registry) == "measurementCollection"


def test_builtin_schema_shapes(schemas):
    part_of = schemas[fixture.PATTERN_CPCO]
    assert len(part_of.columns) == 2
    titl = schemas[fixture.PATTERN_TITL]
    assert len(titl.columns) == 6
    assert {"place", "time", "coordinates", "author"} <= set(titl.dimensions)
    mc = schemas[fixture.PATTERN_MC]
    assert mc.measure_source is not None
    # any measurement-type name resolves through the measure source
    assert mc.dimension("height").name == "height"


def test_numeric_parsing_helpers():
    assert parse_numeric(Literal("2.5", datatype=XSD + "decimal")) == 2.5
    assert parse_numeric(Literal("approx. tall")) is None
    assert parse_year(Literal("1856", datatype=XSD + "gYear")) == 1856
    assert parse_year(Literal("1945-04-25T00:00:00", datatype=XSD + "dateTime")) == 1945
    assert parse_year(Literal("yesterday")) is None


def test_tri_state_outcomes_on_fixture(fixture_dataset, schemas):
    schema = schemas[fixture.PATTERN_MC]
    occs = fixture_dataset.occurrences[fixture.PATTERN_MC]
    filt = NumericRange("height", min=0.0)
    outcomes = {eval_filter(schema, filt, occ, fixture_dataset.data) for occ in occs}
    # some collections have a height measure, some do not
    assert Outcome.PASS in outcomes
    assert Outcome.MISSING in outcomes
    impossible = NumericRange("height", min=1e9)
    assert any(
        eval_filter(schema, impossible, occ, fixture_dataset.data) == Outcome.FAIL
        for occ in occs
    )


def test_emap_excludes_on_fail_and_closed_missing(fixture_dataset, schemas):
    schema = schemas[fixture.PATTERN_MC]
    occs = fixture_dataset.occurrences[fixture.PATTERN_MC]
    filt = NumericRange("height", min=0.0)
    occ_missing = next(
        o for o in occs
        if eval_filter(schema, filt, o, fixture_dataset.data) == Outcome.MISSING
    )
    open_world = FilterSet((filt,), WorldAssumption.OPEN)
    closed_world = FilterSet((filt,), WorldAssumption.CLOSED)
    assert emap(schema, occ_missing, fixture_dataset.data, open_world) is not EXCLUDED
    assert emap(schema, occ_missing, fixture_dataset.data, closed_world) is EXCLUDED


def test_emap_rejects_schema_mismatch(fixture_dataset, schemas):
    occ = fixture_dataset.occurrences[fixture.PATTERN_MC][0]
    with pytest.raises(SchemaMismatch):
        emap(schemas[fixture.PATTERN_TITL], occ, fixture_dataset.data, FilterSet())


def test_one_filter_per_dimension():
    with pytest.raises(ValueError):
        FilterSet((NumericRange("height", min=1), NumericRange("height", max=2)))


def test_closed_world_is_subset_of_open(fixture_dataset, schemas):
    schema = schemas[fixture.PATTERN_TITL]
    occs = fixture_dataset.occurrences[fixture.PATTERN_TITL]
    filt = TimeInterval("time", start=None, end=1945)
    open_rows, open_total = build_table(
        schema, occs, fixture_dataset.data, FilterSet((filt,), WorldAssumption.OPEN),
        limit=10_000,
    )
    closed_rows, closed_total = build_table(
        schema, occs, fixture_dataset.data, FilterSet((filt,), WorldAssumption.CLOSED),
        limit=10_000,
    )
    assert closed_total <= open_total
    assert {r.instance_iri for r in closed_rows} <= {r.instance_iri for r in open_rows}


def test_adding_filters_never_adds_rows(fixture_dataset, schemas):
    schema = schemas[fixture.PATTERN_TITL]
    occs = fixture_dataset.occurrences[fixture.PATTERN_TITL]
    base = FilterSet((Category("place", frozenset({"Firenze"})),), WorldAssumption.OPEN)
    extended = FilterSet(
        (Category("place", frozenset({"Firenze"})), TimeInterval("time", end=1945)),
        WorldAssumption.OPEN,
    )
    _, base_total = build_table(schema, occs, fixture_dataset.data, base, limit=10_000)
    _, ext_total = build_table(schema, occs, fixture_dataset.data, extended, limit=10_000)
    assert ext_total <= base_total


def test_pagination(fixture_dataset, schemas):
    schema = schemas[fixture.PATTERN_TITL]
    occs = fixture_dataset.occurrences[fixture.PATTERN_TITL]
    all_rows, total = build_table(schema, occs, fixture_dataset.data, FilterSet(), limit=10_000)
    assert total == len(occs) == len(all_rows)
    page1, t1 = build_table(schema, occs, fixture_dataset.data, FilterSet(), offset=0, limit=50)
    page2, t2 = build_table(schema, occs, fixture_dataset.data, FilterSet(), offset=50, limit=50)
    assert t1 == t2 == total
    assert [r.instance_iri for r in page1 + page2] == [r.instance_iri for r in all_rows[:100]]
    tail, _ = build_table(schema, occs, fixture_dataset.data, FilterSet(), offset=total, limit=50)
    assert tail == []


def test_rows_sorted_by_instance_iri(fixture_dataset, schemas):
    schema = schemas[fixture.PATTERN_CPCO]
    occs = fixture_dataset.occurrences[fixture.PATTERN_CPCO]
    rows, _ = build_table(schema, occs, fixture_dataset.data, FilterSet(), limit=10_000)
    iris = [r.instance_iri for r in rows]
    assert iris == sorted(iris)


def test_filter_grammar_round_trip(schemas):
    schema = schemas[fixture.PATTERN_TITL]
    (filt,) = parse_filter_expression("time:between:1800..1945", schema)
    assert filt == TimeInterval("time", 1800, 1945)
    (filt,) = parse_filter_expression("place:in:Firenze|Roma", schema)
    assert filt == Category("place", frozenset({"Firenze", "Roma"}))
    (filt,) = parse_filter_expression("label:contains:fresco", schema)
    assert filt == TextContains("label", "fresco")
    (filt,) = parse_filter_expression(f"coordinates:within:{fixture.PARIS_POLYGON}", schema)
    assert isinstance(filt, GeoPolygon)
    assert len(filt.vertices) == 4
    filters = parse_filter_expression("place:in:Firenze,time:lte:1945", schema)
    assert len(filters) == 2


def test_filter_grammar_numeric_ops(schemas):
    schema = schemas[fixture.PATTERN_MC]
    (filt,) = parse_filter_expression("height:gte:2", schema)
    assert filt == NumericRange("height", min=2.0)
    (filt,) = parse_filter_expression("height:lte:3.5", schema)
    assert filt == NumericRange("height", max=3.5)


def test_filter_grammar_errors(schemas):
    schema = schemas[fixture.PATTERN_MC]
    with pytest.raises(FilterParseError) as err:
        parse_filter_expression("height:banana:2", schema)
    assert "banana" in str(err.value)
    with pytest.raises(FilterParseError):
        parse_filter_expression("height:gte:notanumber", schema)
    with pytest.raises(FilterParseError):
        parse_filter_expression("height", schema)
    with pytest.raises(FilterParseError):
        parse_filter_expression("nodim:gte:1", schemas[fixture.PATTERN_TITL])
