"""Read-only HTTP JSON API over loaded datasets."""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import FileResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import explore, frames, summary
from .dataset import Dataset
from .explore import FilterParseError, FilterSet, WorldAssumption
from .frames import MeasurementFrame, PartOfFrame, TimedLocationFrame, VisualFrame
from .opla import UnknownPattern
from .terms import Iri


class DatasetInfo(BaseModel):
    id: str
    patternCount: int
    tripleCount: int


class SummaryNodeModel(BaseModel):
    id: str
    kind: str
    label: str
    size: float
    occurrences: int | None = None


class SummaryEdgeModel(BaseModel):
    source: str
    label: str
    target: str


class SummaryModel(BaseModel):
    nodes: list[SummaryNodeModel]
    edges: list[SummaryEdgeModel]


class ColumnModel(BaseModel):
    name: str
    kind: str


class RowModel(BaseModel):
    instanceIri: str
    cells: list[str | int | float | None]


class DimensionModel(BaseModel):
    name: str
    kind: str


class TableModel(BaseModel):
    columns: list[ColumnModel]
    dimensions: list[DimensionModel]
    rows: list[RowModel]
    total: int


def _table_dimensions(ds: Dataset, pattern_iri: str) -> list[DimensionModel]:
    """Declared dimensions plus, for measurement tables, the measurement-type
    names actually present in the data (they filter as numeric ranges)."""
    schema = ds.schemas[pattern_iri]
    dims = [
        DimensionModel(name=d.name, kind=d.kind.value) for d in schema.dimensions.values()
    ]
    if schema.measure_source is not None:
        seen = set()
        for occ in ds.occurrences.get(pattern_iri, []):
            for sol in occ.solutions:
                mtype = sol.get(schema.measure_source.type_var)
                if mtype is not None:
                    seen.add(explore.term_text(mtype))
        dims.extend(
            DimensionModel(name=name, kind=explore.ColumnKind.DECIMAL.value)
            for name in sorted(seen)
        )
    return dims


def frame_to_dict(frame: VisualFrame) -> dict:
    if isinstance(frame, PartOfFrame):
        return {
            "frameType": frame.frame_type,
            "whole": _entity_dict(frame.whole),
            "parts": [_entity_dict(p) for p in frame.parts],
            "warnings": list(frame.warnings),
        }
    if isinstance(frame, MeasurementFrame):
        return {
            "frameType": frame.frame_type,
            "subject": _entity_dict(frame.subject),
            "measures": [
                {"type": m.type, "value": m.value, "unit": m.unit} for m in frame.measures
            ],
            "warnings": list(frame.warnings),
        }
    if isinstance(frame, TimedLocationFrame):
        return {
            "frameType": frame.frame_type,
            "subject": _entity_dict(frame.subject),
            "entries": [
                {
                    "locationType": e.location_type,
                    "placeLabel": e.place_label,
                    "lat": e.lat,
                    "lon": e.lon,
                    "start": e.start,
                    "end": e.end,
                }
                for e in frame.entries
            ],
            "warnings": list(frame.warnings),
        }
    raise ValueError(f"unknown frame {frame!r}")


def _entity_dict(entity: frames.FrameEntity) -> dict:
    return {"iri": entity.iri, "label": entity.label, "depiction": entity.depiction}


def summary_to_dict(graph: summary.SummaryGraph) -> dict:
    return {
        "nodes": [
            {
                "id": n.id,
                "kind": n.kind,
                "label": n.label,
                "size": n.size,
                "occurrences": n.occurrences,
            }
            for n in graph.nodes
        ],
        "edges": [
            {"source": s, "label": l, "target": t} for (s, l, t) in graph.edges
        ],
    }


def create_app(datasets: dict[str, Dataset], ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="ODP pattern engine", docs_url="/api/docs", openapi_url="/api/openapi.json")

    def dataset_or_404(dataset_id: str) -> Dataset:
        if dataset_id not in datasets:
            raise HTTPException(status_code=404, detail=f"unknown dataset {dataset_id!r}")
        return datasets[dataset_id]

    @app.get("/api/datasets", response_model=list[DatasetInfo])
    def list_datasets():
        return [
            DatasetInfo(
                id=ds.config.id,
                patternCount=len(ds.registry),
                tripleCount=len(ds.ontology) + len(ds.data),
            )
            for ds in datasets.values()
        ]

    @app.get("/api/datasets/{dataset_id}/summary", response_model=SummaryModel)
    def get_summary(dataset_id: str, threshold: int | None = Query(default=None)):
        ds = dataset_or_404(dataset_id)
        effective = threshold if threshold is not None else ds.config.key_concept_threshold
        if effective < 0:
            raise HTTPException(status_code=400, detail="threshold must be non-negative")
        graph = summary.build_summary(ds.ontology, ds.registry, ds.occurrence_counts, effective)
        return summary_to_dict(graph)

    @app.get("/api/datasets/{dataset_id}/patterns/{pattern_iri:path}/instances", response_model=TableModel)
    def get_instances(
        dataset_id: str,
        pattern_iri: str,
        filters: str = Query(default=""),
        world: str = Query(default="open"),
        offset: int = Query(default=0, ge=0),
        limit: int = Query(default=50, ge=1, le=1000),
    ):
        ds = dataset_or_404(dataset_id)
        if pattern_iri not in ds.schemas:
            raise HTTPException(status_code=404, detail=f"unknown pattern {pattern_iri!r}")
        schema = ds.schemas[pattern_iri]
        if world not in ("open", "closed"):
            raise HTTPException(status_code=422, detail=f"bad world value {world!r}")
        try:
            parsed = explore.parse_filter_expression(filters, schema)
        except FilterParseError as exc:
            raise HTTPException(status_code=422, detail={"code": "bad_filter", "token": exc.token, "message": str(exc)})
        filter_set = FilterSet(parsed, WorldAssumption(world))
        rows, total = explore.build_table(
            schema, ds.occurrences.get(pattern_iri, []), ds.data, filter_set, offset, limit
        )
        return TableModel(
            columns=[ColumnModel(name=c.name, kind=c.kind.value) for c in schema.columns],
            dimensions=_table_dimensions(ds, pattern_iri),
            rows=[RowModel(instanceIri=r.instance_iri, cells=r.cells) for r in rows],
            total=total,
        )

    @app.get("/api/datasets/{dataset_id}/instances/{instance_iri:path}")
    def get_instance(dataset_id: str, instance_iri: str):
        ds = dataset_or_404(dataset_id)
        occ = ds.instance_index.get(instance_iri)
        if occ is None:
            raise HTTPException(status_code=404, detail=f"unknown instance {instance_iri!r}")
        try:
            frame = frames.vmap(occ.pattern_id, occ, ds.data, ds.registry)
        except UnknownPattern as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        return JSONResponse(frame_to_dict(frame))

    @app.get("/api/datasets/{dataset_id}/resources/{resource_iri:path}")
    def get_resource(dataset_id: str, resource_iri: str):
        ds = dataset_or_404(dataset_id)
        term = Iri(resource_iri) if ":" in resource_iri else None
        if term is None:
            raise HTTPException(status_code=404, detail=f"unknown resource {resource_iri!r}")
        view = ds.resource_view(term)
        if not view.properties and not view.frames:
            raise HTTPException(status_code=404, detail=f"unknown resource {resource_iri!r}")
        return JSONResponse(
            {
                "resourceIri": view.resource_iri,
                "properties": [
                    {"predicate": p, "object": o} for (p, o) in view.properties
                ],
                "frames": [frame_to_dict(f) for f in view.frames],
            }
        )

    @app.get("/api/schemas/{name}")
    def get_schema(name: str):
        if not name.replace("_", "").isalnum():
            raise HTTPException(status_code=404, detail="unknown schema")
        ref = resources.files("odpkit.schemas").joinpath(f"{name}.schema.json")
        if not ref.is_file():
            raise HTTPException(status_code=404, detail="unknown schema")
        return JSONResponse(json.loads(ref.read_text(encoding="utf-8")))

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
