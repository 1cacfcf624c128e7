import { describe, expect, it } from "vitest";
import type { Frame, ResourceDoc, Summary, Table } from "../src/api.js";
import { explorationRoute } from "../src/state.js";
import { renderExploration, renderFilterError } from "../src/views/exploration.js";
import { esc } from "../src/views/html.js";
import { renderFrame, renderInstanceView } from "../src/views/instance.js";
import { DEFAULT_MAP, project, renderMap, unproject } from "../src/views/map.js";
import { renderResourceView } from "../src/views/resource.js";
import { renderSummary } from "../src/views/summary.js";

const summary: Summary = {
  nodes: [
    { id: "http://e/CPCO", kind: "Pattern", label: "PartOf", size: 3.9, occurrences: 49 },
    { id: "http://e/PartOf", kind: "Pattern", label: "Part Of", size: 0, occurrences: 0 },
    { id: "http://e/CulturalProperty", kind: "KeyConcept", label: "Cultural Property", size: 8, occurrences: null },
  ],
  edges: [
    { source: "http://e/CPCO", label: "specializes", target: "http://e/PartOf" },
    { source: "http://e/CulturalProperty", label: "hasView", target: "http://e/CPCO" },
  ],
};

describe("summary view", () => {
  it("renders every node and edge label", () => {
    const html = renderSummary(summary, 7);
    expect(html).toContain('data-node-id="http://e/CPCO"');
    expect(html).toContain("specializes");
    expect(html).toContain("hasView");
    expect(html).toContain("node-concept");
    expect(html).toContain('data-role="threshold"');
  });

  it("shows a placeholder for an empty summary", () => {
    expect(renderSummary({ nodes: [], edges: [] }, undefined)).toContain("no patterns");
  });

  it("escapes labels", () => {
    const hostile: Summary = {
      nodes: [{ id: "x", kind: "Pattern", label: "<img src=x>", size: 1, occurrences: 1 }],
      edges: [],
    };
    expect(renderSummary(hostile, undefined)).not.toContain("<img src=x>");
  });
});

const table: Table = {
  columns: [
    { name: "label", kind: "Text" },
    { name: "locationType", kind: "Category" },
    { name: "start", kind: "DateTimeYear" },
  ],
  dimensions: [
    { name: "label", kind: "Text" },
    { name: "locationType", kind: "Category" },
    { name: "time", kind: "DateTimeYear" },
    { name: "height", kind: "Decimal" },
    { name: "coordinates", kind: "GeoPoint" },
  ],
  rows: [
    { instanceIri: "urn:i:1", cells: ["Prop 1", "CurrentLocation", 1856] },
    { instanceIri: "urn:i:2", cells: ["Prop 2", "Provenance", null] },
  ],
  total: 7,
};

describe("exploration view", () => {
  const route = explorationRoute("fixture", "http://e/TITL", {
    filters: "time:between:1800..1900,locationType:in:CurrentLocation",
    world: "closed",
  });

  it("renders one control per dimension, typed by kind", () => {
    const html = renderExploration(table, route);
    expect(html).toContain('data-dimension="height" data-kind="range"');
    expect(html).toContain('data-dimension="time" data-kind="interval"');
    expect(html).toContain('data-dimension="coordinates" data-kind="geo"');
    expect(html).toContain('data-dimension="locationType" data-kind="category"');
    expect(html).toContain('data-dimension="label" data-kind="text"');
  });

  it("shows the API total verbatim and marks rows", () => {
    const html = renderExploration(table, route);
    expect(html).toContain('<strong data-role="total">7</strong>');
    expect(html).toContain('data-instance-iri="urn:i:1"');
    expect(html).toContain("—"); // null cell placeholder
  });

  it("pre-fills controls from the route filters", () => {
    const html = renderExploration(table, route);
    expect(html).toContain('value="1800"');
    expect(html).toContain('value="1900"');
    expect(html).toMatch(/value="CurrentLocation"\s+checked/);
    expect(html).toContain('value="closed" checked');
  });

  it("harvests category choices from rows", () => {
    const html = renderExploration(table, explorationRoute("fixture", "http://e/TITL"));
    expect(html).toContain('value="Provenance"');
  });

  it("renders an inline error for bad filters", () => {
    const html = renderFilterError("unknown operator", "banana");
    expect(html).toContain("banana");
    expect(html).toContain("unknown operator");
  });
});

describe("frames", () => {
  it("part-of frame encloses parts and exposes count", () => {
    const frame: Frame = {
      frameType: "partOf",
      warnings: [],
      whole: { iri: "http://e/w", label: "Altar", depiction: "http://e/img.jpg" },
      parts: [
        { iri: "http://e/p1", label: "Panel", depiction: null },
        { iri: "http://e/p2", label: "Frame", depiction: null },
      ],
    };
    const html = renderFrame(frame);
    expect(html).toContain('data-part-count="2"');
    expect(html).toContain('src="http://e/img.jpg"');
    expect(html).toContain('data-resource-iri="http://e/p1"');
  });

  it("measurement frame renders a warning badge when present", () => {
    const frame: Frame = {
      frameType: "measurementCollection",
      warnings: ["unparsable value"],
      subject: { iri: "http://e/s", label: "Vase", depiction: null },
      measures: [{ type: "height", value: 2.4, unit: "m" }],
    };
    const html = renderFrame(frame);
    expect(html).toContain("warning-badge");
    expect(html).toContain("height");
    expect(html).toContain("2.4");
  });

  it("timed-location frame plots markers only for located entries", () => {
    const frame: Frame = {
      frameType: "timedLocation",
      warnings: [],
      subject: { iri: "http://e/s", label: "Statue", depiction: null },
      entries: [
        { locationType: "CurrentLocation", placeLabel: "Firenze", lat: 43.8, lon: 11.3, start: 1900, end: 1950 },
        { locationType: "Provenance", placeLabel: "Unknown", lat: null, lon: null, start: null, end: null },
      ],
    };
    const html = renderFrame(frame);
    expect((html.match(/map-marker/g) ?? []).length).toBe(1);
    expect(html).toContain("1900 – 1950");
    expect(html).toContain("time unknown");
  });

  it("unknown frame types fall back to raw JSON", () => {
    const html = renderFrame({ frameType: "holographic", warnings: [] });
    expect(html).toContain("frame-raw");
    expect(html).toContain("holographic");
  });

  it("instance view wraps the frame", () => {
    const html = renderInstanceView({ frameType: "x", warnings: [] }, "urn:i:9");
    expect(html).toContain("urn:i:9");
  });
});

describe("resource view", () => {
  it("renders properties and a mosaic grid", () => {
    const doc: ResourceDoc = {
      resourceIri: "http://e/r",
      properties: [{ predicate: "label", object: "Thing" }],
      frames: [
        { frameType: "x", warnings: [] },
        { frameType: "y", warnings: [] },
      ],
    };
    const html = renderResourceView(doc);
    expect(html).toContain('data-frame-count="2"');
    expect(html).toContain("Thing");
  });

  it("renders a properties-only page for frameless resources", () => {
    const doc: ResourceDoc = { resourceIri: "http://e/r", properties: [], frames: [] };
    expect(renderResourceView(doc)).toContain("no pattern frames");
  });
});

describe("map", () => {
  it("project and unproject are inverse", () => {
    const [x, y] = project(DEFAULT_MAP, 48.85, 2.35);
    const [lat, lon] = unproject(DEFAULT_MAP, x, y);
    expect(lat).toBeCloseTo(48.85, 6);
    expect(lon).toBeCloseTo(2.35, 6);
  });

  it("falls back to a single-color background without a tile URL", () => {
    const html = renderMap(DEFAULT_MAP, {});
    expect(html).toContain("map-sea");
    expect(html).not.toContain("<image");
  });

  it("draws polygons from lat/lon vertices", () => {
    const html = renderMap(DEFAULT_MAP, {
      polygon: [
        [48.6, 2.1],
        [49.1, 2.1],
        [49.1, 2.6],
      ],
    });
    expect(html).toContain("map-polygon");
    expect(html).toContain("<polygon");
  });
});

describe("escaping", () => {
  it("neutralizes html metacharacters", () => {
    expect(esc('<a href="x">&\'')).toBe("&lt;a href=&quot;x&quot;&gt;&amp;&#39;");
  });
});
