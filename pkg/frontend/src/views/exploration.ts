/** Exploration level: one filterable table per pattern.
 *
 * Controls are generated from the API's dimension list by kind:
 * numeric → min/max range inputs, year → interval picker, category →
 * checkboxes (choices harvested from a matching column when one exists,
 * free text otherwise), text → substring input, geographic → map with
 * polygon drawing. The displayed total is always the API `total` field.
 */
import type { Table, TableColumn } from "../api.js";
import type { ExplorationRoute } from "../state.js";
import {
  FilterItem,
  categoryValues,
  getFilter,
  parseExpression,
  polygonVertices,
  rangeBounds,
} from "../filters.js";
import { esc, localName } from "./html.js";
import { DEFAULT_MAP, renderMap } from "./map.js";

function rangeControl(name: string, item: FilterItem | undefined): string {
  const { min, max } = rangeBounds(item);
  return `
<fieldset class="filter" data-dimension="${esc(name)}" data-kind="range">
  <legend>${esc(name)}</legend>
  <input type="number" step="any" data-role="min" placeholder="min" value="${esc(min)}"/>
  –
  <input type="number" step="any" data-role="max" placeholder="max" value="${esc(max)}"/>
</fieldset>`;
}

function intervalControl(name: string, item: FilterItem | undefined): string {
  const { min, max } = rangeBounds(item);
  return `
<fieldset class="filter" data-dimension="${esc(name)}" data-kind="interval">
  <legend>${esc(name)}</legend>
  <input type="number" step="1" data-role="min" placeholder="from year" value="${esc(min)}"/>
  –
  <input type="number" step="1" data-role="max" placeholder="to year" value="${esc(max)}"/>
</fieldset>`;
}

function textControl(name: string, item: FilterItem | undefined): string {
  const value = item && item.op === "contains" ? item.value : "";
  return `
<fieldset class="filter" data-dimension="${esc(name)}" data-kind="text">
  <legend>${esc(name)}</legend>
  <input type="text" data-role="needle" placeholder="contains…" value="${esc(value)}"/>
</fieldset>`;
}

/** Distinct values of the column matching a category dimension, harvested
 * from the current page. Incomplete by construction; the free-text row lets
 * the user add anything else. */
function categoryChoices(table: Table, name: string): string[] {
  const index = table.columns.findIndex(
    (c: TableColumn) => c.name === name && c.kind === "Category",
  );
  if (index < 0) return [];
  const values = new Set<string>();
  for (const row of table.rows) {
    const cell = row.cells[index];
    if (typeof cell === "string" && cell !== "") values.add(cell);
  }
  return [...values].sort();
}

function categoryControl(name: string, item: FilterItem | undefined, table: Table): string {
  const selected = new Set(categoryValues(item));
  const choices = new Set([...categoryChoices(table, name), ...selected]);
  const boxes = [...choices]
    .sort()
    .map(
      (value) =>
        `<label><input type="checkbox" data-role="choice" value="${esc(value)}"` +
        `${selected.has(value) ? " checked" : ""}/> ${esc(value)}</label>`,
    )
    .join("");
  return `
<fieldset class="filter" data-dimension="${esc(name)}" data-kind="category">
  <legend>${esc(name)}</legend>
  ${boxes || '<span class="hint">type values below</span>'}
  <input type="text" data-role="extra" placeholder="add value, press Enter"/>
</fieldset>`;
}

function geoControl(name: string, item: FilterItem | undefined): string {
  const vertices = polygonVertices(item);
  const map = renderMap(DEFAULT_MAP, { polygon: vertices, interactive: true });
  return `
<fieldset class="filter" data-dimension="${esc(name)}" data-kind="geo">
  <legend>${esc(name)}</legend>
  <p class="hint">click to add vertices (3+ close the perimeter)</p>
  ${map}
  <button type="button" data-role="clear-polygon">clear polygon</button>
  <span data-role="vertex-count">${vertices.length} vertices</span>
</fieldset>`;
}

export function renderExploration(table: Table, route: ExplorationRoute): string {
  const items = parseExpression(route.filters);
  const controls = table.dimensions
    .map((dim) => {
      const item = getFilter(items, dim.name);
      switch (dim.kind) {
        case "Integer":
        case "Decimal":
          return rangeControl(dim.name, item);
        case "DateTimeYear":
          return intervalControl(dim.name, item);
        case "Category":
          return categoryControl(dim.name, item, table);
        case "GeoPoint":
          return geoControl(dim.name, item);
        default:
          return textControl(dim.name, item);
      }
    })
    .join("");
  const header = table.columns.map((c) => `<th>${esc(c.name)}</th>`).join("");
  const rows = table.rows
    .map((row) => {
      const cells = row.cells
        .map((cell) => `<td>${cell === null ? "—" : esc(cell)}</td>`)
        .join("");
      return `<tr data-instance-iri="${esc(row.instanceIri)}" tabindex="0">${cells}</tr>`;
    })
    .join("");
  const page = Math.floor(route.offset / route.limit) + 1;
  const pages = Math.max(1, Math.ceil(table.total / route.limit));
  return `
<section class="exploration-view">
  <h2>${esc(localName(route.patternIri))}</h2>
  <form class="filters" data-role="filters">
    ${controls}
    <fieldset class="filter world-toggle" data-kind="world">
      <legend>missing values</legend>
      <label><input type="radio" name="world" value="open"${route.world === "open" ? " checked" : ""}/> open world (keep)</label>
      <label><input type="radio" name="world" value="closed"${route.world === "closed" ? " checked" : ""}/> closed world (drop)</label>
    </fieldset>
  </form>
  <p class="total">total: <strong data-role="total">${table.total}</strong></p>
  <table class="instances">
    <thead><tr>${header}</tr></thead>
    <tbody>${rows || `<tr><td colspan="${table.columns.length}" class="placeholder">no matching instances</td></tr>`}</tbody>
  </table>
  <nav class="pager">
    <button type="button" data-role="prev"${route.offset === 0 ? " disabled" : ""}>previous</button>
    <span>page ${page} / ${pages}</span>
    <button type="button" data-role="next"${route.offset + route.limit >= table.total ? " disabled" : ""}>next</button>
  </nav>
  <p class="hint">double-click a row for its visual frame</p>
</section>`;
}

export function renderFilterError(message: string, token: string): string {
  return `<div class="filter-error" role="alert">bad filter at <code>${esc(token)}</code>: ${esc(message)}</div>`;
}
