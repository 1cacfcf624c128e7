/** Client-side model of the `dim:op:value` filter wire grammar.
 *
 * The server is the authority on validation; this module only needs to
 * compose, split, and re-serialize expressions so every control change can
 * update one dimension without touching the others.
 */

export type FilterOp = "gte" | "lte" | "between" | "in" | "contains" | "within";

export interface FilterItem {
  dimension: string;
  op: FilterOp;
  value: string;
}

const OPS: ReadonlySet<string> = new Set(["gte", "lte", "between", "in", "contains", "within"]);

/** Split a wire expression into items. Malformed items are dropped rather
 * than thrown: the URL is user-editable and the server re-validates anyway. */
export function parseExpression(expression: string): FilterItem[] {
  const items: FilterItem[] = [];
  for (const raw of expression.split(",")) {
    const item = raw.trim();
    if (!item) continue;
    const first = item.indexOf(":");
    const second = item.indexOf(":", first + 1);
    if (first < 1 || second < 0) continue;
    const op = item.slice(first + 1, second);
    if (!OPS.has(op)) continue;
    items.push({
      dimension: item.slice(0, first),
      op: op as FilterOp,
      value: item.slice(second + 1),
    });
  }
  return items;
}

export function serializeExpression(items: FilterItem[]): string {
  return items.map((f) => `${f.dimension}:${f.op}:${f.value}`).join(",");
}

/** Replace (or add) the filter on one dimension; at most one per dimension. */
export function setFilter(items: FilterItem[], next: FilterItem): FilterItem[] {
  return [...items.filter((f) => f.dimension !== next.dimension), next];
}

export function removeFilter(items: FilterItem[], dimension: string): FilterItem[] {
  return items.filter((f) => f.dimension !== dimension);
}

export function getFilter(items: FilterItem[], dimension: string): FilterItem | undefined {
  return items.find((f) => f.dimension === dimension);
}

/** Range helper: min/max inputs map to gte / lte / between. */
export function rangeFilter(dimension: string, min: string, max: string): FilterItem | null {
  const hasMin = min.trim() !== "";
  const hasMax = max.trim() !== "";
  if (hasMin && hasMax) return { dimension, op: "between", value: `${min.trim()}..${max.trim()}` };
  if (hasMin) return { dimension, op: "gte", value: min.trim() };
  if (hasMax) return { dimension, op: "lte", value: max.trim() };
  return null;
}

export function rangeBounds(item: FilterItem | undefined): { min: string; max: string } {
  if (!item) return { min: "", max: "" };
  if (item.op === "gte") return { min: item.value, max: "" };
  if (item.op === "lte") return { min: "", max: item.value };
  if (item.op === "between") {
    const sep = item.value.indexOf("..");
    if (sep >= 0) return { min: item.value.slice(0, sep), max: item.value.slice(sep + 2) };
  }
  return { min: "", max: "" };
}

/** Polygon helper: vertices as `lat lon` pairs for the `within` operator. */
export function polygonFilter(dimension: string, vertices: [number, number][]): FilterItem | null {
  if (vertices.length < 3) return null;
  return {
    dimension,
    op: "within",
    value: vertices.map(([lat, lon]) => `${lat} ${lon}`).join(";"),
  };
}

export function polygonVertices(item: FilterItem | undefined): [number, number][] {
  if (!item || item.op !== "within") return [];
  const vertices: [number, number][] = [];
  for (const pair of item.value.split(";")) {
    const parts = pair.trim().split(/\s+/);
    if (parts.length !== 2) continue;
    const lat = Number(parts[0]);
    const lon = Number(parts[1]);
    if (Number.isFinite(lat) && Number.isFinite(lon)) vertices.push([lat, lon]);
  }
  return vertices;
}

export function categoryFilter(dimension: string, values: string[]): FilterItem | null {
  const cleaned = values.map((v) => v.trim()).filter((v) => v !== "");
  if (!cleaned.length) return null;
  return { dimension, op: "in", value: cleaned.join("|") };
}

export function categoryValues(item: FilterItem | undefined): string[] {
  if (!item || item.op !== "in") return [];
  return item.value.split("|").filter((v) => v !== "");
}
