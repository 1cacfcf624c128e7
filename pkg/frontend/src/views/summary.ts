/** Summary level: node-link diagram of patterns and key concepts. */
import type { Summary, SummaryNode } from "../api.js";
import { esc, localName } from "./html.js";

const WIDTH = 760;
const HEIGHT = 480;

interface Placed {
  node: SummaryNode;
  x: number;
  y: number;
  r: number;
}

/** Two concentric rings: patterns outside, key concepts inside. Layouts in
 * the literature are schematic, so a deterministic circular placement keeps
 * snapshots stable. */
function layout(summary: Summary): Map<string, Placed> {
  const placed = new Map<string, Placed>();
  const patterns = summary.nodes.filter((n) => n.kind === "Pattern");
  const concepts = summary.nodes.filter((n) => n.kind !== "Pattern");
  const cx = WIDTH / 2;
  const cy = HEIGHT / 2;
  patterns.forEach((node, i) => {
    const angle = (2 * Math.PI * i) / Math.max(patterns.length, 1) - Math.PI / 2;
    placed.set(node.id, {
      node,
      x: cx + 260 * Math.cos(angle),
      y: cy + 180 * Math.sin(angle),
      r: 10 + node.size * 5,
    });
  });
  concepts.forEach((node, i) => {
    const angle = (2 * Math.PI * i) / Math.max(concepts.length, 1) + Math.PI / 2;
    placed.set(node.id, {
      node,
      x: cx + (concepts.length > 1 ? 90 : 0) * Math.cos(angle),
      y: cy + (concepts.length > 1 ? 70 : 0) * Math.sin(angle),
      r: 8 + node.size * 2,
    });
  });
  return placed;
}

export function renderSummary(summary: Summary, threshold: number | undefined): string {
  if (!summary.nodes.length) {
    return `<section class="summary-view"><p class="placeholder">no patterns</p></section>`;
  }
  const placed = layout(summary);
  const edges = summary.edges
    .map((edge) => {
      const from = placed.get(edge.source);
      const to = placed.get(edge.target);
      if (!from || !to) return "";
      const mx = (from.x + to.x) / 2;
      const my = (from.y + to.y) / 2;
      return (
        `<g class="edge edge-${esc(edge.label)}">` +
        `<line x1="${from.x.toFixed(1)}" y1="${from.y.toFixed(1)}"` +
        ` x2="${to.x.toFixed(1)}" y2="${to.y.toFixed(1)}"/>` +
        `<text x="${mx.toFixed(1)}" y="${(my - 4).toFixed(1)}">${esc(edge.label)}</text></g>`
      );
    })
    .join("");
  const nodes = [...placed.values()]
    .map(({ node, x, y, r }) => {
      const occurrences =
        node.occurrences === null ? "" : ` (${node.occurrences} occurrence${node.occurrences === 1 ? "" : "s"})`;
      return (
        `<g class="node node-${node.kind === "Pattern" ? "pattern" : "concept"}"` +
        ` data-node-id="${esc(node.id)}" data-node-kind="${esc(node.kind)}" tabindex="0">` +
        `<title>${esc(node.label)}${esc(occurrences)}</title>` +
        `<circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="${r.toFixed(1)}"/>` +
        `<text x="${x.toFixed(1)}" y="${(y + r + 14).toFixed(1)}">${esc(node.label || localName(node.id))}</text></g>`
      );
    })
    .join("");
  const sliderValue = threshold === undefined ? "" : String(threshold);
  return `
<section class="summary-view">
  <div class="toolbar">
    <label>key-concept threshold
      <input type="range" min="0" max="20" step="1" data-role="threshold"
             value="${esc(sliderValue || "7")}"/>
      <output data-role="threshold-value">${esc(sliderValue || "default")}</output>
    </label>
    <span class="hint">double-click a node to explore its instances</span>
  </div>
  <svg class="summary-graph" viewBox="0 0 ${WIDTH} ${HEIGHT}" width="${WIDTH}" height="${HEIGHT}">
    ${edges}
    ${nodes}
  </svg>
</section>`;
}
