/** Resource page: property-value pairs plus a mosaic grid of every frame the
 * resource participates in. */
import type { ResourceDoc } from "../api.js";
import { esc } from "./html.js";
import { renderFrame } from "./instance.js";

export function renderResourceView(doc: ResourceDoc): string {
  const properties = doc.properties
    .map(
      (p) =>
        `<tr><td class="predicate">${esc(p.predicate)}</td><td>${esc(p.object)}</td></tr>`,
    )
    .join("");
  const frames = doc.frames.map((f) => renderFrame(f)).join("");
  const mosaic = doc.frames.length
    ? `<div class="mosaic" data-frame-count="${doc.frames.length}">${frames}</div>`
    : `<p class="placeholder">no pattern frames for this resource</p>`;
  return `
<section class="resource-view">
  <h2 class="iri">${esc(doc.resourceIri)}</h2>
  <table class="properties">
    <tbody>${properties || '<tr><td class="placeholder">no direct properties</td></tr>'}</tbody>
  </table>
  ${mosaic}
</section>`;
}
