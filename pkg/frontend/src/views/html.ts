/** Views are pure functions from API payloads to HTML strings; the app shell
 * owns the DOM. Keeping rendering side-effect free makes it unit-testable
 * without a browser. */

export function esc(value: unknown): string {
  return String(value)
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;")
    .replaceAll("'", "&#39;");
}

export function localName(iri: string): string {
  const hash = iri.lastIndexOf("#");
  const slash = iri.lastIndexOf("/");
  const colon = iri.lastIndexOf(":");
  const cut = Math.max(hash, slash, colon);
  return cut >= 0 && cut < iri.length - 1 ? iri.slice(cut + 1) : iri;
}

export function errorBanner(message: string): string {
  return `<div class="error-banner" role="alert">${esc(message)}</div>`;
}

export function warningBadge(warnings: string[]): string {
  if (!warnings.length) return "";
  const title = warnings.join("; ");
  return `<span class="warning-badge" title="${esc(title)}">⚠ ${warnings.length}</span>`;
}
