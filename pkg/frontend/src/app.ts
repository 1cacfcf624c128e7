/** Application shell: hash router, API orchestration, event wiring.
 *
 * All view state lives in the URL; rendering is a pure function of
 * (route, API payload). Concurrent responses are resolved last-write-wins:
 * a response only renders if its request token is still current.
 */
import { ApiClient, ApiError, Summary } from "./api.js";
import {
  FilterItem,
  categoryFilter,
  getFilter,
  parseExpression,
  polygonFilter,
  polygonVertices,
  rangeFilter,
  removeFilter,
  serializeExpression,
  setFilter,
} from "./filters.js";
import {
  ExplorationRoute,
  UiRoute,
  decodeRoute,
  encodeRoute,
  explorationRoute,
} from "./state.js";
import { renderExploration, renderFilterError } from "./views/exploration.js";
import { errorBanner, esc } from "./views/html.js";
import { renderInstanceView } from "./views/instance.js";
import { DEFAULT_MAP, unproject } from "./views/map.js";
import { renderResourceView } from "./views/resource.js";
import { renderSummary } from "./views/summary.js";

export class App {
  private token = 0;
  private lastSummary: Summary | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient = new ApiClient(),
  ) {}

  start(): void {
    window.addEventListener("hashchange", () => void this.renderRoute());
    this.wireEvents();
    void this.renderRoute();
  }

  navigate(route: UiRoute): void {
    const hash = encodeRoute(route);
    if (window.location.hash === hash) {
      void this.renderRoute();
    } else {
      window.location.hash = hash; // triggers hashchange → render
    }
  }

  private currentRoute(): UiRoute {
    return decodeRoute(window.location.hash || "#/");
  }

  async renderRoute(): Promise<void> {
    const route = this.currentRoute();
    const token = ++this.token;
    try {
      const html = await this.renderView(route);
      if (token === this.token) this.root.innerHTML = html;
    } catch (error) {
      if (token !== this.token) return;
      if (error instanceof ApiError) {
        const detail = typeof error.detail === "string" ? `: ${error.detail}` : "";
        this.root.innerHTML = errorBanner(`API request failed (${error.status})${detail}`);
      } else {
        this.root.innerHTML = errorBanner(`service unreachable: ${String(error)}`);
      }
    }
  }

  private async renderView(route: UiRoute): Promise<string> {
    switch (route.view) {
      case "home": {
        const datasets = await this.api.datasets();
        const links = datasets
          .map(
            (d) =>
              `<li><a href="${esc(encodeRoute({ view: "summary", datasetId: d.id }))}">` +
              `${esc(d.id)}</a> — ${d.patternCount} patterns, ${d.tripleCount} triples</li>`,
          )
          .join("");
        return `<section class="home-view"><h2>datasets</h2><ul>${links || "<li>none configured</li>"}</ul></section>`;
      }
      case "summary": {
        const summary = await this.api.summary(route.datasetId, route.threshold);
        this.lastSummary = summary;
        return renderSummary(summary, route.threshold);
      }
      case "exploration": {
        try {
          const table = await this.api.instances(route.datasetId, route.patternIri, {
            filters: route.filters,
            world: route.world,
            offset: route.offset,
            limit: route.limit,
          });
          return renderExploration(table, route);
        } catch (error) {
          if (error instanceof ApiError && error.status === 422) {
            const detail = error.detail as { token?: string; message?: string } | null;
            const empty = renderExploration(
              { columns: [], dimensions: [], rows: [], total: 0 },
              route,
            );
            return renderFilterError(detail?.message ?? "invalid filter", detail?.token ?? "?") + empty;
          }
          throw error;
        }
      }
      case "instance": {
        const frame = await this.api.instance(route.datasetId, route.instanceIri);
        return renderInstanceView(frame, route.instanceIri);
      }
      case "resource": {
        const doc = await this.api.resource(route.datasetId, route.resourceIri);
        return renderResourceView(doc);
      }
    }
  }

  // --- events --------------------------------------------------------------

  private wireEvents(): void {
    this.root.addEventListener("dblclick", (event) => this.onDblClick(event));
    this.root.addEventListener("click", (event) => this.onClick(event));
    this.root.addEventListener("change", (event) => this.onChange(event));
    this.root.addEventListener("keydown", (event) => {
      if (event.key === "Enter" && (event.target as HTMLElement).matches?.("[data-role=extra]")) {
        event.preventDefault();
        this.onCategoryExtra(event.target as HTMLInputElement);
      }
    });
  }

  private onDblClick(event: Event): void {
    const target = event.target as HTMLElement;
    const node = target.closest<HTMLElement>("[data-node-id]");
    const route = this.currentRoute();
    if (node && route.view === "summary") {
      const pattern = this.resolvePattern(node.dataset.nodeId!, node.dataset.nodeKind!);
      if (pattern) this.navigate(explorationRoute(route.datasetId, pattern));
      return;
    }
    const row = target.closest<HTMLElement>("tr[data-instance-iri]");
    if (row && route.view === "exploration") {
      this.navigate({
        view: "instance",
        datasetId: route.datasetId,
        instanceIri: row.dataset.instanceIri!,
      });
    }
  }

  /** Key concepts explore through the first pattern they have a view on. */
  private resolvePattern(nodeId: string, kind: string): string | null {
    if (kind === "Pattern") return nodeId;
    const edge = this.lastSummary?.edges.find(
      (e) => e.source === nodeId && e.label === "hasView",
    );
    return edge ? edge.target : null;
  }

  private onClick(event: Event): void {
    const target = event.target as HTMLElement;
    const route = this.currentRoute();
    const entity = target.closest<HTMLElement>("[data-resource-iri]");
    if (entity && (route.view === "instance" || route.view === "resource")) {
      this.navigate({
        view: "resource",
        datasetId: route.datasetId,
        resourceIri: entity.dataset.resourceIri!,
      });
      return;
    }
    if (route.view !== "exploration") return;
    if (target.closest("[data-role=prev]")) {
      this.navigate({ ...route, offset: Math.max(0, route.offset - route.limit) });
      return;
    }
    if (target.closest("[data-role=next]")) {
      this.navigate({ ...route, offset: route.offset + route.limit });
      return;
    }
    if (target.closest("[data-role=clear-polygon]")) {
      const fieldset = target.closest<HTMLElement>("[data-dimension]");
      if (fieldset) {
        this.pendingVertices.delete(fieldset.dataset.dimension!);
        this.updateFilters(route, (items) => removeFilter(items, fieldset.dataset.dimension!));
      }
      return;
    }
    const map = target.closest<SVGSVGElement>("svg.map.interactive");
    if (map) this.onMapClick(route, map, event as MouseEvent);
  }

  /** Vertices collected so far for each polygon control; only once three
   * exist does the filter become real (and URL-visible). */
  private pendingVertices = new Map<string, [number, number][]>();

  private onMapClick(route: ExplorationRoute, map: SVGSVGElement, event: MouseEvent): void {
    const fieldset = map.closest<HTMLElement>("[data-dimension]");
    if (!fieldset) return;
    const dimension = fieldset.dataset.dimension!;
    const rect = map.getBoundingClientRect();
    const x = ((event.clientX - rect.left) / Math.max(rect.width, 1)) * DEFAULT_MAP.width;
    const y = ((event.clientY - rect.top) / Math.max(rect.height, 1)) * DEFAULT_MAP.height;
    const [lat, lon] = unproject(DEFAULT_MAP, x, y);
    const existing =
      this.pendingVertices.get(dimension) ??
      polygonVertices(getFilter(parseExpression(route.filters), dimension));
    const vertices: [number, number][] = [
      ...existing,
      [Number(lat.toFixed(4)), Number(lon.toFixed(4))],
    ];
    const filter = polygonFilter(dimension, vertices);
    if (filter) {
      this.pendingVertices.delete(dimension);
      this.updateFilters(route, (items) => setFilter(items, filter));
    } else {
      this.pendingVertices.set(dimension, vertices);
      const counter = fieldset.querySelector("[data-role=vertex-count]");
      if (counter) counter.textContent = `${vertices.length} vertices`;
    }
  }

  private onChange(event: Event): void {
    const route = this.currentRoute();
    if (route.view !== "exploration") {
      const slider = (event.target as HTMLElement).closest<HTMLInputElement>("[data-role=threshold]");
      if (slider && route.view === "summary") {
        this.navigate({ ...route, threshold: Number(slider.value) });
      }
      return;
    }
    const target = event.target as HTMLInputElement;
    if (target.name === "world") {
      this.navigate({ ...route, world: target.value === "closed" ? "closed" : "open", offset: 0 });
      return;
    }
    const fieldset = target.closest<HTMLElement>("[data-dimension]");
    if (!fieldset) return;
    const dimension = fieldset.dataset.dimension!;
    const kind = fieldset.dataset.kind!;
    this.updateFilters(route, (items) => {
      if (kind === "range" || kind === "interval") {
        const min = fieldset.querySelector<HTMLInputElement>("[data-role=min]")!.value;
        const max = fieldset.querySelector<HTMLInputElement>("[data-role=max]")!.value;
        const filter = rangeFilter(dimension, min, max);
        return filter ? setFilter(items, filter) : removeFilter(items, dimension);
      }
      if (kind === "text") {
        const needle = fieldset.querySelector<HTMLInputElement>("[data-role=needle]")!.value.trim();
        return needle
          ? setFilter(items, { dimension, op: "contains", value: needle })
          : removeFilter(items, dimension);
      }
      if (kind === "category") {
        const checked = [...fieldset.querySelectorAll<HTMLInputElement>("[data-role=choice]:checked")]
          .map((box) => box.value);
        const filter = categoryFilter(dimension, checked);
        return filter ? setFilter(items, filter) : removeFilter(items, dimension);
      }
      return items;
    });
  }

  private onCategoryExtra(input: HTMLInputElement): void {
    const route = this.currentRoute();
    if (route.view !== "exploration") return;
    const fieldset = input.closest<HTMLElement>("[data-dimension]");
    const value = input.value.trim();
    if (!fieldset || !value) return;
    const dimension = fieldset.dataset.dimension!;
    this.updateFilters(route, (items) => {
      const existing = getFilter(items, dimension);
      const values = existing && existing.op === "in" ? existing.value.split("|") : [];
      const filter = categoryFilter(dimension, [...values, value]);
      return filter ? setFilter(items, filter) : items;
    });
  }

  private updateFilters(
    route: ExplorationRoute,
    transform: (items: FilterItem[]) => FilterItem[],
  ): void {
    const items = transform(parseExpression(route.filters));
    this.navigate({ ...route, filters: serializeExpression(items), offset: 0 });
  }
}

export function bootstrap(): void {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app mount point");
  new App(root).start();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  bootstrap();
}
