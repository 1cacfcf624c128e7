/** Route model: every view state round-trips through the URL hash, so any
 * deep link reproduces the exact view (filters, world, page, threshold). */

export interface SummaryRoute {
  view: "summary";
  datasetId: string;
  threshold?: number;
}

export interface ExplorationRoute {
  view: "exploration";
  datasetId: string;
  patternIri: string;
  filters: string;
  world: "open" | "closed";
  offset: number;
  limit: number;
}

export interface InstanceRoute {
  view: "instance";
  datasetId: string;
  instanceIri: string;
}

export interface ResourceRoute {
  view: "resource";
  datasetId: string;
  resourceIri: string;
}

export interface HomeRoute {
  view: "home";
}

export type UiRoute = HomeRoute | SummaryRoute | ExplorationRoute | InstanceRoute | ResourceRoute;

export const DEFAULT_LIMIT = 25;

export function explorationRoute(
  datasetId: string,
  patternIri: string,
  overrides: Partial<Omit<ExplorationRoute, "view" | "datasetId" | "patternIri">> = {},
): ExplorationRoute {
  return {
    view: "exploration",
    datasetId,
    patternIri,
    filters: overrides.filters ?? "",
    world: overrides.world ?? "open",
    offset: overrides.offset ?? 0,
    limit: overrides.limit ?? DEFAULT_LIMIT,
  };
}

export function encodeRoute(route: UiRoute): string {
  switch (route.view) {
    case "home":
      return "#/";
    case "summary": {
      const query = route.threshold === undefined ? "" : `?threshold=${route.threshold}`;
      return `#/d/${encodeURIComponent(route.datasetId)}/summary${query}`;
    }
    case "exploration": {
      const params = new URLSearchParams();
      if (route.filters) params.set("filters", route.filters);
      if (route.world !== "open") params.set("world", route.world);
      if (route.offset !== 0) params.set("offset", String(route.offset));
      if (route.limit !== DEFAULT_LIMIT) params.set("limit", String(route.limit));
      const query = params.toString() ? `?${params}` : "";
      return (
        `#/d/${encodeURIComponent(route.datasetId)}/explore/` +
        `${encodeURIComponent(route.patternIri)}${query}`
      );
    }
    case "instance":
      return (
        `#/d/${encodeURIComponent(route.datasetId)}/instance/` +
        encodeURIComponent(route.instanceIri)
      );
    case "resource":
      return (
        `#/d/${encodeURIComponent(route.datasetId)}/resource/` +
        encodeURIComponent(route.resourceIri)
      );
  }
}

export function decodeRoute(hash: string): UiRoute {
  const raw = hash.startsWith("#") ? hash.slice(1) : hash;
  const queryIndex = raw.indexOf("?");
  const path = queryIndex >= 0 ? raw.slice(0, queryIndex) : raw;
  const params = new URLSearchParams(queryIndex >= 0 ? raw.slice(queryIndex + 1) : "");
  const segments = path.split("/").filter((s) => s !== "");
  if (segments.length < 3 || segments[0] !== "d") return { view: "home" };
  const datasetId = decodeURIComponent(segments[1]);
  switch (segments[2]) {
    case "summary": {
      const threshold = params.get("threshold");
      return {
        view: "summary",
        datasetId,
        ...(threshold !== null && threshold !== "" ? { threshold: Number(threshold) } : {}),
      };
    }
    case "explore": {
      if (segments.length < 4) return { view: "home" };
      const world = params.get("world") === "closed" ? "closed" : "open";
      return {
        view: "exploration",
        datasetId,
        patternIri: decodeURIComponent(segments[3]),
        filters: params.get("filters") ?? "",
        world,
        offset: Number(params.get("offset") ?? "0") || 0,
        limit: Number(params.get("limit") ?? String(DEFAULT_LIMIT)) || DEFAULT_LIMIT,
      };
    }
    case "instance":
      if (segments.length < 4) return { view: "home" };
      return { view: "instance", datasetId, instanceIri: decodeURIComponent(segments[3]) };
    case "resource":
      if (segments.length < 4) return { view: "home" };
      return { view: "resource", datasetId, resourceIri: decodeURIComponent(segments[3]) };
    default:
      return { view: "home" };
  }
}
