/** Typed client for the odpkit JSON API. The UI talks to nothing else. */

export interface DatasetInfo {
  id: string;
  patternCount: number;
  tripleCount: number;
}

export interface SummaryNode {
  id: string;
  kind: "Pattern" | "KeyConcept";
  label: string;
  size: number;
  occurrences: number | null;
}

export interface SummaryEdge {
  source: string;
  label: string;
  target: string;
}

export interface Summary {
  nodes: SummaryNode[];
  edges: SummaryEdge[];
}

export interface TableColumn {
  name: string;
  kind: string;
}

export interface TableRowData {
  instanceIri: string;
  cells: (string | number | null)[];
}

export interface TableDimension {
  name: string;
  kind: string;
}

export interface Table {
  columns: TableColumn[];
  dimensions: TableDimension[];
  rows: TableRowData[];
  total: number;
}

export interface FrameEntity {
  iri: string;
  label: string;
  depiction: string | null;
}

export interface Frame {
  frameType: string;
  warnings: string[];
  [key: string]: unknown;
}

export interface ResourceDoc {
  resourceIri: string;
  properties: { predicate: string; object: string }[];
  frames: Frame[];
}

export interface InstancesQuery {
  filters?: string;
  world?: string;
  offset?: number;
  limit?: number;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: unknown,
  ) {
    super(`API error ${status}`);
  }
}

async function getJson<T>(url: string): Promise<T> {
  const response = await fetch(url, { headers: { Accept: "application/json" } });
  if (!response.ok) {
    let detail: unknown = null;
    try {
      detail = (await response.json()).detail;
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  datasets(): Promise<DatasetInfo[]> {
    return getJson(`${this.base}/api/datasets`);
  }

  summary(datasetId: string, threshold?: number): Promise<Summary> {
    const query = threshold === undefined ? "" : `?threshold=${threshold}`;
    return getJson(`${this.base}/api/datasets/${encodeURIComponent(datasetId)}/summary${query}`);
  }

  instances(datasetId: string, patternIri: string, query: InstancesQuery = {}): Promise<Table> {
    const params = new URLSearchParams();
    if (query.filters) params.set("filters", query.filters);
    if (query.world) params.set("world", query.world);
    if (query.offset !== undefined) params.set("offset", String(query.offset));
    if (query.limit !== undefined) params.set("limit", String(query.limit));
    const suffix = params.toString() ? `?${params}` : "";
    return getJson(
      `${this.base}/api/datasets/${encodeURIComponent(datasetId)}/patterns/` +
        `${encodeURIComponent(patternIri)}/instances${suffix}`,
    );
  }

  instance(datasetId: string, instanceIri: string): Promise<Frame> {
    return getJson(
      `${this.base}/api/datasets/${encodeURIComponent(datasetId)}/instances/` +
        encodeURIComponent(instanceIri),
    );
  }

  resource(datasetId: string, resourceIri: string): Promise<ResourceDoc> {
    return getJson(
      `${this.base}/api/datasets/${encodeURIComponent(datasetId)}/resources/` +
        encodeURIComponent(resourceIri),
    );
  }
}
