/** Minimal equirectangular map rendered as inline SVG.
 *
 * Tiles come from a configurable URL template; when none is configured (the
 * default, and always in tests) the map falls back to a single-color
 * background so rendering is deterministic and needs no network.
 */
import { esc } from "./html.js";

export interface MapConfig {
  tileUrl?: string; // e.g. "https://tiles.example/{z}/{x}/{y}.png"
  width: number;
  height: number;
  latMin: number;
  latMax: number;
  lonMin: number;
  lonMax: number;
}

export const DEFAULT_MAP: MapConfig = {
  width: 420,
  height: 300,
  latMin: 35,
  latMax: 55,
  lonMin: -6,
  lonMax: 20,
};

export function project(config: MapConfig, lat: number, lon: number): [number, number] {
  const x = ((lon - config.lonMin) / (config.lonMax - config.lonMin)) * config.width;
  const y = ((config.latMax - lat) / (config.latMax - config.latMin)) * config.height;
  return [x, y];
}

export function unproject(config: MapConfig, x: number, y: number): [number, number] {
  const lon = config.lonMin + (x / config.width) * (config.lonMax - config.lonMin);
  const lat = config.latMax - (y / config.height) * (config.latMax - config.latMin);
  return [lat, lon];
}

export interface MapContent {
  markers?: { lat: number; lon: number; label: string }[];
  polygon?: [number, number][];
  interactive?: boolean;
}

export function renderMap(config: MapConfig, content: MapContent): string {
  const background = config.tileUrl
    ? `<image href="${esc(config.tileUrl)}" width="${config.width}" height="${config.height}"/>`
    : `<rect class="map-sea" width="${config.width}" height="${config.height}"/>`;
  const markers = (content.markers ?? [])
    .map(({ lat, lon, label }) => {
      const [x, y] = project(config, lat, lon);
      return (
        `<g class="map-marker"><circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="4"/>` +
        `<text x="${(x + 6).toFixed(1)}" y="${(y - 6).toFixed(1)}">${esc(label)}</text></g>`
      );
    })
    .join("");
  let polygon = "";
  if (content.polygon && content.polygon.length) {
    const points = content.polygon
      .map(([lat, lon]) => project(config, lat, lon))
      .map(([x, y]) => `${x.toFixed(1)},${y.toFixed(1)}`)
      .join(" ");
    const tag = content.polygon.length >= 3 ? "polygon" : "polyline";
    polygon = `<${tag} class="map-polygon" points="${points}"/>`;
  }
  const cls = content.interactive ? "map interactive" : "map";
  return (
    `<svg class="${cls}" data-role="map" viewBox="0 0 ${config.width} ${config.height}"` +
    ` width="${config.width}" height="${config.height}">${background}${polygon}${markers}</svg>`
  );
}
