/** Visualization level: one visual frame per pattern occurrence. */
import type { Frame, FrameEntity } from "../api.js";
import { esc, warningBadge } from "./html.js";
import { DEFAULT_MAP, renderMap } from "./map.js";

interface PartOfFrame extends Frame {
  whole: FrameEntity;
  parts: FrameEntity[];
}

interface MeasurementFrame extends Frame {
  subject: FrameEntity;
  measures: { type: string; value: number; unit: string }[];
}

interface TimedLocationFrame extends Frame {
  subject: FrameEntity;
  entries: {
    locationType: string;
    placeLabel: string;
    lat: number | null;
    lon: number | null;
    start: number | null;
    end: number | null;
  }[];
}

function entity(e: FrameEntity, cls: string): string {
  const depiction = e.depiction
    ? `<img class="depiction" src="${esc(e.depiction)}" alt="${esc(e.label)}"/>`
    : "";
  return (
    `<div class="entity ${cls}" data-resource-iri="${esc(e.iri)}" tabindex="0">` +
    `${depiction}<span class="entity-label">${esc(e.label)}</span></div>`
  );
}

function renderPartOf(frame: PartOfFrame): string {
  const parts = frame.parts.map((p) => entity(p, "part")).join("");
  return `
<article class="frame frame-part-of">
  <header>part-whole ${warningBadge(frame.warnings)}</header>
  ${entity(frame.whole, "whole")}
  <div class="parts" data-part-count="${frame.parts.length}">${parts}</div>
</article>`;
}

function renderMeasurement(frame: MeasurementFrame): string {
  // one enclosing region around all measures of the collection
  const measures = frame.measures
    .map(
      (m) =>
        `<li class="measure"><span class="measure-type">${esc(m.type)}</span> ` +
        `<span class="measure-value">${esc(m.value)}</span> ${esc(m.unit)}</li>`,
    )
    .join("");
  return `
<article class="frame frame-measurement">
  <header>measurements ${warningBadge(frame.warnings)}</header>
  ${entity(frame.subject, "subject")}
  <ul class="measure-region">${measures || '<li class="placeholder">no measures</li>'}</ul>
</article>`;
}

function renderTimedLocation(frame: TimedLocationFrame): string {
  const markers = frame.entries
    .filter((e) => e.lat !== null && e.lon !== null)
    .map((e) => ({ lat: e.lat as number, lon: e.lon as number, label: e.placeLabel }));
  const entries = frame.entries
    .map((e) => {
      const span =
        e.start === null && e.end === null ? "time unknown" : `${e.start ?? "…"} – ${e.end ?? "…"}`;
      return (
        `<li><span class="location-type">${esc(e.locationType)}</span> ` +
        `${esc(e.placeLabel)} <span class="time-span">${esc(span)}</span></li>`
      );
    })
    .join("");
  return `
<article class="frame frame-timed-location">
  <header>locations over time ${warningBadge(frame.warnings)}</header>
  ${entity(frame.subject, "subject")}
  ${renderMap(DEFAULT_MAP, { markers })}
  <ul class="timeline">${entries}</ul>
</article>`;
}

export function renderFrame(frame: Frame): string {
  switch (frame.frameType) {
    case "partOf":
      return renderPartOf(frame as PartOfFrame);
    case "measurementCollection":
      return renderMeasurement(frame as MeasurementFrame);
    case "timedLocation":
      return renderTimedLocation(frame as TimedLocationFrame);
    default:
      // unsupported frame types degrade to raw JSON rather than disappearing
      return `<article class="frame frame-raw"><header>${esc(frame.frameType)}</header><pre>${esc(
        JSON.stringify(frame, null, 2),
      )}</pre></article>`;
  }
}

export function renderInstanceView(frame: Frame, instanceIri: string): string {
  return `
<section class="instance-view">
  <h2 class="iri">${esc(instanceIri)}</h2>
  ${renderFrame(frame)}
  <p class="hint">click an entity for its resource page</p>
</section>`;
}
