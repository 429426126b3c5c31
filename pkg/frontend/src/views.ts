// HTML builders for every view. Pure string functions so the palette,
// report and definition pages can be tested without a DOM.

import type { Device, Diagnostic } from "./types.js";
import type { PaletteGroup } from "./palette.js";
import { deepLink } from "./palette.js";
import type { ReportDisplay, ScoringSession } from "./session.js";

export function escapeHtml(value: string): string {
  return value
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function markOptions(device: Device, selected: number): string {
  return device.allowed_marks
    .map(
      (m) =>
        `<option value="${m}"${m === selected ? " selected" : ""}>${m}</option>`,
    )
    .join("");
}

function occurrenceRows(device: Device, marks: number[]): string {
  return marks
    .map(
      (mark, index) => `
      <span class="occurrence">
        <select data-action="set-mark" data-device="${device.code}" data-index="${index}">
          ${markOptions(device, mark)}
        </select>
        <button data-action="remove-occurrence" data-device="${device.code}" data-index="${index}" title="remove occurrence">×</button>
      </span>`,
    )
    .join("");
}

function deviceRow(device: Device, marks: number[]): string {
  const note = device.multiplicity_note
    ? `<span class="note" title="${escapeHtml(device.multiplicity_note)}">ⓘ</span>`
    : "";
  return `
    <tr data-code="${device.code}">
      <td class="code"><a href="${deepLink(device)}" data-link>${device.code}</a></td>
      <td class="names">${escapeHtml(device.name_en)} ${note}<span class="ar" dir="rtl">${escapeHtml(device.name_ar)}</span></td>
      <td class="occurrences">
        ${occurrenceRows(device, marks)}
        <button data-action="add-occurrence" data-device="${device.code}">+ occurrence</button>
      </td>
    </tr>`;
}

export function paletteHtml(groups: PaletteGroup[], session: ScoringSession): string {
  const sections = groups.map((group) => {
    const rows = group.devices
      .map((d) => deviceRow(d, session.tallies.get(d.code) ?? []))
      .join("");
    return `
      <section class="palette-group" data-group="${group.key}">
        <h3>${escapeHtml(group.title)}</h3>
        <table>${rows}</table>
      </section>`;
  });
  return sections.join("");
}

function subscriptFraction(display: ReportDisplay): string {
  const { a, b, c } = display.domainSums;
  return `
    <div class="fraction">
      <div class="numerator">A<sub>${a}</sub> B<sub>${b}</sub> C<sub>${c}</sub></div>
      <div class="denominator">${display.morphemes}</div>
    </div>`;
}

export function reportHtml(
  display: ReportDisplay | null,
  warnings: Diagnostic[],
  morphemesMissing: boolean,
): string {
  if (morphemesMissing) {
    return `
      <div class="report disabled">
        <p>Enter a morpheme count (or fetch the rule-based count) to see the
        density; a score over zero morphemes is undefined.</p>
      </div>`;
  }
  if (display === null) {
    return `<div class="report disabled"><p>No score yet.</p></div>`;
  }
  const warningItems = warnings
    .map((w) => `<li class="warning">${escapeHtml(w.message)}</li>`)
    .join("");
  return `
    <div class="report">
      <p class="density">Density score: <strong>${escapeHtml(display.density)}</strong></p>
      ${subscriptFraction(display)}
      <p class="summary">${escapeHtml(display.summaryText)}</p>
      <p class="morphemes">${display.morphemes} morphemes (${escapeHtml(display.morphemeSource)})</p>
      ${warningItems ? `<ul class="warnings">${warningItems}</ul>` : ""}
    </div>`;
}

export function diagnosticsHtml(diagnostics: Diagnostic[]): string {
  if (diagnostics.length === 0) return "";
  const items = diagnostics
    .map(
      (d) =>
        `<li class="${d.severity}">${d.severity}: ${escapeHtml(d.code)}: ${escapeHtml(d.message)}</li>`,
    )
    .join("");
  return `<ul class="diagnostics">${items}</ul>`;
}

export function devicePageHtml(device: Device): string {
  const marks = device.allowed_marks.join(", ");
  const note = device.multiplicity_note
    ? `<p class="note">${escapeHtml(device.multiplicity_note)}</p>`
    : "";
  return `
    <article class="device-page">
      <h2>${device.code}: ${escapeHtml(device.name_en)}</h2>
      <p class="ar" dir="rtl">${escapeHtml(device.name_ar)}</p>
      <p>${escapeHtml(device.definition_summary)}</p>
      ${note}
      <p class="marks">Marks per occurrence: ${marks}</p>
      <p><a href="/" data-link>Back to the calculator</a></p>
    </article>`;
}

export function notFoundHtml(path: string): string {
  return `
    <article class="not-found">
      <h2>Not found</h2>
      <p>No page at <code>${escapeHtml(path)}</code>.</p>
      <p><a href="/" data-link>Back to the calculator</a></p>
    </article>`;
}

export function spanTableHtml(session: ScoringSession): string {
  const rows = session.spans
    .map(
      (entry, index) => `
      <tr>
        <td><input data-span-field="device" data-index="${index}" value="${escapeHtml(entry.device)}" size="6"></td>
        <td><input data-span-field="start" data-index="${index}" type="number" min="0" value="${entry.start}"></td>
        <td><input data-span-field="end" data-index="${index}" type="number" min="0" value="${entry.end}"></td>
        <td><input data-span-field="mark" data-index="${index}" type="number" value="${entry.mark}"></td>
        <td><button data-action="remove-span" data-index="${index}">×</button></td>
      </tr>`,
    )
    .join("");
  return `
    <table class="span-table">
      <tr><th>device</th><th>start</th><th>end</th><th>mark</th><th></th></tr>
      ${rows}
    </table>
    <button data-action="add-span">+ annotation</button>`;
}
