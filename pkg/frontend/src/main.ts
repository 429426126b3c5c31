// DOM shell: state lives in one ScoringSession; every interaction
// re-serializes the session and asks the service for the new report.

import { ApiError, countMorphemes, getTaxonomy, scoreDocument, validateDocument } from "./api.js";
import { bySlug, groupDevices } from "./palette.js";
import {
  ScoringSession,
  addOccurrence,
  documentToSession,
  effectiveMorphemes,
  exportDocumentJson,
  newSession,
  removeOccurrence,
  sessionToDocument,
  setOccurrenceMark,
  toDisplay,
} from "./session.js";
import type { BalaghaDocument, Device, Diagnostic } from "./types.js";
import {
  devicePageHtml,
  diagnosticsHtml,
  notFoundHtml,
  paletteHtml,
  reportHtml,
  spanTableHtml,
} from "./views.js";
import { parseRoute } from "./router.js";

let devices: Device[] = [];
let session: ScoringSession = newSession();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function renderPalette(): void {
  el("palette").innerHTML = paletteHtml(groupDevices(devices), session);
}

function renderSpanTable(): void {
  el("span-editor").innerHTML = spanTableHtml(session);
}

function renderModePanels(): void {
  el("palette").hidden = session.mode !== "tally";
  el("span-editor").hidden = session.mode !== "span";
  (el("mode-tally") as HTMLInputElement).checked = session.mode === "tally";
  (el("mode-span") as HTMLInputElement).checked = session.mode === "span";
}

async function refreshReport(): Promise<void> {
  const target = el("report");
  const diagBox = el("diagnostics");
  const morphemes = effectiveMorphemes(session);
  if (!morphemes) {
    target.innerHTML = reportHtml(null, [], true);
    diagBox.innerHTML = "";
    return;
  }
  const doc = sessionToDocument(session);
  try {
    const response = await scoreDocument(doc);
    target.innerHTML = reportHtml(toDisplay(response), response.warnings, false);
    diagBox.innerHTML = "";
  } catch (error) {
    if (error instanceof ApiError && error.diagnostics.length > 0) {
      target.innerHTML = reportHtml(null, [], false);
      diagBox.innerHTML = diagnosticsHtml(error.diagnostics);
    } else if (error instanceof ApiError && error.code === "zero-morphemes") {
      target.innerHTML = reportHtml(null, [], true);
    } else {
      diagBox.innerHTML = diagnosticsHtml([
        offlineDiagnostic("scoring request failed"),
      ]);
    }
  }
}

function offlineDiagnostic(message: string): Diagnostic {
  return { severity: "error", code: "offline", message, location: null };
}

function readSessionInputs(): void {
  session.text = (el("text-input") as HTMLTextAreaElement).value;
  const manualRaw = (el("manual-morphemes") as HTMLInputElement).value.trim();
  session.manualMorphemes = manualRaw === "" ? null : Number(manualRaw);
  session.documentId =
    (el("document-id") as HTMLInputElement).value.trim() || "session";
}

async function onFetchMorphemes(): Promise<void> {
  readSessionInputs();
  try {
    const result = await countMorphemes(session.text);
    session.fetchedMorphemes = result.total;
    el("fetched-morphemes").textContent =
      `rule-based count: ${result.total} (manual entry wins when filled)`;
  } catch {
    el("fetched-morphemes").textContent = "rule-based count unavailable";
  }
  await refreshReport();
}

function onPaletteClick(event: Event): void {
  const target = event.target as HTMLElement;
  const action = target.dataset.action;
  if (!action) return;
  const device = target.dataset.device ?? "";
  const index = Number(target.dataset.index ?? "-1");
  if (action === "add-occurrence") {
    const meta = devices.find((d) => d.code === device);
    const defaultMark = meta
      ? meta.allowed_marks.includes(1)
        ? 1
        : meta.allowed_marks[0]
      : 1;
    addOccurrence(session, device, defaultMark);
  } else if (action === "remove-occurrence") {
    removeOccurrence(session, device, index);
  } else {
    return;
  }
  renderPalette();
  void refreshReport();
}

function onPaletteChange(event: Event): void {
  const target = event.target as HTMLSelectElement;
  if (target.dataset.action !== "set-mark") return;
  setOccurrenceMark(
    session,
    target.dataset.device ?? "",
    Number(target.dataset.index),
    Number(target.value),
  );
  void refreshReport();
}

function onSpanEditorClick(event: Event): void {
  const target = event.target as HTMLElement;
  if (target.dataset.action === "add-span") {
    session.spans.push({ device: "A-1", start: 0, end: 0, mark: 1 });
  } else if (target.dataset.action === "remove-span") {
    session.spans.splice(Number(target.dataset.index), 1);
  } else {
    return;
  }
  renderSpanTable();
  void refreshReport();
}

function onSpanEditorChange(event: Event): void {
  const target = event.target as HTMLInputElement;
  const field = target.dataset.spanField;
  if (!field) return;
  const entry = session.spans[Number(target.dataset.index)];
  if (!entry) return;
  if (field === "device") entry.device = target.value;
  else if (field === "start") entry.start = Number(target.value);
  else if (field === "end") entry.end = Number(target.value);
  else if (field === "mark") entry.mark = Number(target.value);
  void refreshReport();
}

function onExport(): void {
  readSessionInputs();
  const payload = exportDocumentJson(session);
  const blob = new Blob([payload], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = `${session.documentId}.balagha.json`;
  link.click();
  URL.revokeObjectURL(link.href);
}

async function onImport(event: Event): Promise<void> {
  const input = event.target as HTMLInputElement;
  const file = input.files?.[0];
  if (!file) return;
  let doc: BalaghaDocument;
  try {
    doc = JSON.parse(await file.text()) as BalaghaDocument;
  } catch {
    el("diagnostics").innerHTML = diagnosticsHtml([
      offlineDiagnostic("file is not valid JSON"),
    ]);
    return;
  }
  try {
    const { diagnostics } = await validateDocument(doc);
    el("diagnostics").innerHTML = diagnosticsHtml(diagnostics);
  } catch (error) {
    if (error instanceof ApiError) {
      const shown = error.diagnostics.length
        ? error.diagnostics
        : [offlineDiagnostic(`${error.code}: the file was rejected`)];
      el("diagnostics").innerHTML = diagnosticsHtml(shown);
      return;
    }
  }
  session = documentToSession(doc);
  syncInputsFromSession();
  renderModePanels();
  renderPalette();
  renderSpanTable();
  await refreshReport();
}

function syncInputsFromSession(): void {
  (el("text-input") as HTMLTextAreaElement).value = session.text;
  (el("document-id") as HTMLInputElement).value = session.documentId;
  (el("manual-morphemes") as HTMLInputElement).value =
    session.manualMorphemes === null ? "" : String(session.manualMorphemes);
  el("fetched-morphemes").textContent = "";
}

function onModeSwitch(mode: "tally" | "span"): void {
  session.mode = mode;
  renderModePanels();
  void refreshReport();
}

function renderRoute(): void {
  const route = parseRoute(window.location.pathname);
  const page = el("device-view");
  const calculator = el("calculator");
  if (route.view === "calculator") {
    page.hidden = true;
    calculator.hidden = false;
    return;
  }
  calculator.hidden = true;
  page.hidden = false;
  if (route.view === "device") {
    const device = bySlug(devices).get(route.slug);
    page.innerHTML = device
      ? devicePageHtml(device)
      : notFoundHtml(`/device/${route.slug}`);
  } else {
    page.innerHTML = notFoundHtml(route.path);
  }
}

function interceptLinks(event: Event): void {
  const anchor = (event.target as HTMLElement).closest("a[data-link]");
  if (!(anchor instanceof HTMLAnchorElement)) return;
  event.preventDefault();
  window.history.pushState({}, "", anchor.getAttribute("href"));
  renderRoute();
}

async function bootstrap(): Promise<void> {
  try {
    devices = await getTaxonomy();
    el("offline-banner").hidden = true;
  } catch {
    el("offline-banner").hidden = false;
    return;
  }
  renderPalette();
  renderSpanTable();
  renderModePanels();
  renderRoute();

  el("palette").addEventListener("click", onPaletteClick);
  el("palette").addEventListener("change", onPaletteChange);
  el("span-editor").addEventListener("click", onSpanEditorClick);
  el("span-editor").addEventListener("change", onSpanEditorChange);
  el("text-input").addEventListener("input", () => {
    readSessionInputs();
    void refreshReport();
  });
  el("manual-morphemes").addEventListener("input", () => {
    readSessionInputs();
    void refreshReport();
  });
  el("document-id").addEventListener("input", readSessionInputs);
  el("fetch-morphemes").addEventListener("click", () => void onFetchMorphemes());
  el("export-button").addEventListener("click", onExport);
  el("import-input").addEventListener("change", (e) => void onImport(e));
  el("mode-tally").addEventListener("change", () => onModeSwitch("tally"));
  el("mode-span").addEventListener("change", () => onModeSwitch("span"));
  document.body.addEventListener("click", interceptLinks);
  window.addEventListener("popstate", renderRoute);

  await refreshReport();
}

void bootstrap();
