import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { groupDevices } from "../src/palette.js";
import { addOccurrence, newSession, toDisplay } from "../src/session.js";
import type { Device, ScoreResponse } from "../src/types.js";
import {
  devicePageHtml,
  escapeHtml,
  notFoundHtml,
  paletteHtml,
  reportHtml,
} from "../src/views.js";

const devices: Device[] = JSON.parse(
  readFileSync(new URL("./fixtures/taxonomy.json", import.meta.url), "utf-8"),
);

const figure4 = JSON.parse(
  readFileSync(new URL("./fixtures/figure4_score.json", import.meta.url), "utf-8"),
) as { response: ScoreResponse };

describe("palette view", () => {
  const html = paletteHtml(groupDevices(devices), newSession());

  it("renders all 84 devices in proforma order with deep links", () => {
    const codes = [...html.matchAll(/data-code="([^"]+)"/g)].map((m) => m[1]);
    expect(codes).toHaveLength(84);
    expect(codes[0]).toBe("A-1");
    expect(codes[codes.length - 1]).toBe("CG-1");
    for (const device of devices) {
      expect(html).toContain(`href="/device/${device.deep_link_slug}"`);
    }
  });

  it("renders nine group headers", () => {
    const headers = [...html.matchAll(/<h3>/g)];
    expect(headers).toHaveLength(9);
    expect(html).toContain("Word Order and Sentence Structure");
    expect(html).toContain("Strengthening the Argument");
  });

  it("offers only 0 and -1 for CG-1 occurrences", () => {
    const session = newSession();
    addOccurrence(session, "CG-1", -1);
    const withMarks = paletteHtml(groupDevices(devices), session);
    const row = withMarks.slice(withMarks.indexOf('data-code="CG-1"'));
    const options = [...row.matchAll(/<option value="(-?\d+)"/g)].map((m) => m[1]);
    expect(options).toEqual(["-1", "0"]);
  });
});

describe("report view", () => {
  it("shows the service strings verbatim", () => {
    const html = reportHtml(toDisplay(figure4.response), [], false);
    expect(html).toContain("0.10744");
    expect(html).toContain("A1 B8 C4 / 121");
    expect(html).toContain("A<sub>1</sub> B<sub>8</sub> C<sub>4</sub>");
    expect(html).toContain(">121<");
  });

  it("disables the result while morphemes are unknown", () => {
    const html = reportHtml(null, [], true);
    expect(html).toContain("disabled");
    expect(html).toContain("morpheme count");
  });

  it("lists warnings inline", () => {
    const html = reportHtml(
      toDisplay(figure4.response),
      [
        {
          severity: "warning",
          code: "zero-mark",
          message: "mark 0 on B-1 contributes nothing to the score",
          location: null,
        },
      ],
      false,
    );
    expect(html).toContain("contributes nothing");
  });
});

describe("device page", () => {
  it("renders names, definition and mark scale", () => {
    const hyperbole = devices.find((d) => d.code === "CE-15")!;
    const html = devicePageHtml(hyperbole);
    expect(html).toContain("CE-15: Hyperbole");
    expect(html).toContain("المبالغة");
    expect(html).toContain("Marks per occurrence: 0, 1, 2");
  });

  it("not-found view escapes the path", () => {
    const html = notFoundHtml("/device/<script>");
    expect(html).toContain("&lt;script&gt;");
  });
});

describe("escapeHtml", () => {
  it("escapes the four reserved characters", () => {
    expect(escapeHtml('<a href="x">&</a>')).toBe(
      "&lt;a href=&quot;x&quot;&gt;&amp;&lt;/a&gt;",
    );
  });
});
