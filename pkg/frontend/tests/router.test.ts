import { describe, expect, it } from "vitest";

import { parseRoute } from "../src/router.js";

describe("parseRoute", () => {
  it("routes the root to the calculator", () => {
    expect(parseRoute("/")).toEqual({ view: "calculator" });
    expect(parseRoute("/index.html")).toEqual({ view: "calculator" });
  });

  it("routes device deep links", () => {
    expect(parseRoute("/device/hyperbole")).toEqual({
      view: "device",
      slug: "hyperbole",
    });
    expect(parseRoute("/device/negative-elements/")).toEqual({
      view: "device",
      slug: "negative-elements",
    });
  });

  it("falls back to not-found", () => {
    expect(parseRoute("/nope")).toEqual({ view: "not-found", path: "/nope" });
    expect(parseRoute("/device/UPPER")).toEqual({
      view: "not-found",
      path: "/device/UPPER",
    });
  });
});
