import { describe, expect, it } from "vitest";

import { foldName, mapSpan, splitName } from "../src/highlight.js";

describe("foldName", () => {
  it("trims, collapses whitespace, lowercases", () => {
    expect(foldName("  Mike   Petterson ")).toBe("mike petterson");
    expect(foldName("ABC 123")).toBe("abc 123");
  });
});

describe("mapSpan", () => {
  // augmented form of "Mike Petterson" is " mike petterson mp":
  // 1-based spans over that string arrive from the API

  it("maps a prefix span onto the display name, clamping the marker", () => {
    const hl = mapSpan("Mike Petterson", [1, 4]);
    expect(hl).toEqual({ kind: "range", start: 0, end: 2 });
    expect(splitName("Mike Petterson", hl)).toEqual({ pre: "", match: "Mik", post: "e Petterson" });
  });

  it("maps a token-start span, trimming the matched space", () => {
    const hl = mapSpan("Jennifer Mikoilan", [10, 13]);
    expect(hl).toEqual({ kind: "range", start: 9, end: 11 });
    expect(splitName("Jennifer Mikoilan", hl)).toEqual({
      pre: "Jennifer ",
      match: "Mik",
      post: "oilan",
    });
  });

  it("flags spans inside the initials suffix", () => {
    // " mike petterson mp" has the initials at 1-based 17..18
    expect(mapSpan("Mike Petterson", [17, 18])).toEqual({ kind: "initials" });
    expect(mapSpan("Mike Petterson", [16, 18])).toEqual({ kind: "initials" });
  });

  it("gives up when the display name does not align with its folded form", () => {
    // double space collapses during folding, so offsets cannot be trusted
    expect(mapSpan("Mike  Petterson", [1, 4])).toEqual({ kind: "none" });
  });

  it("returns none for a bare marker match", () => {
    expect(mapSpan("Bob", [1, 1])).toEqual({ kind: "none" });
  });
});
