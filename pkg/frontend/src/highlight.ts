// Span coordinates from the API refer to the entry's AUGMENTED string:
// 1-based, inclusive, over " " + folded name (+ " " + two initials for
// multi-token names). This module maps them onto the displayed original.

export type Highlight =
  | { kind: "range"; start: number; end: number } // 0-based inclusive on the displayed name
  | { kind: "initials" }
  | { kind: "none" };

/** Mirror of the service-side folding: trim, collapse whitespace, lowercase. */
export function foldName(name: string): string {
  return name.trim().replace(/\s+/g, " ").toLowerCase();
}

export function mapSpan(name: string, span: [number, number]): Highlight {
  const folded = foldName(name);
  const n = folded.length;
  let start = Math.max(span[0] - 2, 0); // leading space marker = offset 1
  const end = Math.min(span[1] - 2, n - 1);
  while (start <= end && folded[start] === " ") start++; // the marker itself is not content
  if (start >= n) return { kind: "initials" }; // match fell in the initials suffix
  if (end < start) return { kind: "none" };
  if (name.length !== n) return { kind: "none" }; // original does not align 1:1 with folded
  return { kind: "range", start, end };
}

export interface NameSegments {
  pre: string;
  match: string;
  post: string;
}

export function splitName(name: string, hl: Highlight): NameSegments | null {
  if (hl.kind !== "range") return null;
  return {
    pre: name.slice(0, hl.start),
    match: name.slice(hl.start, hl.end + 1),
    post: name.slice(hl.end + 1),
  };
}
