import type { NameRow } from "./types.js";

// Kept names in their current on-screen order, scores as last served.
export function shortlistRows(rows: NameRow[], kept: Set<string>): NameRow[] {
  return rows.filter((row) => kept.has(row.display));
}

const HEADER = [
  "name",
  "appeal",
  "readability",
  "pronounceability",
  "memorability",
  "uniqueness",
].join("\t");

export function shortlistText(rows: NameRow[]): string {
  const lines = [HEADER];
  for (const row of rows) {
    lines.push(
      [
        row.display,
        row.appeal,
        row.readability,
        row.pronounceability,
        row.memorability,
        row.uniqueness,
      ].join("\t"),
    );
  }
  return lines.join("\n") + "\n";
}
