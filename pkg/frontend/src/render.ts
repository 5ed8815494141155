import type { NameRow } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

const FEATURES = [
  "readability",
  "pronounceability",
  "memorability",
  "uniqueness",
] as const;

function barWidth(value: number): number {
  return Math.round(Math.min(1, Math.max(0, value)) * 100);
}

// Pure HTML string in the given row order; the caller owns insertion.
export function rowsToHtml(
  rows: NameRow[],
  kept: Set<string>,
  rejected: Set<string>,
): string {
  return rows
    .map((row, index) => {
      const classes = ["name-row"];
      if (kept.has(row.display)) classes.push("kept");
      if (rejected.has(row.display)) classes.push("rejected");
      const bars = FEATURES.map(
        (feature) =>
          `<span class="bar" title="${feature} ${row[feature].toFixed(3)}">` +
          `<span class="fill ${feature}" style="width:${barWidth(row[feature])}%"></span>` +
          `</span>`,
      ).join("");
      return (
        `<li class="${classes.join(" ")}" data-display="${escapeHtml(row.display)}">` +
        `<span class="rank">${index + 1}</span>` +
        `<span class="display">${escapeHtml(row.display)}</span>` +
        `<span class="appeal">${row.appeal.toFixed(4)}</span>` +
        bars +
        `<button type="button" class="keep">keep</button>` +
        `<button type="button" class="reject">reject</button>` +
        `</li>`
      );
    })
    .join("\n");
}

export function shortlistToHtml(rows: NameRow[]): string {
  if (rows.length === 0) {
    return `<li class="empty">nothing kept yet</li>`;
  }
  return rows
    .map(
      (row) =>
        `<li>${escapeHtml(row.display)}` +
        `<span class="appeal">${row.appeal.toFixed(4)}</span></li>`,
    )
    .join("\n");
}
