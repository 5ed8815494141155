// Integration against the real API: these tests spawn the Python service
// with the repository fixtures and drive it exactly as the UI does.
import { type ChildProcess, spawn } from "node:child_process";
import path from "node:path";
import { fileURLToPath } from "node:url";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { generateNames, health, rerankNames, setApiBase } from "../src/api.js";
import { DEFAULT_WEIGHTS } from "../src/state.js";
import type { NameListResponse, NameRow } from "../src/types.js";

const PORT = 8937;
const DESCRIPTION = "Creating an application to split expense wisely";
const UNIQUENESS_ONLY = {
  readability: 0,
  pronounceability: 0,
  memorability: 0,
  uniqueness: 1,
};

let server: ChildProcess | undefined;

async function waitForServer(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    try {
      await health();
      return;
    } catch {
      if (Date.now() > deadline) {
        throw new Error("service did not come up in time");
      }
      await new Promise((resolve) => setTimeout(resolve, 250));
    }
  }
}

beforeAll(async () => {
  const testsDir = path.dirname(fileURLToPath(import.meta.url));
  const repoRoot = path.resolve(testsDir, "..", "..");
  server = spawn(
    "python3",
    [
      "-m",
      "blendsmith.cli",
      "serve",
      "--resources",
      path.join(repoRoot, "fixtures", "resources"),
      "--bind",
      `127.0.0.1:${PORT}`,
    ],
    { stdio: "ignore" },
  );
  setApiBase(`http://127.0.0.1:${PORT}`);
  await waitForServer(20_000);
}, 30_000);

afterAll(() => {
  server?.kill();
});

function displays(response: NameListResponse): string[] {
  return response.names.map((row) => row.display);
}

function byUniquenessThenText(a: NameRow, b: NameRow): number {
  if (a.uniqueness !== b.uniqueness) {
    return b.uniqueness - a.uniqueness;
  }
  const ta = a.syllables.join("").toLowerCase();
  const tb = b.syllables.join("").toLowerCase();
  return ta < tb ? -1 : ta > tb ? 1 : 0;
}

describe("slider-driven reranking", () => {
  let original: NameListResponse;

  beforeAll(async () => {
    original = await generateNames(DESCRIPTION, DEFAULT_WEIGHTS, false, 20);
  }, 30_000);

  it("serves CamelCase blends for the example description", () => {
    expect(original.names.length).toBe(20);
    expect(original.candidate_count).toBeGreaterThan(20);
    expect(original.names.some((row) => /[a-z][A-Z]/.test(row.display))).toBe(true);
  });

  it("uniqueness-only sliders order the list by the uniqueness field", async () => {
    const reranked = await rerankNames(original.names, UNIQUENESS_ONLY, false);
    const expected = [...original.names].sort(byUniquenessThenText);
    expect(displays(reranked)).toEqual(expected.map((row) => row.display));
  });

  it("restoring default sliders restores the original order", async () => {
    const detour = await rerankNames(original.names, UNIQUENESS_ONLY, false);
    expect(displays(detour)).not.toEqual(displays(original));
    const restored = await rerankNames(detour.names, DEFAULT_WEIGHTS, false);
    expect(displays(restored)).toEqual(displays(original));
    expect(restored.names.map((row) => row.appeal)).toEqual(
      original.names.map((row) => row.appeal),
    );
  });

  it("round-trips the diversified ordering too", async () => {
    const diversified = await generateNames(DESCRIPTION, DEFAULT_WEIGHTS, true, 20);
    const restored = await rerankNames(diversified.names, DEFAULT_WEIGHTS, true);
    expect(displays(restored)).toEqual(displays(diversified));
  }, 30_000);
});
