import type { HealthResponse, NameListResponse, NameRow, Weights } from "./types.js";

let base = "";

export function setApiBase(url: string): void {
  base = url.replace(/\/+$/, "");
}

export function apiBase(): string {
  return base;
}

async function post<T>(path: string, body: unknown): Promise<T> {
  const res = await fetch(`${base}${path}`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!res.ok) {
    throw new Error(`${path} failed (${res.status}): ${await res.text()}`);
  }
  return res.json() as Promise<T>;
}

export function generateNames(
  description: string,
  weights: Weights,
  diversify: boolean,
  topK = 30,
): Promise<NameListResponse> {
  return post<NameListResponse>("/api/generate", {
    description,
    top_k: topK,
    diversify,
    weights,
  });
}

// The client echoes rows exactly as the server sent them; all numbers
// stay server-computed.
export function rerankNames(
  names: NameRow[],
  weights: Weights,
  diversify: boolean,
): Promise<NameListResponse> {
  return post<NameListResponse>("/api/rerank", { names, weights, diversify });
}

export async function health(): Promise<HealthResponse> {
  const res = await fetch(`${base}/api/health`);
  if (!res.ok) {
    throw new Error(`health check failed (${res.status})`);
  }
  return res.json() as Promise<HealthResponse>;
}
