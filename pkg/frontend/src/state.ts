import type { NameListResponse, NameRow, Weights } from "./types.js";

// Engine defaults; sending these is identical to omitting weights.
export const DEFAULT_WEIGHTS: Weights = {
  readability: 2.18,
  pronounceability: 1.63,
  memorability: 0.91,
  uniqueness: 1.05,
};

export interface SessionState {
  description: string;
  rows: NameRow[];
  originalOrder: string[];
  candidateCount: number;
  weights: Weights;
  diversify: boolean;
  kept: Set<string>;
  rejected: Set<string>;
}

export function newState(): SessionState {
  return {
    description: "",
    rows: [],
    originalOrder: [],
    candidateCount: 0,
    weights: { ...DEFAULT_WEIGHTS },
    // off by default so slider moves map directly onto the score columns
    diversify: false,
    kept: new Set(),
    rejected: new Set(),
  };
}

export function validateDescription(text: string): string | null {
  return text.trim() ? null : "enter a description first";
}

// Sliders must stay non-negative; anything unparseable falls to 0.
export function applyWeightInput(
  state: SessionState,
  feature: keyof Weights,
  raw: string | number,
): void {
  const value = Number(raw);
  state.weights[feature] = Number.isFinite(value) && value >= 0 ? value : 0;
}

export function isDefaultWeights(weights: Weights): boolean {
  return (Object.keys(DEFAULT_WEIGHTS) as (keyof Weights)[]).every(
    (key) => weights[key] === DEFAULT_WEIGHTS[key],
  );
}

export function setGenerated(state: SessionState, response: NameListResponse): void {
  state.rows = response.names;
  state.originalOrder = response.names.map((row) => row.display);
  state.candidateCount = response.candidate_count;
  // kept/rejected survive regeneration: same text, same verdict
}

export function setReranked(state: SessionState, response: NameListResponse): void {
  state.rows = response.names;
  state.candidateCount = response.candidate_count;
}

export function toggleKeep(state: SessionState, display: string): void {
  if (state.kept.has(display)) {
    state.kept.delete(display);
  } else {
    state.kept.add(display);
    state.rejected.delete(display);
  }
}

export function toggleReject(state: SessionState, display: string): void {
  if (state.rejected.has(display)) {
    state.rejected.delete(display);
  } else {
    state.rejected.add(display);
    state.kept.delete(display);
  }
}
