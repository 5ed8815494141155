// Mirrors the JSON shapes of the blendsmith HTTP API.

export interface Weights {
  readability: number;
  pronounceability: number;
  memorability: number;
  uniqueness: number;
}

export interface NameRow {
  display: string;
  appeal: number;
  readability: number;
  pronounceability: number;
  memorability: number;
  uniqueness: number;
  syllables: string[];
  sources: string[];
}

export interface NameListResponse {
  names: NameRow[];
  candidate_count: number;
  elapsed_ms: number;
}

export interface HealthResponse {
  status: string;
  version: string;
  resources: Record<string, string>;
}
