import { generateNames, rerankNames, setApiBase } from "./api.js";
import { debounce, serialLatest } from "./debounce.js";
import { rowsToHtml, shortlistToHtml } from "./render.js";
import { shortlistRows, shortlistText } from "./shortlist.js";
import {
  DEFAULT_WEIGHTS,
  applyWeightInput,
  newState,
  setGenerated,
  setReranked,
  toggleKeep,
  toggleReject,
  validateDescription,
} from "./state.js";
import type { Weights } from "./types.js";

const params = new URLSearchParams(location.search);
setApiBase(params.get("api") ?? `${location.protocol}//${location.hostname}:8000`);

const state = newState();
const submitRerank = serialLatest();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const descriptionInput = el<HTMLTextAreaElement>("description");
const generateButton = el<HTMLButtonElement>("generate");
const diversifyBox = el<HTMLInputElement>("diversify");
const banner = el<HTMLDivElement>("banner");
const statusLine = el<HTMLDivElement>("status");
const list = el<HTMLOListElement>("names");
const shortlistPanel = el<HTMLUListElement>("shortlist");
const exportButton = el<HTMLButtonElement>("export");
const resetButton = el<HTMLButtonElement>("reset-weights");

const FEATURES: (keyof Weights)[] = [
  "readability",
  "pronounceability",
  "memorability",
  "uniqueness",
];

function slider(feature: keyof Weights): HTMLInputElement {
  return el<HTMLInputElement>(`w-${feature}`);
}

function sliderLabel(feature: keyof Weights): HTMLElement {
  return el<HTMLElement>(`w-${feature}-value`);
}

function showError(message: string): void {
  banner.textContent = message;
  banner.hidden = false;
}

function clearError(): void {
  banner.hidden = true;
}

function render(): void {
  list.innerHTML = rowsToHtml(state.rows, state.kept, state.rejected);
  const kept = shortlistRows(state.rows, state.kept);
  shortlistPanel.innerHTML = shortlistToHtml(kept);
  exportButton.disabled = kept.length === 0;
  statusLine.textContent = state.rows.length
    ? `${state.rows.length} shown of ${state.candidateCount} candidates`
    : "";
}

function syncSliders(): void {
  for (const feature of FEATURES) {
    slider(feature).value = String(state.weights[feature]);
    sliderLabel(feature).textContent = state.weights[feature].toFixed(2);
  }
}

async function runGenerate(): Promise<void> {
  const problem = validateDescription(descriptionInput.value);
  if (problem) {
    showError(problem);
    return;
  }
  clearError();
  state.description = descriptionInput.value;
  generateButton.disabled = true;
  try {
    const response = await generateNames(
      state.description,
      state.weights,
      state.diversify,
    );
    setGenerated(state, response);
    render();
  } catch (error) {
    showError(String(error));
  } finally {
    generateButton.disabled = false;
  }
}

function scheduleRerank(): void {
  if (state.rows.length === 0) return;
  submitRerank(async () => {
    try {
      const response = await rerankNames(state.rows, state.weights, state.diversify);
      setReranked(state, response);
      clearError();
      render();
    } catch (error) {
      showError(String(error));
    }
  });
}

const debouncedRerank = debounce(scheduleRerank, 250);

for (const feature of FEATURES) {
  slider(feature).addEventListener("input", () => {
    applyWeightInput(state, feature, slider(feature).value);
    sliderLabel(feature).textContent = state.weights[feature].toFixed(2);
    debouncedRerank();
  });
}

resetButton.addEventListener("click", () => {
  state.weights = { ...DEFAULT_WEIGHTS };
  syncSliders();
  debouncedRerank();
});

diversifyBox.addEventListener("change", () => {
  state.diversify = diversifyBox.checked;
  debouncedRerank();
});

generateButton.addEventListener("click", () => {
  void runGenerate();
});

list.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  const row = target.closest<HTMLLIElement>("li[data-display]");
  if (!row || !row.dataset.display) return;
  if (target.classList.contains("keep")) {
    toggleKeep(state, row.dataset.display);
    render();
  } else if (target.classList.contains("reject")) {
    toggleReject(state, row.dataset.display);
    render();
  }
});

exportButton.addEventListener("click", () => {
  const kept = shortlistRows(state.rows, state.kept);
  if (kept.length === 0) return;
  const blob = new Blob([shortlistText(kept)], { type: "text/tab-separated-values" });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = "shortlist.tsv";
  anchor.click();
  URL.revokeObjectURL(url);
});

diversifyBox.checked = state.diversify;
syncSliders();
render();
