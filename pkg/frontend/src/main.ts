/**
 * DOM wiring for the slider UI. All state decisions live in
 * SliderController; this file only moves pixels and labels around.
 */

import { HttpTransport } from "./api.js";
import { describeUploadError, SliderController, ViewMode } from "./controller.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const fileInput = el<HTMLInputElement>("file");
const slider = el<HTMLInputElement>("h-slider");
const sliderLabel = el<HTMLSpanElement>("h-slider-value");
const epsilonInput = el<HTMLInputElement>("epsilon");
const renderedLabel = el<HTMLSpanElement>("rendered-label");
const latencyLabel = el<HTMLSpanElement>("latency");
const statusLabel = el<HTMLSpanElement>("status");
const errorBox = el<HTMLDivElement>("error");
const errorText = el<HTMLSpanElement>("error-text");
const retryButton = el<HTMLButtonElement>("retry");
const viewer = el<HTMLDivElement>("viewer");
const originalImg = el<HTMLImageElement>("original");
const resultImg = el<HTMLImageElement>("result");
const divider = el<HTMLDivElement>("divider");
const viewButtons = Array.from(
  document.querySelectorAll<HTMLButtonElement>("button[data-view]"),
);

let originalUrl: string | null = null;
let resultUrl: string | null = null;
let retryAction: (() => void) | null = null;
let splitFraction = 0.5;

function showError(message: string, retry: (() => void) | null): void {
  errorText.textContent = message;
  retryAction = retry;
  retryButton.hidden = retry === null;
  errorBox.hidden = false;
}

function clearError(): void {
  errorBox.hidden = true;
  retryAction = null;
}

function applyView(mode: ViewMode): void {
  viewer.dataset.view = mode;
  for (const button of viewButtons) {
    button.classList.toggle("active", button.dataset.view === mode);
  }
  if (mode === "split") {
    applySplit();
  } else {
    resultImg.style.clipPath = "";
  }
}

function applySplit(): void {
  const pct = (splitFraction * 100).toFixed(2);
  // left of the divider shows the original, right shows the result
  resultImg.style.clipPath = `inset(0 0 0 ${pct}%)`;
  divider.style.left = `${pct}%`;
}

const controller = new SliderController(new HttpTransport(), {
  onResult: ({ h, image, solveMs }) => {
    clearError();
    if (resultUrl) URL.revokeObjectURL(resultUrl);
    resultUrl = URL.createObjectURL(image);
    resultImg.src = resultUrl;
    renderedLabel.textContent = `h = ${h.toFixed(3)}`;
    latencyLabel.textContent = `${solveMs.toFixed(0)} ms`;
  },
  onError: (message, retry) => showError(message, retry),
  onState: (state) => {
    sliderLabel.textContent = state.h.toFixed(3);
    if (document.activeElement !== slider) {
      slider.value = String(state.h);
    }
    statusLabel.textContent = state.session
      ? `${state.session.width}x${state.session.height}, ` +
        `${state.session.channels} channel(s)`
      : "no image";
  },
});

fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  clearError();
  statusLabel.textContent = "uploading...";
  if (originalUrl) URL.revokeObjectURL(originalUrl);
  originalUrl = URL.createObjectURL(file);
  originalImg.src = originalUrl;
  resultImg.removeAttribute("src");
  renderedLabel.textContent = "";
  latencyLabel.textContent = "";
  try {
    await controller.upload(file, file.name);
  } catch (err) {
    statusLabel.textContent = "no image";
    showError(describeUploadError(err), null);
  }
});

slider.addEventListener("input", () => {
  controller.setH(Number(slider.value));
});

epsilonInput.addEventListener("change", () => {
  const value = Number(epsilonInput.value);
  if (Number.isFinite(value) && value > 0) {
    controller.setEpsilon(value);
  }
});

retryButton.addEventListener("click", () => {
  clearError();
  retryAction?.();
});

for (const button of viewButtons) {
  button.addEventListener("click", () => {
    controller.setViewMode(button.dataset.view as ViewMode);
    applyView(button.dataset.view as ViewMode);
  });
}

divider.addEventListener("pointerdown", (down) => {
  down.preventDefault();
  divider.setPointerCapture(down.pointerId);
  const move = (event: PointerEvent) => {
    const rect = viewer.getBoundingClientRect();
    splitFraction = Math.min(
      Math.max((event.clientX - rect.left) / rect.width, 0.02),
      0.98,
    );
    applySplit();
  };
  const up = () => {
    divider.removeEventListener("pointermove", move);
    divider.removeEventListener("pointerup", up);
  };
  divider.addEventListener("pointermove", move);
  divider.addEventListener("pointerup", up);
});

applyView("result");
