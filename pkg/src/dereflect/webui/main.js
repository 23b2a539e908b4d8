/**
 * DOM wiring for the slider UI. All state decisions live in
 * SliderController; this file only moves pixels and labels around.
 */
import { HttpTransport } from "./api.js";
import { describeUploadError, SliderController } from "./controller.js";
function el(id) {
    const node = document.getElementById(id);
    if (!node)
        throw new Error(`missing #${id}`);
    return node;
}
const fileInput = el("file");
const slider = el("h-slider");
const sliderLabel = el("h-slider-value");
const epsilonInput = el("epsilon");
const renderedLabel = el("rendered-label");
const latencyLabel = el("latency");
const statusLabel = el("status");
const errorBox = el("error");
const errorText = el("error-text");
const retryButton = el("retry");
const viewer = el("viewer");
const originalImg = el("original");
const resultImg = el("result");
const divider = el("divider");
const viewButtons = Array.from(document.querySelectorAll("button[data-view]"));
let originalUrl = null;
let resultUrl = null;
let retryAction = null;
let splitFraction = 0.5;
function showError(message, retry) {
    errorText.textContent = message;
    retryAction = retry;
    retryButton.hidden = retry === null;
    errorBox.hidden = false;
}
function clearError() {
    errorBox.hidden = true;
    retryAction = null;
}
function applyView(mode) {
    viewer.dataset.view = mode;
    for (const button of viewButtons) {
        button.classList.toggle("active", button.dataset.view === mode);
    }
    if (mode === "split") {
        applySplit();
    }
    else {
        resultImg.style.clipPath = "";
    }
}
function applySplit() {
    const pct = (splitFraction * 100).toFixed(2);
    // left of the divider shows the original, right shows the result
    resultImg.style.clipPath = `inset(0 0 0 ${pct}%)`;
    divider.style.left = `${pct}%`;
}
const controller = new SliderController(new HttpTransport(), {
    onResult: ({ h, image, solveMs }) => {
        clearError();
        if (resultUrl)
            URL.revokeObjectURL(resultUrl);
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
    if (!file)
        return;
    clearError();
    statusLabel.textContent = "uploading...";
    if (originalUrl)
        URL.revokeObjectURL(originalUrl);
    originalUrl = URL.createObjectURL(file);
    originalImg.src = originalUrl;
    resultImg.removeAttribute("src");
    renderedLabel.textContent = "";
    latencyLabel.textContent = "";
    try {
        await controller.upload(file, file.name);
    }
    catch (err) {
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
        controller.setViewMode(button.dataset.view);
        applyView(button.dataset.view);
    });
}
divider.addEventListener("pointerdown", (down) => {
    down.preventDefault();
    divider.setPointerCapture(down.pointerId);
    const move = (event) => {
        const rect = viewer.getBoundingClientRect();
        splitFraction = Math.min(Math.max((event.clientX - rect.left) / rect.width, 0.02), 0.98);
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
