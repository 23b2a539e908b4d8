/**
 * Slider state machine: debounced threshold changes, at most one result
 * request in flight, and strict newest-wins rendering.
 *
 * Dragging emits many values while a solve takes ~0.1-2 s, so requests
 * are debounced on the trailing edge and an in-flight response is
 * discarded whenever a newer threshold has been asked for since -- the
 * rendered image always corresponds to the last thing the user did.
 */
import { ServiceError } from "./api.js";
export function describeUploadError(err) {
    if (err instanceof ServiceError) {
        if (err.status === 413) {
            return "Image is too large for the server's pixel limit.";
        }
        if (err.status === 400) {
            return `Not a decodable 8-bit PNG/JPEG image: ${err.message}`;
        }
        return `Upload failed (${err.status}): ${err.message}`;
    }
    return "Upload failed: network error.";
}
export class SliderController {
    constructor(transport, hooks, options = {}) {
        this.transport = transport;
        this.hooks = hooks;
        this.debounceHandle = null;
        this.requestSeq = 0; // bumps on every issued request
        this.inFlight = false;
        this.pendingH = null;
        this.debounceMs = options.debounceMs ?? 150;
        this.hMax = options.hMax ?? 0.2;
        this.setTimer = options.setTimer ?? ((fn, ms) => setTimeout(fn, ms));
        this.clearTimer = options.clearTimer ?? ((h) => clearTimeout(h));
        this.state = {
            session: null,
            h: 0.03,
            epsilon: 1e-8,
            lastSolveMs: null,
            viewMode: "result",
        };
    }
    /** Upload an image, adopt the server's defaults, request a first result. */
    async upload(file, name) {
        this.cancelDebounce();
        this.pendingH = null;
        const session = await this.transport.createSession(file, name);
        this.state.session = session;
        this.state.h = session.default_h;
        this.state.epsilon = session.default_epsilon;
        this.state.lastSolveMs = null;
        this.requestSeq++; // anything still in flight belongs to the old session
        this.emitState();
        this.queueRequest(this.state.h);
        return session;
    }
    /** Slider movement: clamp, update the thumb state, debounce the fetch. */
    setH(h) {
        const clamped = Math.min(Math.max(h, 0), this.hMax);
        this.state.h = clamped;
        this.emitState();
        if (!this.state.session) {
            return;
        }
        this.cancelDebounce();
        this.debounceHandle = this.setTimer(() => {
            this.debounceHandle = null;
            this.queueRequest(this.state.h);
        }, this.debounceMs);
    }
    setEpsilon(epsilon) {
        if (epsilon > 0) {
            this.state.epsilon = epsilon;
            this.emitState();
            if (this.state.session) {
                this.queueRequest(this.state.h);
            }
        }
    }
    setViewMode(mode) {
        this.state.viewMode = mode;
        this.emitState();
    }
    async close() {
        this.cancelDebounce();
        this.pendingH = null;
        this.requestSeq++;
        const session = this.state.session;
        this.state.session = null;
        this.emitState();
        if (session) {
            await this.transport.deleteSession(session.sessionId);
        }
    }
    /** True while a request is in flight or queued (spinner state). */
    get busy() {
        return this.inFlight || this.pendingH !== null || this.debounceHandle !== null;
    }
    emitState() {
        this.hooks.onState?.({ ...this.state });
    }
    cancelDebounce() {
        if (this.debounceHandle !== null) {
            this.clearTimer(this.debounceHandle);
            this.debounceHandle = null;
        }
    }
    queueRequest(h) {
        this.pendingH = h;
        this.pump();
    }
    pump() {
        if (this.inFlight || this.pendingH === null || !this.state.session) {
            return;
        }
        const h = this.pendingH;
        this.pendingH = null;
        const epsilon = this.state.epsilon;
        const session = this.state.session;
        const seq = ++this.requestSeq;
        this.inFlight = true;
        this.transport
            .fetchResult(session.sessionId, h, epsilon)
            .then((result) => {
            if (this.isCurrent(seq, session.sessionId)) {
                this.state.lastSolveMs = result.solveMs;
                this.emitState();
                this.hooks.onResult({ h, epsilon, image: result.blob, solveMs: result.solveMs });
            }
        })
            .catch((err) => {
            if (this.isCurrent(seq, session.sessionId)) {
                const message = err instanceof ServiceError
                    ? `Solve failed (${err.status}): ${err.message}`
                    : "Network error while fetching the result.";
                this.hooks.onError(message, () => this.queueRequest(h));
            }
        })
            .finally(() => {
            this.inFlight = false;
            this.pump();
        });
    }
    /** A response is current only if nothing newer was issued or queued. */
    isCurrent(seq, sessionId) {
        return (seq === this.requestSeq &&
            this.pendingH === null &&
            this.state.session?.sessionId === sessionId);
    }
}
