/**
 * Slider state machine: debounced threshold changes, at most one result
 * request in flight, and strict newest-wins rendering.
 *
 * Dragging emits many values while a solve takes ~0.1-2 s, so requests
 * are debounced on the trailing edge and an in-flight response is
 * discarded whenever a newer threshold has been asked for since -- the
 * rendered image always corresponds to the last thing the user did.
 */

import { ResultImage, ServiceError, SessionInfo, Transport } from "./api.js";

export type ViewMode = "result" | "original" | "split";

export interface RenderedResult {
  h: number;
  epsilon: number;
  image: Blob;
  solveMs: number;
}

export interface UiSessionState {
  session: SessionInfo | null;
  h: number;
  epsilon: number;
  lastSolveMs: number | null;
  viewMode: ViewMode;
}

export interface ControllerHooks {
  /** A fresh, non-stale result to put on screen. */
  onResult(result: RenderedResult): void;
  /** Something failed; retry() re-issues the failed request. */
  onError(message: string, retry: () => void): void;
  onState?(state: UiSessionState): void;
}

export interface ControllerOptions {
  debounceMs?: number;
  /** Slider bounds; server meta may suggest a narrower useful range. */
  hMax?: number;
  /** Injectable timer for tests. */
  setTimer?: (fn: () => void, ms: number) => unknown;
  clearTimer?: (handle: unknown) => void;
}

export function describeUploadError(err: unknown): string {
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
  readonly state: UiSessionState;

  private readonly debounceMs: number;
  private readonly hMax: number;
  private readonly setTimer: (fn: () => void, ms: number) => unknown;
  private readonly clearTimer: (handle: unknown) => void;

  private debounceHandle: unknown = null;
  private requestSeq = 0;   // bumps on every issued request
  private inFlight = false;
  private pendingH: number | null = null;

  constructor(
    private transport: Transport,
    private hooks: ControllerHooks,
    options: ControllerOptions = {},
  ) {
    this.debounceMs = options.debounceMs ?? 150;
    this.hMax = options.hMax ?? 0.2;
    this.setTimer = options.setTimer ?? ((fn, ms) => setTimeout(fn, ms));
    this.clearTimer = options.clearTimer ?? ((h) => clearTimeout(h as number));
    this.state = {
      session: null,
      h: 0.03,
      epsilon: 1e-8,
      lastSolveMs: null,
      viewMode: "result",
    };
  }

  /** Upload an image, adopt the server's defaults, request a first result. */
  async upload(file: Blob, name?: string): Promise<SessionInfo> {
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
  setH(h: number): void {
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

  setEpsilon(epsilon: number): void {
    if (epsilon > 0) {
      this.state.epsilon = epsilon;
      this.emitState();
      if (this.state.session) {
        this.queueRequest(this.state.h);
      }
    }
  }

  setViewMode(mode: ViewMode): void {
    this.state.viewMode = mode;
    this.emitState();
  }

  async close(): Promise<void> {
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
  get busy(): boolean {
    return this.inFlight || this.pendingH !== null || this.debounceHandle !== null;
  }

  private emitState(): void {
    this.hooks.onState?.({ ...this.state });
  }

  private cancelDebounce(): void {
    if (this.debounceHandle !== null) {
      this.clearTimer(this.debounceHandle);
      this.debounceHandle = null;
    }
  }

  private queueRequest(h: number): void {
    this.pendingH = h;
    this.pump();
  }

  private pump(): void {
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
      .then((result: ResultImage) => {
        if (this.isCurrent(seq, session.sessionId)) {
          this.state.lastSolveMs = result.solveMs;
          this.emitState();
          this.hooks.onResult({ h, epsilon, image: result.blob, solveMs: result.solveMs });
        }
      })
      .catch((err: unknown) => {
        if (this.isCurrent(seq, session.sessionId)) {
          const message =
            err instanceof ServiceError
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
  private isCurrent(seq: number, sessionId: string): boolean {
    return (
      seq === this.requestSeq &&
      this.pendingH === null &&
      this.state.session?.sessionId === sessionId
    );
  }
}
