/**
 * Types and HTTP transport for the dereflect tuning service.
 *
 * The controller only sees the Transport interface, so tests can swap
 * in a scripted fake and the state machine stays browser-free.
 */

export interface SessionMeta {
  width: number;
  height: number;
  channels: number;
  default_h: number;
  default_epsilon: number;
  h_range: [number, number];
}

export interface SessionInfo extends SessionMeta {
  sessionId: string;
}

export interface ResultImage {
  blob: Blob;
  solveMs: number;
}

export interface Transport {
  createSession(file: Blob, name?: string): Promise<SessionInfo>;
  fetchResult(sessionId: string, h: number, epsilon: number): Promise<ResultImage>;
  deleteSession(sessionId: string): Promise<void>;
}

/** Error carrying the HTTP status so the UI can phrase the message. */
export class ServiceError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function detail(res: Response): Promise<string> {
  try {
    const body = await res.json();
    return typeof body.detail === "string" ? body.detail : res.statusText;
  } catch {
    return res.statusText;
  }
}

export class HttpTransport implements Transport {
  constructor(private baseUrl: string = "") {}

  async createSession(file: Blob, name = "upload.png"): Promise<SessionInfo> {
    const form = new FormData();
    form.append("image", file, name);
    const res = await fetch(`${this.baseUrl}/session`, {
      method: "POST",
      body: form,
    });
    if (!res.ok) {
      throw new ServiceError(res.status, await detail(res));
    }
    const created = await res.json();
    const metaRes = await fetch(`${this.baseUrl}/session/${created.session_id}/meta`);
    if (!metaRes.ok) {
      throw new ServiceError(metaRes.status, await detail(metaRes));
    }
    const meta: SessionMeta = await metaRes.json();
    return { sessionId: created.session_id, ...meta };
  }

  async fetchResult(sessionId: string, h: number, epsilon: number): Promise<ResultImage> {
    const params = new URLSearchParams({ h: String(h), epsilon: String(epsilon) });
    const res = await fetch(`${this.baseUrl}/session/${sessionId}/result?${params}`);
    if (!res.ok) {
      throw new ServiceError(res.status, await detail(res));
    }
    return {
      blob: await res.blob(),
      solveMs: Number(res.headers.get("X-Solve-Ms") ?? "0"),
    };
  }

  async deleteSession(sessionId: string): Promise<void> {
    await fetch(`${this.baseUrl}/session/${sessionId}`, { method: "DELETE" });
  }
}
