/**
 * Types and HTTP transport for the dereflect tuning service.
 *
 * The controller only sees the Transport interface, so tests can swap
 * in a scripted fake and the state machine stays browser-free.
 */
/** Error carrying the HTTP status so the UI can phrase the message. */
export class ServiceError extends Error {
    constructor(status, message) {
        super(message);
        this.status = status;
    }
}
async function detail(res) {
    try {
        const body = await res.json();
        return typeof body.detail === "string" ? body.detail : res.statusText;
    }
    catch {
        return res.statusText;
    }
}
export class HttpTransport {
    constructor(baseUrl = "") {
        this.baseUrl = baseUrl;
    }
    async createSession(file, name = "upload.png") {
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
        const meta = await metaRes.json();
        return { sessionId: created.session_id, ...meta };
    }
    async fetchResult(sessionId, h, epsilon) {
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
    async deleteSession(sessionId) {
        await fetch(`${this.baseUrl}/session/${sessionId}`, { method: "DELETE" });
    }
}
