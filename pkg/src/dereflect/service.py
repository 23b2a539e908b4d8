"""Local HTTP service for interactive threshold tuning.

One session per uploaded image. The decoded tensor and its gradient
field (which does not depend on the threshold) are cached per session,
so a slider request pays only threshold + divergence + spectral solve.
Recent results are kept in a small per-session LRU so dragging back to
a previous value is instant.

Endpoints:
    POST   /session                      multipart image -> session id
    GET    /session/{id}/meta            dims and parameter defaults
    GET    /session/{id}/result?h=&epsilon=   dereflected PNG
    DELETE /session/{id}                 free the cache
Static web UI assets, when present, are served at /.
"""

import threading
import time
import uuid
from collections import OrderedDict
from pathlib import Path

from fastapi import FastAPI, File, UploadFile
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from .gradients import grad
from .image_io import DecodeError, UnsupportedFormatError, decode_image, \
    encode_image
from .suppression import DEFAULT_EPSILON, DEFAULT_H, suppress_with_gradients

DEFAULT_MAX_PIXELS = 24_000_000
H_RANGE_HINT = (0.01, 0.1)
RESULT_CACHE_SIZE = 16
_WEBUI_DIR = Path(__file__).parent / "webui"


class _Session:
    """Immutable image + gradients, plus a bounded result cache."""

    def __init__(self, image):
        self.image = image
        self.gx, self.gy = grad(image)
        for a in (self.image, self.gx, self.gy):
            a.setflags(write=False)
        self.lock = threading.Lock()
        self.results = OrderedDict()  # (h, epsilon, joint) -> (png, ms)

    @property
    def dims(self):
        m, n = self.image.shape[0], self.image.shape[1]
        c = 1 if self.image.ndim == 2 else self.image.shape[2]
        return {"width": n, "height": m, "channels": c}

    def render(self, h, epsilon, joint):
        """Solve (or reuse) and return (png_bytes, solve_millis)."""
        key = (h, epsilon, joint)
        with self.lock:
            if key in self.results:
                self.results.move_to_end(key)
                return self.results[key]
            t0 = time.perf_counter()
            out = suppress_with_gradients(
                self.image, self.gx, self.gy,
                h=h, epsilon=epsilon, joint=joint,
            )
            solve_ms = (time.perf_counter() - t0) * 1e3
            png = encode_image(out)
            self.results[key] = (png, solve_ms)
            while len(self.results) > RESULT_CACHE_SIZE:
                self.results.popitem(last=False)
            return png, solve_ms


def create_app(max_pixels=DEFAULT_MAX_PIXELS, webui_dir=None):
    app = FastAPI(title="dereflect")
    sessions = {}
    registry_lock = threading.Lock()

    @app.exception_handler(RequestValidationError)
    def _validation_to_400(request, exc):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    def _get_session(session_id):
        with registry_lock:
            return sessions.get(session_id)

    @app.post("/session", status_code=201)
    def create_session(image: UploadFile = File(...)):
        data = image.file.read()
        try:
            tensor = decode_image(data)
        except (DecodeError, UnsupportedFormatError) as exc:
            return JSONResponse(status_code=400, content={"detail": str(exc)})
        if tensor.shape[0] * tensor.shape[1] > max_pixels:
            return JSONResponse(
                status_code=413,
                content={"detail": f"image exceeds {max_pixels} pixels"},
            )
        session = _Session(tensor)
        session_id = uuid.uuid4().hex[:12]
        with registry_lock:
            sessions[session_id] = session
        return {"session_id": session_id, **session.dims}

    @app.get("/session/{session_id}/meta")
    def session_meta(session_id: str):
        session = _get_session(session_id)
        if session is None:
            return JSONResponse(status_code=404,
                                content={"detail": "unknown session"})
        return {
            **session.dims,
            "default_h": DEFAULT_H,
            "default_epsilon": DEFAULT_EPSILON,
            "h_range": list(H_RANGE_HINT),
        }

    @app.get("/session/{session_id}/result")
    def session_result(session_id: str, h: float = DEFAULT_H,
                       epsilon: float = DEFAULT_EPSILON,
                       norm: str = "per-channel"):
        session = _get_session(session_id)
        if session is None:
            return JSONResponse(status_code=404,
                                content={"detail": "unknown session"})
        if h < 0 or epsilon <= 0 or norm not in ("per-channel", "joint"):
            return JSONResponse(status_code=400,
                                content={"detail": "bad parameters"})
        png, solve_ms = session.render(h, epsilon, norm == "joint")
        return Response(
            content=png,
            media_type="image/png",
            headers={"X-Solve-Ms": f"{solve_ms:.3f}"},
        )

    @app.delete("/session/{session_id}", status_code=204)
    def delete_session(session_id: str):
        with registry_lock:
            if sessions.pop(session_id, None) is None:
                return JSONResponse(status_code=404,
                                    content={"detail": "unknown session"})
        return Response(status_code=204)

    ui_dir = Path(webui_dir) if webui_dir is not None else _WEBUI_DIR
    if ui_dir.is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
