"""Drive the tuning service end to end, the way the web UI does.

Starts the HTTP service on a spare port, uploads an image, walks the
threshold slider through a few values and reports the solve time the
service measured for each request. The second request at a repeated h
hits the session's result cache.
"""

import threading
import time

import httpx
import numpy as np
import uvicorn

import dereflect as dr
from dereflect.service import create_app

PORT = 8123


def main():
    server = uvicorn.Server(uvicorn.Config(
        create_app(), host="127.0.0.1", port=PORT, log_level="error"))
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    while not server.started:
        time.sleep(0.05)
    print(f"service up on 127.0.0.1:{PORT}")

    t, r = dr.make_toy_example((720, 960), seed=0)
    png = dr.encode_image(dr.blend(t, r, w=0.7, sigma=2.0))

    with httpx.Client(base_url=f"http://127.0.0.1:{PORT}",
                      timeout=30.0) as web:
        created = web.post(
            "/session", files={"image": ("demo.png", png, "image/png")})
        sid = created.json()["session_id"]
        meta = web.get(f"/session/{sid}/meta").json()
        print(f"session {sid}: {meta['width']}x{meta['height']}, "
              f"default h {meta['default_h']}, "
              f"suggested range {meta['h_range']}")

        for h in (0.02, 0.05, 0.08, 0.05):
            res = web.get(f"/session/{sid}/result",
                          params={"h": h, "epsilon": 1e-6})
            print(f"  h={h:.2f}: {len(res.content)} PNG bytes, "
                  f"solve {float(res.headers['x-solve-ms']):7.1f} ms")

        web.delete(f"/session/{sid}")
        print("session deleted")

    server.should_exit = True
    thread.join(timeout=10)
    print("service stopped; `dereflect serve` runs the same thing with "
          "the browser slider UI at /")


if __name__ == "__main__":
    main()
