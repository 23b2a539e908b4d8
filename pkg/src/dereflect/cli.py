"""Command-line interface: suppress, synth, eval, bench, serve.

Parameter precedence is CLI flag > DEREFLECT_* environment variable >
built-in default.
"""

import argparse
import csv
import os
import sys
import time

import numpy as np

from . import metrics, synthesis
from .image_io import decode_image, encode_image
from .suppression import DEFAULT_EPSILON, DEFAULT_H, suppress

ENV_PREFIX = "DEREFLECT_"


def _env_default(name, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError as exc:
        raise SystemExit(f"bad {ENV_PREFIX}{name}={raw!r}: {exc}")


def _resolve(cli_value, name, cast, fallback):
    if cli_value is not None:
        return cli_value
    return _env_default(name, cast, fallback)


def _parse_size(text):
    try:
        w, h = text.lower().split("x")
        size = (int(h), int(w))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"size must look like 512x512 (WxH), got {text!r}"
        )
    if size[0] < 1 or size[1] < 1:
        raise argparse.ArgumentTypeError(f"degenerate size {text!r}")
    return size


def _read_image(path):
    with open(path, "rb") as f:
        return decode_image(f.read())


def _write_image(path, img):
    data = encode_image(img)
    with open(path, "wb") as f:
        f.write(data)


def _timed_suppress(img, h, epsilon, joint, repeats):
    """Run the solve `repeats` times, return (result, mean seconds)."""
    result = None
    elapsed = []
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter()
        result = suppress(img, h=h, epsilon=epsilon, joint=joint)
        elapsed.append(time.perf_counter() - t0)
    return result, sum(elapsed) / len(elapsed)


def _cmd_suppress(args):
    h = _resolve(args.h, "H", float, DEFAULT_H)
    epsilon = _resolve(args.epsilon, "EPSILON", float, DEFAULT_EPSILON)
    norm = _resolve(args.norm, "NORM", str, "per-channel")
    joint = norm == "joint"

    t_total0 = time.perf_counter()
    try:
        img = _read_image(args.input)
    except (OSError, ValueError) as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 1

    repeats = args.time if args.time is not None else 1
    result, mean_solve = _timed_suppress(img, h, epsilon, joint, repeats)

    try:
        _write_image(args.output, result)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return 1
    total = time.perf_counter() - t_total0

    if args.time is not None:
        print(f"solve mean over {max(1, repeats)} runs: "
              f"{mean_solve * 1e3:.1f} ms")
    if args.time_total:
        print(f"total including decode/encode: {total * 1e3:.1f} ms")
    print(f"wrote {args.output}")
    return 0


def _cmd_synth(args):
    if args.toy:
        size = args.size if args.size is not None else (800, 800)
        t, r = synthesis.make_toy_example(size=size, seed=args.seed)
    else:
        if not (args.transmission and args.reflection):
            print("error: provide transmission and reflection paths or --toy",
                  file=sys.stderr)
            return 1
        try:
            t = _read_image(args.transmission)
            r = _read_image(args.reflection)
        except (OSError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1

    try:
        y = synthesis.blend(t, r, args.w, sigma=args.sigma)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    _write_image(args.out, y)
    print(f"wrote {args.out}")
    if args.ref_out:
        _write_image(args.ref_out, args.w * t)
        print(f"wrote {args.ref_out}")
    if args.t_out:
        _write_image(args.t_out, t)
        print(f"wrote {args.t_out}")
    if args.r_out:
        _write_image(args.r_out, r)
        print(f"wrote {args.r_out}")
    return 0


def _cmd_eval(args):
    if len(args.images) % 2 != 0:
        print("error: eval expects REF TEST pairs", file=sys.stderr)
        return 1
    pairs = list(zip(args.images[::2], args.images[1::2]))
    rows = []
    failed = False
    for ref_path, test_path in pairs:
        try:
            ref = _read_image(ref_path)
            test = _read_image(test_path)
            report = metrics.MetricReport.compute(ref, test)
            rows.append((test_path, report.psnr_db, report.ssim))
        except (OSError, ValueError) as exc:
            print(f"error: {ref_path} vs {test_path}: {exc}", file=sys.stderr)
            failed = True

    width = max((len(r[0]) for r in rows), default=5)
    print(f"{'image':<{width}}  {'psnr_db':>10}  {'ssim':>8}")
    for name, p, s in rows:
        print(f"{name:<{width}}  {p:>10.4f}  {s:>8.5f}")

    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f)
            writer.writerow(["image", "psnr_db", "ssim"])
            for name, p, s in rows:
                writer.writerow([name, repr(p), repr(s)])
        print(f"wrote {args.csv}")
    return 1 if failed else 0


def _cmd_bench(args):
    h = _resolve(args.h, "H", float, DEFAULT_H)
    epsilon = _resolve(args.epsilon, "EPSILON", float, 1e-6)
    sizes = args.size or [(512, 512), (1080, 1440)]
    rng = np.random.default_rng(0)
    rows = []
    for m, n in sizes:
        shape = (m, n) if args.channels == 1 else (m, n, args.channels)
        img = rng.random(shape)
        suppress(img, h=h, epsilon=epsilon)  # warm-up, builds plans/kernels
        _, mean_solve = _timed_suppress(img, h, epsilon, False, args.repeats)
        rows.append((f"{n}x{m}x{args.channels}", mean_solve * 1e3))
        print(f"{rows[-1][0]:>16}: {rows[-1][1]:8.1f} ms "
              f"(mean of {args.repeats})")
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f)
            writer.writerow(["size", "mean_ms"])
            writer.writerows(rows)
        print(f"wrote {args.csv}")
    return 0


def _cmd_serve(args):
    import uvicorn

    from .service import create_app

    port = _resolve(args.port, "PORT", int, 8000)
    if not 1024 <= port <= 65535:
        print(f"error: port {port} outside [1024, 65535]", file=sys.stderr)
        return 1
    max_pixels = _resolve(args.max_pixels, "MAX_PIXELS", int, 24_000_000)
    app = create_app(max_pixels=max_pixels)
    uvicorn.run(app, host=args.host, port=port, log_level="info")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dereflect",
        description="Single-image reflection suppression toolbox",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("suppress", help="dereflect one image file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--h", type=float, default=None,
                   help=f"gradient threshold (default {DEFAULT_H})")
    p.add_argument("--epsilon", type=float, default=None,
                   help=f"screening weight (default {DEFAULT_EPSILON:g})")
    p.add_argument("--norm", choices=["per-channel", "joint"], default=None)
    p.add_argument("--time", type=int, nargs="?", const=20, default=None,
                   metavar="N",
                   help="report mean solve time over N repeats (default 20)")
    p.add_argument("--time-total", action="store_true",
                   help="also report wall time including decode/encode")
    p.set_defaults(func=_cmd_suppress)

    p = sub.add_parser("synth", help="build a synthetic blended image")
    p.add_argument("transmission", nargs="?")
    p.add_argument("reflection", nargs="?")
    p.add_argument("--toy", action="store_true",
                   help="generate procedural layers instead of reading files")
    p.add_argument("--size", type=_parse_size, default=None, metavar="WxH")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--w", type=float, default=0.7, help="blending weight")
    p.add_argument("--sigma", type=float, default=4.0,
                   help="reflection blur std in pixels")
    p.add_argument("--out", required=True, help="output blend PNG")
    p.add_argument("--ref-out", default=None,
                   help="also write w * transmission (metric reference)")
    p.add_argument("--t-out", default=None)
    p.add_argument("--r-out", default=None)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("eval", help="PSNR/SSIM of REF TEST image pairs")
    p.add_argument("images", nargs="+", metavar="REF TEST")
    p.add_argument("--csv", default=None, help="write rows to a CSV file")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("bench", help="time the solver on synthetic images")
    p.add_argument("--size", type=_parse_size, action="append", default=None,
                   metavar="WxH")
    p.add_argument("--channels", type=int, choices=[1, 3], default=3)
    p.add_argument("--h", type=float, default=None)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--repeats", type=int, default=20)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("serve", help="run the local tuning service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--max-pixels", type=int, default=None,
                   help="reject uploads above this pixel count")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
