"""Wall-clock behavior of the solve across image sizes.

Times the full suppression (gradients + threshold + spectral solve,
codecs excluded) as the mean of 20 runs per size, the same methodology
the CLI's --time flag uses. Smartphone-sized RGB images stay well under
a second on a desktop CPU.
"""

import time

import numpy as np

import dereflect as dr


def mean_ms(img, repeats=20):
    dr.suppress(img, h=0.03, epsilon=1e-6)  # warm-up
    start = time.perf_counter()
    for _ in range(repeats):
        dr.suppress(img, h=0.03, epsilon=1e-6)
    return (time.perf_counter() - start) / repeats * 1e3


def main():
    rng = np.random.default_rng(0)
    sizes = [(256, 256), (512, 512), (720, 960), (1080, 1440)]
    print(f"{'size':>12}  {'gray ms':>8}  {'rgb ms':>8}")
    for m, n in sizes:
        gray = mean_ms(rng.random((m, n)))
        rgb = mean_ms(rng.random((m, n, 3)))
        print(f"{n:>5}x{m:<6}  {gray:8.1f}  {rgb:8.1f}")

    print("\nCosts grow linearithmically with the pixel count; RGB is "
          "three independent plane solves.")


if __name__ == "__main__":
    main()
