"""How the threshold h trades reflection removal against detail loss.

Sweeps h over its useful range and tabulates (a) how many gradient
vectors survive thresholding and (b) the quality of the result against
the clean scaled transmission layer. The survivor count is monotone by
construction; quality peaks where the reflection is mostly gone but the
transmission texture is still intact.
"""

import numpy as np

import dereflect as dr
from dereflect.gradients import grad, threshold_gradients


def main():
    t, r = dr.make_toy_example((512, 512), seed=1)
    y = dr.blend(t, r, w=0.7, sigma=4.0)
    reference = 0.7 * t

    gx, gy = grad(y)
    total = gx.size

    print(f"{'h':>6}  {'kept gradients':>15}  {'PSNR dB':>8}  {'SSIM':>7}")
    for h in np.arange(0.0, 0.101, 0.01):
        tx, ty = threshold_gradients(gx, gy, h)
        kept = int(((tx != 0) | (ty != 0)).sum())
        out = dr.suppress(y, h=float(h), epsilon=1e-6)
        print(f"{h:6.2f}  {kept:11d} ({kept / total:4.0%})  "
              f"{dr.psnr(out, reference):8.2f}  "
              f"{dr.ssim(out, reference):7.4f}")

    print("\nh = 0 keeps everything and reproduces the input; past the "
          "sweet spot the survivor count keeps dropping and texture "
          "starts to go with it.")


if __name__ == "__main__":
    main()
