"""Quantitative synthetic protocol: blend weights x blur widths.

Regenerates the standard benchmark setup on procedural layers: two
512x512 scene pairs, reflection blurred with sigma = 4, blending
weights 0.7 and 0.5, suppression at h = 0.03 with epsilon = 1e-6.
Reports PSNR/SSIM against the scaled transmission layer w*T before and
after suppression.
"""

import dereflect as dr


def main():
    print(f"{'pair':>5} {'w':>4}  {'PSNR in':>8} {'PSNR out':>9}  "
          f"{'SSIM in':>8} {'SSIM out':>9}")
    for seed in (1, 2):
        t, r = dr.make_toy_example((512, 512), seed=seed)
        for w in (0.7, 0.5):
            y = dr.blend(t, r, w=w, sigma=4.0)
            out = dr.suppress(y, h=0.03, epsilon=1e-6)
            ref = w * t
            print(f"{seed:>5} {w:>4.1f}  "
                  f"{dr.psnr(y, ref):8.2f} {dr.psnr(out, ref):9.2f}  "
                  f"{dr.ssim(y, ref):8.4f} {dr.ssim(out, ref):9.4f}")

    print("\nBoth metrics must improve in every row; the weaker the "
          "transmission weight, the more reflection there is to remove.")


if __name__ == "__main__":
    main()
