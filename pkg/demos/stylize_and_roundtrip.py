"""Look at the toy domains, the stylizer and the heatmap round trip.

Writes demos/out/domains.png and prints a few numbers. Takes about a minute on one CPU.
"""
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from dapose.augmentation import apply_to_heatmap, invert_on_heatmap, rotation_of, sample_policy
from dapose.datasets import ToyDomainConfig, generate_toy_domains, stack_images
from dapose.geometry import decode_heatmaps, render_heatmaps
from dapose.style import psnr, pretrain_style, stylize

OUT = Path(__file__).parent / "out"


def main():
    OUT.mkdir(exist_ok=True)
    cfg = ToyDomainConfig(n_source=256, n_target_train=256, n_target_eval=16, n_source_val=16, seed=0)
    source, target, _ = generate_toy_domains(cfg)
    xs, xt = stack_images(source), stack_images(target)

    style = pretrain_style(xs, xt, steps=400, seed=0)
    rows = [xs[:4], xt[:4]] + [stylize(xs[:4], xt[:4], eta, style).numpy() for eta in (0.0, 0.5, 1.0)]
    print(f"eta=0 reconstruction PSNR {psnr(stylize(xs[:64], xs[:64], 0.0, style), xs[:64]):.1f} dB")

    fig, axes = plt.subplots(len(rows), 4, figsize=(6, 7.5))
    labels = ["source", "target", "eta 0", "eta 0.5", "eta 1"]
    for r, (imgs, label) in enumerate(zip(rows, labels)):
        for c in range(4):
            axes[r, c].imshow(np.transpose(imgs[c], (1, 2, 0)).clip(0, 1))
            axes[r, c].set_xticks([])
            axes[r, c].set_yticks([])
        axes[r, 0].set_ylabel(label)
    fig.tight_layout()
    fig.savefig(OUT / "domains.png", dpi=100)

    # a label rendered as heatmaps survives warp and unwarp
    kps = source[0].keypoints
    h = render_heatmaps(kps, (16, 16))
    rec = sample_policy("strong", 5)
    back = invert_on_heatmap(apply_to_heatmap(h, rec), rec)
    err = np.abs(decode_heatmaps(back).coords - decode_heatmaps(h).coords).max()
    print(f"strong policy: rotation {rotation_of(rec):.1f} deg, worst decoded shift after round trip {err:.2f} px (one heatmap cell is 4 px)")


if __name__ == "__main__":
    main()
