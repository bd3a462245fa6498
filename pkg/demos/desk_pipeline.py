"""End-to-end desk run: corpus, codec, one preset, samples, metrics and plots.

By default everything is shrunk so the script finishes in about a minute;
``--full`` uses the desk defaults (2,000 images, 5,000 steps) and the shared
cache under runs/desk.

    python3 demos/desk_pipeline.py [--full] [--setting 4] [--out demo-out]
"""
import argparse
from dataclasses import replace
from pathlib import Path

import numpy as np

from classndiff.config import RunConfig
from classndiff.data import write_images
from classndiff.experiments import Pipeline
from classndiff.metrics import pca_project
from classndiff.plots import plot_kde, plot_pca

ap = argparse.ArgumentParser()
ap.add_argument("--full", action="store_true")
ap.add_argument("--setting", type=int, default=4)
ap.add_argument("--out", type=Path, default=Path("demo-out"))
args = ap.parse_args()

cfg = RunConfig()
cache = Path("runs/desk")
if not args.full:
    cfg.corpus = replace(cfg.corpus, n_images=400)
    cfg.codec = replace(cfg.codec, epochs=4)
    cfg.training = replace(cfg.training, total_steps=300, lr=1e-3, log_every=100)
    cfg.sampling = replace(cfg.sampling, steps=50, count=40)
    cache = args.out / "cache"
pipe = Pipeline(cfg.validate(), cache)

codec = pipe.codec
print(f"codec reconstruction mse {codec.recon_mse:.5f}, latent scale {codec.scale:.3f}")

state = pipe.run(args.setting, seed=0)
h = state.history
print(f"setting {args.setting}: l_diff {np.mean([r.l_diff for r in h[:50]]):.3f} -> "
      f"{np.mean([r.l_diff for r in h[-50:]]):.3f} over {len(h)} steps")
if state.classifier is not None:
    print("joint classifier on test split:", pipe.classifier_auc(state.classifier))

gens = {y: pipe.generations(args.setting, 0, y) for y in (0, 1)}
for y, name in ((0, "benign"), (1, "malignant")):
    write_images(gens[y][:16], args.out / "samples" / name, np.full(16, y))

row = pipe.evaluate(args.setting, 0)
print(f"FID {row['fid']:.3f}  MS-SSIM diversity {row['ms_ssim']:.4f}  ({row['n_per_class']} per class)")

# feature-space picture: real training images vs generations
real = pipe.real_features(0)
fake = pipe.features(np.concatenate([gens[0], gens[1]]), 0)
plot_pca({"real": real, f"setting{args.setting}": fake}, "real", args.out / "pca.ppm")
plot_kde({"real": pca_project(real, real)[:, 0], f"setting{args.setting}": pca_project(fake, real)[:, 0]},
         args.out / "kde.ppm")
print(f"plots and samples written under {args.out}")
