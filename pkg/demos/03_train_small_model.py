#!/usr/bin/env python3
"""Train a small model on synthetic data, save a checkpoint, predict with flip TTA.

Uses a reduced dataset so it finishes in about a minute; see the acceptance
suite for the full 2000-image convergence run.
"""

from pathlib import Path

from fpage import TrainConfig, load_checkpoint, predict_age, save_checkpoint, toy_backbone_build, train
from fpage.synthetic import generate_age_dataset, make_age_coded_image

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

train_manifest = generate_age_dataset(out / "data", 400, seed=11, prefix="train")
val_manifest = generate_age_dataset(out / "data", 100, seed=12, prefix="val")

backbone = toy_backbone_build(seed=0)
cfg = TrainConfig(batch_size=32, max_epochs=15, seed=5)
ckpt = train(
    train_manifest,
    val_manifest,
    backbone,
    cfg=cfg,
    log_path=out / "progress.jsonl",
    progress=lambda e, l, m: print(f"epoch {e}: train_loss {l:7.3f}  val_mae {m:6.3f}"),
)
print(f"\nbest epoch {ckpt.training_meta['epoch']}, val MAE {ckpt.training_meta['val_mae']:.3f}")

ckpt_path = out / "demo_model.npz"
save_checkpoint(ckpt, ckpt_path)
print(f"checkpoint -> {ckpt_path}")

# Inference round-trip through the archive, with and without flip averaging.
reloaded = load_checkpoint(ckpt_path)
import numpy as np

rng = np.random.default_rng(99)
for true_age in (10, 45, 80):
    img = make_age_coded_image(true_age, rng)
    plain, _ = predict_age(img, (1, 1, 15, 15), reloaded, backbone=backbone)
    tta, _ = predict_age(img, (1, 1, 15, 15), reloaded, flip_tta=True, backbone=backbone)
    print(f"true {true_age:3d}  predicted {plain:6.2f}  with flip-TTA {tta:6.2f}")
