#!/usr/bin/env python3
"""Probe which face regions a trained model attends to.

Requires the checkpoint from demo 03 (runs it first if missing). On the
synthetic data the age signal lives in the eye band and a distractor sits in
the nose region, so a converged model pushes eye attention up and nose
attention down.
"""

import subprocess
import sys
from pathlib import Path

from fpage import load_checkpoint, probe, toy_backbone_build, write_stats_csv, write_stats_json

out = Path(__file__).parent / "output"
ckpt_path = out / "demo_model.npz"
if not ckpt_path.exists():
    print("checkpoint missing; running demo 03 first...\n")
    subprocess.run([sys.executable, str(Path(__file__).parent / "03_train_small_model.py")], check=True)

ckpt = load_checkpoint(ckpt_path)
backbone = toy_backbone_build(seed=0)
stats = probe(out / "data" / "val_manifest.jsonl", ckpt, backbone=backbone)

print(f"attention statistics over {stats.n} validation images:")
print(f"{'region':15s} {'mean':>7s} {'std':>7s}")
order = sorted(range(len(stats.class_names)), key=lambda i: -stats.mean[i])
for i in order:
    bar = "#" * int(30 * stats.mean[i])
    print(f"{stats.class_names[i]:15s} {stats.mean[i]:7.3f} {stats.std[i]:7.3f}  {bar}")

by_group = ", ".join(f"{label} (n={entry['n']})" for label, entry in stats.group_breakdown.items())
print(f"\nage groups covered: {by_group}")

write_stats_csv(stats, out / "attention.csv")
write_stats_json(stats, out / "attention.json")
print(f"\nwrote {out / 'attention.csv'} and {out / 'attention.json'}")
