#!/usr/bin/env python3
"""Evaluate prediction files and compare two methods with a paired t-test."""

from pathlib import Path

import numpy as np

from fpage import PredictionRecord, evaluate, paired_t_test, write_predictions

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

# Simulate two methods on the same 400 test images: method B is noisier.
rng = np.random.default_rng(0)
true_ages = rng.integers(0, 101, 400)
preds_a = [
    PredictionRecord(f"img{i:04d}.npy", int(t), float(t + rng.normal(0, 3.0)))
    for i, t in enumerate(true_ages)
]
preds_b = [
    PredictionRecord(f"img{i:04d}.npy", int(t), float(t + rng.normal(0, 4.5)))
    for i, t in enumerate(true_ages)
]
write_predictions(preds_a, out / "method_a.jsonl")
write_predictions(preds_b, out / "method_b.jsonl")

for name, preds in [("A", preds_a), ("B", preds_b)]:
    report = evaluate(preds)
    cs = "  ".join(f"CS_{l}={v:5.1f}%" for l, v in sorted(report.cs.items()) if l in (1, 3, 5, 10))
    print(f"method {name}: MAE {report.mae:5.2f}   {cs}")

# Paired two-sided t-test on per-image absolute errors, Bonferroni-corrected
# as if this were one of 8 simultaneous comparisons.
result = paired_t_test(
    [p.abs_err for p in preds_a],
    [p.abs_err for p in preds_b],
    num_comparisons=8,
    alpha=0.05,
)
print(f"\npaired t-test (A vs B): t = {result.t:.2f}, p = {result.p:.3e}")
print(f"Bonferroni corrected p = {result.p_corrected:.3e} (alpha {result.alpha})")
print("A significantly better than B" if result.significant and result.t < 0 else "no significant difference")
