#!/usr/bin/env python3
"""Walk through the age label codec: Gaussian encoding and expectation decoding."""

import numpy as np

from fpage import AgeDistribution, LabelCodecConfig, decode_expectation, encode_label

cfg = LabelCodecConfig()  # 101 bins (ages 0..100), sigma = 2 years
print(f"codec: K={cfg.num_classes}, sigma={cfg.sigma}")

# An interior age decodes back exactly: the truncated tails are negligible.
dist = encode_label(37, cfg)
print(f"\nencode(37): argmax={int(np.argmax(dist.probs))}, sum={dist.probs.sum():.9f}")
print("mass near the label:")
for k in range(33, 42):
    bar = "#" * int(200 * dist.probs[k])
    print(f"  age {k:3d}  p={dist.probs[k]:.4f}  {bar}")
print(f"decode(encode(37)) = {decode_expectation(dist):.6f}")

# At the boundary the Gaussian is clipped at 0, so mass shifts rightward and
# the expectation is biased: ~1.30 for age 0.
print(f"\ndecode(encode(0))  = {decode_expectation(encode_label(0, cfg)):.6f}  (truncation bias)")
print(f"decode(encode(100))= {decode_expectation(encode_label(100, cfg)):.6f}")

# Decoding is linear: mixtures decode to mixed expectations.
p, q = encode_label(20).probs, encode_label(60).probs
mix = AgeDistribution(0.25 * p + 0.75 * q)
print(f"\ndecode(0.25*enc(20) + 0.75*enc(60)) = {decode_expectation(mix):.4f}  (expect ~50)")
