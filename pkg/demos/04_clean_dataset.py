#!/usr/bin/env python3
"""Run the semi-automatic cleaning pipeline on a store with planted contamination."""

import json
from pathlib import Path

from fpage import CleaningConfig, run_cleaning
from fpage.synthetic import generate_embedding_store

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

# 12 subjects; the first 3 get a contaminant identity sized ~80% of the main
# cluster (ambiguous under the 70% rule), the rest stay clearly clean.
store, truth = generate_embedding_store(
    out / "embeddings", seed=42, num_subjects=12, ambiguous_subjects=3
)
print(f"embedding store -> {store}")

cfg = CleaningConfig(eps=0.35, min_pts=3, num_runs=10, seed=1)
consensus_path = out / "consensus.jsonl"
queue_path = out / "review_queue.jsonl"
results = run_cleaning(store, cfg, consensus_path, queue_path)

print(f"\n{'subject':10s} {'largest':>7s} {'second':>6s} {'ratio':>6s}  state")
for cons in results:
    ratio = cons.second_size / cons.largest_size if cons.largest_size else 0.0
    flag = " <- needs review" if cons.ambiguous else ""
    print(
        f"{cons.subject_id:10s} {cons.largest_size:7d} {cons.second_size:6d} "
        f"{ratio:6.2f}  {cons.review_state}{flag}"
    )

queued = [json.loads(l)["subject_id"] for l in queue_path.read_text().splitlines()]
print(f"\nreview queue ({len(queued)}): {queued}")
print(f"planted ambiguous: {[s for s, t in truth.items() if t['expect_ambiguous']]}")

kept_ok = sum(
    1
    for cons in results
    if not truth[cons.subject_id]["expect_ambiguous"]
    and cons.kept_faces == truth[cons.subject_id]["main_faces"]
)
print(f"clean subjects recovered exactly: {kept_ok}/{len(results) - len(queued)}")
print(f"\nconsensus -> {consensus_path}")
print("next: serve the queue with `fpage clean review-serve` (see demo 07)")
