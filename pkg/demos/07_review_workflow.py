#!/usr/bin/env python3
"""Drive the human-review service end to end over HTTP.

Starts the review service on the consensus from demo 04 (runs it first if
needed), walks the ambiguous queue like a reviewer would, and exports the
final cleaned manifest.
"""

import json
import subprocess
import sys
import threading
import time
from pathlib import Path

import httpx
import uvicorn

from fpage.service import build_review_app

out = Path(__file__).parent / "output"
consensus_path = out / "consensus.jsonl"
if not consensus_path.exists():
    print("consensus missing; running demo 04 first...\n")
    subprocess.run([sys.executable, str(Path(__file__).parent / "04_clean_dataset.py")], check=True)

decisions_path = out / "decisions.jsonl"
decisions_path.unlink(missing_ok=True)

app = build_review_app(consensus_path, decisions_path)
config = uvicorn.Config(app, host="127.0.0.1", port=8321, log_level="error")
server = uvicorn.Server(config)
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)
base = "http://127.0.0.1:8321"

with httpx.Client(base_url=base) as client:
    queue = client.get("/queue").json()
    print(f"queue holds {queue['total']} ambiguous subjects")

    for i, item in enumerate(queue["items"]):
        sid = item["subject_id"]
        detail = client.get(f"/subject/{sid}").json()
        sizes = [len(c) for c in detail["clusters"]]
        print(f"\n{sid}: clusters sized {sizes}, ratio {item['ratio']:.2f}")
        if i % 3 == 0:
            decision = {"subject_id": sid, "action": "keep", "reviewer": "demo"}
        elif i % 3 == 1:
            decision = {"subject_id": sid, "action": "discard", "reviewer": "demo"}
        else:
            keep_two = detail["kept_faces"][:2]
            decision = {
                "subject_id": sid,
                "action": "edit",
                "kept_faces": keep_two,
                "reviewer": "demo",
            }
        resp = client.post("/decision", json=decision).json()
        print(f"  -> {decision['action']}, queue remaining {resp['queue_remaining']}")

    assert client.get("/queue").json()["total"] == 0
    export = client.get("/export").text
    manifest_path = out / "cleaned_manifest.jsonl"
    manifest_path.write_text(export)
    kept = [json.loads(l) for l in export.splitlines()]
    print(f"\nexported {len(kept)} subjects -> {manifest_path}")
    print(f"decision log ({decisions_path.name}) survives restarts; re-serving replays it")

server.should_exit = True
thread.join(timeout=5)
