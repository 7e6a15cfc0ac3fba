"""Driving the command-line interface from a script.

Jobs are JSON documents; results are deterministic JSON, so they can be
stored as fixtures and diffed.  This demo writes a job file, runs the
installed ``newton-zeta`` entry point in a subprocess, and inspects the
result document.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

job = {
    "n": 2,
    "variables": ["z1", "z2"],
    "constraints": ["z1 + z2*(1+z1^2)"],
    "options": {"assume_nondegenerate": True, "trace": True},
}

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "job.json"
    path.write_text(json.dumps(job, indent=2))
    print("job document:")
    print(path.read_text())

    result = subprocess.run(
        [sys.executable, "-m", "newtonzeta.cli",
         "deform-origin", str(path), "--scope", "affine"],
        capture_output=True, text=True, check=True,
    )
    doc = json.loads(result.stdout)
    print("result document:")
    print(json.dumps(doc, indent=2))

    print("\nheadline:", doc["pretty"], "of degree", doc["degree"])
    print("traces multiply back to the headline:",
          sum(t["exponent"] for t in doc["traces"]) == doc["factors"][0]["exponent"])

    # raw-support mode: no polynomial text, just exponent vectors
    raw_job = {
        "n": 2,
        "constraints": [{"support": [[1, 0], [0, 1], [2, 1]]}],
        "options": {"assume_nondegenerate": True},
    }
    path.write_text(json.dumps(raw_job))
    result = subprocess.run(
        [sys.executable, "-m", "newtonzeta.cli", "deform-origin", str(path)],
        capture_output=True, text=True, check=True,
    )
    print("\nraw-support route gives:", json.loads(result.stdout)["pretty"])
