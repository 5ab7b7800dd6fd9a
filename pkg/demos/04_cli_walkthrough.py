## The command line, end to end
##
## Writes a config, draws a synthetic CSV, then runs fit / cluster / compare /
## plotdata on it. Equivalent shell commands are printed before each step.

import json
import tempfile
from pathlib import Path

from ordfuzz.cli import run

work = Path(tempfile.mkdtemp(prefix="ordfuzz-demo-"))
cfg = work / "config.json"
cfg.write_text(json.dumps({
    "labels": ["Poor", "Fair", "Good", "Excellent"],
    "columns": [{"name": "math", "probabilities": [0.1, 0.3, 0.4, 0.2]},
                {"name": "physics", "probabilities": [0.2, 0.3, 0.3, 0.2]},
                {"name": "history", "probabilities": [0.05, 0.25, 0.4, 0.3]}],
    "seed": 7,
}, indent=2))
data = work / "grades.csv"


def step(*argv):
    print("$ ordfuzz " + " ".join(argv))
    code = run(list(argv))
    print(f"  exit code {code}\n")


step("synth", "--config", str(cfg), "--n", "500", "--out", str(data))
print("".join(data.read_text().splitlines(keepends=True)[:4]))

step("fit", str(data), "--config", str(cfg), "--out", str(work / "model.json"))
step("cluster", str(data), "--config", str(cfg), "--format", "csv",
     "--out", str(work / "cluster.csv"))
print("".join((work / "cluster.csv").read_text().splitlines(keepends=True)[:5]))

step("compare", str(data), "--config", str(cfg), "--out", str(work / "compare.json"))
doc = json.loads((work / "compare.json").read_text())
print("first observation, two-neighbour:", doc["mbfcm"][0])
print("first observation, baseline:     ", doc["baseline"][0], "\n")

step("plotdata", str(data), "--config", str(cfg), "--out", str(work / "knots.csv"))
print((work / "knots.csv").read_text())
print("outputs in", work)
