#!/usr/bin/env python3
"""End-to-end experiment on a synthetic corpus: generate, train, calibrate,
detect, and evaluate, writing all artifacts under --workdir.

Mirrors the benign-only protocol: the model never sees an attack flow.
"""

import argparse
import sys
from pathlib import Path

from flowsentry.cli import main as flowsentry


def run(args: list) -> None:
    rc = flowsentry([str(a) for a in args])
    if rc != 0:
        sys.exit(rc)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workdir", default="synthetic-run")
    parser.add_argument("--flows", type=int, default=20_000)
    parser.add_argument("--features", type=int, default=8)
    parser.add_argument("--attack-fraction", type=float, default=0.3)
    parser.add_argument("--mean-shift", type=float, default=5.0)
    parser.add_argument("--epochs", type=int, default=50)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    work = Path(args.workdir)
    work.mkdir(parents=True, exist_ok=True)
    flows = work / "flows.csv"
    model = work / "model.fsn"

    run(["generate", "--out", flows, "--flows", args.flows,
         "--features", args.features, "--attack-fraction", args.attack_fraction,
         "--mean-shift", args.mean_shift, "--burst-flows", 500,
         "--burst-alignment", 25, "--seed", 11])
    run(["train", "--flows", flows, "--model-out", model,
         "--category-column", "category", "--epochs", args.epochs,
         "--lambda-rec", 0.8, "--lambda-tml", 0.9, "--seed", args.seed])
    run(["detect", "--model", model, "--flows", flows,
         "--out", work / "verdicts.csv", "--category-column", "category"])
    run(["eval", "--model", model, "--flows", flows,
         "--out-dir", work / "report", "--category-column", "category",
         "--latents-csv", work / "report" / "latents.csv"])
    print(f"done; see {work}/report/summary.txt")


if __name__ == "__main__":
    main()
