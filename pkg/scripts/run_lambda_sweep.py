#!/usr/bin/env python3
"""Loss-weight grid sweep on a synthetic corpus.

The full 11x11 grid trains 121 models; pass --grid-rec / --grid-tml to
restrict it (comma-separated values in [0, 1]).
"""

import argparse
import sys
from pathlib import Path

from flowsentry.cli import main as flowsentry


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workdir", default="sweep-run")
    parser.add_argument("--flows", type=int, default=10_000)
    parser.add_argument("--epochs", type=int, default=20)
    parser.add_argument("--grid-rec", default=None)
    parser.add_argument("--grid-tml", default=None)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    work = Path(args.workdir)
    work.mkdir(parents=True, exist_ok=True)
    flows = work / "flows.csv"

    rc = flowsentry([
        "generate", "--out", str(flows), "--flows", str(args.flows),
        "--features", "8", "--attack-fraction", "0.3", "--mean-shift", "5.0",
        "--burst-flows", "500", "--burst-alignment", "25", "--seed", "11",
    ])
    if rc != 0:
        sys.exit(rc)

    sweep_args = [
        "sweep", "--flows", str(flows), "--out", str(work / "sweep.csv"),
        "--category-column", "category", "--epochs", str(args.epochs),
        "--seed", str(args.seed),
    ]
    if args.grid_rec:
        sweep_args += ["--grid-rec", args.grid_rec]
    if args.grid_tml:
        sweep_args += ["--grid-tml", args.grid_tml]
    sys.exit(flowsentry(sweep_args))


if __name__ == "__main__":
    main()
