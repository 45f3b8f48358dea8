"""Short IMRL run on the sparse simulator, then a CTR plot.

    python demos/quick_train.py [out_dir]

The same thing through the command line:

    imrl train --config configs/quick.json --out runs/quick
    imrl plot runs/quick/metrics.csv --out runs/quick/ctr.svg
"""

import sys
from pathlib import Path

from imrl.harness.config import ExperimentConfig
from imrl.harness.experiment import final_window_ctr, run_train
from imrl.harness.plotting import plot

ROOT = Path(__file__).resolve().parents[1]


def main(out):
    cfg = ExperimentConfig.load(ROOT / "configs" / "quick.json")
    records = run_train(cfg, out)
    for r in records:
        print(f"episode {r.episode:4d}  eval CTR {r.ctr:.3f}  alpha_T {r.alpha_T:.3g}  buffer {r.buffer_size}")
    print(f"final-window CTR {final_window_ctr(records):.4f}")
    print("plot:", plot([Path(out) / "metrics.csv"], Path(out) / "ctr.svg"))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "runs/quick")
