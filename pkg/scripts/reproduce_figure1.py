#!/usr/bin/env python3
"""Regenerate the alpha-sweep comparison data for the worked example.

Runs the solver at alpha = 0.9 and 0.99 next to the classical RK4
reference and writes figure1.csv; with matplotlib available it also
renders a PNG, but the CSV is the artifact.
"""

import argparse
import csv
import os
import sys

from fracadm.cli import cmd_figure1
from fracadm.config import load_config

DEFAULT_CONFIG = os.path.join(os.path.dirname(__file__), "..", "configs", "worked_example.cfg")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--config", default=DEFAULT_CONFIG, help="run file to use")
    parser.add_argument("--out", default="out", help="output directory")
    parser.add_argument("--plot", action="store_true", help="also render a PNG (needs matplotlib)")
    args = parser.parse_args()

    config = load_config(args.config).with_overrides(out_dir=args.out)
    code = cmd_figure1(config)
    if code != 0:
        return code

    csv_path = os.path.join(args.out, "figure1.csv")
    if args.plot:
        try:
            import matplotlib

            matplotlib.use("Agg")
            import matplotlib.pyplot as plt
        except ImportError:
            print("matplotlib not installed; CSV written, plot skipped", file=sys.stderr)
            return 0
        with open(csv_path, newline="") as handle:
            reader = csv.reader(handle)
            header = next(reader)
            data = list(zip(*[[float(cell) for cell in row] for row in reader]))
        styles = {"y_exact_rk4": "-"}
        plt.figure(figsize=(6, 4))
        for name, column in zip(header[1:], data[1:]):
            plt.plot(data[0], column, styles.get(name, "--"), label=name)
        plt.xlabel("t")
        plt.ylabel("y")
        plt.legend()
        plt.tight_layout()
        png_path = os.path.join(args.out, "figure1.png")
        plt.savefig(png_path, dpi=150)
        print(f"wrote {png_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
