#!/usr/bin/env python3
"""Plot delta-I curves from a sweep CSV (one line per dimension)."""

import argparse
import csv
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True, help="sweep CSV (e.g. from `pyramid-info figure1`)")
    parser.add_argument("--out", default="delta_i.png", help="output image path")
    parser.add_argument("--logy", action="store_true", help="log scale on the delta-I axis")
    args = parser.parse_args()

    curves = defaultdict(lambda: ([], []))
    with open(args.csv, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            gammas, deltas = curves[int(row["N"])]
            gammas.append(float(row["gamma"]))
            deltas.append(float(row["delta_I"]))

    fig, ax = plt.subplots(figsize=(8, 5))
    for dim in sorted(curves):
        gammas, deltas = curves[dim]
        ax.plot(gammas, deltas, lw=1.2, label=f"N={dim}")
    ax.set_xlabel("common-angle cosine gamma")
    ax.set_ylabel("delta I  (I_ims - I_srm, base-N units)")
    if args.logy:
        ax.set_yscale("log")
    ax.legend(ncol=2, fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    print(f"wrote {args.out} ({len(curves)} curves)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
