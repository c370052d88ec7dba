#!/usr/bin/env python3
"""Build the benchmark CSVs the acceptance gate reads from data/.

The five datasets are distributed by the ODDS library (Stony Brook) as
MATLAB .mat files with an X feature matrix and a 0/1 outlier vector y.
ODDS serves downloads from a browser-facing page, so this script does not
scrape it. Drop the .mat files into data/ (or pass --mat-dir) and run:

    python3 tools/fetch_odds.py

Each dataset becomes data/<name>.csv with header f0..f<d-1>,label and the
exact shape the acceptance gate checks. A shape mismatch aborts with an
error instead of writing a file the gate would reject.
"""

import argparse
import csv
import sys
from pathlib import Path

import numpy as np
import scipy.io

EXPECTED_SHAPES = {
    "satellite": (6435, 36),
    "annthyroid": (7200, 6),
    "pendigits": (6870, 16),
    "spambase": (4601, 57),
    "pima": (768, 8),
}


def convert(name, mat_path, csv_path):
    doc = scipy.io.loadmat(mat_path)
    if "X" not in doc or "y" not in doc:
        raise SystemExit(f"{mat_path}: expected 'X' and 'y' variables, "
                         f"found {sorted(k for k in doc if not k.startswith('__'))}")
    features = np.asarray(doc["X"], dtype=np.float64)
    labels = np.asarray(doc["y"]).reshape(-1).astype(np.int64)

    expected = EXPECTED_SHAPES[name]
    if features.shape != expected:
        raise SystemExit(f"{mat_path}: X has shape {features.shape}, "
                         f"expected {expected}")
    if labels.shape[0] != expected[0]:
        raise SystemExit(f"{mat_path}: y has {labels.shape[0]} entries, "
                         f"expected {expected[0]}")
    bad = set(np.unique(labels)) - {0, 1}
    if bad:
        raise SystemExit(f"{mat_path}: labels must be 0/1, found {sorted(bad)}")
    if not np.all(np.isfinite(features)):
        raise SystemExit(f"{mat_path}: X contains NaN or infinite entries")

    with open(csv_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow([f"f{i}" for i in range(features.shape[1])] + ["label"])
        for row, label in zip(features, labels):
            # repr gives the shortest decimal that round-trips the double,
            # matching how the CSV loader and writer treat cells.
            writer.writerow([repr(float(v)) for v in row] + [int(label)])
    print(f"wrote {csv_path} ({expected[0]} rows, {expected[1]} features, "
          f"{int(labels.sum())} outliers)")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("datasets", nargs="*", default=[],
                        help="subset to convert (default: all five)")
    parser.add_argument("--mat-dir", type=Path, default=None,
                        help="directory holding <name>.mat files (default: data/)")
    parser.add_argument("--data-dir", type=Path, default=None,
                        help="output directory (default: data/ next to this script)")
    args = parser.parse_args()

    repo_root = Path(__file__).resolve().parent.parent
    data_dir = args.data_dir or repo_root / "data"
    mat_dir = args.mat_dir or data_dir
    names = args.datasets or sorted(EXPECTED_SHAPES)

    unknown = [n for n in names if n not in EXPECTED_SHAPES]
    if unknown:
        raise SystemExit(f"unknown dataset(s) {unknown}; "
                         f"known: {sorted(EXPECTED_SHAPES)}")

    data_dir.mkdir(parents=True, exist_ok=True)
    missing = []
    for name in names:
        mat_path = mat_dir / f"{name}.mat"
        if not mat_path.exists():
            missing.append(mat_path)
            continue
        convert(name, mat_path, data_dir / f"{name}.csv")

    if missing:
        print("missing .mat files (download from the ODDS library and retry):",
              file=sys.stderr)
        for path in missing:
            print(f"  {path}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
