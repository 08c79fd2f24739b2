"""Lebesgue-constant scans for every node scheme, written as CSV plus a fit table.

    python3 scripts/run_scans.py --out results --jobs 4
"""

import argparse
import json
import pathlib

from lebesgue_intervals.cli import run_scan

SCANS = [
    ("chebyshev", None, None, [16, 32, 64, 128, 256, 512]),
    ("symmetric", 0.2, None, [2, 4, 8, 16, 32, 64, 128]),
    ("symmetric", 0.5, None, [2, 4, 8, 16, 32, 64, 128]),
    ("symmetric", 0.8, None, [2, 4, 8, 16, 32, 64, 128]),
    ("nonsym", -0.5, None, [4, 8, 16, 32, 64]),
    ("nonsym", 0.0, None, [4, 8, 16, 32, 64]),
    ("nonsym", 0.45, None, [4, 8, 16, 32, 64]),
    ("rational_nonsym", -0.2, 0.5, [4, 8, 16, 32, 64, 128]),
    ("elliptic", -0.3, 0.5, list(range(4, 33))),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="results")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    summaries = []
    print(f"{'scheme':<34} {'rows':>4} {'slope':>8} {'intercept':>9} {'rms':>9}  failed n")
    for scheme, a, b, n_list in SCANS:
        res = run_scan(scheme, a, b, n_list, jobs=args.jobs)
        name = scheme + (f"_a{a:g}" if a is not None else "") + (f"_b{b:g}" if b is not None else "")
        (out / f"{name}.csv").write_text(res.to_csv())
        s = res.summary()
        summaries.append(s)
        failed = ",".join(str(f["n"]) for f in s["failed"])
        print(f"{s['scheme']:<34} {s['rows']:>4} {s['slope']:>8.4f} {s['intercept']:>9.4f} {s['residual_rms']:>9.2e}  {failed}")
    (out / "summary.json").write_text(json.dumps(summaries, indent=2) + "\n")


if __name__ == "__main__":
    main()
