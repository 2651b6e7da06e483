#!/usr/bin/env python3
"""
Batch runner -- sweep the algebra catalog through every formula check
and produce a comparison table.

Usage::

    python run_batch.py                         # whole catalog, 20 tori each
    python run_batch.py --only "gl(1|1)" "osp(1|2)"
    python run_batch.py --samples 5 --seed 7    # fewer tori, other seed
"""

import argparse
import dataclasses
import logging
import os
import shutil
import sys
from datetime import datetime

from cli.catalog import catalog_entries
from cli.config import RunConfig
from cli.sweep import run_sweep

logger = logging.getLogger(__name__)

# Columns rendered in the console table and in latest_summary.md.
DISPLAY_COLS = [
    ("algebra",  "Algebra",  22),
    ("reports",  "Reports",   7),
    ("passed",   "Pass",      6),
    ("failed",   "Fail",      6),
    ("errors",   "Errors",    6),
]
DEFAULT_RESULTS_DIR = "results"
DEFAULT_SAMPLES = 20


@dataclasses.dataclass(frozen=True)
class ResultPaths:
    """Where one sweep writes: <root>/<ts>/, summary.csv, latest_summary.md, archive/."""

    root: str

    @property
    def archive(self) -> str:
        return os.path.join(self.root, "archive")

    @property
    def summary_csv(self) -> str:
        return os.path.join(self.root, "summary.csv")

    @property
    def latest_md(self) -> str:
        return os.path.join(self.root, "latest_summary.md")

    def run_dir(self, run_ts: str) -> str:
        return os.path.join(self.root, run_ts)


# ── Table rendering ──────────────────────────────────────────────────

def _cell(row: dict, key: str) -> str:
    value = row.get(key)
    return "-" if value in (None, "") else str(value)


def table_lines(rows: list[dict], markdown: bool = False) -> list[str]:
    """Summary rows as console (fixed width) or markdown (pipe) table lines."""
    if markdown:
        lines = ["| " + " | ".join(label for _, label, _ in DISPLAY_COLS) + " |",
                 "|" + "|".join(":---:" for _ in DISPLAY_COLS) + "|"]
        lines += ["| " + " | ".join(_cell(r, key) for key, _, _ in DISPLAY_COLS) + " |" for r in rows]
        return lines
    lines = [" | ".join(label.ljust(width) for _, label, width in DISPLAY_COLS),
             "-+-".join("-" * width for _, _, width in DISPLAY_COLS)]
    lines += [" | ".join(_cell(r, key).ljust(width) for key, _, width in DISPLAY_COLS) for r in rows]
    return lines


# ── Result files ─────────────────────────────────────────────────────

def _archive_previous_summary(paths: ResultPaths):
    """Keep the summary.csv of the last run as archive/summary_<its mtime>.csv."""
    if not os.path.isfile(paths.summary_csv):
        return
    stamp = datetime.fromtimestamp(os.path.getmtime(paths.summary_csv)).strftime("%Y%m%d_%H%M%S")
    try:
        os.makedirs(paths.archive, exist_ok=True)
        shutil.copy2(paths.summary_csv, os.path.join(paths.archive, f"summary_{stamp}.csv"))
    except OSError as exc:
        logger.warning("previous summary not archived: %s", exc)


def _write_markdown_summary(rows: list[dict], paths: ResultPaths, run_ts: str) -> str:
    failing = sorted({r["algebra"] for r in rows if r["failed"] or r["errors"]})
    body = [f"# Formula sweep {run_ts}", ""]
    body += table_lines(rows, markdown=True)
    body += ["", f"Failing algebras: {', '.join(failing) if failing else 'none'}.",
             f"Exact reports: `{paths.run_dir(run_ts)}/reports.jsonl`.", ""]
    text = "\n".join(body)
    os.makedirs(paths.archive, exist_ok=True)
    for target in (paths.latest_md, os.path.join(paths.archive, f"summary_{run_ts}.md")):
        with open(target, "w") as f:
            f.write(text)
    return text


def print_summary_table(rows: list[dict]):
    lines = table_lines(rows)
    rule = "=" * len(lines[0])
    print(f"\n{rule}\n  Formula sweep  (exact, pass iff lhs = rhs)\n{rule}")
    print("\n".join(lines))
    print(f"{rule}\n")


# ── Runner ───────────────────────────────────────────────────────────

def run_all(selected=None, samples=DEFAULT_SAMPLES, seed=0, workers=4,
            results_dir=DEFAULT_RESULTS_DIR) -> bool:
    """Sweep the catalog (or `selected` specs) and write the result files.

    Returns True when every report passed and no algebra errored.
    """
    paths = ResultPaths(results_dir)
    specs = list(selected) if selected else catalog_entries()
    run_ts = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
    print(f"\n  Sweeping {len(specs)} algebras  ({samples} tori each, seed {seed})\n")

    collector = run_sweep(specs, samples=samples, seed=seed, workers=workers)
    collector.export(paths.run_dir(run_ts))
    for err in collector.errors():
        print(f"  [ERROR] {err['algebra']} {err['stage']}: {err['error']}")
    for report in collector.reports():
        if not report.passed:
            d = report.to_dict()
            print(f"  [FAIL] {report.formula} {report.algebra} @ {report.torus}: lhs={d['lhs']} rhs={d['rhs']}")

    _archive_previous_summary(paths)
    shutil.copyfile(os.path.join(paths.run_dir(run_ts), "summary.csv"), paths.summary_csv)
    rows = collector.summary_rows()
    if rows:
        print_summary_table(rows)
        _write_markdown_summary(rows, paths, run_ts)
    print(f"  Reports : {os.path.join(paths.run_dir(run_ts), 'reports.jsonl')}")
    print(f"  Markdown: {paths.latest_md}\n")
    return collector.all_passed()


def run_from_config(config: RunConfig) -> bool:
    selected = [s.strip() for s in config.algebra.split(";") if s.strip()] or None
    return run_all(selected, samples=config.samples, seed=config.seed,
                   workers=config.workers, results_dir=config.results_dir)


# ── CLI ──────────────────────────────────────────────────────────────

def main():
    parser = argparse.ArgumentParser(
        description="Sweep the algebra catalog through every formula check.",
    )
    parser.add_argument(
        "--only", nargs="*", default=None,
        help='Sweep only the given algebra specs (e.g. --only "gl(1|1)" "sl(2|1)")',
    )
    parser.add_argument(
        "--samples", type=int, default=DEFAULT_SAMPLES,
        help=f"Number of random torus elements per algebra (default: {DEFAULT_SAMPLES})",
    )
    parser.add_argument("--seed", type=int, default=0, help="Seed for torus sampling")
    parser.add_argument("--workers", type=int, default=4, help="Worker threads")
    parser.add_argument("--results-dir", default=DEFAULT_RESULTS_DIR, help="Output directory")
    args = parser.parse_args()
    logging.basicConfig(level=logging.WARNING, format="[sweep] %(levelname)s %(message)s")
    ok = run_all(args.only, samples=args.samples, seed=args.seed,
                 workers=args.workers, results_dir=args.results_dir)
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
