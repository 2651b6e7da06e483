"""
ReportCollector -- thread-safe store for the reports of a sweep.

Workers call ``record()`` / ``record_error()`` as they finish; the sweep then
reads back a canonically ordered stream, so the output does not depend on
which worker finished first.  ``export()`` writes reports.jsonl and
summary.csv under the run directory.
"""

import csv
import json
import logging
import os
import threading
from collections import defaultdict

from formulas.report import VerificationReport

logger = logging.getLogger(__name__)

SUMMARY_FIELDS = ["algebra", "reports", "passed", "failed", "errors", "formulas"]


class ReportCollector:
    """Collect VerificationReports keyed by a sortable position."""

    def __init__(self):
        self._lock = threading.Lock()
        self._reports: dict[tuple, VerificationReport] = {}
        self._errors: dict[tuple, dict] = {}
        self._order: dict[str, int] = {}

    def register_algebra(self, name: str, position: int):
        """Fix where an algebra sorts in the output, before any report arrives."""
        with self._lock:
            self._order[name] = position

    def record(self, key: tuple, report: VerificationReport):
        with self._lock:
            self._reports[key] = report

    def record_error(self, key: tuple, algebra: str, stage: str, message: str):
        with self._lock:
            self._errors[key] = {"algebra": algebra, "stage": stage, "error": message}

    # ── Read-back ─────────────────────────────────────────────────────

    def reports(self) -> list[VerificationReport]:
        with self._lock:
            return [self._reports[k] for k in sorted(self._reports)]

    def errors(self) -> list[dict]:
        with self._lock:
            return [self._errors[k] for k in sorted(self._errors)]

    def all_passed(self) -> bool:
        with self._lock:
            return not self._errors and all(r.passed for r in self._reports.values())

    def summary_rows(self) -> list[dict]:
        """One row per algebra: pass / fail / error counts."""
        rows: dict[str, dict] = {}
        formulas: dict[str, set] = defaultdict(set)

        def row(name: str) -> dict:
            return rows.setdefault(name, {"algebra": name, "reports": 0, "passed": 0,
                                          "failed": 0, "errors": 0})

        for report in self.reports():
            r = row(report.algebra)
            r["reports"] += 1
            r["passed" if report.passed else "failed"] += 1
            formulas[report.algebra].add(report.formula)
        for err in self.errors():
            row(err["algebra"])["errors"] += 1
        for name, r in rows.items():
            r["formulas"] = " ".join(sorted(formulas[name]))
        with self._lock:
            order = dict(self._order)
        return sorted(rows.values(), key=lambda r: (order.get(r["algebra"], len(order)), r["algebra"]))

    # ── Export ────────────────────────────────────────────────────────

    def export(self, run_dir: str):
        """Write reports.jsonl and summary.csv under run_dir."""
        os.makedirs(run_dir, exist_ok=True)
        with open(os.path.join(run_dir, "reports.jsonl"), "w") as f:
            for report in self.reports():
                f.write(report.to_json() + "\n")
            for err in self.errors():
                f.write(json.dumps(err) + "\n")
        with open(os.path.join(run_dir, "summary.csv"), "w", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=SUMMARY_FIELDS)
            writer.writeheader()
            for r in self.summary_rows():
                writer.writerow(r)
        logger.info("wrote %d reports to %s", len(self._reports), run_dir)
