"""
RunConfig -- dataclass holding every parameter of a CLI run.

Used by cli.commands.main() and run_batch.py so that sweeps and single
verifications are described the same way.

Usage::

    config = build_config_from_args(["verify", "strange", "--algebra", "osp(1|2)"])
    config = RunConfig.from_dict({"command": "sweep", "samples": 5})
"""

import argparse
import dataclasses
import logging

from exact.errors import SpecParseError
from gradings.torus import TorusElement

COMMANDS = ("catalog", "validate", "verify", "decompose", "sweep")
FORMULAS = (
    "strange",
    "very-strange",
    "even-vsf",
    "sum-s-i",
    "cg-orthogonality",
    "isotropy-remark",
    "all",
)
OUTPUT_FORMATS = ("text", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclasses.dataclass
class RunConfig:
    """All run parameters with defaults."""

    command: str = "catalog"
    formula: str = "strange"

    # What to look at
    algebra: str = ""
    algebra_file: str = ""       # JSON algebra record, instead of --algebra
    torus: str = ""              # "p/q,..." in Cartan coordinates; empty = sample
    labels: str = ""             # even-vsf s-labels "s0,s1,..."; empty = all up to max_m
    max_m: int = 4
    killing: bool = False        # strange formula with the Killing form

    # Sampling
    seed: int = 0
    samples: int = 20

    # Output / runtime
    output: str = "text"
    results_dir: str = "results"
    workers: int = 4
    log_level: str = "WARNING"

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        """Build a RunConfig from a dict, ignoring unknown keys."""
        valid_keys = {f.name for f in dataclasses.fields(cls)}
        filtered = {k: v for k, v in d.items() if k in valid_keys}
        return cls(**filtered)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    # ── Parsed views ──────────────────────────────────────────────────

    def parsed_torus(self) -> TorusElement | None:
        if not self.torus.strip():
            return None
        return TorusElement.parse(self.torus)

    def parsed_labels(self) -> tuple[int, ...] | None:
        if not self.labels.strip():
            return None
        try:
            return tuple(int(s) for s in self.labels.split(","))
        except ValueError:
            raise SpecParseError(f"bad labels {self.labels!r}: expected comma-separated integers") from None

    def log_level_value(self) -> int:
        return getattr(logging, self.log_level.upper(), logging.WARNING)


# Fields that never become flags: the sub-command picks `command`, and
# `verify` takes the formula as a positional argument.
_NOT_FLAGS = {"command", "formula"}
_CHOICES = {"output": OUTPUT_FORMATS, "log_level": LOG_LEVELS}


def _add_field_flags(parser: argparse.ArgumentParser):
    for field in dataclasses.fields(RunConfig):
        if field.name in _NOT_FLAGS:
            continue
        flag = f"--{field.name.replace('_', '-')}"
        if field.type is bool:
            parser.add_argument(flag, action="store_true", default=field.default)
        else:
            parser.add_argument(flag, type=field.type, default=field.default,
                                choices=_CHOICES.get(field.name))
    parser.add_argument("--json", dest="output", action="store_const", const="json",
                        help="shorthand for --output json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Exact verification of the strange and very strange formulas",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "catalog": "list supported algebra families",
        "validate": "check the Lie superalgebra axioms of an algebra",
        "verify": "verify a formula on an algebra",
        "decompose": "dump the triangular decomposition of an algebra",
        "sweep": "run the batch sweep over the catalog",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        if name == "verify":
            p.add_argument("formula", choices=FORMULAS)
        _add_field_flags(p)
    return parser


def build_config_from_args(argv=None) -> RunConfig:
    """Parse CLI flags into a RunConfig.  Every field becomes a flag."""
    args = build_parser().parse_args(argv)
    return RunConfig.from_dict(vars(args))
