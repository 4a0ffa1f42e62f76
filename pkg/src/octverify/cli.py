"""Batch runner: ``octverify --suite NAME [--seed N] [--trials N] [--format text|json] [--out PATH]``.

Exit status is 0 when no check has status ``fail`` (findings do not fail a
run), 1 otherwise, and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .results import CheckResult, Status
from .suites import SUITE_NAMES, Context, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    seed: int = 0
    trials: int = 256
    format: str = "text"
    out: Path | None = None


@dataclass
class Report:
    suite: str
    seed: int
    checks: list[CheckResult]
    version: str = __version__
    summary: dict[str, int] = field(init=False)

    def __post_init__(self):
        self.checks = sorted(self.checks, key=lambda c: c.name)
        self.summary = {s.value: 0 for s in Status}
        for c in self.checks:
            self.summary[c.status.value] += 1

    @property
    def exit_code(self) -> int:
        return EXIT_FAIL if self.summary["fail"] else EXIT_OK

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "suite": self.suite,
            "seed": self.seed,
            "checks": [c.to_dict() for c in self.checks],
            "summary": dict(self.summary),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"octverify {self.version}  suite={self.suite}  seed={self.seed}", ""]
        for c in self.checks:
            lines.append(f"{c.status.value.upper():8} {c.name}")
            lines.append(f"         ref: {c.paper_line}")
            if c.witness is not None:
                lines.append(f"         input:    {c.witness.input}")
                lines.append(f"         got:      {c.witness.got}")
                lines.append(f"         expected: {c.witness.expected}")
        s = self.summary
        lines += ["", f"pass={s['pass']} fail={s['fail']} finding={s['finding']}"]
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def run(config: SuiteConfig, registry=None) -> tuple[Report, int]:
    ctx = Context(seed=config.seed, trials=config.trials)
    checks = run_suite(config.suite, ctx, registry)
    report = Report(config.suite, config.seed, checks)
    return report, report.exit_code


def _positive(text: str) -> int:
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {n}")
    return n


def _unsigned(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {n}")
    return n


def build_parser(suites=SUITE_NAMES) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octverify",
        description="Exact verification of octonion and Clifford-algebra identities.",
    )
    parser.add_argument("--suite", required=True, choices=suites)
    parser.add_argument("--seed", type=_unsigned, default=0)
    parser.add_argument("--trials", type=_positive, default=256, help="random smoke-layer size")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv=None, registry=None) -> int:
    parser = build_parser(SUITE_NAMES if registry is None else tuple(registry))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    config = SuiteConfig(args.suite, args.seed, args.trials, args.format, args.out)
    report, code = run(config, registry)
    text = report.render(config.format)
    if config.out is None:
        sys.stdout.write(text)
    else:
        config.out.write_text(text, encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())
