"""Command-line front end: run verification sweeps and emit reports.

Grammar:
    tracedet verify {thm1|thm3|cor5|cor6|thm7|magnus|magnus-original|thm2|trace|all}
        [--n N] [--max-n N] [--trials T] [--seed S]
        [--generator {sl2z,gaussian}] [--eps {random,exhaustive}]
        [--format {text,json}] [--out PATH]

Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .verify import (
    DEFAULT_RANGES,
    GAUSSIAN,
    SL2Z,
    VerificationReport,
    verify_magnus_numeric,
    verify_magnus_original,
    verify_thm1,
    verify_thm2,
    verify_thm3_family,
    verify_trace_relation,
)

TARGETS = (
    "thm1", "thm3", "cor5", "cor6", "thm7",
    "magnus", "magnus-original", "thm2", "trace", "all",
)

DEFAULT_TRIALS = 100
DEFAULT_TRACE_TRIALS = 1000
DEFAULT_SEED = 42
DEFAULT_MAX_N = 6


@dataclass
class CliConfig:
    """Fully validated run configuration; built before any computation."""

    command: str
    target: str
    n: int | None
    max_n: int
    trials: int
    master_seed: int
    generator: str
    eps_mode: str
    out_format: str
    out_path: str | None
    size_bounds: dict[str, int] = field(default_factory=dict)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracedet",
        description="Exact verification of determinant/Pfaffian and SL(2) trace identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run one verification or a sweep")
    v.add_argument("target", choices=TARGETS)
    v.add_argument("--n", type=int, default=None, help="single size to check")
    v.add_argument("--max-n", type=int, default=None, dest="max_n",
                   help="upper end of the default size range")
    v.add_argument("--trials", type=int, default=None, help="random trials per check")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master seed")
    v.add_argument("--generator", choices=(SL2Z, GAUSSIAN), default=None)
    v.add_argument("--eps", choices=("random", "exhaustive"), default="random")
    v.add_argument("--format", choices=("text", "json"), default="text", dest="out_format")
    v.add_argument("--out", default=None, help="write the report here instead of stdout")
    return parser


def _validated_config(parser: argparse.ArgumentParser, args: argparse.Namespace) -> CliConfig:
    target = args.target
    if args.n is not None and args.max_n is not None:
        parser.error("--n and --max-n are mutually exclusive")
    if args.n is not None and target == "all":
        parser.error("--n is not valid with 'all'; use --max-n")
    if args.trials is not None and args.trials < 1:
        parser.error("--trials must be >= 1")
    if args.max_n is not None and args.max_n < 0:
        parser.error("--max-n must be >= 0")
    if args.n is not None:
        minimum = {"thm1": 0, "thm3": 1, "cor5": 1, "cor6": 2, "thm7": 2,
                   "magnus": 1, "thm2": 1}.get(target)
        if minimum is not None and args.n < minimum:
            parser.error(f"--n must be >= {minimum} for {target}")
        # Symbolic engines have hard size bounds; reject before computing.
        maximum = {"thm1": 7, "thm3": 8, "cor5": 8, "cor6": 8, "thm7": 8}.get(target)
        if maximum is not None and args.n > maximum:
            parser.error(f"--n must be <= {maximum} for {target}")
        if target in ("cor6", "thm7") and args.n % 2 != 0:
            parser.error(f"--n must be even for {target}")
    if target in ("magnus-original", "trace") and args.n is not None:
        parser.error(f"--n is not valid for {target}")
    trials = args.trials
    if trials is None:
        trials = DEFAULT_TRACE_TRIALS if target == "trace" else DEFAULT_TRIALS
    return CliConfig(
        command=args.command,
        target=target,
        n=args.n,
        max_n=args.max_n if args.max_n is not None else DEFAULT_MAX_N,
        trials=trials,
        master_seed=args.seed,
        generator=args.generator,
        eps_mode=args.eps,
        out_format=args.out_format,
        out_path=args.out,
    )


def _sizes(cfg: CliConfig, family: str) -> tuple[int, ...]:
    if cfg.n is not None:
        return (cfg.n,)
    return tuple(n for n in DEFAULT_RANGES[family] if n <= cfg.max_n)


Job = Callable[[], VerificationReport]


def build_jobs(cfg: CliConfig) -> list[Job]:
    jobs: list[Job] = []
    target = cfg.target
    generator = cfg.generator

    def add_family(family: str):
        if family == "thm1":
            for n in _sizes(cfg, "thm1"):
                jobs.append(lambda n=n: verify_thm1(n))
        elif family in ("thm3", "cor5", "cor6", "thm7"):
            for n in _sizes(cfg, family):
                jobs.append(lambda n=n, f=family: verify_thm3_family(n, f))
        elif family == "magnus":
            gens = (generator,) if generator else (SL2Z, GAUSSIAN) if target == "all" else (SL2Z,)
            for gen in gens:
                for n in _sizes(cfg, "magnus"):
                    jobs.append(lambda n=n, g=gen: verify_magnus_numeric(n, cfg.trials, cfg.master_seed, g))
        elif family == "magnus-original":
            jobs.append(lambda: verify_magnus_original(cfg.trials, cfg.master_seed))
        elif family == "thm2":
            if target == "all":
                for n in _sizes(cfg, "thm2"):
                    jobs.append(lambda n=n: verify_thm2(n, cfg.trials, cfg.master_seed, "random"))
                if cfg.max_n >= 5:
                    jobs.append(lambda: verify_thm2(5, 1, cfg.master_seed, "exhaustive"))
            else:
                ns = (cfg.n,) if cfg.n is not None else ((5,) if cfg.eps_mode == "exhaustive" else _sizes(cfg, "thm2"))
                for n in ns:
                    jobs.append(lambda n=n: verify_thm2(n, cfg.trials, cfg.master_seed, cfg.eps_mode))
        elif family == "trace":
            gens = (generator,) if generator else (SL2Z, GAUSSIAN) if target == "all" else (SL2Z,)
            for gen in gens:
                jobs.append(lambda g=gen: verify_trace_relation(cfg.trials, cfg.master_seed, g))

    if target == "all":
        for family in ("thm1", "thm3", "cor5", "cor6", "thm7", "magnus",
                       "magnus-original", "thm2", "trace"):
            add_family(family)
    else:
        add_family(target)
    return jobs


def _sort_key(report: VerificationReport):
    return (
        report.identity,
        report.n if report.n is not None else -1,
        str(report.params.get("generator", "")),
        str(report.params.get("eps_mode", "")),
    )


def render_report(reports: Sequence[VerificationReport], out_format: str) -> str:
    """Deterministic rendering; json output follows the report schema."""
    ordered = sorted(reports, key=_sort_key)
    if out_format == "json":
        return json.dumps([r.to_json_dict() for r in ordered], indent=2)
    lines = []
    for r in ordered:
        bits = [r.status, r.identity]
        if r.n is not None:
            bits.append(f"n={r.n}")
        gen = r.params.get("generator")
        if gen:
            bits.append(f"generator={gen}")
        if r.params.get("eps_mode") == "exhaustive":
            bits.append("eps=exhaustive")
        lines.append(" ".join(bits) + f" ({r.millis:.1f} ms)")
        if r.residual is not None:
            lines.append(f"  residual: {r.residual}")
        if r.witness is not None:
            lines.append(f"  witness: {json.dumps(r.witness)}")
    return "\n".join(lines)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _validated_config(parser, args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    reports = [job() for job in build_jobs(cfg)]
    text = render_report(reports, cfg.out_format)
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return 0 if all(r.passed for r in reports) else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
