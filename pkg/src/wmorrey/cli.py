"""Command line entry point: ``wmorrey {norm,maximal,sweep,verify,report}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .harness import (ExperimentConfig, exit_code, read_rows, render_csv, run_experiment,
                      run_report, summarize)

log = logging.getLogger("wmorrey")


def _config(args, experiment: str | None = None) -> ExperimentConfig:
    overrides = list(args.set or [])
    if experiment is not None:
        overrides.append(f"experiment={json.dumps(experiment)}")
    return ExperimentConfig.load(args.config, overrides)


def _emit(rows, output) -> None:
    if output:
        csv_path, summary_path = run_report(rows, output)
        log.info("wrote %s and %s", csv_path, summary_path)
    else:
        sys.stdout.write(render_csv(rows))


def cmd_run(args, experiment: str | None = None) -> int:
    cfg = _config(args, experiment)
    rows = run_experiment(cfg)
    _emit(rows, args.output or cfg.output)
    return exit_code(rows)


def cmd_verify(args) -> int:
    cfg = _config(args)
    rows = run_experiment(cfg)
    summary = summarize(rows)
    print(json.dumps(summary, indent=2, sort_keys=True))
    for r in rows:
        if r.agreement == "disagree":
            print(f"DISAGREE {r.experiment} p={r.p:g} lambda=({r.lambda1:g},{r.lambda2:g}) "
                  f"beta={r.beta:g}: numeric vs {r.analytic_verdict}", file=sys.stderr)
    if args.output or cfg.output:
        run_report(rows, args.output or cfg.output)
    return exit_code(rows)


def cmd_report(args) -> int:
    rows = read_rows(args.input)
    summary = summarize(rows)
    text = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return exit_code(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wmorrey", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", type=Path, help="JSON experiment config")
        p.add_argument("--set", action="append", metavar="KEY=VALUE",
                       help="override a config key (VALUE parsed as JSON when possible)")
        p.add_argument("--output", "-o", help="CSV path (summary goes next to it as .json)")

    common(sub.add_parser("norm", help="Morrey norms of the witness catalog"))
    common(sub.add_parser("maximal", help="maximal operator range experiment"))
    common(sub.add_parser("sweep", help="run the experiment named in the config"))
    common(sub.add_parser("verify", help="run and print the agreement summary"))
    rep = sub.add_parser("report", help="summarize an existing CSV")
    rep.add_argument("input", type=Path)
    rep.add_argument("--output", "-o")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.command == "norm":
            return cmd_run(args, "norm")
        if args.command == "maximal":
            return cmd_run(args, "maximal-range")
        if args.command == "sweep":
            return cmd_run(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_report(args)
    except (ValueError, OSError) as exc:
        print(f"wmorrey: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
