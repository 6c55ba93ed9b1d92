"""Command-line front end: ``toricgb {gb,invariants,verify,example,enumerate}``.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 proven-bound violation or failed example, 2 input error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import harness
from .groebner import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    basis_to_json,
    format_basis,
    reduced_groebner_basis,
    toric_basis,
    toric_ideal_by_lattice,
    truncated_groebner,
)
from .invariants import compute_report
from .lattice_core import ConfigError, Configuration, validate
from .order import ORDER_NAMES, TermOrder

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

log = logging.getLogger("toricgb")


class InputError(Exception):
    pass


def _load_config(path: str) -> Configuration:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    config = Configuration.from_json(text)
    problems = validate(config)
    errs = [v for v in problems if not v.startswith("warning:")]
    for w in problems:
        if w.startswith("warning:"):
            log.warning("%s", w)
    if errs:
        raise ConfigError("invalid configuration", errs)
    return config


def _csv(text: str) -> tuple[str, ...]:
    return tuple(s.strip() for s in text.split(",") if s.strip())


def _c_range(text: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return tuple(range(int(lo), int(hi) + 1))
        return (int(text),)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _params(items: Sequence[str]) -> dict:
    out = {}
    for item in items:
        for pair in item.split(","):
            if not pair.strip():
                continue
            key, sep, value = pair.partition("=")
            if not sep:
                raise InputError(f"parameter {pair!r} is not KEY=VALUE")
            try:
                out[key.strip()] = int(value)
            except ValueError:
                raise InputError(f"parameter {key} needs an integer value") from None
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gb(args) -> int:
    config = _load_config(args.config)
    if args.via == "lattice":
        basis = toric_ideal_by_lattice(config, budget=args.budget)
        if args.order != "revlex":
            basis = reduced_groebner_basis(basis.elements, TermOrder.named(args.order, basis.universe), budget=args.budget)
    else:
        basis = toric_basis(config, args.order, budget=args.budget)
    if args.truncate is not None:
        # rerun from a generating set that is not already the answer
        seed = toric_basis(config, "xblock" if args.order == "revlex" else "revlex", budget=args.budget)
        basis = truncated_groebner(seed, basis.order, args.truncate, budget=args.budget)
    _emit(basis_to_json(basis) if args.format == "json" else format_basis(basis), None)
    return EXIT_OK


def cmd_invariants(args) -> int:
    config = _load_config(args.config)
    rep = compute_report(config, gcm_cap=args.gcm_cap)
    _emit(json.dumps(rep.to_dict(), indent=2) + "\n", None)
    return EXIT_OK


def cmd_verify(args) -> int:
    campaign = harness.Campaign(
        alpha=args.alpha,
        d=args.dim,
        exhaustive=args.samples is None,
        samples=args.samples or 0,
        seed=args.seed,
        orders=args.orders,
        checks=args.checks,
        c_range=args.c_range,
        timeout=args.timeout or None,
    )
    results = harness.run_campaign(campaign, jobs=args.jobs)
    _emit(harness.report(results, args.format, campaign), args.out)
    bad = harness.proven_violations(results)
    for ordinal, v in bad:
        print(f"violation: config {ordinal} {v.bound} [{v.order}] observed {v.observed} > allowed {v.allowed}", file=sys.stderr)
    skipped = sum(r.status != "ok" for r in results)
    if skipped:
        print(f"{skipped} configuration(s) skipped on timeout", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_example(args) -> int:
    res = harness.example(args.name, _params(args.params))
    if args.format == "json":
        _emit(json.dumps(res.to_dict(), indent=2) + "\n", None)
    else:
        lines = [f"example {res.name} {json.dumps(res.params, sort_keys=True)}"]
        for c in res.claims:
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.description}")
            if not c.passed:
                lines.append(f"        expected {c.expected!r}")
                lines.append(f"        observed {c.observed!r}")
        lines.append("PASS" if res.passed else "FAIL")
        _emit("\n".join(lines) + "\n", None)
    return EXIT_OK if res.passed else EXIT_VIOLATION


def cmd_enumerate(args) -> int:
    configs = harness.enumerate_configs(args.alpha, args.dim, args.c_range)
    for cfg in configs:
        sys.stdout.write(cfg.to_json() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricgb", description="Groebner bases and invariants of simplicial toric rings.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug diagnostics on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gb", help="reduced Groebner basis of the toric ideal")
    g.add_argument("--config", required=True, help="configuration JSON file ('-' for stdin)")
    g.add_argument("--order", default="revlex", choices=[n for n in ORDER_NAMES if n != "elim-revlex"])
    g.add_argument("--truncate", type=int, metavar="N", help="recompute discarding S-pairs of degree > N")
    g.add_argument("--via", choices=("elim", "lattice"), default="elim")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="S-pair budget")
    g.set_defaults(func=cmd_gb)

    i = sub.add_parser("invariants", help="invariant report as JSON")
    i.add_argument("--config", required=True)
    i.add_argument("--gcm-cap", type=int, metavar="N", help="degree cap for the gcm search")
    i.set_defaults(func=cmd_invariants)

    v = sub.add_parser("verify", help="bound-verification campaign")
    v.add_argument("--alpha", type=int, required=True)
    v.add_argument("--dim", type=int, required=True)
    mode = v.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="all subsets (default)")
    mode.add_argument("--samples", type=int, metavar="N")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--orders", type=_csv, default=("revlex",))
    v.add_argument("--checks", type=_csv, default=harness.DEFAULT_CHECKS)
    v.add_argument("--c-range", type=_c_range, metavar="LO..HI")
    v.add_argument("--timeout", type=float, default=30.0, help="seconds per configuration (0 disables)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", metavar="FILE")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("example", help="run a worked example and check its stated values")
    e.add_argument("--name", required=True, choices=list(harness.EXAMPLES))
    e.add_argument("--params", nargs="*", default=[], metavar="K=V")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_example)

    n = sub.add_parser("enumerate", help="list valid configurations, one JSON object per line")
    n.add_argument("--alpha", type=int, required=True)
    n.add_argument("--dim", type=int, required=True)
    n.add_argument("--c-range", type=_c_range, metavar="LO..HI")
    n.set_defaults(func=cmd_enumerate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for v in exc.violations:
            print(f"  - {v}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, harness.CampaignError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceeded, OverflowError, MemoryError) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
