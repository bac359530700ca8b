"""Command-line frontend.

Subcommands expose each analytical stage: ``solve`` runs the whole
pipeline, ``bounds`` dumps the initial bound chain, ``reduce`` the
per-base reduction tables, ``contfrac`` a certified expansion, and
``check`` decomposes one integer.  Data goes to stdout (or --output),
diagnostics to stderr.  Exit status: 0 success, 1 usage error, 2
computational failure.

The precision cap may also be set through the PELLREP_PRECISION_CAP
environment variable; the --precision-cap flag wins when both are given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import precision
from .contfrac import expand_until_q_exceeds
from .linforms import NoFixpoint, derive_initial_bounds
from .precision import PrecisionError
from .reduction import (
    EpsilonNeverPositive,
    RationalTau,
    continued_fraction_for_base,
    reduce_l1,
    reduce_n,
    tau_for_base,
)
from .repdigits import decompose
from .sequences import SequenceKind
from .solver import ReductionInsufficient, _family_dict, _ledger_dict, solve

ENV_PRECISION_CAP = "PELLREP_PRECISION_CAP"


class CliUsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    sequence: Optional[SequenceKind] = None
    base_min: int = 2
    base_max: int = 10
    precision_cap_bits: int = 1_000_000
    output_format: str = "json"
    output_path: Optional[str] = None
    stage: str = "both"
    cf_base: int = 2
    cf_threshold: int = 10 ** 6
    check_value: int = 0
    check_base: int = 10

    def __post_init__(self):
        if not (2 <= self.base_min <= self.base_max <= 10):
            raise CliUsageError("bases must satisfy 2 <= base-min <= base-max <= 10")
        if self.precision_cap_bits < 256:
            raise CliUsageError("precision cap must be at least 256 bits")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we map usage to 1
        raise CliUsageError(message)


def _add_common(p: argparse.ArgumentParser, with_sequence=True, with_bases=True):
    if with_sequence:
        p.add_argument("--sequence", required=True,
                       choices=[k.value for k in SequenceKind])
    if with_bases:
        p.add_argument("--base-min", type=int, default=2)
        p.add_argument("--base-max", type=int, default=10)
    p.add_argument("--format", dest="output_format", default="json",
                   choices=["json", "csv", "markdown"])
    p.add_argument("--output", dest="output_path", default=None)
    p.add_argument("--precision-cap", dest="precision_cap_bits", type=int,
                   default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="pellrep", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("solve", help="run the full pipeline"))
    _add_common(sub.add_parser("bounds", help="dump the initial bound chain"),
                with_bases=False)
    reduce_p = sub.add_parser("reduce", help="per-base reduction tables")
    _add_common(reduce_p)
    reduce_p.add_argument("--stage", choices=["l1", "n", "both"], default="both")
    cf_p = sub.add_parser("contfrac", help="certified expansion of log b / log alpha")
    cf_p.add_argument("--base", dest="cf_base", type=int, required=True)
    cf_p.add_argument("--until-q-exceeds", dest="cf_threshold", type=int,
                      default=10 ** 6)
    _add_common(cf_p, with_sequence=False, with_bases=False)
    check_p = sub.add_parser("check", help="decompose one integer in one base")
    check_p.add_argument("check_value", metavar="N", type=int)
    check_p.add_argument("check_base", metavar="b", type=int)
    _add_common(check_p, with_sequence=False, with_bases=False)
    return parser


def parse_config(argv) -> CliConfig:
    ns = build_parser().parse_args(argv)
    cap = ns.precision_cap_bits
    if cap is None:
        env = os.environ.get(ENV_PRECISION_CAP)
        cap = int(env) if env else 1_000_000
    kwargs = {k: v for k, v in vars(ns).items()
              if v is not None and k != "precision_cap_bits"}
    if "sequence" in kwargs:
        kwargs["sequence"] = SequenceKind(kwargs["sequence"])
    return CliConfig(precision_cap_bits=cap, **kwargs)


def _emit(text: str, config: CliConfig) -> None:
    if config.output_path:
        with open(config.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _markdown_table(header: list[str], rows: list[list]) -> str:
    lines = ["| " + " | ".join(header) + " |",
             "| " + " | ".join("---" for _ in header) + " |"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _solution_rows(report) -> list[list]:
    return [
        [s.value, f"{s.kind.symbol}_{s.n}", f"{s.rep.digit_string()} (base {s.rep.b})"]
        for s in report.solutions
    ]


def _run_solve(config: CliConfig) -> str:
    report = solve(config.sequence, range(config.base_min, config.base_max + 1))
    if config.output_format == "json":
        return _json_text(report.to_dict())
    header = ["value", "term", "representation"]
    rows = _solution_rows(report)
    if config.output_format == "csv":
        return _csv_text(header, rows)
    return _markdown_table(header, rows)


def _run_bounds(config: CliConfig) -> str:
    ledger = derive_initial_bounds(config.sequence)
    payload = _ledger_dict(ledger)
    if config.output_format == "json":
        return _json_text(payload)
    rows = [
        ["c_first_hi", float(ledger.c_first.hi)],
        ["c_second_hi", float(ledger.c_second.hi)],
        ["n_max", ledger.n_max],
        ["threshold", ledger.threshold],
    ] + [[f"l1l2_max_base_{b}", v] for b, v in sorted(ledger.l1l2_max_by_base.items())]
    header = ["quantity", "value"]
    if config.output_format == "csv":
        return _csv_text(header, rows)
    return _markdown_table(header, rows)


def _run_reduce(config: CliConfig) -> str:
    ledger = derive_initial_bounds(config.sequence)
    families = []
    for b in range(config.base_min, config.base_max + 1):
        cf = continued_fraction_for_base(b)
        fb_l1 = reduce_l1(config.sequence, b, ledger, cf)
        if config.stage in ("l1", "both"):
            families.append(fb_l1)
        if config.stage in ("n", "both"):
            families.append(reduce_n(config.sequence, b, fb_l1.bound, ledger, cf))
    payload = [_family_dict(fb) for fb in families]
    if config.output_format == "json":
        return _json_text(payload)
    header = ["base", "stage", "bound", "method", "q_or_qN", "epsilon_or_aM"]
    rows = []
    for fam in payload:
        binding = fam["binding"] or {}
        if binding.get("method") == "legendre":
            detail = (binding.get("q_n", ""), binding.get("a_m", ""))
        else:
            detail = (binding.get("q_used", ""), binding.get("epsilon_lo", ""))
        rows.append([fam["base"], fam["stage"], fam["bound"],
                     binding.get("method", ""), detail[0], detail[1]])
    if config.output_format == "csv":
        return _csv_text(header, rows)
    return _markdown_table(header, rows)


def _run_contfrac(config: CliConfig) -> str:
    if not 2 <= config.cf_base <= 10:
        raise CliUsageError("--base must be in [2, 10]")
    if config.cf_threshold < 1:
        raise CliUsageError("--until-q-exceeds must be positive")
    cf = expand_until_q_exceeds(tau_for_base(config.cf_base), config.cf_threshold)
    payload = {
        "expr": f"log({config.cf_base})/log(1+sqrt(2))",
        "quotients": list(cf.quotients),
        "convergents": [[str(p), str(q)] for p, q in cf.convergents],
    }
    if config.output_format == "json":
        return _json_text(payload)
    header = ["k", "a_k", "p_k", "q_k"]
    rows = [[k, a, p, q] for k, (a, (p, q))
            in enumerate(zip(cf.quotients, cf.convergents))]
    if config.output_format == "csv":
        return _csv_text(header, rows)
    return _markdown_table(header, rows)


def _run_check(config: CliConfig) -> str:
    if config.check_value < 1:
        raise CliUsageError("N must be positive")
    if not 2 <= config.check_base <= 10:
        raise CliUsageError("base must be in [2, 10]")
    rep = decompose(config.check_value, config.check_base)
    payload = None if rep is None else {
        "d1": rep.d1, "l1": rep.l1, "d2": rep.d2, "l2": rep.l2,
    }
    return _json_text(payload)


_RUNNERS = {
    "solve": _run_solve,
    "bounds": _run_bounds,
    "reduce": _run_reduce,
    "contfrac": _run_contfrac,
    "check": _run_check,
}


def run(config: CliConfig) -> int:
    precision.set_max_bits(config.precision_cap_bits)
    try:
        _emit(_RUNNERS[config.command](config), config)
    except CliUsageError as exc:
        print(f"pellrep: {exc}", file=sys.stderr)
        return 1
    except (ReductionInsufficient, EpsilonNeverPositive, RationalTau,
            NoFixpoint, PrecisionError) as exc:
        print(f"pellrep: computation failed: {exc}", file=sys.stderr)
        return 2
    return 0


def main(argv=None) -> int:
    try:
        config = parse_config(sys.argv[1:] if argv is None else argv)
    except CliUsageError as exc:
        print(f"pellrep: {exc}", file=sys.stderr)
        return 1
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
