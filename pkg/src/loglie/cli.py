"""Command-line front end.

Subcommands:
  analyze <file> [--json] [--jet K] [--budget N]   full pipeline report
  free <file>                                      verify a supplied basis
  corpus [--filter NAME]                           run the built-in corpus

Input files are line oriented `key = value` with `#` comments:

    vars = x, y, z, w
    f = y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*w^2*x^2
    basis.1 = [x, y, z, w]          # optional candidate fields
    jet = 2                         # optional default flags
    budget = 100000

Exit codes: 0 success, 1 input error, 2 unsupported case, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .analysis import run_analyze, run_free
from .corpus import run_corpus
from .errors import InputError, InternalError, LoglieError, UnsupportedError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNSUPPORTED = 2
EXIT_INTERNAL = 3


class InputSpec:
    """Parsed contents of an input file."""

    def __init__(self, variables, f, basis=None, jet=None, budget=None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise InputError("variable names must be distinct")
        self.f = f
        self.basis = basis
        if basis is not None:
            for i, row in enumerate(basis):
                if len(row) != len(self.variables):
                    raise InputError(f"basis.{i + 1} needs one entry per variable")
        self.jet = jet
        self.budget = budget


def parse_input_file(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_input_text(text)


def parse_input_text(text):
    data = {}
    basis = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"line {lineno}: expected key = value")
        key, value = line.split("=", 1)
        key = key.strip()
        value = value.strip()
        if key.startswith("basis."):
            try:
                idx = int(key.split(".", 1)[1])
            except ValueError as exc:
                raise InputError(f"line {lineno}: bad basis index") from exc
            if not (value.startswith("[") and value.endswith("]")):
                raise InputError(f"line {lineno}: basis rows look like [e1, ..., en]")
            basis[idx] = [part.strip() for part in value[1:-1].split(",")]
        else:
            data[key] = value
    if "vars" not in data:
        raise InputError("missing `vars = ...` line")
    if "f" not in data:
        raise InputError("missing `f = ...` line")
    variables = tuple(v.strip() for v in data["vars"].split(","))
    rows = None
    if basis:
        indices = sorted(basis)
        if indices != list(range(1, len(indices) + 1)):
            raise InputError("basis rows must be numbered basis.1, basis.2, ...")
        rows = [basis[i] for i in indices]
    jet = int(data["jet"]) if "jet" in data else None
    budget = int(data["budget"]) if "budget" in data else None
    return InputSpec(variables=variables, f=data["f"], basis=rows,
                     jet=jet, budget=budget)


def _fmt(value):
    if value is None:
        return "-"
    if value == math.inf:
        return "inf"
    if value == -math.inf:
        return "-inf"
    return str(value)


def render_text(report):
    d = report.to_dict()
    lines = [f"hypersurface  f = {d['f']}   over ({', '.join(d['vars'])})"]
    pairs = [
        ("order", d["order"]),
        ("quasihomogeneous weights", d["qh_weights"]),
        ("reduced", d["reduced"]),
        ("product test", d["product_test"]),
        ("free", d["free"]),
        ("saito determinant", d["saito_det"]),
        ("saito unit", d["saito_unit"]),
        ("initial Lie algebra dim", d["initial_dim"]),
        ("solvable", d["solvable"]),
        ("nilpotent", d["nilpotent"]),
        ("levi dim / rank", None if d["levi_dim"] is None
         else f"{d['levi_dim']} / {d['levi_rank']}"),
        ("radical dim", d["radical_dim"]),
        ("kernel of linear projection", d["kernel_dim"]),
        ("reductive", d["reductive"]),
        ("linear verdict", d["linear_verdict"]),
        ("rank l0 / n_D / s_D", None if d["rank_l0"] is None
         else f"{d['rank_l0']} / {d['n_D']} / {d['s_D']}"),
        ("weight diagram", None if d["weights"] is None else
         ", ".join(f"({','.join(w)}):{m}" for w, m in
                   zip(d["weights"], d["multiplicities"]))),
        ("M at order", d["M"]),
        ("singular locus dim", d["sing_dim"]),
        ("bound verdict", d["bound"]),
    ]
    if d["jet_dims"] is not None:
        pairs.append(("jet dims (k = 0..)", d["jet_dims"]))
    for label, value in pairs:
        lines.append(f"  {label:28s} {_fmt(value)}")
    for flag in d["flags"]:
        lines.append(f"  flag: {flag}")
    if d["error"]:
        lines.append(f"  ERROR at stage {d['error']['stage']}: {d['error']['message']}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args):
    spec = parse_input_file(args.file)
    jet = args.jet if args.jet is not None else spec.jet
    budget = args.budget if args.budget is not None else (spec.budget or 100000)
    report = run_analyze(spec.variables, spec.f, jet=jet, budget=budget)
    if args.json:
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(render_text(report))
    if report.error is not None:
        return EXIT_UNSUPPORTED
    return EXIT_OK


def cmd_free(args):
    spec = parse_input_file(args.file)
    if spec.basis is None:
        raise InputError("the free command needs basis.1 ... basis.n rows")
    result = run_free(spec.variables, spec.f, spec.basis)
    sys.stdout.write("saito check: PASS\n")
    sys.stdout.write(f"  determinant = {result.determinant}\n")
    sys.stdout.write(f"  unit        = {result.unit}\n")
    for i, cof in enumerate(result.cofactors):
        sys.stdout.write(f"  field {i + 1} cofactor = {cof}\n")
    return EXIT_OK


def cmd_corpus(args):
    results = run_corpus(name_filter=args.filter)
    width = max((len(r.entry.name) for r in results), default=10)
    failures = 0
    for res in results:
        d = res.report.to_dict()
        status = "ok" if not res.mismatches else "FAIL"
        if res.mismatches:
            failures += 1
        sys.stdout.write(
            f"{res.entry.name:<{width}}  ord={_fmt(d['order']):>4} "
            f"dim={_fmt(d['initial_dim']):>4} solv={_fmt(d['solvable']):>5} "
            f"free={_fmt(d['free']):>5} red={_fmt(d['reductive']):>5} "
            f"M={_fmt(d['M']):>4} sing={_fmt(d['sing_dim']):>4} "
            f"bound={_fmt(d['bound']):>8}  {status}\n")
        for miss in res.mismatches:
            sys.stdout.write(f"    mismatch: {miss}\n")
    if failures:
        sys.stdout.write(f"{failures} corpus entr{'y' if failures == 1 else 'ies'} failed\n")
        return EXIT_INPUT
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="loglie",
        description="Logarithmic vector fields, initial Lie algebras and "
                    "singular-locus bounds of hypersurface singularities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="run the full pipeline on an input file")
    p_analyze.add_argument("file")
    p_analyze.add_argument("--json", action="store_true", help="emit JSON")
    p_analyze.add_argument("--jet", type=int, default=None,
                           help="also report jet algebra dimensions up to K")
    p_analyze.add_argument("--budget", type=int, default=None,
                           help="node budget for the avoidance search")
    p_analyze.set_defaults(func=cmd_analyze)

    p_free = sub.add_parser("free", help="verify a candidate basis via the determinant test")
    p_free.add_argument("file")
    p_free.set_defaults(func=cmd_free)

    p_corpus = sub.add_parser("corpus", help="run the built-in example corpus")
    p_corpus.add_argument("--filter", default=None, help="substring filter on names")
    p_corpus.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except InternalError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except UnsupportedError as exc:
        sys.stderr.write(f"unsupported case: {exc}\n")
        return EXIT_UNSUPPORTED
    except LoglieError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def console_main():
    raise SystemExit(main())
