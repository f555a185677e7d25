"""Command line front end: ``holorec solve | generate | simplify | localtypes``."""

import argparse
import json
import re
import sys
from dataclasses import dataclass, field

from .diagnostics import DISCARDED_CANDIDATE, FieldPolicy
from .errors import HolorecError, ParseError
from .genrec import sum_hyper_re
from .localtypes import local_types
from .parser import parse_ratfun, parse_recurrence, parse_term
from .simplify import pochfactorsimp
from .solver import hypergeometric_solutions

EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED = 0, 1, 2


@dataclass
class CliConfig:
    command: str
    inputs: list = field(default_factory=list)
    field: str = "auto"
    format: str = "text"
    product_rule: bool = True
    input_file: str = None
    ratios: bool = False
    verbose: bool = False


def _recurrence_latex(rec):
    s = rec.to_text()
    s = re.sub(r"a\(([^)]*)\)", r"a_{\1}", s)
    s = re.sub(r"\^(\d+)", r"^{\1}", s)
    s = re.sub(r"sqrt\((-?\d+)\)", r"\\sqrt{\1}", s)
    return s.replace("*", " ")


def _emit_recurrence(rec, fmt, out):
    if fmt == "json":
        print(json.dumps(rec.to_json(), sort_keys=True), file=out)
    elif fmt == "latex":
        print(_recurrence_latex(rec), file=out)
    else:
        print(rec.to_text(), file=out)


def _read_inputs(cfg):
    items = list(cfg.inputs)
    if cfg.input_file:
        with open(cfg.input_file, encoding="utf-8") as fh:
            text = fh.read()
        if cfg.command == "generate":
            items.extend(line.strip() for line in text.splitlines() if line.strip())
        else:
            items.append(text)
    if not items:
        raise ParseError("no input given", 1, 1)
    return items


def _solve(cfg, out, err):
    (src,) = _single(cfg)
    rec = parse_recurrence(src)
    report = hypergeometric_solutions(rec, FieldPolicy.parse(cfg.field), cfg.product_rule)
    if cfg.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True, indent=2), file=out)
    else:
        for t in report.basis:
            print(t.render(cfg.format), file=out)
        for d in report.diagnostics:
            if d.kind != DISCARDED_CANDIDATE or cfg.verbose:
                print(f"holorec: {d}", file=err)
        if not report.basis:
            print("holorec: no hypergeometric solutions found", file=err)
    return EXIT_UNSUPPORTED if report.only_unsupported else EXIT_OK


def _single(cfg):
    items = _read_inputs(cfg)
    if len(items) != 1:
        raise ParseError(f"{cfg.command} takes exactly one input", 1, 1)
    return items


def _generate(cfg, out, err):
    items = _read_inputs(cfg)
    terms = [parse_ratfun(s) if cfg.ratios else parse_term(s) for s in items]
    _emit_recurrence(sum_hyper_re(terms), cfg.format, out)
    return EXIT_OK


def _simplify(cfg, out, err):
    (src,) = _single(cfg)
    t = pochfactorsimp(parse_ratfun(src), product_rule=cfg.product_rule)
    print(t.render(cfg.format), file=out)
    return EXIT_OK


def _localtypes(cfg, out, err):
    (src,) = _single(cfg)
    diags = []
    types = local_types(parse_recurrence(src), FieldPolicy.parse(cfg.field), diags)
    if cfg.format == "json":
        print(json.dumps({"local_types": [t.to_json() for t in types],
                          "diagnostics": [d.to_json() for d in diags]},
                         sort_keys=True, indent=2), file=out)
    else:
        for t in types:
            print(t, file=out)
        for d in diags:
            print(f"holorec: {d}", file=err)
    return EXIT_OK


_COMMANDS = {"solve": _solve, "generate": _generate, "simplify": _simplify,
             "localtypes": _localtypes}


def run(cfg, out=None, err=None):
    """Execute ``cfg`` and return the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        FieldPolicy.parse(cfg.field)
        return _COMMANDS[cfg.command](cfg, out, err)
    except ParseError as exc:
        print(f"holorec: parse error: {exc}", file=err)
        return EXIT_PARSE
    except (HolorecError, ValueError, OSError) as exc:
        print(f"holorec: error: {exc}", file=err)
        return EXIT_PARSE


def build_parser():
    p = argparse.ArgumentParser(prog="holorec",
                                description="Hypergeometric term solutions of linear recurrences.")
    sub = p.add_subparsers(dest="command", required=True)
    helps = {
        "solve": "basis of hypergeometric solutions of a recurrence",
        "generate": "recurrence annihilating the given hypergeometric terms",
        "simplify": "closed form of prod_{k<n} r(k) for a rational function r",
        "localtypes": "local types (nu, c, b) at infinity",
    }
    for name, text in helps.items():
        s = sub.add_parser(name, help=text)
        s.add_argument("inputs", nargs="*", help="expression(s); see --input")
        s.add_argument("--input", dest="input_file", metavar="FILE",
                       help="read input from FILE (one term per line for generate)")
        s.add_argument("--field", default="auto", help="q, qsqrt:D or auto (default)")
        s.add_argument("--format", default="text", choices=["text", "json", "latex"])
        s.add_argument("--no-product-rule", dest="product_rule", action="store_false",
                       help="skip the Product Rule when simplifying Pochhammer parts")
        s.add_argument("-v", "--verbose", action="store_true",
                       help="also report discarded candidates")
        if name == "generate":
            s.add_argument("--ratios", action="store_true",
                           help="inputs are term ratios a(n+1)/a(n) instead of terms")
    return p


_OPTION = re.compile(r"^--?[A-Za-z][A-Za-z-]*(=.*)?$")


def _protect_negative_inputs(argv):
    # argparse would read "-n/(n+1)" as an option; a leading space keeps it positional
    return [f" {a}" if a.startswith("-") and not _OPTION.match(a) and a != "--" else a
            for a in argv]


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_protect_negative_inputs(argv))
    cfg = CliConfig(command=args.command, inputs=args.inputs, field=args.field,
                    format=args.format, product_rule=args.product_rule,
                    input_file=args.input_file, ratios=getattr(args, "ratios", False),
                    verbose=args.verbose)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
