"""Command line: qfib {catalog, check, nf, irreducible}.

Exit codes: 0 pass, 1 fail, 2 inconclusive (raise --cap), 64 usage.
If QFIB_OUTPUT_DIR is set, reports are also written there.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import builtin_catalog, catalog_to_json, catalog_to_markdown, filter_catalog
from .expr import ParseError
from .hopf import HopfPresentation, check_hopf_axioms, group_algebra
from .models import build_su2, build_su3
from .ncalg import TruncationError
from .pairs import (build_lmap, check_canonical_inverse, full_report, noncleft_evidence,
                    podles_pair, su3_flag_pair, verify_lmap_axioms, window)
from .qfield import QFieldError, q as QSYM
from .report import Report
from .rootsys import NodeSubset, cartan_datum, is_irreducible_flag

EXIT_USAGE = 64
OUTPUT_ENV = "QFIB_OUTPUT_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _q_value(text):
    if text is None or text == "q":
        return QSYM
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--q expects a rational p/r, got {text!r}")
    if v in (-1, 0, 1):
        raise UsageError("--q must avoid -1, 0 and 1")
    return v


def _load_model(args):
    """(kind, object): kind in su2, su3, torus, file."""
    qv = _q_value(args.q)
    if getattr(args, "model_file", None):
        try:
            H = HopfPresentation.loads(Path(args.model_file).read_text())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot load {args.model_file}: {exc}")
        return "file", H
    m = args.model
    if m == "su2":
        return "su2", build_su2(convention=args.convention, q=qv)
    if m == "su3":
        return "su3", build_su3(convention=args.convention, q=qv)
    t = re.fullmatch(r"torus\((\d+)\)", m or "")
    if t and int(t.group(1)) >= 1:
        return "torus", group_algebra(int(t.group(1)), qv)
    raise UsageError(f"unknown model {m!r}; use su2, su3 or torus(r)")


def _emit(text, args, name):
    sys.stdout.write(text)
    out = os.environ.get(OUTPUT_ENV)
    if out:
        ext = "json" if args.output == "json" else "md"
        path = Path(out) / f"{name}.{ext}"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")


def _render(rep, args):
    return rep.to_json() if args.output == "json" else rep.to_markdown()


# -- commands --------------------------------------------------------------------

def cmd_catalog(args):
    entries = builtin_catalog()
    if args.series and args.series.upper() not in "ABCDEFG":
        raise UsageError(f"bad series {args.series!r}")
    entries = filter_catalog(entries, series=args.series, rank=args.rank,
                             irreducible_only=args.irreducible_only, family=args.family)
    text = catalog_to_json(entries) if args.output == "json" else catalog_to_markdown(entries)
    _emit(text, args, "catalog")
    return 0


def cmd_check(args):
    if args.cap < 2:
        raise UsageError("--cap must be at least 2")
    kind, obj = _load_model(args)
    meta = {"suite": args.suite, "model": args.model_file or args.model, "cap": args.cap,
            "window": args.window, "q": args.q or "q", "convention": args.convention}
    if args.suite == "hopf":
        H = obj.hopf if kind in ("su2", "su3") else obj
        rep = Report(f"Hopf axioms for {H.name}", meta)
        rep.add(check_hopf_axioms(H, args.cap))
    else:
        if kind not in ("su2", "su3"):
            raise UsageError(f"suite {args.suite!r} needs --model su2 or su3")
        pair = podles_pair(obj) if kind == "su2" else su3_flag_pair(obj)
        win = window(pair.rank, args.window)
        if args.suite == "pair":
            small = min(args.window, 2 if kind == "su2" else 1)
            rep = full_report(pair, cap=args.cap, radius=args.window, sg_radius=small,
                              can_radius=small, bplus_deg=min(args.cap, 5))
            rep.meta.update(meta)
        elif args.suite == "lmap":
            rep = Report(f"ℓ-map for {pair.name}", meta)
            lm = build_lmap(pair, win)
            rep.add(verify_lmap_axioms(lm, pair))
            rep.add(check_canonical_inverse(lm, pair, cap=args.cap))
        else:
            rep = Report(f"non-cleftness evidence for {pair.name}", meta)
            rep.add(noncleft_evidence(pair, args.cap))
    _emit(_render(rep, args), args, f"check-{args.suite}-{kind}")
    code = rep.exit_code()
    if code == 2:
        print("some checks are inconclusive at this cap; try a larger --cap", file=sys.stderr)
    return code


def cmd_nf(args):
    kind, obj = _load_model(args)
    alg = obj.alg if kind in ("su2", "su3") else obj.alg
    try:
        p = alg.parse_poly(args.expression, cap=args.cap)
    except ParseError as exc:
        print(f"parse error: {exc}\n{exc.caret()}", file=sys.stderr)
        return EXIT_USAGE
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(alg.format(p))
    return 0


def cmd_irreducible(args):
    if args.subset:
        try:
            S = NodeSubset.from_text(args.subset)
        except ValueError as exc:
            raise UsageError(str(exc))
        print(f"{S.to_text()}: {'irreducible' if is_irreducible_flag(S.datum, S) else 'not irreducible'}")
        return 0
    if not args.series or args.rank is None:
        raise UsageError("give a subset like 'A3:c={1}' or --series and --rank")
    try:
        d = cartan_datum(args.series, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc))
    nodes = [x for x in d.nodes if is_irreducible_flag(d, NodeSubset.from_colored(d, {x}))]
    print(f"{d.name}: irreducible for S^c = " + ", ".join(f"{{{x}}}" for x in nodes))
    return 0


# -- parser ----------------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="qfib", description="Quantum principal pairs and fibrations: exact checks.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, model=True):
        sp.add_argument("--output", choices=["json", "markdown"], default="markdown")
        if model:
            sp.add_argument("--model", default="su2", help="su2, su3 or torus(r)")
            sp.add_argument("--model-file", help="presentation file (overrides --model)")
            sp.add_argument("--convention", choices=["q^-1", "q"], default="q^-1")
            sp.add_argument("--q", help="specialize q to a rational p/r (default: symbolic)")
            sp.add_argument("--cap", type=int, default=None)

    c = sub.add_parser("catalog", help="noncommutative fibrations from colored Dynkin diagrams")
    common(c, model=False)
    c.add_argument("--series")
    c.add_argument("--rank", type=int)
    c.add_argument("--family")
    c.add_argument("--irreducible-only", action="store_true")
    c.set_defaults(func=cmd_catalog)

    k = sub.add_parser("check", help="run a verification suite")
    k.add_argument("suite", choices=["hopf", "pair", "lmap", "noncleft"])
    common(k)
    k.add_argument("--window", type=int, default=2)
    k.set_defaults(func=cmd_check)

    n = sub.add_parser("nf", help="normal form of an expression")
    n.add_argument("expression")
    common(n)
    n.set_defaults(func=cmd_nf)

    i = sub.add_parser("irreducible", help="irreducibility of G/L_S")
    i.add_argument("subset", nargs="?", help="e.g. 'C3:c={3}'")
    i.add_argument("--series")
    i.add_argument("--rank", type=int)
    i.add_argument("--output", choices=["json", "markdown"], default="markdown")
    i.set_defaults(func=cmd_irreducible)
    return p


_DEFAULT_CAP = {"hopf": 4, "pair": 6, "lmap": 6, "noncleft": 4}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if getattr(args, "cap", "x") is None:
        args.cap = _DEFAULT_CAP.get(getattr(args, "suite", ""), 6)
        if args.command == "nf":
            args.cap = None
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qfib: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QFieldError as exc:
        print(f"qfib: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
