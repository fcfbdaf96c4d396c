"""Command-line front end.

Subcommands: check, endos, count, colorings, matrix, quiver, poly, table,
enumerate, convert.  Exit status 0 on success, 1 on usage or parse errors,
2 on semantic failures (axiom violations, inadmissible parameters).
"""

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources

from .algebra import (
    AlexanderParams,
    ParamError,
    TableFormatError,
    alexander_mcb,
    check_axioms,
    dumps_mcb,
    endomorphisms,
    enumerate_mcb,
    loads_mcb,
)
from .coloring import find_colorings
from .diagram import DiagramError, parse_gauss, parse_pd, serialize_gauss
from .linear import build_coloring_matrix, kernel_size, rref_mod_p
from .quiver import build_quiver, export_dot, export_json, indegree_polynomial

USAGE_ERROR = 1
SEMANTIC_ERROR = 2


class UsageError(Exception):
    pass


class SemanticError(Exception):
    pass


@dataclass(frozen=True)
class LinkTableEntry:
    name: str
    gauss: str
    components: int
    source: str


def _data_text(filename):
    return resources.files("mcbiq.data").joinpath(filename).read_text()


def load_link_table():
    """The embedded table of prime links with up to 7 crossings."""
    entries = []
    source_lines = []
    for line in _data_text("links.txt").splitlines():
        if line.startswith("#"):
            source_lines.append(line[1:].strip())
            continue
        if not line.strip():
            source_lines = []
            continue
        name, gauss = line.split("\t", 1)
        d = parse_gauss(gauss)
        entries.append(LinkTableEntry(name, gauss.strip(), len(d.components),
                                      "; ".join(source_lines)))
    return entries


# ---------------------------------------------------------------------------
# Argument resolution.

def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as f:
            return f.read()
    except OSError:
        pass
    # fall back to the packaged data files, so e.g. --mcb ex38.mcb works
    try:
        return _data_text(path)
    except (OSError, FileNotFoundError):
        raise UsageError(f"cannot read {path!r}") from None


def _resolve_mcb(args):
    if getattr(args, "modulus", None) is not None:
        if args.mcb is not None:
            raise UsageError("--mcb and --modulus/--params are mutually exclusive")
        if args.params is None or len(args.params) != 4:
            raise UsageError("--params needs four integers: t_s r_s t_m r_m")
        try:
            return alexander_mcb(AlexanderParams(args.modulus, *args.params))
        except ParamError as e:
            raise SemanticError(f"inadmissible Alexander parameters: {e}") from None
    if args.mcb is None:
        raise UsageError("an mc-biquandle is required (--mcb FILE or --modulus/--params)")
    try:
        return loads_mcb(_read_text(args.mcb))
    except TableFormatError as e:
        raise UsageError(f"bad mc-biquandle file {args.mcb}: {e}") from None


def _validated_mcb(args):
    x = _resolve_mcb(args)
    rep = check_axioms(x)
    if not rep.passed:
        v = rep.violations[0]
        raise SemanticError(
            f"axiom {v.axiom} fails: {v.detail}, witness {v.witness}"
            + (f", triple {v.triple}" if v.triple else ""))
    return x


def _resolve_diagram(args):
    if getattr(args, "name", None) is not None:
        if args.link is not None:
            raise UsageError("--link and --name are mutually exclusive")
        for entry in load_link_table():
            if entry.name == args.name:
                return parse_gauss(entry.gauss)
        raise UsageError(f"unknown table link {args.name!r}")
    if args.link is None:
        raise UsageError("a link is required (--link FILE or --name TABLENAME)")
    text = _read_text(args.link)
    try:
        if "X(" in text or "X[" in text:
            return parse_pd(text)
        return parse_gauss(text)
    except DiagramError as e:
        raise UsageError(f"bad link file {args.link}: {e}") from None


def _resolve_endos(args, x):
    if args.endos is None or args.endos == "all":
        return endomorphisms(x)
    endos = []
    for line in _read_text(args.endos).splitlines():
        body = line.split("#", 1)[0].replace("[", " ").replace("]", " ")
        body = body.replace(",", " ").strip()
        if body:
            endos.append(tuple(int(v) for v in body.split()))
    if not endos:
        raise UsageError(f"no endomorphisms found in {args.endos}")
    return endos


def _alexander_params(args):
    if args.modulus is None or args.params is None or len(args.params) != 4:
        raise UsageError("matrix mode needs --modulus P --params t_s r_s t_m r_m")
    return AlexanderParams(args.modulus, *args.params)


# ---------------------------------------------------------------------------
# Subcommands.

def cmd_check(args, out):
    x = _resolve_mcb(args)
    rep = check_axioms(x)
    if rep.passed:
        print(f"pass: order {x.n}, all axioms hold", file=out)
        return 0
    print(f"fail: {len(rep.violations)} axiom violations", file=out)
    for v in rep.violations[:20]:
        loc = f" at {v.triple}" if v.triple else ""
        print(f"  axiom ({v.axiom}){loc}: {v.detail}, witness {v.witness}", file=out)
    if len(rep.violations) > 20:
        print(f"  ... and {len(rep.violations) - 20} more", file=out)
    return SEMANTIC_ERROR


def cmd_endos(args, out):
    x = _validated_mcb(args)
    endos = endomorphisms(x)
    for e in endos:
        print("[" + ",".join(str(v) for v in e) + "]", file=out)
    print(f"total: {len(endos)}", file=out)
    return 0


def cmd_count(args, out):
    x = _validated_mcb(args)
    d = _resolve_diagram(args)
    print(len(find_colorings(d, x)), file=out)
    return 0


def cmd_colorings(args, out):
    x = _validated_mcb(args)
    d = _resolve_diagram(args)
    h = find_colorings(d, x)
    doc = {
        "count": len(h),
        "semiarcs": d.semiarc_count,
        "colorings": [list(col) for col in h.colorings],
    }
    print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    return 0


def cmd_matrix(args, out):
    params = _alexander_params(args)
    try:
        alexander_mcb(params)
    except ParamError as e:
        raise SemanticError(f"inadmissible Alexander parameters: {e}") from None
    d = _resolve_diagram(args)
    try:
        m = build_coloring_matrix(d, params)
        red, rank = rref_mod_p(m)
    except ParamError as e:
        raise SemanticError(str(e)) from None
    print(f"matrix ({len(m.rows)}x{m.ncols} over Z_{m.modulus}):", file=out)
    print(m.render(), file=out)
    print(f"rref (rank {rank}):", file=out)
    print(red.render(), file=out)
    print(f"count: {kernel_size(m)}", file=out)
    return 0


def _quiver_of(args):
    x = _validated_mcb(args)
    d = _resolve_diagram(args)
    h = find_colorings(d, x)
    try:
        return build_quiver(h, _resolve_endos(args, x))
    except ValueError as e:
        raise SemanticError(str(e)) from None


def cmd_quiver(args, out):
    q = _quiver_of(args)
    text = export_json(q) if args.format == "json" else export_dot(q)
    out.write(text)
    return 0


def cmd_poly(args, out):
    q = _quiver_of(args)
    print(indegree_polynomial(q).render(), file=out)
    return 0


def cmd_table(args, out):
    x = _validated_mcb(args)
    endos = _resolve_endos(args, x)
    groups = {}   # polynomial -> names, in first-appearance order
    for entry in load_link_table():
        d = parse_gauss(entry.gauss)
        h = find_colorings(d, x)
        poly = indegree_polynomial(build_quiver(h, endos))
        print(f"{entry.name}\tcomponents={entry.components}\t"
              f"count={len(h)}\tpoly={poly.render()}", file=out)
        groups.setdefault(poly.render(), []).append(entry.name)
    print("", file=out)
    for poly, names in groups.items():
        print(f"{poly}\t{' '.join(names)}", file=out)
    return 0


def cmd_enumerate(args, out):
    try:
        structures = list(enumerate_mcb(args.order,
                                        modulo_isomorphism=args.modulo_isomorphism,
                                        max_order=args.order))
    except ValueError as e:
        raise UsageError(str(e)) from None
    for x in structures:
        out.write(dumps_mcb(x))
        print("", file=out)
    print(f"total: {len(structures)}", file=out)
    return 0


def cmd_convert(args, out):
    if args.link is None:
        raise UsageError("convert needs --link FILE with a PD code")
    try:
        d = parse_pd(_read_text(args.link))
    except DiagramError as e:
        raise UsageError(f"bad PD file {args.link}: {e}") from None
    print(serialize_gauss(d), file=out)
    return 0


# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _add_mcb_flags(p):
    p.add_argument("--mcb", metavar="FILE",
                   help="mc-biquandle table file (or a packaged name like ex38.mcb)")
    p.add_argument("--modulus", type=int, metavar="M",
                   help="Alexander structure modulus")
    p.add_argument("--params", type=int, nargs=4, metavar=("TS", "RS", "TM", "RM"),
                   help="Alexander parameters t_s r_s t_m r_m")


def _add_link_flags(p):
    p.add_argument("--link", metavar="FILE",
                   help="link file: Gauss code, or PD code with X(a,b,c,d) entries")
    p.add_argument("--name", metavar="TABLENAME",
                   help="a link from the embedded table, e.g. L4a1")


def build_parser():
    parser = _Parser(prog="mcbiq",
                     description="mc-biquandle coloring invariants of links")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the mc-biquandle axioms")
    _add_mcb_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("endos", help="list all endomorphisms")
    _add_mcb_flags(p)
    p.set_defaults(func=cmd_endos)

    for name, func, helptext in (("count", cmd_count, "coloring count Phi"),
                                 ("colorings", cmd_colorings, "homset as JSON")):
        p = sub.add_parser(name, help=helptext)
        _add_mcb_flags(p)
        _add_link_flags(p)
        p.set_defaults(func=func)

    p = sub.add_parser("matrix",
                       help="coloring matrix, RREF and count (prime Alexander mode)")
    _add_link_flags(p)
    p.add_argument("--modulus", type=int, metavar="P", help="prime modulus")
    p.add_argument("--params", type=int, nargs=4, metavar=("TS", "RS", "TM", "RM"))
    p.set_defaults(func=cmd_matrix)

    for name, func, helptext in (("quiver", cmd_quiver, "coloring quiver"),
                                 ("poly", cmd_poly, "in-degree polynomial")):
        p = sub.add_parser(name, help=helptext)
        _add_mcb_flags(p)
        _add_link_flags(p)
        p.add_argument("--endos", metavar="all|FILE", default="all",
                       help="endomorphism set (default: all of them)")
        if name == "quiver":
            p.add_argument("--format", choices=("dot", "json"), default="dot")
        p.set_defaults(func=func)

    p = sub.add_parser("table",
                       help="counts and polynomials over the embedded link table")
    _add_mcb_flags(p)
    p.add_argument("--endos", metavar="all|FILE", default="all")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="all order-n mc-biquandles")
    p.add_argument("order", type=int)
    p.add_argument("--modulo-isomorphism", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("convert", help="PD code to Gauss code")
    _add_link_flags(p)
    p.set_defaults(func=cmd_convert)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, sys.stdout)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE_ERROR
    except UsageError as e:
        print(f"mcbiq: error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except SemanticError as e:
        print(f"mcbiq: {e}", file=sys.stderr)
        return SEMANTIC_ERROR
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
