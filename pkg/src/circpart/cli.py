"""Command-line interface.

JSON goes to stdout unless --out is given. A relative --out path lands
in the directory named by CIRCPART_OUTPUT_DIR when that is set. Exit
codes: 0 success (including Pass and Observational suites), 1 a failed
suite, 2 bad input or any other error.
"""

import argparse
import csv
import io
import json
import os
import sys
from importlib import resources

from . import base_sets as bs
from . import cop as cp
from . import density as dn
from . import extended as ex
from . import family as fm
from . import harness
from . import render as rd
from . import transforms as tf
from .errors import CircleError

OUTPUT_DIR_ENV = "CIRCPART_OUTPUT_DIR"


def load_schema(name):
    """Published JSON schema for one output kind, e.g. 'cop' or 'suite_report'."""
    text = resources.files("circpart").joinpath("schemas", f"{name}.json").read_text()
    return json.loads(text)


def _axis_arg(text):
    parts = [p for p in text.replace("L(", "").replace(")", "").split(",") if p.strip()]
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad axis {text!r}") from None
    if len(nums) == 1:
        return cp.Axis.degenerate(nums[0])
    if len(nums) == 2:
        return cp.Axis.of(*nums)
    raise argparse.ArgumentTypeError(f"bad axis {text!r}")


def _base_arg(text):
    try:
        return bs.parse_base_set(text)
    except CircleError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _weights_arg(text):
    try:
        return frozenset(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight list {text!r}") from None


def _axis_json(ax):
    return ax.to_json() if ax is not None else None


# cop


def cmd_cop(args):
    base = args.base
    if args.action == "chain":
        chain = tf.almost_goldbach_chain(args.n)
        return {"limit": args.n, "chain": [{"n": n, "axis": ax.to_json()} for n, ax in chain]}
    c = cp.build_cop(args.n, base)
    if args.action == "show":
        out = c.to_json()
        if args.axes:
            out["axes"] = [ax.to_json() for ax in cp.axes(c)]
            out["nu"] = cp.nu(c)
        return out
    if args.action == "rotate":
        res = tf.rotate(c, args.r, substitute=not args.no_substitution)
        return {"source": c.to_json(), "level": args.r, "image_weights": list(res.image_weights)}
    if args.action == "dilate":
        return {"source": c.to_json(), "r": args.r, "target": tf.dilate(c, args.r).to_json()}
    if args.action == "flip":
        res = tf.flip_arith(c)
        return {
            "source_generator": res.source_generator,
            "target_generator": res.target_generator,
            "flipping_axis": res.flipping_axis.to_json(),
            "point_map": [list(p) for p in res.point_map],
            "l_n": res.l_n,
            "l_m": res.l_m,
            "target_weights": list(res.target_weights),
        }
    if args.action == "filtrate":
        found = tf.find_filtrations(c, args.axis, args.m_bound)
        return {
            "source": c.to_json(),
            "axis": args.axis.to_json(),
            "witnesses": [
                {
                    "filtration_axis": w.filtration_axis.to_json(),
                    "target_generator": w.target_generator,
                    "co_axis": w.co_axis.to_json(),
                    "completions": list(w.completions),
                }
                for w in found
            ],
        }
    if args.action == "reduce":
        target, mapping = tf.reduce_cop(c, args.axis)
        return {"source": c.to_json(), "target": target.to_json(), "point_map": [[u, v] for u, v in sorted(mapping.items())]}
    raise AssertionError(args.action)


# xcop


XCOP_SCAN_HEADER = ("n", "nu_star", "nu", "nu_bar", "family_size", "predicted_family_size")


def cmd_xcop(args):
    if args.action == "scan":
        rows = []
        for n in range(args.n + args.n % 2, args.hi + 1, 2):
            x = ex.build_xcop(n, args.base)
            cls = ex.classify_axes(x)
            fam = ex.extended_family_generators(x)
            predicted = len(ex.predicted_family(n)) if args.base == bs.primes() and n >= 16 else ""
            rows.append((n, cls.nu_star, cls.nu, cls.nu_bar, len(fam), predicted))
        return _csv_text(XCOP_SCAN_HEADER, rows)
    x = ex.build_xcop(args.n, args.base)
    if args.action == "show":
        return x.to_json()
    if args.action == "axes":
        cls = ex.classify_axes(x)
        return {
            "n": x.n,
            "base": str(x.base),
            "full_axes": [[a.low, a.high] for a in cls.full_axes],
            "half_axes": [[a.low, a.high] for a in cls.half_axes],
            "center": cls.center,
            "nu": cls.nu,
            "nu_bar": cls.nu_bar,
            "nu_star": cls.nu_star,
        }
    if args.action == "family":
        fam = ex.extended_family_generators(x)
        predicted = list(ex.predicted_family(x.n)) if x.base == bs.primes() and x.n >= 16 else None
        return {"n": x.n, "base": str(x.base), "generators": list(fam), "size": len(fam), "predicted": predicted}
    raise AssertionError(args.action)


# family


FAMILY_CSV_HEADER = ("parent", "child", "x", "u")


def cmd_family(args):
    base = args.base
    if args.action == "export-csv":
        rows = []
        for n in args.n:
            rows.extend(fm.family_csv_rows(fm.complete_family(cp.build_cop(n, base))))
        return _csv_text(FAMILY_CSV_HEADER, rows)
    if args.action in ("compat", "iso"):
        n, m = args.n
        a, b = cp.build_cop(n, base), cp.build_cop(m, base)
        if args.action == "compat":
            v = fm.check_compatibility(a, b)
            return {
                "a": n,
                "b": m,
                "kind": v.kind,
                "cover": v.cover,
                "removed": v.removed,
                "witnesses": [list(w) for w in v.witnesses],
            }
        rep = fm.isomorphism_degree(a, b)
        return {
            "a": n,
            "b": m,
            "degree": rep.degree,
            "ratio_a": str(rep.ratio_a),
            "ratio_b": str(rep.ratio_b),
            "classification": rep.classification,
        }
    (n,) = args.n
    fam = fm.complete_family(cp.build_cop(n, base))
    if args.action == "list":
        return {
            "parent": fam.parent.to_json(),
            "size": fam.size,
            "children": [
                {"child_generator": ch.child_generator, "principal_axes": [list(p) for p in ch.principal_axes]}
                for ch in fam.children
            ],
        }
    if args.action == "split":
        below, above = fm.offspring_split(fam)
        return {"n": n, "below": below, "above": above}
    if args.action == "bounds":
        lower, actual, upper = fm.children_bounds(fam)
        return {"n": n, "lower": lower, "actual": actual, "upper": upper}
    raise AssertionError(args.action)


# density


def _density_json(rep):
    return {
        "n": rep.n,
        "subject": str(rep.subject),
        "ambient": str(rep.ambient),
        "axis_hits": rep.axis_hits,
        "nu_total": rep.nu_total,
        "estimate": str(rep.estimate),
        "lower_bound": str(rep.lower_bound),
        "upper_bound": str(rep.upper_bound),
        "estimate_float": float(rep.estimate),
    }


def cmd_density(args):
    if args.action == "estimate":
        return _density_json(dn.point_density_estimate(args.subject, args.ambient, args.n))
    if args.action == "scan":
        rows = []
        for n in range(args.n, args.hi + 1, args.step):
            if cp.nu(cp.build_cop(n, args.ambient)) == 0:
                continue
            rows.append(dn.point_density_estimate(args.subject, args.ambient, n).csv_row())
        return _csv_text(dn.CSV_HEADER, rows)
    if args.action == "ratio":
        ratio = dn.conditional_ratio(args.subject, args.n)
        return {"n": args.n, "base": str(args.subject), "ratio": str(ratio), "exceeds_half": ratio > 0.5}
    raise AssertionError(args.action)


# verify and render


def cmd_verify(args):
    if args.list or not args.suite:
        return "\n".join(harness.suite_ids()) + "\n"
    params = {}
    for item in args.param:
        key, sep, value = item.partition("=")
        if not sep:
            raise CircleError(f"parameter {item!r} is not of the form key=value")
        params[key] = value
    report = harness.run_suite(args.suite, params)
    fmt = "csv" if args.csv else "json"
    return harness.serialize_report(report, fmt).decode(), (1 if report.verdict == "Fail" else 0)


def cmd_render(args):
    if args.xcop:
        structure = ex.build_xcop(args.n, args.base)
    else:
        structure = cp.build_cop(args.n, args.base)
    spec = rd.RenderSpec(args.radius, args.label, not args.no_chords, args.highlight or frozenset())
    return rd.render_cop_svg(structure, spec).decode()


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def build_parser():
    parser = argparse.ArgumentParser(prog="circpart", description="Circles of partition toolkit")
    parser.add_argument("--sieve-bound", type=int, default=None, help="sieve bound (default 1000000)")
    parser.add_argument("--out", default=None, help="write output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cop", help="build and transform CoPs")
    p.add_argument("action", choices=("show", "rotate", "dilate", "flip", "filtrate", "reduce", "chain"))
    p.add_argument("n", type=int, help="generator (limit for chain)")
    p.add_argument("--base", type=_base_arg, default=bs.primes())
    p.add_argument("-r", type=int, default=1, help="rotation level or dilation step")
    p.add_argument("--axis", type=_axis_arg, help="axis as 'x,y' or a center 'c'")
    p.add_argument("--m-bound", type=int, default=None)
    p.add_argument("--axes", action="store_true", help="include axes in show")
    p.add_argument("--no-substitution", action="store_true", help="rotate without the zero-residue rule")
    p.set_defaults(func=cmd_cop)

    p = sub.add_parser("xcop", help="extended CoPs")
    p.add_argument("action", choices=("show", "axes", "family", "scan"))
    p.add_argument("n", type=int, help="generator (range start for scan)")
    p.add_argument("hi", type=int, nargs="?", default=None, help="range end for scan")
    p.add_argument("--base", type=_base_arg, default=bs.primes())
    p.set_defaults(func=cmd_xcop)

    p = sub.add_parser("family", help="children, families, compatibility, isomorphism")
    p.add_argument("action", choices=("list", "split", "bounds", "compat", "iso", "export-csv"))
    p.add_argument("n", type=int, nargs="+")
    p.add_argument("--base", type=_base_arg, default=bs.primes())
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("density", help="point densities and ratios")
    p.add_argument("action", choices=("estimate", "scan", "ratio"))
    p.add_argument("n", type=int, help="generator (range start for scan)")
    p.add_argument("hi", type=int, nargs="?", default=None, help="range end for scan")
    p.add_argument("--subject", type=_base_arg, default=bs.primes(), help="the set H (B for ratio)")
    p.add_argument("--ambient", type=_base_arg, default=bs.naturals(), help="the base set M")
    p.add_argument("--step", type=int, default=1)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", nargs="?")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--list", action="store_true")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--csv", action="store_true", help="CSV report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="SVG diagram of a CoP")
    p.add_argument("n", type=int)
    p.add_argument("--base", type=_base_arg, default=bs.primes())
    p.add_argument("--xcop", action="store_true", help="draw the extended CoP")
    p.add_argument("--radius", type=int, default=120)
    p.add_argument("--label", choices=("weight", "index"), default="weight")
    p.add_argument("--no-chords", action="store_true")
    p.add_argument("--highlight", type=_weights_arg, default=None)
    p.set_defaults(func=cmd_render)
    return parser


def _check_ranges(parser, args):
    if args.command in ("xcop", "density") and args.action == "scan" and args.hi is None:
        parser.error("scan needs a range end")
    if args.command == "cop" and args.action in ("filtrate", "reduce") and args.axis is None:
        parser.error(f"{args.action} needs --axis")
    if args.command == "cop" and args.action == "filtrate" and args.m_bound is None:
        args.m_bound = 2 * args.n
    if args.command == "family":
        want = 2 if args.action in ("compat", "iso") else (None if args.action == "export-csv" else 1)
        if want is not None and len(args.n) != want:
            parser.error(f"family {args.action} takes {want} generator(s)")
    if args.command == "density" and args.action == "scan" and args.step < 1:
        parser.error("--step must be positive")


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
        return
    target = out
    base_dir = os.environ.get(OUTPUT_DIR_ENV)
    if base_dir and not os.path.isabs(out):
        os.makedirs(base_dir, exist_ok=True)
        target = os.path.join(base_dir, out)
    with open(target, "w", encoding="utf-8") as fh:
        fh.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_ranges(parser, args)
    try:
        if args.sieve_bound is not None:
            if args.sieve_bound < 1:
                raise CircleError("--sieve-bound must be positive")
            bs.set_default_bound(args.sieve_bound)
        result = args.func(args)
        code = 0
        if isinstance(result, tuple):
            result, code = result
        if not isinstance(result, str):
            result = json.dumps(result, indent=2) + "\n"
        _emit(result, args.out)
        return code
    except (CircleError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
