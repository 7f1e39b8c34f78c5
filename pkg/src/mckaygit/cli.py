"""Command-line interface: every query as deterministic JSON.

Exit codes: 0 success, 2 usage or validation error, 3 resource cap
exceeded, 1 internal invariant violation.  Rationals are written as
"p/q" strings on the command line and in output wherever a value is not
integral.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import arrangement as arr
from . import decomposition as dec
from . import mori as mori_mod
from . import walls as walls_mod
from .errors import McKayGitError, ResourceCapError, ValidationError
from .framed import enumerate_positive_roots_below, framed_lattice
from .weyl import reduce_to_F

ENV_MAX_REGIONS = "MCKAYGIT_MAX_REGIONS"


def _q2j(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mckaygit",
        description=(
            "Exact chamber decompositions, wall analysis and movable-cone "
            "reports for framed McKay quiver moduli."
        ),
    )
    p.add_argument("--type", dest="kind", choices=["A", "D", "E", "TRIVIAL"],
                   required=True, help="ADE type of the finite subgroup")
    p.add_argument("--rank", type=int, default=0,
                   help="rank of the finite root system (0 for TRIVIAL)")
    p.add_argument("--n", type=int, default=1, help="number of points n >= 1")
    p.add_argument("--theta", help="comma-separated rationals theta_0,...,theta_r; "
                                   "theta_inf is completed automatically (use "
                                   "--theta=-1,2,... when the first value is negative)")
    p.add_argument("--wall", help="comma-separated integer normal on the affine "
                                  "vertices (0..r) selecting a wall hyperplane")
    p.add_argument("--in-F", dest="in_f", action="store_true",
                   help="chambers: enumerate the chambers inside F")
    p.add_argument("--count-only", dest="count_only", action="store_true",
                   help="chambers: report the closed-form count only")
    p.add_argument("--total", action="store_true",
                   help="chambers: report the total chamber count of Theta_v")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads used inside enumeration calls")
    p.add_argument("--max-regions", type=int, default=None,
                   help="resource cap on enumerated regions "
                        "(env %s overrides the default)" % ENV_MAX_REGIONS)
    p.add_argument("--format", dest="fmt", choices=["json", "svg-data"],
                   default="json", help="plot output: exact JSON or float polylines")
    p.add_argument("command", choices=["roots", "chambers", "analyze", "plot"])
    return p


def _parse_rationals(text: str, expected: int, what: str) -> list[Fraction]:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != expected:
        raise ValidationError("%s needs %d comma-separated values" % (what, expected))
    try:
        return [Fraction(s) for s in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError("malformed rational in %s: %s" % (what, exc))


def _max_regions(args) -> int:
    if args.max_regions is not None:
        return args.max_regions
    env = os.environ.get(ENV_MAX_REGIONS)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValidationError("%s must be an integer" % ENV_MAX_REGIONS)
    return arr.DEFAULT_MAX_REGIONS


def cmd_roots(lattice, args) -> dict:
    roots = enumerate_positive_roots_below(lattice, lattice.v)
    return {
        "index_legend": ["inf"] + [str(i) for i in range(lattice.rank + 1)],
        "bound": list(lattice.v),
        "roots": [list(g) for g in roots],
    }


def cmd_chambers(lattice, args) -> dict:
    out: dict = {}
    trivial = lattice.root_data.kind == "TRIVIAL"
    if args.count_only or not args.in_f:
        out["count"] = 1 if trivial else arr.count_chambers_formula(lattice)
    if args.total:
        out["total"] = arr.count_chambers_total(lattice)
    if args.in_f:
        chambers = arr.enumerate_chambers_in_F(
            lattice, max_regions=_max_regions(args), jobs=max(1, args.jobs)
        )
        if "count" in out and out["count"] != len(chambers):
            raise AssertionError("closed-form count disagrees with enumeration")
        out["hyperplanes"] = [h.to_json() for h in arr.build_arrangement(lattice)]
        out["chambers"] = [c.to_json() for c in chambers]
        out["count"] = len(chambers)
    return out


def _theta_report(lattice, theta) -> dict:
    arrangement = arr.build_arrangement(lattice)
    located = arr.locate(lattice, theta, arrangement)
    report: dict = {
        "theta": theta.to_json(),
        "classification": dec.classify_parameter(lattice, theta).to_json(),
        "canonical_decomposition": dec.canonical_decomposition(
            lattice, lattice.v, theta
        ).to_json(),
    }
    w, theta_f = reduce_to_F(lattice, theta)
    report["reduction"] = {"word": w.to_json(), "theta_F": theta_f.to_json()}
    report["linearisation"] = [_q2j(x) for x in mori_mod.linearisation_L(lattice, theta)]
    if isinstance(located, arr.Chamber):
        report["location"] = located.to_json()
        f_chamber = arr.locate(lattice, theta_f, arrangement)
        report["model_tag"] = mori_mod.ample_model_tag(lattice, f_chamber, arrangement)
    else:
        report["location"] = located.to_json()
        report["representation_types"] = [
            t.to_json() for t in dec.representation_types(lattice, lattice.v, theta)
        ]
        if len(located.hyperplanes) == 1:
            report["wall_analysis"] = _wall_report(lattice, theta)
    return report


def _wall_report(lattice, theta0) -> dict:
    info = walls_mod.classify_wall(lattice, theta0)
    out: dict = {"wall": info.to_json()}
    out["contraction"] = (
        walls_mod.FLOP
        if info.wall_class == walls_mod.REAL_INTERNAL
        else walls_mod.DIVISORIAL
    )
    if walls_mod.is_generic_wall_point(lattice, theta0):
        theta_plus, _ = walls_mod.adjacent_chamber_parameters(lattice, theta0)
        audit = walls_mod.semismall_audit(lattice, theta0)
        strata = []
        for stratum in audit.strata:
            model = walls_mod.ext_graph_model(
                lattice, stratum.rep_type, theta_plus, theta0
            )
            record = stratum.to_json()
            record["ext_graph"] = model.to_json()
            strata.append(record)
        out["theta_side"] = theta_plus.to_json()
        out["strata"] = strata
        out["semismall_passes"] = audit.passes
    else:
        out["generic"] = False
    return out


def cmd_analyze(lattice, args) -> dict:
    if (args.theta is None) == (args.wall is None):
        raise ValidationError("analyze needs exactly one of --theta or --wall")
    if args.theta is not None:
        values = _parse_rationals(args.theta, lattice.rank + 1, "--theta")
        theta = arr.stability_from_affine(lattice, values)
        return _theta_report(lattice, theta)
    normal = _parse_rationals(args.wall, lattice.rank + 1, "--wall")
    if any(x.denominator != 1 for x in normal):
        raise ValidationError("--wall expects integer coordinates")
    target = tuple(int(x) for x in normal)
    for h in arr.build_arrangement(lattice):
        if h.normal[1:] == target or h.normal[1:] == tuple(-x for x in target):
            theta0 = walls_mod.pick_generic_wall_point(lattice, h)
            report = _wall_report(lattice, theta0)
            report["generic_point"] = theta0.to_json()
            return report
    raise ValidationError("--wall does not match any arrangement hyperplane")


def cmd_plot(lattice, args) -> dict:
    if lattice.rank != 2:
        raise ValidationError("plot is defined for rank-2 finite types only")
    regions = arr.slice_polygons(lattice)
    as_float = args.fmt == "svg-data"

    def point(pt):
        if as_float:
            return [float(pt[0]), float(pt[1])]
        return [_q2j(pt[0]), _q2j(pt[1])]

    return {
        "slice": "theta(delta)=1",
        "box": lattice.n,
        "regions": [
            {
                "vertices": [point(p) for p in reg["vertices"]],
                "unbounded": reg["unbounded"],
                "label": reg["label"],
            }
            for reg in regions
        ],
    }


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lattice = framed_lattice(args.kind, args.rank, args.n)
        handler = {
            "roots": cmd_roots,
            "chambers": cmd_chambers,
            "analyze": cmd_analyze,
            "plot": cmd_plot,
        }[args.command]
        out = handler(lattice, args)
    except ResourceCapError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 3
    except ValidationError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except (AssertionError, McKayGitError) as exc:
        print(json.dumps({"error": "internal invariant violation: %s" % exc}),
              file=sys.stderr)
        return 1
    print(json.dumps(out, indent=2, sort_keys=False))
    return 0


if __name__ == "__main__":
    sys.exit(main())
