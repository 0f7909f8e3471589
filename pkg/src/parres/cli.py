"""Command-line interface.

Subcommands operate on a ring-spec file (a path, or the name of a bundled
ring from parres/rings/) and write a report in text or structured JSON form.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources

from .algebra import AlgebraError, PolyParseError
from .harness import (invariants_experiment, koszul_experiment,
                      load_ring_spec, parse_ring_spec, reproduce_example,
                      resolve_experiment, stabilization_scan,
                      standard_experiment, verify_inequality,
                      verify_main_theorem)

BUNDLED = ("r1", "r2", "regular", "hypersurface", "nonflc")
DEFAULT_CAP = 4
DEFAULT_POWER_MAX = 4


def bundled_ring_text(name):
    ref = resources.files("parres.rings").joinpath(f"{name}.ring")
    return ref.read_text(encoding="utf-8")


def _load(ring_arg):
    import os
    if ring_arg in BUNDLED and not os.path.exists(ring_arg):
        return parse_ring_spec(bundled_ring_text(ring_arg), name=ring_arg)
    return load_ring_spec(ring_arg)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="parres",
        description="Graded free resolutions and Koszul homology over "
                    "quotient rings of polynomial rings over a prime field.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_sop=True):
        p.add_argument("--ring", required=True,
                       help="ring-spec file path, or bundled name: "
                            + ", ".join(BUNDLED))
        if need_sop:
            p.add_argument("--sop", default=None,
                           help="name of the [sop <name>] section to use")
        p.add_argument("--cap", type=int, default=None,
                       help="homological degree cap (default from [caps], "
                            f"else {DEFAULT_CAP})")
        p.add_argument("--power-max", type=int, default=None,
                       help="largest sequence power scanned (default from "
                            f"[caps], else {DEFAULT_POWER_MAX})")
        p.add_argument("--format", choices=("text", "structured"),
                       default="text")
        p.add_argument("--out", default=None,
                       help="write the report to this path instead of stdout")

    common(sub.add_parser("resolve",
                          help="minimal free resolution of R/(x)"))
    common(sub.add_parser("koszul",
                          help="Koszul homology lengths of the sequence"))
    common(sub.add_parser("invariants",
                          help="dimension, depth, defect, local cohomology"),
           need_sop=True)
    common(sub.add_parser("standard",
                          help="smallest power making the sop standard"))
    common(sub.add_parser("inequality",
                          help="coefficientwise Poincare series bound"))
    common(sub.add_parser("main-theorem",
                          help="stabilization statement for cmd <= 1 rings"))
    common(sub.add_parser("scan",
                          help="Betti totals of R/(x^i) across powers"))
    common(sub.add_parser("example",
                          help="recompute the bundled reference computation"))
    return parser


def run(args):
    spec = _load(args.ring)
    cap = args.cap if args.cap is not None else spec.cap("homological",
                                                         DEFAULT_CAP)
    nmax = (args.power_max if args.power_max is not None
            else spec.cap("power", DEFAULT_POWER_MAX))
    degree_cap = spec.caps.get("internal")
    ring = spec.ring
    cmd = args.command
    if cmd == "invariants":
        x = spec.sop(args.sop) if spec.sops else None
        return invariants_experiment(ring, x, nmax=nmax,
                                     degree_cap=degree_cap)
    x = spec.sop(args.sop)
    if cmd == "resolve":
        return resolve_experiment(ring, x, cap, degree_cap=degree_cap)
    if cmd == "koszul":
        return koszul_experiment(ring, x, degree_cap=degree_cap)
    if cmd == "standard":
        return standard_experiment(ring, x, nmax=nmax, degree_cap=degree_cap)
    if cmd == "inequality":
        return verify_inequality(ring, x, cap, degree_cap=degree_cap)
    if cmd == "main-theorem":
        return verify_main_theorem(ring, x, cap, nmax=nmax,
                                   degree_cap=degree_cap)
    if cmd == "scan":
        return stabilization_scan(ring, x, cap, nmax=nmax,
                                  degree_cap=degree_cap)
    if cmd == "example":
        return reproduce_example(ring, x, cap=cap, degree_cap=degree_cap)
    raise AlgebraError(f"unknown command {cmd!r}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except (AlgebraError, PolyParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed() else 2


if __name__ == "__main__":
    sys.exit(main())
