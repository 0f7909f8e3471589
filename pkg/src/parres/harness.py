"""Ring-spec files, experiment orchestration, and report generation.

A ring-spec file is line-oriented text with sections [field], [vars],
[ideal], [sop <name>], [caps]; polynomials use the infix syntax of the
parser.  Experiments return ExperimentReport objects that render either as
human-readable text (with timings) or as a deterministic structured JSON
document (without timings, so repeated runs are byte-identical).
"""

from __future__ import annotations

import json
import time
from math import comb

from .algebra import (AlgebraError, NotHomogeneousError, PolyParseError,
                      PolynomialRingSpec)
from .groebner import INFINITE, QuotientRingSpec
from .complexes import homology_presentation
from .koszul import ParameterSequence, koszul_complex
from .resolutions import (BettiTable, minimal_free_resolution,
                          poincare_truncation)
from .invariants import (NOT_FOUND, cohen_macaulay_defect, flc_check,
                         find_standard_power, invariant_report, ring_module,
                         standardness_witness)


class RingSpecFile:
    """Parsed ring-spec file: the quotient ring, named sops, and caps."""

    def __init__(self, ring, sops, caps, name=None):
        self.ring = ring
        self.sops = sops
        self.caps = caps
        self.name = name

    def sop(self, name=None):
        if name is None:
            if len(self.sops) == 1:
                return next(iter(self.sops.values()))
            raise AlgebraError(
                f"ring spec has sops {sorted(self.sops)}; pick one")
        try:
            return self.sops[name]
        except KeyError:
            raise AlgebraError(f"no sop named {name!r}; available: "
                               f"{sorted(self.sops)}") from None

    def cap(self, key, default):
        return self.caps.get(key, default)


def parse_ring_spec(text, name=None):
    """Parse ring-spec text into a RingSpecFile.  Errors carry line numbers."""
    characteristic = None
    variables = None
    ideal_lines = []
    sop_lines = {}
    caps = {}
    section = None
    sop_name = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise PolyParseError("unterminated section header", line=lineno)
            header = line[1:-1].strip()
            if header == "field":
                section = "field"
            elif header == "vars":
                section = "vars"
            elif header == "ideal":
                section = "ideal"
            elif header == "caps":
                section = "caps"
            elif header.startswith("sop"):
                parts = header.split()
                if len(parts) != 2:
                    raise PolyParseError("sop section needs a name",
                                         line=lineno)
                section = "sop"
                sop_name = parts[1]
                sop_lines[sop_name] = []
            else:
                raise PolyParseError(f"unknown section {header!r}",
                                     line=lineno)
            continue
        if section == "field":
            try:
                characteristic = int(line)
            except ValueError:
                raise PolyParseError(f"bad characteristic {line!r}",
                                     line=lineno) from None
        elif section == "vars":
            variables = (variables or []) + line.replace(",", " ").split()
        elif section == "ideal":
            ideal_lines.append((lineno, line))
        elif section == "sop":
            sop_lines[sop_name].append((lineno, line))
        elif section == "caps":
            if "=" not in line:
                raise PolyParseError("caps entries are key = value",
                                     line=lineno)
            key, _, val = line.partition("=")
            try:
                caps[key.strip()] = int(val.strip())
            except ValueError:
                raise PolyParseError(f"bad cap value {val.strip()!r}",
                                     line=lineno) from None
        else:
            raise PolyParseError("content before any section header",
                                 line=lineno)
    if characteristic is None:
        raise AlgebraError("ring spec missing [field]")
    if not variables:
        raise AlgebraError("ring spec missing [vars]")
    ambient = PolynomialRingSpec(characteristic, variables)
    gens = []
    for lineno, line in ideal_lines:
        poly = ambient.parse(line, line=lineno)
        if not poly.is_homogeneous():
            raise NotHomogeneousError(
                f"ideal generator {line!r} (line {lineno}) is inhomogeneous")
        gens.append(poly)
    ring = QuotientRingSpec(ambient, gens)
    sops = {}
    for sname, lines in sop_lines.items():
        elems = [ambient.parse(line, line=lineno) for lineno, line in lines]
        sops[sname] = ParameterSequence(ring, elems, name=sname)
    return RingSpecFile(ring, sops, caps, name=name)


def load_ring_spec(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ring_spec(fh.read(), name=str(path))


# ---------------------------------------------------------------------------
# reports


class ExperimentReport:
    """Inputs, computed data, and per-claim verdicts for one experiment."""

    def __init__(self, experiment, inputs):
        self.experiment = experiment
        self.inputs = dict(inputs)
        self.data = {}
        self.verdicts = []
        self.timings = {}

    def record(self, key, value):
        self.data[key] = value

    def verdict(self, claim, passed, left, right):
        self.verdicts.append({
            "claim": claim,
            "pass": bool(passed) if passed is not None else None,
            "left": left,
            "right": right,
        })

    def passed(self):
        return all(v["pass"] for v in self.verdicts if v["pass"] is not None)

    def to_structured(self):
        return {
            "experiment": self.experiment,
            "inputs": self.inputs,
            "data": self.data,
            "verdicts": self.verdicts,
        }

    def to_json(self):
        return json.dumps(self.to_structured(), sort_keys=True, indent=2,
                          default=_jsonable) + "\n"

    def to_text(self):
        lines = [f"experiment: {self.experiment}"]
        for k, v in self.inputs.items():
            lines.append(f"  input {k}: {v}")
        for k, v in self.data.items():
            if isinstance(v, str) and "\n" in v:
                lines.append(f"  {k}:")
                lines.extend("    " + row for row in v.splitlines())
            else:
                lines.append(f"  {k}: {v}")
        for v in self.verdicts:
            mark = {True: "PASS", False: "FAIL", None: "INFO"}[v["pass"]]
            lines.append(f"  [{mark}] {v['claim']}: {v['left']} vs {v['right']}")
        for k, v in self.timings.items():
            lines.append(f"  time {k}: {v:.2f}s")
        status = "PASS" if self.passed() else "FAIL"
        lines.append(f"result: {status}")
        return "\n".join(lines) + "\n"

    def render(self, fmt):
        if fmt == "structured":
            return self.to_json()
        return self.to_text()


def _jsonable(obj):
    if obj is INFINITE or obj is NOT_FOUND:
        return repr(obj)
    if isinstance(obj, BettiTable):
        return obj.to_dict()
    return repr(obj)


def _binomial_series(d, cap):
    return [comb(d, i) for i in range(cap + 1)]


def _series_leq(left, right):
    """(holds, first strict index or None) for coefficientwise comparison."""
    strict = None
    for i, (a, b) in enumerate(zip(left, right)):
        if a > b:
            return False, i
        if a < b and strict is None:
            strict = i
    return True, strict


# ---------------------------------------------------------------------------
# experiments


def verify_inequality(ring, x, cap, degree_cap=None):
    """Coefficientwise bound P_{R/(x)} <= (1+t)^d + sum t^(i+1) P_{H_i}."""
    t0 = time.monotonic()
    report = ExperimentReport("inequality", {
        "ring": repr(ring), "sop": repr(x), "cap": cap})
    d = ring.dimension()
    res = minimal_free_resolution(x.quotient_module(), cap,
                                  degree_cap=degree_cap)
    lhs = res.poincare().coefficients
    report.record("lhs_poincare", lhs)
    k = koszul_complex(x)
    rhs = _binomial_series(d, cap)
    h_series = {}
    for i in range(1, x.count + 1):
        _, h = homology_presentation(k, i, degree_cap=degree_cap)
        if h.is_zero():
            continue
        ph = poincare_truncation(h, cap, degree_cap=degree_cap).coefficients
        h_series[i] = ph
        for j, c in enumerate(ph):
            if i + 1 + j <= cap:
                rhs[i + 1 + j] += c
    report.record("homology_poincare", h_series)
    report.record("rhs_assembly", rhs)
    ok, strict = _series_leq(lhs, rhs)
    report.record("first_strict_index", strict)
    report.verdict("coefficientwise P_{R/(x)} <= cone assembly", ok, lhs, rhs)
    report.timings["total"] = time.monotonic() - t0
    return report


def verify_main_theorem(ring, x, cap, nmax=4, degree_cap=None):
    """Main stabilization statement for rings with cmd <= 1 and FLC.

    Finds a standard power n, compares P_{R/(x^n)} with
    (1+t)^d + t^2 P_H (H = H_1(x^n; R), computed by an independent path),
    compares total Betti numbers across standard powers, and checks the
    Betti-tail identity beta_{d+1+j}(R/(x^n)) = beta_{d-1+j}(H).
    """
    t0 = time.monotonic()
    report = ExperimentReport("main-theorem", {
        "ring": repr(ring), "sop": repr(x), "cap": cap, "power_max": nmax})
    d = ring.dimension()
    cmd = cohen_macaulay_defect(ring, degree_cap=degree_cap)
    report.record("dim", d)
    report.record("cmd", cmd)
    if cmd > 1:
        report.verdict("cmd <= 1 hypothesis", None, cmd, "NOT-APPLICABLE")
        report.timings["total"] = time.monotonic() - t0
        return report
    verdict_flc = flc_check(ring_module(ring), x=x, nmax=nmax,
                            degree_cap=degree_cap)
    if verdict_flc is not True:
        report.verdict("finite local cohomology hypothesis", None,
                       repr(verdict_flc), "NOT-APPLICABLE")
        report.timings["total"] = time.monotonic() - t0
        return report
    n = find_standard_power(ring, x, nmax=nmax, degree_cap=degree_cap)
    report.record("standard_power", n)
    if n is NOT_FOUND:
        report.verdict("standard power found", False, repr(n), f"<= {nmax}")
        report.timings["total"] = time.monotonic() - t0
        return report
    xn = x.power(n)
    res = minimal_free_resolution(xn.quotient_module(), cap,
                                  degree_cap=degree_cap)
    lhs = res.poincare().coefficients
    report.record("poincare_quotient", lhs)
    _, h = homology_presentation(koszul_complex(xn), 1, degree_cap=degree_cap)
    ph = poincare_truncation(h, cap, degree_cap=degree_cap)
    report.record("poincare_h", ph.coefficients)
    rhs = _binomial_series(d, cap)
    for j, c in enumerate(ph.coefficients):
        if j + 2 <= cap:
            rhs[j + 2] += c
    report.verdict("P_{R/(x^n)} = (1+t)^d + t^2 P_H", lhs == rhs, lhs, rhs)

    betti_by_power = {}
    for m in range(1, nmax + 1):
        xm = x.power(m)
        if standardness_witness(xm, None, degree_cap) is not None:
            continue
        resm = minimal_free_resolution(xm.quotient_module(), cap,
                                       degree_cap=degree_cap)
        betti_by_power[m] = resm.betti().totals()
    report.record("betti_totals_by_standard_power", betti_by_power)
    vals = list(betti_by_power.values())
    report.verdict("total Betti numbers equal across standard powers",
                   all(v == vals[0] for v in vals), betti_by_power,
                   "all equal")

    resh = minimal_free_resolution(h, cap, degree_cap=degree_cap)
    tail_ok = True
    tail = {}
    for j in range(0, cap - d):
        left = res.betti().total(d + 1 + j)
        right = resh.betti().total(d - 1 + j)
        tail[j] = (left, right)
        if left != right:
            tail_ok = False
    report.record("betti_tail_pairs", tail)
    report.verdict("beta_{d+1+j}(R/(x^n)) = beta_{d-1+j}(H)", tail_ok,
                   {j: v[0] for j, v in tail.items()},
                   {j: v[1] for j, v in tail.items()})
    report.timings["total"] = time.monotonic() - t0
    return report


def stabilization_scan(ring, x, cap, nmax=4, degree_cap=None):
    """Betti totals of R/(x^i) for i = 1..nmax with a stabilization verdict."""
    t0 = time.monotonic()
    report = ExperimentReport("scan", {
        "ring": repr(ring), "sop": repr(x), "cap": cap, "power_max": nmax})
    tables = {}
    standard = {}
    for i in range(1, nmax + 1):
        xi = x.power(i)
        res = minimal_free_resolution(xi.quotient_module(), cap,
                                      degree_cap=degree_cap)
        tables[i] = res.betti().totals()
        standard[i] = standardness_witness(xi, None, degree_cap) is None
    report.record("betti_totals", tables)
    report.record("standard", standard)
    stab = None
    for i in range(1, nmax + 1):
        if standard[i] and all(tables[j] == tables[i]
                               for j in range(i, nmax + 1)):
            stab = i
            break
    report.record("stabilization_index",
                  stab if stab is not None else "NOT-STABILIZED")
    report.verdict("stabilization observed within the window",
                   stab is not None, tables,
                   "constant from a standard power on")
    report.timings["total"] = time.monotonic() - t0
    return report


def reproduce_example(ring, x, cap=4, degree_cap=None,
                      expected=((1, 3, 6, 13, 28),
                                (3, 7, 12, 26, 56),
                                (1, 2, 3, 7, 15))):
    """Recompute the three reference Poincare truncations and compare."""
    t0 = time.monotonic()
    report = ExperimentReport("example", {
        "ring": repr(ring), "sop": repr(x), "cap": cap})
    k = koszul_complex(x)
    _, h2 = homology_presentation(k, 2, degree_cap=degree_cap)
    _, h1 = homology_presentation(k, 1, degree_cap=degree_cap)
    p_h2 = poincare_truncation(h2, cap, degree_cap=degree_cap).coefficients
    p_h1 = poincare_truncation(h1, cap, degree_cap=degree_cap).coefficients
    p_q = minimal_free_resolution(x.quotient_module(), cap,
                                  degree_cap=degree_cap).poincare().coefficients
    report.record("P_H2", p_h2)
    report.record("P_H1", p_h1)
    report.record("P_quotient", p_q)
    report.verdict("P_H2 matches reference", p_h2 == list(expected[0]),
                   p_h2, list(expected[0]))
    report.verdict("P_H1 matches reference", p_h1 == list(expected[1]),
                   p_h1, list(expected[1]))
    report.verdict("P_quotient matches reference", p_q == list(expected[2]),
                   p_q, list(expected[2]))
    report.timings["total"] = time.monotonic() - t0
    return report


def resolve_experiment(ring, x, cap, degree_cap=None):
    """Minimal free resolution data of R/(x)."""
    t0 = time.monotonic()
    report = ExperimentReport("resolve", {
        "ring": repr(ring), "sop": repr(x), "cap": cap})
    res = minimal_free_resolution(x.quotient_module(), cap,
                                  degree_cap=degree_cap)
    table = res.betti()
    report.record("betti", table.to_dict())
    report.record("betti_pretty", table.pretty())
    report.record("poincare", res.poincare().coefficients)
    report.timings["total"] = time.monotonic() - t0
    return report


def koszul_experiment(ring, x, degree_cap=None):
    """Lengths and graded pieces of all Koszul homology modules of x."""
    t0 = time.monotonic()
    report = ExperimentReport("koszul", {"ring": repr(ring), "sop": repr(x)})
    k = koszul_complex(x)
    report.record("ranks", {n: k.rank(n) for n in range(x.count + 1)})
    lengths = {}
    graded = {}
    for i in range(x.count + 1):
        _, h = homology_presentation(k, i, degree_cap=degree_cap)
        val = h.length()
        lengths[i] = val
        if val is not INFINITE:
            graded[i] = h.graded_length()
    report.record("homology_lengths", lengths)
    report.record("homology_graded", graded)
    report.timings["total"] = time.monotonic() - t0
    return report


def invariants_experiment(ring, x=None, nmax=4, degree_cap=None):
    t0 = time.monotonic()
    report = ExperimentReport("invariants", {
        "ring": repr(ring), "sop": repr(x) if x is not None else None})
    inv = invariant_report(ring, x, nmax=nmax, degree_cap=degree_cap)
    for k, v in inv.to_dict().items():
        report.record(k, v)
    report.verdict("cmd = dim - depth is non-negative", inv.cmd >= 0,
                   inv.cmd, ">= 0")
    report.timings["total"] = time.monotonic() - t0
    return report


def standard_experiment(ring, x, nmax=4, degree_cap=None):
    t0 = time.monotonic()
    report = ExperimentReport("standard", {
        "ring": repr(ring), "sop": repr(x), "power_max": nmax})
    n = find_standard_power(ring, x, nmax=nmax, degree_cap=degree_cap)
    report.record("standard_power",
                  n if n is not NOT_FOUND else repr(NOT_FOUND))
    if n is not NOT_FOUND:
        wit = standardness_witness(x.power(n), None, degree_cap)
        report.verdict("power re-verified standard", wit is None,
                       f"n={n}", "squares criterion")
    else:
        report.verdict("standard power found", False, repr(n), f"<= {nmax}")
    report.timings["total"] = time.monotonic() - t0
    return report
