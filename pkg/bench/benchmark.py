"""Benchmark: compiled reduction kernel vs the pure-Python fallback.

Each workload is run once per kernel on a freshly parsed ring (so no cached
Groebner data leaks between runs) and the structured results are compared for
equality.  Run as: python3 bench/benchmark.py [--cap N] [--repeat K]
"""

from __future__ import annotations

import argparse
import time

import parres.kernel as kernel
from parres.cli import bundled_ring_text
from parres.harness import parse_ring_spec
from parres.invariants import ring_module
from parres.resolutions import minimal_free_resolution
from parres.koszul import koszul_complex
from parres.complexes import homology_presentation
from parres.groebner import FinitelyPresentedModule


def residue_field_resolution(ring_name, cap):
    spec = parse_ring_spec(bundled_ring_text(ring_name), name=ring_name)
    ring = spec.ring
    gens = [ring.ambient.gen(v) for v in ring.variables]
    from parres.groebner import RingMatrix
    rel = RingMatrix.from_columns(ring, [[g] for g in gens], row_degrees=[0])
    k = FinitelyPresentedModule(ring, [0], rel)
    return minimal_free_resolution(k, cap).poincare().coefficients


def quotient_resolution(ring_name, power, cap):
    spec = parse_ring_spec(bundled_ring_text(ring_name), name=ring_name)
    x = spec.sop().power(power)
    return minimal_free_resolution(x.quotient_module(), cap).poincare().coefficients


def koszul_homology_lengths(ring_name, power):
    spec = parse_ring_spec(bundled_ring_text(ring_name), name=ring_name)
    x = spec.sop().power(power)
    k = koszul_complex(x)
    out = []
    for i in range(x.count + 1):
        _, h = homology_presentation(k, i)
        out.append(h.length())
    return out


WORKLOADS = [
    ("residue field over r1", lambda cap: residue_field_resolution("r1", cap)),
    ("residue field over r2", lambda cap: residue_field_resolution("r2", min(cap, 5))),
    ("R/(x^3) over r1, cap", lambda cap: quotient_resolution("r1", 3, cap)),
    ("R/(x^2) over r2, cap", lambda cap: quotient_resolution("r2", 2, cap)),
    ("Koszul homology of x^4 over r1", lambda cap: koszul_homology_lengths("r1", 4)),
]


def run(cap, repeat):
    if not kernel.compiled_available():
        print("compiled kernel not built; benchmarking python only")
        modes = ["python"]
    else:
        modes = ["python", "compiled"]
    print(f"{'workload':<38} " + " ".join(f"{m:>10}" for m in modes)
          + ("   speedup" if len(modes) == 2 else ""))
    for name, fn in WORKLOADS:
        times = {}
        results = {}
        for mode in modes:
            kernel._FORCE = mode
            best = None
            for _ in range(repeat):
                t0 = time.perf_counter()
                results[mode] = fn(cap)
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            times[mode] = best
        if len(modes) == 2:
            assert results["python"] == results["compiled"], \
                f"kernel mismatch on {name}"
            ratio = times["python"] / times["compiled"]
            print(f"{name:<38} " + " ".join(f"{times[m]:>9.3f}s" for m in modes)
                  + f"   {ratio:>6.2f}x")
        else:
            print(f"{name:<38} {times['python']:>9.3f}s")
    kernel._FORCE = ""


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()
    run(args.cap, args.repeat)


if __name__ == "__main__":
    main()
