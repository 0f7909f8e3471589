"""Ring and module invariants: depth, grade, sop tests, local cohomology lengths.

Depth and grade are detected through vanishing of Koszul homology; sop
standardness uses the squares criterion (Koszul homology lengths unchanged
under squaring the sequence), and the lengths of the local cohomology modules
are recovered by back-solving the binomial identities relating them to Koszul
homology lengths of a standard sop.  Finiteness of local cohomology is a
semi-decision: lengths are scanned across powers up to a bound.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .algebra import AlgebraError
from .groebner import FinitelyPresentedModule, INFINITE
from .complexes import InducedHomologyMap, ComplexMap, dual
from .koszul import (ParameterSequence, comparison_map, koszul_complex,
                     koszul_homology)


class _Undecided:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDECIDED"

    def __bool__(self):
        raise AlgebraError("UNDECIDED verdict used as a boolean")


UNDECIDED = _Undecided()


class _NotFound:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NOT-FOUND"


NOT_FOUND = _NotFound()


def ring_module(ring):
    """R as a module over itself."""
    return FinitelyPresentedModule(ring, [0])


def maximal_ideal_sequence(ring):
    """The images of the ambient variables, generating the irrelevant ideal."""
    elems = [ring.ambient.gen(v) for v in ring.variables]
    return ParameterSequence(ring, elems, name="m")


def _hlen(x, module, p, degree_cap=None):
    return koszul_homology(x, module, p, degree_cap=degree_cap).length()


def depth(module, degree_cap=None):
    """Depth with respect to the irrelevant maximal ideal.

    Computed as v - sup{ i : H_i(variables; module) != 0 } with v the number
    of ambient variables.
    """
    ring = module.ring
    if module.is_zero():
        raise AlgebraError("depth of the zero module is undefined")
    x = maximal_ideal_sequence(ring)
    k = koszul_complex(x, module)
    v = x.count
    from .complexes import homology_at
    for i in range(v, -1, -1):
        if not homology_at(k, i, degree_cap=degree_cap).is_zero():
            return v - i
    raise AlgebraError("no nonvanishing Koszul homology found")


def grade(generators, ring, degree_cap=None):
    """Grade of the ideal generated by the given elements.

    count - sup{ p >= 1 : H_p(gens; R) != 0 }, or count when all positive
    Koszul homology vanishes (the generators form a regular sequence).
    """
    for g in generators:
        if ring.reduce(g).is_constant() and not ring.reduce(g).is_zero():
            raise AlgebraError("unit ideal has no grade")
    x = ParameterSequence(ring, generators)
    k = koszul_complex(x)
    from .complexes import homology_at
    for p in range(x.count, 0, -1):
        if not homology_at(k, p, degree_cap=degree_cap).is_zero():
            return x.count - p
    return x.count


def cohen_macaulay_defect(ring, degree_cap=None):
    return ring.dimension() - depth(ring_module(ring), degree_cap=degree_cap)


def is_sop(x, module=None):
    """count(x) = dim and finite colength."""
    ring = x.ring
    if module is None:
        return x.is_sop()
    if x.count != module.dimension():
        return False
    rel = module.relations
    extra = []
    for f in x.elements:
        for i in range(len(module.gen_degrees)):
            col = [ring.ambient.zero()] * len(module.gen_degrees)
            col[i] = f
            extra.append(col)
    from .groebner import RingMatrix
    quot = FinitelyPresentedModule(
        ring, module.gen_degrees,
        rel.hstack(RingMatrix.from_columns(ring, extra, module.gen_degrees)))
    return quot.length() is not INFINITE


def _prefix(x, r):
    return ParameterSequence(x.ring, x.elements[:r])


def _squares(x):
    return ParameterSequence(x.ring, [f ** 2 for f in x.elements])


def standardness_witness(x, module=None, degree_cap=None):
    """None if the squares criterion holds, else the first failing (p, r).

    Criterion: for every initial segment x_1..x_r and every p in 1..r, the
    Koszul homology length is unchanged when the elements are squared.
    """
    for r in range(1, x.count + 1):
        sub = _prefix(x, r)
        sq = _squares(sub)
        for p in range(1, r + 1):
            l1 = _hlen(sub, module, p, degree_cap)
            l2 = _hlen(sq, module, p, degree_cap)
            if l1 is INFINITE or l2 is INFINITE:
                raise AlgebraError(
                    f"infinite Koszul homology length at (p={p}, r={r}); "
                    "squares criterion needs finite lengths")
            if l1 != l2:
                return (p, r)
    return None


def is_standard_sop(x, module=None, degree_cap=None, check_flc=True,
                    nmax=4):
    """Standardness of a sop via the squares criterion.

    The criterion characterizes standard sops for modules with finite local
    cohomology, so FLC is checked first (semi-decision; an UNDECIDED verdict
    is raised as an error unless check_flc is disabled).
    """
    if not is_sop(x, module):
        raise AlgebraError("sequence is not a system of parameters")
    if check_flc:
        verdict = flc_check(module if module is not None
                            else ring_module(x.ring), x=x, nmax=nmax,
                            degree_cap=degree_cap)
        if verdict is not True:
            raise AlgebraError(
                f"finite local cohomology not established ({verdict!r}); "
                "the squares criterion does not apply")
    return standardness_witness(x, module, degree_cap) is None


def local_cohomology_lengths(module, x, degree_cap=None, verify=True):
    """Lengths of the local cohomology modules below the dimension.

    For a standard sop x = x_1..x_d the identity
    len H_p(x_1..x_r; M) = sum_i binom(r, i+p) * len H^i_m(M) holds for all
    r <= d and p >= 1; the r = d instances form a triangular system solved
    here for len H^0 .. len H^(d-1), and the r < d instances are used as a
    consistency check.
    """
    d = x.count
    measured = {}
    for r in range(1, d + 1):
        sub = _prefix(x, r)
        for p in range(1, r + 1):
            val = _hlen(sub, module, p, degree_cap)
            if val is INFINITE:
                raise AlgebraError("infinite Koszul homology length; "
                                   "x is not a sop for the module")
            measured[(p, r)] = val
    lc = [0] * d
    for p in range(d, 0, -1):
        # len H_p(x_1..x_d) = sum_{i} binom(d, i+p) lc[i]; i = d-p is new
        acc = measured[(p, d)]
        for i in range(d - p):
            acc -= comb(d, i + p) * lc[i]
        if acc < 0:
            raise AlgebraError(f"inconsistent system at p={p}: the sop is "
                               "not standard")
        lc[d - p] = acc
    if verify:
        for (p, r), val in measured.items():
            want = sum(comb(r, i + p) * lc[i] for i in range(d))
            if val != want:
                raise AlgebraError(
                    f"standardness violation: measured len H_{p}(x_1..x_{r}) "
                    f"= {val}, predicted {want}")
    return lc


def cohomology_comparison_map(x, n, i, degree_cap=None):
    """Induced map H^i(x^n; R) -> H^i(x^(n+1); R) between Koszul cohomologies.

    Realized by dualizing the complex-level comparison map; cohomology in
    index i is homology of the dual in index -i.
    """
    phi = comparison_map(x, n)
    dsrc = dual(phi.target)    # dual of K(x^n)
    dtgt = dual(phi.source)    # dual of K(x^(n+1))
    comps = {}
    for p, mat in phi.components.items():
        comps[-p] = mat.transpose()
    dmap = ComplexMap(dsrc, dtgt, comps, check=True)
    return InducedHomologyMap(dmap, -i, degree_cap=degree_cap)


class StabilityReport:
    """Koszul homology lengths across powers of a sop, plus map injectivity."""

    def __init__(self, lengths, stable, injective):
        self.lengths = lengths        # (p, n) -> length
        self.stable = stable          # p -> bool
        self.injective = injective    # (i, n) -> bool or None

    def all_stable(self):
        return all(self.stable.values())

    def monotone(self):
        ps = {p for p, _ in self.lengths}
        ns = sorted({n for _, n in self.lengths})
        return all(self.lengths[(p, a)] <= self.lengths[(p, b)]
                   for p in ps for a, b in zip(ns, ns[1:]))

    def __repr__(self):
        return (f"<StabilityReport stable={self.stable} "
                f"injective={self.injective}>")


def length_stability_check(x, module=None, pmax=None, nmax=4,
                           check_maps=True, degree_cap=None):
    """Lengths of H_p(x^n; M) for n = 1..nmax with stability verdicts.

    Also checks injectivity of the comparison maps induced on the cohomology
    H^g, g = depth, across consecutive powers (the index whose cohomology
    computes the corresponding local cohomology for standard sops).
    """
    d = x.count
    if pmax is None:
        pmax = d
    lengths = {}
    for n in range(1, nmax + 1):
        xn = x.power(n)
        for p in range(1, pmax + 1):
            lengths[(p, n)] = _hlen(xn, module, p, degree_cap)
    stable = {p: len({lengths[(p, n)] for n in range(1, nmax + 1)}) == 1
              for p in range(1, pmax + 1)}
    injective = {}
    if check_maps and module is None and d >= 1:
        i = depth(ring_module(x.ring), degree_cap=degree_cap)
        for n in range(1, nmax):
            ind = cohomology_comparison_map(x, n, i, degree_cap=degree_cap)
            injective[(i, n)] = ind.is_injective()
    return StabilityReport(lengths, stable, injective)


def find_standard_power(ring, x, nmax=4, degree_cap=None):
    """Smallest n <= nmax with x^n standard, or NOT-FOUND."""
    verdict = flc_check(ring_module(ring), x=x, nmax=nmax,
                        degree_cap=degree_cap)
    if verdict is not True:
        return NOT_FOUND
    for n in range(1, nmax + 1):
        if standardness_witness(x.power(n), None, degree_cap) is None:
            return n
    return NOT_FOUND


def _candidate_sops(ring):
    """Deterministic sop candidates: variable subsets, then diagonal sums."""
    d = ring.dimension()
    gens = [ring.ambient.gen(v) for v in ring.variables]
    for sub in combinations(range(len(gens)), d):
        yield [gens[i] for i in sub]
    # pair up complementary variables: x_i + x_{i+d}, wrapping as needed
    v = len(gens)
    if d < v:
        cand = [gens[i] + gens[(i + d) % v] for i in range(d)]
        yield cand
        cand = [gens[i] + gens[v - 1 - i] for i in range(d)]
        yield cand


def reference_sop(ring):
    """A deterministic sop for the ring, for use as a testing baseline."""
    for cand in _candidate_sops(ring):
        try:
            x = ParameterSequence(ring, cand)
        except AlgebraError:
            continue
        if x.is_sop():
            return x
    raise AlgebraError("no system of parameters found among the candidates")


def flc_check(module, x=None, nmax=4, degree_cap=None):
    """Finite local cohomology, as a semi-decision.

    True when the Koszul homology lengths of a reference sop stabilize across
    powers n <= nmax and the stabilized values back-solve to one consistent
    set of local cohomology lengths; UNDECIDED when the power bound is hit
    without stabilization (or consistency fails).
    """
    ring = module.ring
    d = module.dimension()
    if d <= 0:
        return True  # finite length module, trivially FLC
    if x is None:
        x = reference_sop(ring)
    if not is_sop(x, None if module.gen_degrees == (0,)
                  and module.relations.is_zero() else module):
        raise AlgebraError("reference sequence is not a sop for the module")
    lengths = {}
    for n in (nmax - 1, nmax):
        xn = x.power(n)
        for p in range(1, x.count + 1):
            lengths[(p, n)] = _hlen(xn, module, p, degree_cap)
    if any(lengths[(p, nmax - 1)] != lengths[(p, nmax)]
           for p in range(1, x.count + 1)):
        return UNDECIDED
    try:
        local_cohomology_lengths(module, x.power(nmax),
                                 degree_cap=degree_cap)
    except AlgebraError:
        return UNDECIDED
    return True


class InvariantReport:
    """Summary invariants of a ring: dimension, depth, defect, FLC, lengths."""

    def __init__(self, ring, dim, depth_, cmd, flc, lc_lengths,
                 standard_power, sop_name=None):
        self.ring = ring
        self.dim = dim
        self.depth = depth_
        self.cmd = cmd
        self.flc = flc
        self.lc_lengths = lc_lengths
        self.standard_power = standard_power
        self.sop_name = sop_name

    def to_dict(self):
        return {
            "dim": self.dim,
            "depth": self.depth,
            "cmd": self.cmd,
            "flc": repr(self.flc) if self.flc is UNDECIDED else self.flc,
            "lc_lengths": self.lc_lengths,
            "standard_power": (repr(self.standard_power)
                               if self.standard_power is NOT_FOUND
                               else self.standard_power),
            "sop": self.sop_name,
        }

    def __repr__(self):
        return (f"<InvariantReport dim={self.dim} depth={self.depth} "
                f"cmd={self.cmd} flc={self.flc!r} lc={self.lc_lengths}>")


def invariant_report(ring, x=None, nmax=4, degree_cap=None):
    """Compute the invariant summary of a ring, optionally for a given sop."""
    rm = ring_module(ring)
    dim = ring.dimension()
    dep = depth(rm, degree_cap=degree_cap)
    cmd = dim - dep
    if x is None and dim > 0:
        x = reference_sop(ring)
    flc = flc_check(rm, x=x, nmax=nmax, degree_cap=degree_cap) \
        if dim > 0 else True
    lc = None
    power = None
    if flc is True and dim > 0:
        power = find_standard_power(ring, x, nmax=nmax, degree_cap=degree_cap)
        if power is not NOT_FOUND:
            lc = local_cohomology_lengths(rm, x.power(power),
                                          degree_cap=degree_cap)
    return InvariantReport(ring, dim, dep, cmd, flc, lc, power,
                           sop_name=None if x is None else x.name)
