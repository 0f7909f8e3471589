"""Minimal graded free resolutions, Betti tables, cone resolutions, lifting checks.

Resolutions are computed step by step: the presentation matrix is extended by
iterated syzygy computations, the resulting complex is minimized by unit-pivot
cancellation, and Betti data is read off the generator degrees.  The cone
constructions assemble a (generally non-minimal) resolution of R/(x) from the
Koszul complex and resolutions of its higher homology modules.
"""

from __future__ import annotations

from math import comb

from .algebra import AlgebraError
from .groebner import FinitelyPresentedModule, RingMatrix, matrix_solve, syzygies
from .complexes import (ChainComplex, homology_at, homology_presentation,
                        kill_top_homology, minimize_with_tracking)
from .koszul import koszul_complex


class BettiTable:
    """Graded Betti numbers beta_{i,j} up to a homological cap."""

    def __init__(self, entries, cap):
        self.entries = {k: v for k, v in entries.items() if v}
        self.cap = cap

    @classmethod
    def from_complex(cls, cplx, cap):
        entries = {}
        for i in range(0, cap + 1):
            for j in cplx.module(i):
                entries[(i, j)] = entries.get((i, j), 0) + 1
        return cls(entries, cap)

    def total(self, i):
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def totals(self):
        return [self.total(i) for i in range(self.cap + 1)]

    def __eq__(self, other):
        return (isinstance(other, BettiTable)
                and self.entries == other.entries and self.cap == other.cap)

    def to_dict(self):
        return {f"{i},{j}": v for (i, j), v in sorted(self.entries.items())}

    def pretty(self):
        """Conventional staircase layout: row j-i, column i."""
        if not self.entries:
            return "(zero)"
        cols = range(self.cap + 1)
        slopes = sorted({j - i for (i, j) in self.entries})
        width = max(len(str(v)) for v in self.entries.values())
        width = max(width, len(str(self.cap)), 1) + 2
        lines = ["    " + "".join(f"{i:>{width}}" for i in cols)]
        for s in range(slopes[0], slopes[-1] + 1):
            cells = []
            for i in cols:
                v = self.entries.get((i, i + s))
                cells.append(f"{v if v is not None else '.':>{width}}")
            lines.append(f"{s:>3}:" + "".join(cells))
        total = ["tot:" + "".join(f"{self.total(i):>{width}}" for i in cols)]
        return "\n".join(lines[:1] + total + lines[1:])

    def __repr__(self):
        return f"<BettiTable totals {self.totals()}>"


class SeriesTruncation:
    """Truncated Poincare series: total Betti numbers c_0..c_cap."""

    def __init__(self, coefficients):
        self.coefficients = list(coefficients)
        self.cap = len(self.coefficients) - 1

    @classmethod
    def from_betti(cls, table):
        return cls(table.totals())

    def __eq__(self, other):
        return (isinstance(other, SeriesTruncation)
                and self.coefficients == other.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __repr__(self):
        body = " + ".join(f"{c}t^{i}" if i else str(c)
                          for i, c in enumerate(self.coefficients))
        return f"<{body}>"


class ModuleResolution:
    """A minimal free resolution together with its bookkeeping.

    complex: minimal complex, modules in homological degrees 0..length (one
    degree beyond `cap` when the resolution does not stop earlier, so that
    rank and exactness data through `cap` are trustworthy).
    gen_map0: map F_0 -> R^(presentation generators of the module); columns
    are unit vectors selecting the surviving minimal generators.
    """

    def __init__(self, module, cplx, gen_map0, cap):
        self.module = module
        self.complex = cplx
        self.gen_map0 = gen_map0
        self.cap = cap

    def betti(self):
        return BettiTable.from_complex(self.complex, self.cap)

    def poincare(self):
        return SeriesTruncation.from_betti(self.betti())

    def ranks(self):
        return [self.complex.rank(i) for i in range(self.cap + 1)]

    def __repr__(self):
        return f"<ModuleResolution ranks {self.ranks()} (cap {self.cap})>"


def minimal_free_resolution(module, cap, degree_cap=None):
    """Minimal graded free resolution of a finitely presented module.

    The returned complex is exact in homological degrees 1..cap with H_0 the
    module itself; all differential entries lie in the maximal ideal.  With
    degree_cap, syzygy Groebner bases are truncated at that internal degree
    (results above it are not guaranteed complete).
    """
    if cap < 0:
        raise AlgebraError("negative resolution cap")
    ring = module.ring
    gens = module.gen_degrees
    if not gens:
        empty = ChainComplex(ring, {}, {})
        return ModuleResolution(module, empty,
                                RingMatrix.zero(ring, (), ()), cap)
    modules = {0: tuple(gens)}
    diffs = {}
    prev = module.relations
    n = 1
    while n <= cap + 1:
        if prev.ncols == 0:
            break
        modules[n] = prev.col_degrees
        diffs[n] = prev
        prev = syzygies(prev, degree_cap=degree_cap)
        n += 1
    cplx = ChainComplex(ring, modules, diffs, check=True)
    mini, kept = minimize_with_tracking(cplx)
    kept0 = kept.get(0, [])
    entries = {(orig, col): ring.ambient.one()
               for col, orig in enumerate(kept0)}
    gen_map0 = RingMatrix(ring, len(gens), len(kept0), entries, gens,
                          mini.module(0), _reduced=True)
    return ModuleResolution(module, mini, gen_map0, cap)


def poincare_truncation(module, cap, degree_cap=None):
    """Coefficients of the Poincare series through degree cap."""
    return minimal_free_resolution(module, cap, degree_cap=degree_cap).poincare()


def syzygy_module(module, i, cap, degree_cap=None):
    """The i-th syzygy module, read off the minimal resolution.

    Presented by the generators of F_i with relations the columns of the
    (i+1)-st differential; this is a minimal presentation.
    """
    if i < 0 or i > cap:
        raise AlgebraError("syzygy index outside 0..cap")
    if i == 0:
        return module
    res = minimal_free_resolution(module, i + 1, degree_cap=degree_cap)
    cplx = res.complex
    gens = cplx.module(i)
    rel = cplx.differential(i + 1)
    return FinitelyPresentedModule(module.ring, gens, rel)


def _truncate(cplx, top):
    modules = {n: d for n, d in cplx.modules.items() if n <= top}
    diffs = {n: m for n, m in cplx.differentials.items() if n <= top}
    return ChainComplex(cplx.ring, modules, diffs, check=False)


def sequence_grade(x, degree_cap=None):
    """grade of (x) on R: count minus the top nonvanishing Koszul homology."""
    k = koszul_complex(x)
    for p in range(x.count, 0, -1):
        if not homology_at(k, p, degree_cap=degree_cap).is_zero():
            return x.count - p
    return x.count


def general_cone_resolution(x, cap, degree_cap=None):
    """Free resolution of R/(x) by iterated homology-killing cones.

    Starting from the Koszul complex, the top homology (in degrees >= 1) is
    killed repeatedly with shifted resolutions; before minimization the ranks
    follow the direct-sum shape rank_n = rank K_n + sum_s rank F^s_{n-s-1}.
    The result is trustworthy through homological degree cap + 1 and is
    returned unminimized.
    """
    cplx = koszul_complex(x)
    s_top = x.count
    while True:
        s = None
        for i in range(s_top, 0, -1):
            if not homology_at(cplx, i, degree_cap=degree_cap).is_zero():
                s = i
                break
        if s is None:
            return _truncate(cplx, cap + 1)
        # resolution length: each kill stays valid through degree cap + 1,
        # and the junk above the truncated resolution of H_s lands strictly
        # above everything later (lower-s) iterations touch
        length = max(0, cap + 1 - s)
        _, h = homology_presentation(cplx, s, degree_cap=degree_cap)
        res = minimal_free_resolution(h, length, degree_cap=degree_cap)
        _, cplx = kill_top_homology(cplx, res, s=s, degree_cap=degree_cap)
        s_top = s - 1


def aci_cone_resolution(x, cap, degree_cap=None):
    """Cone resolution of R/(x) for an almost complete intersection sequence.

    Requires grade(x) >= count - 1, so the Koszul complex has homology only
    in degrees 0 and 1; the resolution is the cone over a single map from the
    shifted minimal resolution of H_1(x; R) into the Koszul complex, with
    unminimized ranks rank K_n + rank F_{n-2}.
    """
    if sequence_grade(x, degree_cap=degree_cap) < x.count - 1:
        raise AlgebraError(
            "sequence is not an almost complete intersection (grade < count-1); "
            "use the general cone assembly instead")
    return general_cone_resolution(x, cap, degree_cap=degree_cap)


# ---------------------------------------------------------------------------
# lifting the Koszul complex into the minimal resolution, reduction mod m


def lift_koszul_to_resolution(x, resolution, degree_cap=None):
    """Chain map gamma: K(x; R) -> F covering the identity of R/(x)."""
    k = koszul_complex(x)
    f = resolution.complex
    ring = x.ring
    if f.module(0) != (0,):
        raise AlgebraError("resolution does not present a cyclic module in "
                           "degree zero")
    comps = {0: RingMatrix.identity(ring, (0,))}
    n = 1
    while k.module(n):
        rhs = comps[n - 1] @ k.differential(n)
        if not f.module(n):
            if not rhs.is_zero():
                raise AlgebraError("resolution too short to receive the lift")
            break
        sol = matrix_solve(f.differential(n), rhs, degree_cap=degree_cap)
        if sol is None:
            raise AlgebraError("lifting failed: target is not a resolution "
                               "of R/(x)")
        comps[n] = sol
        n += 1
    return comps


def cec_injectivity_check(x, cap, degree_cap=None):
    """Injectivity of the Koszul-to-resolution comparison after killing m.

    Lifts K(x; R) into the minimal free resolution F of R/(x), reduces both
    modulo the maximal ideal (where both differentials vanish), and checks in
    each homological degree n <= min(cap, count) that the induced map
    k^binom(r,n) -> k^beta_n has full rank binom(r, n).
    """
    from .oracle import gf_rank
    r = x.count
    top = min(cap, r)
    res = minimal_free_resolution(x.quotient_module(), max(cap, r),
                                  degree_cap=degree_cap)
    comps = lift_koszul_to_resolution(x, res, degree_cap=degree_cap)
    p = x.ring.characteristic
    report = {}
    for n in range(top + 1):
        mat = comps.get(n)
        expected = comb(r, n)
        if mat is None:
            report[n] = expected == 0
            continue
        dense = [[mat.entry(i, j).constant_term() for j in range(mat.ncols)]
                 for i in range(mat.nrows)]
        report[n] = gf_rank(dense, p) == expected
    return report
