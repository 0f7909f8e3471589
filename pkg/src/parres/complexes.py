"""Chain complexes of graded free modules over a quotient ring.

A complex is stored over a finite homological window as per-degree generator
degree lists plus differentials; the composite of consecutive differentials is
checked to vanish (modulo the defining ideal) at construction time.  Homology
is returned as a finitely presented module, computed with the syzygy
machinery.  Also here: shift, mapping cone, the homology-killing cone, duals,
induced maps on homology, and minimization by unit-pivot cancellation.
"""

from __future__ import annotations

from .algebra import AlgebraError, DimensionMismatchError
from .groebner import (ExtendedSolver, FinitelyPresentedModule, INFINITE,
                       RingMatrix, matrix_solve, syzygies)


class ChainComplex:
    """Bounded complex ... -> F_n -> F_{n-1} -> ... of graded free modules.

    modules: dict n -> tuple of generator degrees (absent means zero).
    differentials: dict n -> RingMatrix mapping F_n to F_{n-1}.
    """

    def __init__(self, ring, modules, differentials, check=True):
        self.ring = ring
        self.modules = {n: tuple(d) for n, d in modules.items() if d}
        degs = sorted(self.modules)
        self.lo = degs[0] if degs else 0
        self.hi = degs[-1] if degs else -1
        self.differentials = {}
        for n, mat in differentials.items():
            if mat is None:
                continue
            src = self.modules.get(n, ())
            tgt = self.modules.get(n - 1, ())
            if mat.col_degrees != src or mat.row_degrees != tgt:
                raise DimensionMismatchError(
                    f"differential at {n} does not match the stated modules")
            if not src or not tgt:
                continue
            self.differentials[n] = mat
        if check:
            self._check_square_zero()

    def _check_square_zero(self):
        for n, d in self.differentials.items():
            up = self.differentials.get(n + 1)
            if up is not None and not (d @ up).is_zero():
                raise AlgebraError(f"differential composite at degree {n + 1} "
                                   "is nonzero")

    def module(self, n):
        return self.modules.get(n, ())

    def rank(self, n):
        return len(self.module(n))

    def ranks(self):
        return {n: len(d) for n, d in sorted(self.modules.items())}

    def differential(self, n):
        """The map F_n -> F_{n-1}; a zero matrix if absent in range."""
        mat = self.differentials.get(n)
        if mat is not None:
            return mat
        return RingMatrix.zero(self.ring, self.module(n - 1), self.module(n))

    def is_zero(self):
        return not self.modules

    def total_rank(self):
        return sum(len(d) for d in self.modules.values())

    def __repr__(self):
        body = ", ".join(f"{n}:{len(d)}" for n, d in sorted(self.modules.items()))
        return f"<ChainComplex ranks {{{body}}} over {self.ring}>"


class ComplexMap:
    """Degreewise map of complexes commuting with the differentials."""

    def __init__(self, source, target, components, check=True):
        if source.ring != target.ring:
            raise AlgebraError("complex map across different rings")
        self.source = source
        self.target = target
        self.components = {}
        for n, mat in components.items():
            if mat is None or (not source.module(n) and not target.module(n)):
                continue
            if mat.col_degrees != source.module(n) or \
                    mat.row_degrees != target.module(n):
                raise DimensionMismatchError(f"component at {n} has wrong shape")
            self.components[n] = mat
        if check:
            self._check_commutes()

    def component(self, n):
        mat = self.components.get(n)
        if mat is not None:
            return mat
        return RingMatrix.zero(self.source.ring, self.target.module(n),
                               self.source.module(n))

    def _check_commutes(self):
        lo = min(self.source.lo, self.target.lo)
        hi = max(self.source.hi, self.target.hi)
        for n in range(lo, hi + 1):
            left = self.target.differential(n) @ self.component(n)
            right = self.component(n - 1) @ self.source.differential(n)
            if left != right:
                raise AlgebraError(f"complex map does not commute at degree {n}")

    def __repr__(self):
        return f"<ComplexMap {self.source!r} -> {self.target!r}>"


# ---------------------------------------------------------------------------
# homology


def cycle_generators(cplx, n, degree_cap=None):
    """RingMatrix whose columns generate ker(differential at n)."""
    d = cplx.differential(n)
    return syzygies(d, degree_cap=degree_cap)


def homology_presentation(cplx, n, degree_cap=None):
    """(Z, H): cycle generator matrix and the presented homology module.

    Z has one column per homology generator (as an element of F_n); H is the
    finitely presented module with those generators, related by boundaries and
    by the syzygies among the cycle generators.
    """
    ring = cplx.ring
    z = cycle_generators(cplx, n, degree_cap=degree_cap)
    if z.ncols == 0:
        return z, FinitelyPresentedModule(ring, ())
    solver = ExtendedSolver(z, degree_cap=degree_cap)
    dn1 = cplx.differential(n + 1)
    boundary_expr = matrix_solve(z, dn1, solver=solver)
    if boundary_expr is None:
        raise AlgebraError("boundaries do not lie among the cycles")
    rel = boundary_expr.hstack(solver.syzygy_matrix())
    return z, FinitelyPresentedModule(ring, z.col_degrees, rel)


def homology_at(cplx, n, degree_cap=None):
    """H_n as a finitely presented module."""
    return homology_presentation(cplx, n, degree_cap=degree_cap)[1]


def homology_sup(cplx, degree_cap=None):
    """Largest n with H_n nonzero, or None for an exact/zero complex."""
    for n in range(cplx.hi, cplx.lo - 1, -1):
        if not homology_at(cplx, n, degree_cap=degree_cap).is_zero():
            return n
    return None


# ---------------------------------------------------------------------------
# shift, cone, dual


def shift(cplx, t):
    """Suspension: (shifted)_n = C_{n-t}, differentials scaled by (-1)^t."""
    if t == 0:
        return cplx
    sign = -1 if t % 2 else 1
    modules = {n + t: d for n, d in cplx.modules.items()}
    diffs = {}
    for n, mat in cplx.differentials.items():
        diffs[n + t] = mat if sign == 1 else -mat
    return ChainComplex(cplx.ring, modules, diffs, check=False)


def mapping_cone(alpha):
    """Cone of alpha: X -> Y, with C_n = X_{n-1} (+) Y_n.

    Differential: (x, y) -> (-d^X x, d^Y y + alpha x).
    """
    x, y = alpha.source, alpha.target
    ring = x.ring
    modules = {}
    lo = min(x.lo + 1, y.lo)
    hi = max(x.hi + 1, y.hi)
    for n in range(lo, hi + 1):
        degs = x.module(n - 1) + y.module(n)
        if degs:
            modules[n] = degs
    diffs = {}
    for n in range(lo, hi + 1):
        xs = x.module(n - 1)
        ys = y.module(n)
        xt = x.module(n - 2)
        yt = y.module(n - 1)
        src = xs + ys
        tgt = xt + yt
        if not src or not tgt:
            continue
        entries = {}
        dx = x.differential(n - 1)
        for (i, j), v in dx.entries.items():
            entries[(i, j)] = -v
        a = alpha.component(n - 1)
        for (i, j), v in a.entries.items():
            entries[(len(xt) + i, j)] = v
        dy = y.differential(n)
        for (i, j), v in dy.entries.items():
            entries[(len(xt) + i, len(xs) + j)] = v
        diffs[n] = RingMatrix(ring, len(tgt), len(src), entries, tgt, src,
                              _reduced=True)
    return ChainComplex(ring, modules, diffs, check=True)


def dual(cplx):
    """Degreewise dual: D_n = (C_{-n})^*, d^D_n = (d^C_{-n+1}) transposed.

    Generator degrees are negated; homology of D in degree -i is the
    cohomology of Hom(C, R) in degree i.
    """
    modules = {}
    for n, degs in cplx.modules.items():
        modules[-n] = tuple(-d for d in degs)
    diffs = {}
    for n, mat in cplx.differentials.items():
        # mat: C_n -> C_{n-1}; transpose: D_{-(n-1)} -> D_{-n}
        diffs[-(n - 1)] = mat.transpose()
    return ChainComplex(cplx.ring, modules, diffs, check=True)


# ---------------------------------------------------------------------------
# killing top homology (cone construction over a resolution of H_s)


def kill_top_homology(cplx, resolution, s=None, degree_cap=None):
    """Cone construction that removes the top homology of a complex.

    resolution: a ModuleResolution of H_s(cplx) (carrying gen_map0, the
    expression of its degree-0 generators in the homology presentation).
    Returns (alpha, cone) where alpha maps the s-fold shift of the resolution
    complex into cplx and the cone has H_i = 0 for i >= s while H_i for
    i < s is untouched.
    """
    if s is None:
        s = homology_sup(cplx, degree_cap=degree_cap)
        if s is None:
            raise AlgebraError("exact complex: nothing to kill")
    z, h = homology_presentation(cplx, s, degree_cap=degree_cap)
    if h.is_zero():
        raise AlgebraError(f"homology at {s} is zero")
    f = resolution.complex
    gen_map0 = resolution.gen_map0
    if gen_map0.nrows != z.ncols:
        raise DimensionMismatchError(
            "resolution generators do not match the homology presentation")
    sign = -1 if s % 2 else 1
    gammas = {0: z @ gen_map0}
    q = 1
    while f.module(q):
        rhs = (gammas[q - 1] @ f.differential(q)).scale(sign)
        if not cplx.module(s + q):
            # above the top of cplx all cycles vanish (s is the homology sup),
            # so the lift continues by zero; check that and stop
            if not rhs.is_zero():
                raise AlgebraError("nonzero obstruction above the top of the "
                                   "complex: homology sup exceeded")
            break
        dx = cplx.differential(s + q)
        sol = matrix_solve(dx, rhs, degree_cap=degree_cap)
        if sol is None:
            raise AlgebraError(f"no lift at stage {q}: complex not exact "
                               f"above its top homology degree {s}")
        gammas[q] = sol
        q += 1
    shifted = shift(f, s)
    components = {s + j: g for j, g in gammas.items()}
    alpha = ComplexMap(shifted, cplx, components, check=True)
    return alpha, mapping_cone(alpha)


# ---------------------------------------------------------------------------
# minimization


def minimize_with_tracking(cplx):
    """Cancel unit entries of the differentials until none remain.

    Returns (minimal complex, kept) where kept maps each homological degree to
    the list of original generator indices that survive.  Homology is
    unchanged; generators cancelled in pairs never carry minimal Betti data.
    """
    ring = cplx.ring
    p = ring.characteristic
    modules = {n: list(d) for n, d in cplx.modules.items()}
    kept = {n: list(range(len(d))) for n, d in cplx.modules.items()}
    diffs = {n: dict(m.entries) for n, m in cplx.differentials.items()}

    def find_pivot():
        for n in sorted(diffs):
            for (i, j), poly in sorted(diffs[n].items(), key=lambda t: (t[0][1], t[0][0])):
                cterm = poly.constant_term()
                if cterm:
                    return n, i, j, cterm
        return None

    while True:
        piv = find_pivot()
        if piv is None:
            break
        n, pi, pj, c = piv
        inv = pow(c, p - 2, p)
        a = diffs[n]
        row = {j: v for (i, j), v in a.items() if i == pi and j != pj}
        col = {i: v for (i, j), v in a.items() if j == pj and i != pi}
        newa = {}
        for (i, j), v in a.items():
            if i == pi or j == pj:
                continue
            newa[(i, j)] = v
        for i, cv in col.items():
            for j, rv in row.items():
                corr = (cv * rv).scale(-inv)
                if (i, j) in newa:
                    s = newa[(i, j)] + corr
                else:
                    s = corr
                if s.is_zero():
                    newa.pop((i, j), None)
                else:
                    newa[(i, j)] = s
        # renumber rows (drop pi) and columns (drop pj)
        def rmap(idx, drop):
            return idx - 1 if idx > drop else idx
        diffs[n] = {(rmap(i, pi), rmap(j, pj)): ring.reduce(v)
                    for (i, j), v in newa.items()
                    if not ring.reduce(v).is_zero()}
        if n + 1 in diffs:
            diffs[n + 1] = {(rmap(i, pj), j): v
                            for (i, j), v in diffs[n + 1].items() if i != pj}
        if n - 1 in diffs:
            diffs[n - 1] = {(i, rmap(j, pi)): v
                            for (i, j), v in diffs[n - 1].items() if j != pi}
        del modules[n][pj]
        del kept[n][pj]
        del modules[n - 1][pi]
        del kept[n - 1][pi]

    out_modules = {n: tuple(d) for n, d in modules.items() if d}
    out_diffs = {}
    for n, entries in diffs.items():
        src = out_modules.get(n, ())
        tgt = out_modules.get(n - 1, ())
        if not src or not tgt:
            continue
        out_diffs[n] = RingMatrix(ring, len(tgt), len(src), entries, tgt, src)
    mini = ChainComplex(ring, out_modules, out_diffs, check=True)
    return mini, {n: idx for n, idx in kept.items() if idx}


def minimize(cplx):
    """Minimal complex homotopy equivalent to the input."""
    return minimize_with_tracking(cplx)[0]


def is_minimal(cplx):
    return all(v.constant_term() == 0
               for m in cplx.differentials.values()
               for v in m.entries.values())


# ---------------------------------------------------------------------------
# induced maps on homology


class InducedHomologyMap:
    """The map H_n(source) -> H_n(target) induced by a complex map.

    phi expresses the images of the source homology generators in the target
    homology generators; kernel and cokernel lengths come from length
    bookkeeping and are exact for finite-length homology.
    """

    def __init__(self, fmap, n, degree_cap=None):
        src_cplx, tgt_cplx = fmap.source, fmap.target
        ring = src_cplx.ring
        self.ring = ring
        self.n = n
        self.z_src, self.h_src = homology_presentation(src_cplx, n, degree_cap)
        self.z_tgt, self.h_tgt = homology_presentation(tgt_cplx, n, degree_cap)
        fn = fmap.component(n)
        mapped = fn @ self.z_src
        big = self.z_tgt.hstack(tgt_cplx.differential(n + 1))
        if big.ncols == 0:
            if not mapped.is_zero():
                raise AlgebraError("image misses the target cycles")
            self.phi = RingMatrix.zero(ring, self.z_tgt.col_degrees,
                                       self.z_src.col_degrees)
        else:
            expr = matrix_solve(big, mapped, degree_cap=degree_cap)
            if expr is None:
                raise AlgebraError("image of a cycle is not a cycle")
            self.phi = expr.submatrix(range(self.z_tgt.ncols),
                                      range(expr.ncols))

    def cokernel(self):
        rel = self.phi.hstack(self.h_tgt.relations)
        return FinitelyPresentedModule(self.ring, self.h_tgt.gen_degrees, rel)

    def kernel_length(self):
        ls, lt = self.h_src.length(), self.h_tgt.length()
        lc = self.cokernel().length()
        if INFINITE in (ls, lt, lc):
            raise AlgebraError("length bookkeeping needs finite homology")
        return ls - lt + lc

    def is_injective(self):
        return self.kernel_length() == 0

    def is_surjective(self):
        return self.cokernel().length() == 0

    def is_isomorphism(self):
        return self.is_injective() and self.is_surjective()


def induced_map_on_homology(fmap, n, degree_cap=None):
    return InducedHomologyMap(fmap, n, degree_cap=degree_cap)
