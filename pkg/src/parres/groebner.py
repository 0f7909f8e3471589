"""Groebner bases, quotient rings, matrices over them, syzygies, dimension, length.

All computations over a quotient ring R = S/I are done by lifting to the
ambient polynomial ring S.  Kernels and membership questions in free modules
over R are answered with an extended free module carrying one tag position per
source generator: the defining ideal times each target generator is thrown in,
a position-over-term Groebner basis is computed, and elements supported purely
on the tag block are read off.
"""

from __future__ import annotations

import itertools

from .algebra import (AlgebraError, DimensionMismatchError,
                      NotHomogeneousError, Polynomial, PolynomialRingSpec,
                      RingMismatchError)
from ._engine import PackContext, groebner_basis, make_reducer, vec_degree


class _Infinite:
    """Sentinel returned by length() for modules of positive dimension."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()

_CTX_CACHE = {}


def pack_context(nv, kind):
    key = (nv, kind)
    if key not in _CTX_CACHE:
        _CTX_CACHE[key] = PackContext(nv, kind)
    return _CTX_CACHE[key]


def _ring_ctx(ring):
    return pack_context(ring.nvars, ring.order.kind)


# ---------------------------------------------------------------------------
# conversions between Polynomial vectors and packed dicts


def vector_to_packed(vec, ctx):
    """vec: list of Polynomial, one per free-module position."""
    out = {}
    for pos, poly in enumerate(vec):
        for exp, c in poly.terms.items():
            out[ctx.pack(pos, exp)] = c
    return out


def packed_to_vector(packed, ctx, ring, rank):
    cols = [dict() for _ in range(rank)]
    for key, c in packed.items():
        pos, exp = ctx.unpack(key)
        if pos >= rank:
            raise AlgebraError("packed term outside the stated rank")
        cols[pos][exp] = c
    return [Polynomial(ring, t) for t in cols]


# ---------------------------------------------------------------------------
# Groebner bases of ideals and free submodules


class GroebnerBasis:
    """A reduced Groebner basis of an ideal or of a free-module submodule.

    generators: list of Polynomial (ideal case, rank 1) or list of lists of
    Polynomial (module case).  Elements are monic, fully tail-reduced, sorted
    by (internal degree, leading term).
    """

    def __init__(self, ring, generators, rank=1, gen_degrees=None):
        self.ring = ring
        self.order = ring.order
        self.rank = rank
        self.gen_degrees = tuple(gen_degrees) if gen_degrees is not None \
            else (0,) * rank
        self.generators = list(generators)
        self.reduced = True
        self._ctx = _ring_ctx(ring)
        self._packed = [self._pack(g) for g in self.generators]

    def _pack(self, g):
        if isinstance(g, Polynomial):
            return vector_to_packed([g], self._ctx)
        return vector_to_packed(g, self._ctx)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def leading_exponents(self):
        """Per-position lists of leading exponent vectors."""
        by_pos = {}
        for packed in self._packed:
            pos, exp = self._ctx.unpack(max(packed))
            by_pos.setdefault(pos, []).append(exp)
        return by_pos

    def _reducer(self):
        red = make_reducer(self._ctx, self.ring.characteristic)
        for packed in self._packed:
            red.add(packed)
        return red

    def normal_form(self, f):
        """Fully reduced remainder of a Polynomial or vector."""
        if isinstance(f, Polynomial):
            if self.rank != 1:
                raise DimensionMismatchError("scalar input to a module basis")
            vec = [f]
        else:
            vec = list(f)
            if len(vec) != self.rank:
                raise DimensionMismatchError(
                    f"vector of length {len(vec)} against rank {self.rank}")
        for poly in vec:
            if poly.ring != self.ring:
                raise RingMismatchError("mixed rings in normal form")
        packed = vector_to_packed(vec, self._ctx)
        nf = self._reducer().normal_form(packed)
        out = packed_to_vector(nf, self._ctx, self.ring, self.rank)
        return out[0] if self.rank == 1 else out

    def contains(self, f):
        nf = self.normal_form(f)
        if isinstance(nf, Polynomial):
            return nf.is_zero()
        return all(p.is_zero() for p in nf)

    def __repr__(self):
        return f"<GroebnerBasis: {len(self.generators)} elements over {self.ring}>"


def buchberger(generators, order=None, gen_degrees=None, degree_cap=None):
    """Reduced Groebner basis of the ideal or submodule the inputs generate.

    generators: nonempty list of Polynomial, or of equal-length lists of
    Polynomial (free-module vectors).  All inputs must be homogeneous; for
    module vectors homogeneity is judged against gen_degrees (default all 0).
    With degree_cap, the result is only guaranteed to be a Groebner basis
    through that internal degree.
    """
    gens = list(generators)
    if not gens:
        raise AlgebraError("empty generating set")
    is_module = not isinstance(gens[0], Polynomial)
    if is_module:
        rank = len(gens[0])
        ring = gens[0][0].ring
        vecs = []
        for g in gens:
            if len(g) != rank:
                raise DimensionMismatchError("ragged module vectors")
            vecs.append(list(g))
    else:
        rank = 1
        ring = gens[0].ring
        vecs = [[g] for g in gens]
    if order is not None and order != ring.order:
        ring = PolynomialRingSpec(ring.characteristic, ring.variables, order)
        vecs = [[Polynomial(ring, p.terms) for p in v] for v in vecs]
    gendegs = tuple(gen_degrees) if gen_degrees is not None else (0,) * rank
    if len(gendegs) != rank:
        raise DimensionMismatchError("gen_degrees length mismatch")

    ctx = _ring_ctx(ring)
    packed = []
    for v in vecs:
        pv = vector_to_packed(v, ctx)
        vec_degree(ctx, pv, gendegs)  # raises NotHomogeneousError if mixed
        packed.append(pv)
    gb = groebner_basis(packed, ctx, ring.characteristic, gendegs,
                        degree_cap=degree_cap,
                        module_rank=rank)
    out = [packed_to_vector(v, ctx, ring, rank) for v in gb]
    if not is_module:
        out = [v[0] for v in out]
    return GroebnerBasis(ring, out, rank=rank, gen_degrees=gendegs)


def normal_form(f, gb):
    return gb.normal_form(f)


# ---------------------------------------------------------------------------
# quotient rings


class QuotientRingSpec:
    """R = S/I for a homogeneous ideal I in a polynomial ring S."""

    def __init__(self, ambient, ideal_generators, degree_cap=None):
        self.ambient = ambient
        gens = [g for g in ideal_generators if not g.is_zero()]
        for g in gens:
            if g.ring != ambient:
                raise RingMismatchError("ideal generator outside the ambient ring")
            if not g.is_homogeneous():
                raise NotHomogeneousError(f"inhomogeneous ideal generator {g}")
            if g.is_constant():
                raise AlgebraError("defining ideal contains a unit")
        if gens:
            self.defining_ideal = buchberger(gens, degree_cap=degree_cap)
        else:
            self.defining_ideal = GroebnerBasis(ambient, [])
        self._dimension = None
        self._lead_exps = [self.defining_ideal._ctx.exp_of(max(p))
                           for p in self.defining_ideal._packed]

    @property
    def characteristic(self):
        return self.ambient.characteristic

    @property
    def nvars(self):
        return self.ambient.nvars

    @property
    def variables(self):
        return self.ambient.variables

    def is_polynomial_ring(self):
        return not self.defining_ideal.generators

    def reduce(self, f):
        """Canonical representative of f in R (normal form modulo I)."""
        if f.ring != self.ambient:
            raise RingMismatchError("element outside the ambient ring")
        if not self.defining_ideal.generators:
            return f
        return self.defining_ideal.normal_form(f)

    def reduce_vector(self, vec):
        return [self.reduce(p) for p in vec]

    def dimension(self):
        if self._dimension is None:
            self._dimension = staircase_dimension(self._lead_exps, self.nvars)
        return self._dimension

    def standard_monomial_count(self, degree):
        """Number of degree-`degree` monomials of S outside the initial ideal."""
        return len(self.standard_monomials(degree))

    def standard_monomials(self, degree):
        return standard_monomials(self._lead_exps, self.nvars, degree)

    def __eq__(self, other):
        return (isinstance(other, QuotientRingSpec)
                and self.ambient == other.ambient
                and self.defining_ideal.generators ==
                other.defining_ideal.generators)

    def __hash__(self):
        return hash((self.ambient, tuple(self.defining_ideal.generators)))

    def __repr__(self):
        if self.is_polynomial_ring():
            return repr(self.ambient)
        gens = ", ".join(str(g) for g in self.defining_ideal.generators)
        return f"{self.ambient} / ({gens})"


# ---------------------------------------------------------------------------
# staircase combinatorics (monomial ideals)


def staircase_dimension(lead_exps, nv):
    """Krull dimension of S/L for the monomial ideal L = (lead_exps).

    Equals the largest size of a variable subset T such that no generator is
    supported entirely inside T.  Returns -1 when 1 is in L.
    """
    supports = [frozenset(i for i, e in enumerate(exp) if e) for exp in lead_exps]
    if any(not s for s in supports):
        return -1
    best = -1
    for size in range(nv, -1, -1):
        for subset in itertools.combinations(range(nv), size):
            tset = set(subset)
            if all(not s <= tset for s in supports):
                return size
    return best


def standard_monomials(lead_exps, nv, degree):
    """Degree-`degree` monomials not divisible by any of lead_exps."""
    out = []
    for exp in _compositions(degree, nv):
        if not any(all(e >= l for e, l in zip(exp, lead))
                   for lead in lead_exps):
            out.append(exp)
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def artinian_count(lead_exps, nv):
    """Total number of standard monomials of an artinian monomial ideal."""
    bounds = []
    for i in range(nv):
        b = None
        for exp in lead_exps:
            if exp[i] and all(e == 0 for j, e in enumerate(exp) if j != i):
                b = exp[i] if b is None else min(b, exp[i])
        if b is None:
            # no pure power in x_i: bound by the largest exponent seen, plus
            # a safety check that the ideal really is artinian in direction i
            raise AlgebraError("monomial ideal is not artinian")
        bounds.append(b)
    count = 0
    for exp in itertools.product(*(range(b) for b in bounds)):
        if not any(all(e >= l for e, l in zip(exp, lead)) for lead in lead_exps):
            count += 1
    return count


# ---------------------------------------------------------------------------
# matrices over a quotient ring


class RingMatrix:
    """Sparse homogeneous matrix over a QuotientRingSpec.

    Entry (i, j), when nonzero, is homogeneous of degree
    col_degrees[j] - row_degrees[i].  Entries are stored reduced modulo the
    defining ideal.
    """

    def __init__(self, ring, nrows, ncols, entries, row_degrees, col_degrees,
                 _reduced=False):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.row_degrees = tuple(row_degrees)
        self.col_degrees = tuple(col_degrees)
        if len(self.row_degrees) != nrows or len(self.col_degrees) != ncols:
            raise DimensionMismatchError("degree list lengths do not match extents")
        clean = {}
        for (i, j), poly in entries.items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise DimensionMismatchError(f"entry ({i},{j}) out of range")
            if poly.ring != ring.ambient:
                raise RingMismatchError("matrix entry outside the ambient ring")
            if not _reduced:
                poly = ring.reduce(poly)
            if poly.is_zero():
                continue
            want = self.col_degrees[j] - self.row_degrees[i]
            if not poly.is_homogeneous() or poly.degree() != want:
                raise NotHomogeneousError(
                    f"entry ({i},{j}) = {poly} is not homogeneous of degree {want}")
            clean[(i, j)] = poly
        self.entries = clean

    @classmethod
    def from_columns(cls, ring, columns, row_degrees, col_degrees=None,
                     _reduced=False):
        """columns: list of lists of Polynomial (length nrows each)."""
        nrows = len(row_degrees)
        entries = {}
        degs = []
        for j, col in enumerate(columns):
            if len(col) != nrows:
                raise DimensionMismatchError("column length mismatch")
            cdeg = None
            for i, poly in enumerate(col):
                if poly.is_zero():
                    continue
                entries[(i, j)] = poly
                d = poly.degree() + row_degrees[i]
                if cdeg is None:
                    cdeg = d
            degs.append(cdeg)
        if col_degrees is None:
            # zero columns get degree 0 unless told otherwise
            col_degrees = [d if d is not None else 0 for d in degs]
        return cls(ring, nrows, len(columns), entries, row_degrees,
                   col_degrees, _reduced=_reduced)

    @classmethod
    def identity(cls, ring, degrees):
        n = len(degrees)
        one = ring.ambient.one()
        entries = {(i, i): one for i in range(n)}
        return cls(ring, n, n, entries, degrees, degrees, _reduced=True)

    @classmethod
    def zero(cls, ring, row_degrees, col_degrees):
        return cls(ring, len(row_degrees), len(col_degrees), {},
                   row_degrees, col_degrees, _reduced=True)

    def entry(self, i, j):
        poly = self.entries.get((i, j))
        return poly if poly is not None else self.ring.ambient.zero()

    def column(self, j):
        return [self.entry(i, j) for i in range(self.nrows)]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self):
        return not self.entries

    def compose(self, other):
        """self @ other, reduced modulo the defining ideal."""
        if other.ring != self.ring:
            raise RingMismatchError("matrices over different rings")
        if other.nrows != self.ncols:
            raise DimensionMismatchError(
                f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}")
        acc = {}
        for (i, k), a in self.entries.items():
            for j in range(other.ncols):
                b = other.entries.get((k, j))
                if b is None:
                    continue
                prod = a * b
                if (i, j) in acc:
                    acc[(i, j)] = acc[(i, j)] + prod
                else:
                    acc[(i, j)] = prod
        return RingMatrix(self.ring, self.nrows, other.ncols, acc,
                          self.row_degrees, other.col_degrees)

    def __matmul__(self, other):
        return self.compose(other)

    def scale(self, c):
        entries = {k: v.scale(c) for k, v in self.entries.items()}
        return RingMatrix(self.ring, self.nrows, self.ncols, entries,
                          self.row_degrees, self.col_degrees, _reduced=True)

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        if (other.nrows, other.ncols) != (self.nrows, self.ncols):
            raise DimensionMismatchError("matrix shapes differ")
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = acc[k] + v if k in acc else v
        return RingMatrix(self.ring, self.nrows, self.ncols, acc,
                          self.row_degrees, self.col_degrees)

    def __sub__(self, other):
        return self + (-other)

    def transpose(self, negate_degrees=True):
        """Transpose; generator degrees flip sign to stay homogeneous."""
        entries = {(j, i): v for (i, j), v in self.entries.items()}
        if negate_degrees:
            rdeg = tuple(-d for d in self.col_degrees)
            cdeg = tuple(-d for d in self.row_degrees)
        else:
            rdeg, cdeg = self.col_degrees, self.row_degrees
        return RingMatrix(self.ring, self.ncols, self.nrows, entries,
                          rdeg, cdeg, _reduced=True)

    def hstack(self, other):
        """[self | other]: same target, concatenated sources."""
        if other.nrows != self.nrows or other.row_degrees != self.row_degrees:
            raise DimensionMismatchError("hstack target mismatch")
        entries = dict(self.entries)
        for (i, j), v in other.entries.items():
            entries[(i, j + self.ncols)] = v
        return RingMatrix(self.ring, self.nrows, self.ncols + other.ncols,
                          entries, self.row_degrees,
                          self.col_degrees + other.col_degrees, _reduced=True)

    def submatrix(self, rows, cols):
        rows = list(rows)
        cols = list(cols)
        rmap = {r: i for i, r in enumerate(rows)}
        cmap = {c: j for j, c in enumerate(cols)}
        entries = {}
        for (i, j), v in self.entries.items():
            if i in rmap and j in cmap:
                entries[(rmap[i], cmap[j])] = v
        return RingMatrix(self.ring, len(rows), len(cols), entries,
                          [self.row_degrees[r] for r in rows],
                          [self.col_degrees[c] for c in cols], _reduced=True)

    def __eq__(self, other):
        return (isinstance(other, RingMatrix)
                and self.ring == other.ring
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.row_degrees == other.row_degrees
                and self.col_degrees == other.col_degrees
                and self.entries == other.entries)

    def __repr__(self):
        return (f"<RingMatrix {self.nrows}x{self.ncols} over {self.ring}, "
                f"{len(self.entries)} nonzero entries>")

    def pretty(self):
        rows = []
        for i in range(self.nrows):
            rows.append("[" + ", ".join(str(self.entry(i, j))
                                        for j in range(self.ncols)) + "]")
        return "\n".join(rows)


# ---------------------------------------------------------------------------
# finitely presented modules


class FinitelyPresentedModule:
    """Cokernel presentation: R^{gens} / im(relations)."""

    def __init__(self, ring, gen_degrees, relations=None):
        self.ring = ring
        self.gen_degrees = tuple(gen_degrees)
        if relations is None:
            relations = RingMatrix.zero(ring, self.gen_degrees, ())
        if relations.nrows != len(self.gen_degrees) or \
                relations.row_degrees != self.gen_degrees:
            raise DimensionMismatchError("relations do not match generators")
        self.relations = relations
        self._lead_cache = None

    def rank_of_presentation(self):
        return len(self.gen_degrees)

    def _initial_leads(self):
        """Per-position leading exponents of relations + I * generators."""
        if self._lead_cache is not None:
            return self._lead_cache
        ring = self.ring
        rank = len(self.gen_degrees)
        if rank == 0:
            self._lead_cache = {}
            return self._lead_cache
        vecs = self.relations.columns()
        zero = ring.ambient.zero()
        for g in ring.defining_ideal.generators:
            for i in range(rank):
                col = [zero] * rank
                col[i] = g
                vecs.append(col)
        if not vecs:
            self._lead_cache = {pos: [] for pos in range(rank)}
            return self._lead_cache
        gb = buchberger(vecs, gen_degrees=self.gen_degrees)
        by_pos = gb.leading_exponents()
        self._lead_cache = {pos: by_pos.get(pos, []) for pos in range(rank)}
        return self._lead_cache

    def dimension(self):
        rank = len(self.gen_degrees)
        if rank == 0:
            return -1
        leads = self._initial_leads()
        nv = self.ring.nvars
        dims = [staircase_dimension(leads[pos], nv) for pos in range(rank)]
        return max(dims)

    def is_zero(self):
        return self.length() == 0

    def length(self):
        """Vector-space dimension over GF(p), or INFINITE if dim > 0."""
        rank = len(self.gen_degrees)
        if rank == 0:
            return 0
        if self.dimension() > 0:
            return INFINITE
        leads = self._initial_leads()
        nv = self.ring.nvars
        total = 0
        for pos in range(rank):
            exps = leads[pos]
            if any(all(e == 0 for e in exp) for exp in exps):
                continue  # generator dies entirely
            total += artinian_count(exps, nv)
        return total

    def graded_length(self):
        """Dict internal degree -> GF(p)-dimension (finite length only)."""
        if self.dimension() > 0:
            raise AlgebraError("graded length of an infinite-length module")
        leads = self._initial_leads()
        nv = self.ring.nvars
        out = {}
        for pos in range(len(self.gen_degrees)):
            exps = leads[pos]
            if any(all(e == 0 for e in exp) for exp in exps):
                continue
            base = self.gen_degrees[pos]
            t = 0
            while True:
                n = len(standard_monomials(exps, nv, t))
                if n == 0 and t > max((sum(e) for e in exps), default=0):
                    break
                if n:
                    out[base + t] = out.get(base + t, 0) + n
                t += 1
        return out

    def __repr__(self):
        return (f"<FP module: {len(self.gen_degrees)} generators, "
                f"{self.relations.ncols} relations over {self.ring}>")


# ---------------------------------------------------------------------------
# syzygies and linear solving over R


class ExtendedSolver:
    """Tagged-module Groebner machinery for one matrix over R.

    Computes, once, a position-over-term Groebner basis of the submodule of
    S^{nrows+ncols} generated by {column_j + e_{nrows+j}} and {g * e_i} for
    every defining-ideal basis element g and target position i.  Syzygies and
    membership/solve queries both read off this basis.
    """

    def __init__(self, matrix, degree_cap=None):
        self.matrix = matrix
        ring = matrix.ring
        self.ring = ring
        self.nrows = matrix.nrows
        self.ncols = matrix.ncols
        self.ctx = pack_context(ring.nvars, ring.ambient.order.kind)
        self.p = ring.characteristic
        self.gendegs = matrix.row_degrees + matrix.col_degrees
        ctx = self.ctx
        vecs = []
        for j in range(self.ncols):
            packed = {}
            for i in range(self.nrows):
                poly = matrix.entries.get((i, j))
                if poly is None:
                    continue
                for exp, c in poly.terms.items():
                    packed[ctx.pack(i, exp)] = c
            packed[ctx.pack(self.nrows + j, (0,) * ring.nvars)] = 1
            vecs.append(packed)
        for g in ring.defining_ideal.generators:
            for i in range(self.nrows):
                packed = {ctx.pack(i, exp): c for exp, c in g.terms.items()}
                vecs.append(packed)
        self.gb = groebner_basis(vecs, ctx, self.p, self.gendegs,
                                 degree_cap=degree_cap,
                                 module_rank=self.nrows + self.ncols)
        self.floor = ctx.position_floor(self.nrows)

    def _reducer(self):
        red = make_reducer(self.ctx, self.p)
        for v in self.gb:
            red.add(v)
        return red

    def syzygy_matrix(self):
        """Columns generate ker(matrix) as a submodule of R^{ncols}."""
        ctx = self.ctx
        cols = []
        degs = []
        for v in self.gb:
            if max(v) >= self.floor:
                continue  # leading block nonzero: not a pure syzygy
            shifted = {}
            for key, c in v.items():
                pos, exp = ctx.unpack(key)
                shifted[ctx.pack(pos - self.nrows, exp)] = c
            col = packed_to_vector(shifted, ctx, self.ring.ambient, self.ncols)
            col = self.ring.reduce_vector(col)
            if all(p.is_zero() for p in col):
                continue
            cols.append(col)
            degs.append(vec_degree(ctx, shifted, self.matrix.col_degrees))
        return RingMatrix.from_columns(self.ring, cols,
                                       self.matrix.col_degrees, degs)

    def solve_column(self, col):
        """x with matrix @ x = col over R, or None if col is not in the image."""
        ctx = self.ctx
        packed = {}
        for i, poly in enumerate(col):
            for exp, c in poly.terms.items():
                packed[ctx.pack(i, exp)] = c
        nf = self._reducer().normal_form(packed, stopkey=self.floor)
        x = [dict() for _ in range(self.ncols)]
        for key, c in nf.items():
            pos, exp = ctx.unpack(key)
            if pos < self.nrows:
                return None
            x[pos - self.nrows][exp] = -c
        out = [Polynomial(self.ring.ambient, t) for t in x]
        return self.ring.reduce_vector(out)


def syzygies(matrix, degree_cap=None):
    """Generators of the kernel of a homogeneous matrix over R, as columns."""
    return ExtendedSolver(matrix, degree_cap=degree_cap).syzygy_matrix()


def matrix_solve(a, b, degree_cap=None, solver=None):
    """Solve a @ X = b over R; returns a RingMatrix X or None.

    b may share a solver built earlier for `a` (pass solver= to reuse the
    Groebner basis across many right-hand sides).
    """
    if solver is None:
        solver = ExtendedSolver(a, degree_cap=degree_cap)
    if b.nrows != a.nrows or b.row_degrees != a.row_degrees:
        raise DimensionMismatchError("right-hand side target mismatch")
    cols = []
    for j in range(b.ncols):
        x = solver.solve_column(b.column(j))
        if x is None:
            return None
        cols.append(x)
    return RingMatrix.from_columns(a.ring, cols, a.col_degrees,
                                   b.col_degrees, _reduced=True)


# ---------------------------------------------------------------------------
# dimension and length entry points


def krull_dimension(obj):
    """Krull dimension of a QuotientRingSpec or FinitelyPresentedModule."""
    if isinstance(obj, QuotientRingSpec):
        return obj.dimension()
    if isinstance(obj, FinitelyPresentedModule):
        return obj.dimension()
    raise TypeError(f"no Krull dimension for {type(obj)}")


def length(module):
    """Length (GF(p)-dimension) of a finitely presented module, or INFINITE."""
    return module.length()
