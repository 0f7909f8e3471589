"""Packed-term representation and the Buchberger driver.

A term of a free module R^k over GF(p)[x_1..x_n] is packed into a single
integer so that plain integer comparison realizes the module monomial order
(position-over-term, lower position first, positions tie-broken by the ring
order).  Multiplying a term by a ring monomial is then an integer addition of
a precomputed delta, which is what makes the reduction inner loop cheap.

Layout (most significant first), grevlex:

    [POS_MAX - pos | total degree | EXP_MASK - e_{n-1} | ... | EXP_MASK - e_0]

and lex:

    [POS_MAX - pos | e_0 | e_1 | ... | e_{n-1}]

For <= 4 variables everything fits in 64 bits, which the optional compiled
kernel exploits; the pure-Python path works with arbitrary precision ints and
has no variable-count limit.
"""

from __future__ import annotations

import heapq

from .algebra import AlgebraError, NotHomogeneousError

EXP_BITS = 10
EXP_MASK = (1 << EXP_BITS) - 1
DEG_BITS = 10
DEG_MASK = (1 << DEG_BITS) - 1
POS_BITS = 12
POS_MAX = (1 << POS_BITS) - 1

# stay clear of the packed-field limits; degrees at desk scale are far below
MAX_DEGREE = EXP_MASK - 1


class PackContext:
    """Packing rules for one (number of variables, order kind) pair."""

    __slots__ = ("nv", "kind", "expshift", "topshift", "fits64", "_cmask")

    def __init__(self, nv, kind="grevlex"):
        if kind not in ("grevlex", "lex"):
            raise AlgebraError(f"unsupported order kind {kind!r}")
        self.nv = nv
        self.kind = kind
        self.expshift = EXP_BITS * nv
        if kind == "grevlex":
            self.topshift = self.expshift + DEG_BITS
        else:
            self.topshift = self.expshift
        self.fits64 = self.topshift + POS_BITS <= 64
        self._cmask = sum(EXP_MASK << (EXP_BITS * j) for j in range(nv))

    def pack(self, pos, exp):
        if pos > POS_MAX:
            raise AlgebraError(f"free module position {pos} exceeds packing limit")
        key = (POS_MAX - pos) << self.topshift
        if self.kind == "grevlex":
            deg = 0
            body = 0
            for j, e in enumerate(exp):
                if e > MAX_DEGREE:
                    raise AlgebraError(f"exponent {e} exceeds packing limit")
                deg += e
                body |= (EXP_MASK - e) << (EXP_BITS * j)
            if deg > DEG_MASK:
                raise AlgebraError(f"degree {deg} exceeds packing limit")
            key |= (deg << self.expshift) | body
        else:
            nv = self.nv
            for j, e in enumerate(exp):
                if e > MAX_DEGREE:
                    raise AlgebraError(f"exponent {e} exceeds packing limit")
                key |= e << (EXP_BITS * (nv - 1 - j))
        return key

    def unpack(self, key):
        pos = POS_MAX - (key >> self.topshift)
        if self.kind == "grevlex":
            exp = tuple(
                EXP_MASK - ((key >> (EXP_BITS * j)) & EXP_MASK)
                for j in range(self.nv))
        else:
            nv = self.nv
            exp = tuple(
                (key >> (EXP_BITS * (nv - 1 - j))) & EXP_MASK
                for j in range(nv))
        return pos, exp

    def exp_of(self, key):
        return self.unpack(key)[1]

    def pos_of(self, key):
        return POS_MAX - (key >> self.topshift)

    def mono_degree(self, key):
        """Total degree of the monomial part of a packed term."""
        if self.kind == "grevlex":
            return (key >> self.expshift) & DEG_MASK
        return sum(self.exp_of(key))

    def mul_delta(self, exp):
        """Additive key delta for multiplication by the ring monomial x^exp."""
        if self.kind == "grevlex":
            deg = sum(exp)
            if deg > MAX_DEGREE:
                raise AlgebraError(f"degree {deg} exceeds packing limit")
            body = 0
            for j, e in enumerate(exp):
                body += e << (EXP_BITS * j)
            return (deg << self.expshift) - body
        nv = self.nv
        delta = 0
        for j, e in enumerate(exp):
            delta += e << (EXP_BITS * (nv - 1 - j))
        return delta

    def position_floor(self, rank):
        """Smallest key of any term in positions < rank.

        Terms in positions >= rank compare strictly below this, so it serves
        as the stop boundary when reducing only the leading block of an
        extended (tagged) module.
        """
        return (POS_MAX - rank + 1) << self.topshift


# ---------------------------------------------------------------------------
# vectors: dict packed-key -> coefficient in (0, p)


def vec_degree(ctx, vec, gendegs):
    """Internal degree of a homogeneous vector; raises if inhomogeneous."""
    degs = {ctx.mono_degree(k) + gendegs[ctx.pos_of(k)] for k in vec}
    if len(degs) > 1:
        raise NotHomogeneousError(f"degrees {sorted(degs)} in one vector")
    return degs.pop() if degs else None


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class PyReducer:
    """Pure-Python reducer: full normal form against a growing basis."""

    def __init__(self, ctx, p):
        self.ctx = ctx
        self.p = p
        self.by_pos = {}

    def add(self, vec):
        """Add a basis vector (dict).  Stores lead data and term list."""
        ctx = self.ctx
        lead = max(vec)
        pos, exp = ctx.unpack(lead)
        inv = pow(vec[lead], self.p - 2, self.p)
        entry = (exp, inv, list(vec.items()))
        self.by_pos.setdefault(pos, []).append(entry)

    def normal_form(self, vec, stopkey=0):
        """Fully reduce `vec`; terms below `stopkey` are left untouched."""
        ctx = self.ctx
        p = self.p
        work = dict(vec)
        out = {}
        while work:
            k = max(work)
            if k < stopkey:
                break
            c = work.pop(k) % p
            if not c:
                continue
            pos, exp = ctx.unpack(k)
            entry = None
            for cand in self.by_pos.get(pos, ()):
                if _divides(cand[0], exp):
                    entry = cand
                    break
            if entry is None:
                out[k] = c
                continue
            lexp, inv, items = entry
            q = tuple(a - b for a, b in zip(exp, lexp))
            delta = ctx.mul_delta(q)
            mult = (c * inv) % p
            work[k] = c  # lead cancels against the entry's own lead term
            for tk, tc in items:
                nk = tk + delta
                nc = (work.get(nk, 0) - mult * tc) % p
                if nc:
                    work[nk] = nc
                else:
                    work.pop(nk, None)
        out.update(work)
        return out


def make_reducer(ctx, p):
    # deferred import so the compiled kernel stays optional
    from .kernel import reducer_factory
    return reducer_factory(ctx, p)


# ---------------------------------------------------------------------------
# Buchberger

def spair_parts(ctx, e1, e2):
    lcm = tuple(max(a, b) for a, b in zip(e1, e2))
    return lcm, tuple(l - a for l, a in zip(lcm, e1)), \
        tuple(l - b for l, b in zip(lcm, e2))


def groebner_basis(vecs, ctx, p, gendegs, degree_cap=None, module_rank=None):
    """Reduced Groebner basis of the submodule generated by `vecs`.

    vecs: homogeneous packed vectors (dicts).  gendegs: internal degree of
    each free-module position.  With degree_cap, S-pairs above the cap are
    dropped: the result is a Groebner basis through internal degree cap.
    Deterministic for a fixed input order.

    The product criterion is only applied when module_rank == 1 (it is not
    valid for modules of higher rank).
    """
    reducer = make_reducer(ctx, p)
    basis = []        # list of (leadkey, pos, exp, deg, vec)
    heap = []         # (degree, seq, kind, payload)
    seq = 0
    rank1 = module_rank == 1

    for vec in vecs:
        if not vec:
            continue
        deg = vec_degree(ctx, vec, gendegs)
        if degree_cap is not None and deg > degree_cap:
            continue
        heapq.heappush(heap, (deg, seq, "gen", vec))
        seq += 1

    def add_element(vec):
        nonlocal seq
        lead = max(vec)
        inv = pow(vec[lead], p - 2, p)
        vec = {k: (v * inv) % p for k, v in vec.items()}
        pos, exp = ctx.unpack(lead)
        deg = ctx.mono_degree(lead) + gendegs[pos]
        idx = len(basis)
        basis.append((lead, pos, exp, deg, vec))
        reducer.add(vec)
        for j, (lk2, pos2, exp2, deg2, _) in enumerate(basis[:idx]):
            if pos2 != pos:
                continue
            lcm, _, _ = spair_parts(ctx, exp, exp2)
            pdeg = sum(lcm) + gendegs[pos]
            if degree_cap is not None and pdeg > degree_cap:
                continue
            if rank1 and all(min(a, b) == 0 for a, b in zip(exp, exp2)):
                continue  # product criterion
            heapq.heappush(heap, (pdeg, seq, "pair", (j, idx)))
            seq += 1

    while heap:
        _, _, kind, payload = heapq.heappop(heap)
        if kind == "gen":
            nf = reducer.normal_form(payload)
            if nf:
                add_element(nf)
            continue
        i, j = payload
        lk1, pos, e1, _, v1 = basis[i]
        _, _, e2, _, v2 = basis[j]
        _, q1, q2 = spair_parts(ctx, e1, e2)
        d1 = ctx.mul_delta(q1)
        d2 = ctx.mul_delta(q2)
        s = {}
        for k, c in v1.items():
            s[k + d1] = c
        for k, c in v2.items():
            nk = k + d2
            nc = (s.get(nk, 0) - c) % p
            if nc:
                s[nk] = nc
            else:
                s.pop(nk, None)
        nf = reducer.normal_form(s)
        if nf:
            add_element(nf)

    return interreduce([b[4] for b in basis], ctx, p, gendegs)


def interreduce(vecs, ctx, p, gendegs):
    """Tail-reduce every element against the others; monic; sorted."""
    vecs = [v for v in vecs if v]
    # drop elements whose lead is divisible by another lead (keep first seen)
    leads = [(max(v), ctx.unpack(max(v))) for v in vecs]
    keep = []
    for i, v in enumerate(vecs):
        li, (pi, ei) = leads[i]
        redundant = False
        for j in keep:
            lj, (pj, ej) = leads[j]
            if pj == pi and _divides(ej, ei) and lj != li:
                redundant = True
                break
        if not redundant:
            # identical leads cannot occur after Buchberger completion
            keep.append(i)
    kept = [vecs[i] for i in keep]
    out = []
    for i, v in enumerate(kept):
        reducer = make_reducer(ctx, p)
        for j, w in enumerate(kept):
            if j != i:
                reducer.add(w)
        nf = reducer.normal_form(v)
        if nf:
            lead = max(nf)
            inv = pow(nf[lead], p - 2, p)
            out.append({k: (c * inv) % p for k, c in nf.items()})
    out.sort(key=lambda v: (vec_degree(ctx, v, gendegs), max(v)))
    return out
