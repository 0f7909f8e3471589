# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled normal-form reducer for packed vectors with 64-bit keys.

Mirrors the pure-Python reducer: terms are (packed key -> coefficient)
entries, the work polynomial lives in an ordered C++ map so the leading term
is the last element, and reduction against a basis entry is key addition by a
precomputed delta.  Only valid when the packing context fits in 64 bits.
"""

from cython.operator cimport dereference as deref, preincrement as inc
from libcpp.map cimport map as cppmap
from libcpp.vector cimport vector
from libc.stdint cimport uint64_t, int64_t


cdef struct BasisEntry:
    vector[int] exp
    int64_t inv
    vector[uint64_t] keys
    vector[int64_t] coeffs


cdef class Reducer:
    cdef public object ctx
    cdef int64_t p
    cdef int nv
    cdef int expshift
    cdef int topshift
    cdef bint grevlex
    cdef cppmap[int, vector[int]] by_pos
    cdef vector[BasisEntry] basis

    def __init__(self, ctx, p):
        if not ctx.fits64:
            raise ValueError("packing context does not fit in 64 bits")
        self.ctx = ctx
        self.p = p
        self.nv = ctx.nv
        self.expshift = ctx.expshift
        self.topshift = ctx.topshift
        self.grevlex = ctx.kind == "grevlex"

    cdef inline int _pos(self, uint64_t key):
        return 4095 - <int>(key >> self.topshift)

    cdef void _exp(self, uint64_t key, vector[int]& out):
        cdef int j, nv = self.nv
        out.resize(nv)
        if self.grevlex:
            for j in range(nv):
                out[j] = 1023 - <int>((key >> (10 * j)) & 1023)
        else:
            for j in range(nv):
                out[j] = <int>((key >> (10 * (nv - 1 - j))) & 1023)

    cdef uint64_t _mul_delta(self, vector[int]& q):
        cdef int j, nv = self.nv
        cdef uint64_t body = 0
        cdef uint64_t deg = 0
        cdef uint64_t delta = 0
        if self.grevlex:
            for j in range(nv):
                deg += <uint64_t>q[j]
                body += (<uint64_t>q[j]) << (10 * j)
            delta = (deg << self.expshift) - body
        else:
            for j in range(nv):
                delta += (<uint64_t>q[j]) << (10 * (nv - 1 - j))
        return delta

    def add(self, vec):
        """Add a basis vector (dict key -> coefficient)."""
        cdef uint64_t lead = max(vec)
        cdef BasisEntry entry
        self._exp(lead, entry.exp)
        entry.inv = pow(vec[lead], self.p - 2, self.p)
        for k, c in vec.items():
            entry.keys.push_back(<uint64_t>k)
            entry.coeffs.push_back(<int64_t>c)
        cdef int pos = self._pos(lead)
        cdef int idx = <int>self.basis.size()
        self.basis.push_back(entry)
        self.by_pos[pos].push_back(idx)

    def normal_form(self, vec, stopkey=0):
        """Fully reduce `vec`; terms below `stopkey` are left untouched."""
        cdef uint64_t stop = stopkey
        cdef int64_t p = self.p
        cdef cppmap[uint64_t, int64_t] work
        cdef cppmap[uint64_t, int64_t].reverse_iterator rit
        cdef cppmap[uint64_t, int64_t].iterator wit
        cdef uint64_t k, nk, delta
        cdef int64_t c, mult, nc
        cdef int pos, i, j, t, bidx
        cdef bint found, divides
        cdef vector[int] exp, q
        cdef vector[int]* cand
        cdef BasisEntry* entry
        for key, coeff in vec.items():
            work[<uint64_t>key] = <int64_t>(coeff % p)
        out = {}
        q.resize(self.nv)
        while work.size() > 0:
            rit = work.rbegin()
            k = deref(rit).first
            if k < stop:
                break
            c = deref(rit).second % p
            if c < 0:
                c += p
            work.erase(k)
            if c == 0:
                continue
            pos = self._pos(k)
            self._exp(k, exp)
            found = False
            bidx = -1
            if self.by_pos.count(pos):
                cand = &self.by_pos[pos]
                for i in range(<int>cand.size()):
                    j = deref(cand)[i]
                    divides = True
                    for t in range(self.nv):
                        if self.basis[j].exp[t] > exp[t]:
                            divides = False
                            break
                    if divides:
                        found = True
                        bidx = j
                        break
            if not found:
                out[k] = c
                continue
            entry = &self.basis[bidx]
            for t in range(self.nv):
                q[t] = exp[t] - entry.exp[t]
            delta = self._mul_delta(q)
            mult = (c * entry.inv) % p
            work[k] = c  # lead cancels against the entry's own lead term
            for i in range(<int>entry.keys.size()):
                nk = entry.keys[i] + delta
                wit = work.find(nk)
                if wit != work.end():
                    nc = (deref(wit).second - mult * entry.coeffs[i]) % p
                else:
                    nc = (-mult * entry.coeffs[i]) % p
                if nc < 0:
                    nc += p
                if nc == 0:
                    work.erase(nk)
                else:
                    work[nk] = nc
        wit = work.begin()
        while wit != work.end():
            nc = deref(wit).second % p
            if nc < 0:
                nc += p
            if nc != 0:
                out[deref(wit).first] = nc
            inc(wit)
        return out
