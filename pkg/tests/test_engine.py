"""Packed-key representation and reduction kernel equivalence."""

import pytest
from hypothesis import given, settings, strategies as st

from parres.algebra import GREVLEX, LEX, PolynomialRingSpec, compare_monomials
from parres._engine import PackContext, PyReducer, vec_degree
from parres import kernel

P = 101

exps3 = st.tuples(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))


@pytest.mark.parametrize("kind", ["grevlex", "lex"])
@settings(max_examples=80, deadline=None)
@given(pos=st.integers(0, 50), exp=exps3)
def test_pack_roundtrip(kind, pos, exp):
    ctx = PackContext(3, kind)
    assert ctx.unpack(ctx.pack(pos, exp)) == (pos, exp)
    assert ctx.pos_of(ctx.pack(pos, exp)) == pos
    assert ctx.mono_degree(ctx.pack(pos, exp)) == sum(exp)


@pytest.mark.parametrize("kind,order", [("grevlex", GREVLEX), ("lex", LEX)])
@settings(max_examples=120, deadline=None)
@given(e1=exps3, e2=exps3)
def test_key_order_matches_monomial_order(kind, order, e1, e2):
    ctx = PackContext(3, kind)
    k1, k2 = ctx.pack(0, e1), ctx.pack(0, e2)
    cmp = compare_monomials(order, e1, e2)
    assert (k1 > k2) == (cmp > 0)
    assert (k1 == k2) == (cmp == 0)


def test_position_dominates_term_order():
    ctx = PackContext(3)
    # lower position is larger regardless of the monomial
    assert ctx.pack(0, (0, 0, 0)) > ctx.pack(1, (9, 9, 9))


@settings(max_examples=80, deadline=None)
@given(exp=exps3, q=exps3)
def test_mul_delta_is_key_addition(exp, q):
    ctx = PackContext(3)
    assert ctx.pack(2, exp) + ctx.mul_delta(q) == \
        ctx.pack(2, tuple(a + b for a, b in zip(exp, q)))


def test_position_floor_is_boundary():
    ctx = PackContext(3)
    assert ctx.pack(1, (0, 0, 0)) >= ctx.position_floor(2)
    assert ctx.pack(2, (9, 9, 9)) < ctx.position_floor(2)


def test_vec_degree_detects_inhomogeneity():
    from parres.algebra import NotHomogeneousError
    ctx = PackContext(2)
    vec = {ctx.pack(0, (1, 0)): 1, ctx.pack(0, (2, 0)): 1}
    with pytest.raises(NotHomogeneousError):
        vec_degree(ctx, vec, [0])


def test_fits64_boundary():
    assert PackContext(4, "grevlex").fits64
    assert not PackContext(5, "grevlex").fits64
    assert PackContext(5, "lex").fits64
    assert not PackContext(6, "lex").fits64


# --- kernel equivalence -----------------------------------------------------

vecs = st.lists(
    st.tuples(st.integers(0, 3), exps3, st.integers(1, P - 1)),
    min_size=1, max_size=8)


def _to_vec(ctx, items):
    out = {}
    for pos, exp, c in items:
        k = ctx.pack(pos, exp)
        out[k] = (out.get(k, 0) + c) % P
    return {k: v for k, v in out.items() if v}


@pytest.mark.skipif(not kernel.compiled_available(),
                    reason="compiled kernel not built")
@pytest.mark.parametrize("kind", ["grevlex", "lex"])
@settings(max_examples=60, deadline=None)
@given(basis=st.lists(vecs, max_size=4), target=vecs,
       stoppos=st.integers(0, 4))
def test_compiled_matches_python(kind, basis, target, stoppos):
    ctx = PackContext(3, kind)
    py = PyReducer(ctx, P)
    cc = kernel._compiled.Reducer(ctx, P)
    for items in basis:
        vec = _to_vec(ctx, items)
        if vec:
            py.add(vec)
            cc.add(vec)
    t = _to_vec(ctx, target)
    stop = ctx.position_floor(stoppos)
    assert py.normal_form(t) == cc.normal_form(t)
    assert py.normal_form(t, stopkey=stop) == cc.normal_form(t, stopkey=stop)


def test_kernel_selection_env(monkeypatch):
    ctx = PackContext(3)
    monkeypatch.setattr(kernel, "_FORCE", "python")
    assert kernel.active_kernel(ctx) == "python"
    assert isinstance(kernel.reducer_factory(ctx, P), PyReducer)
    if kernel.compiled_available():
        monkeypatch.setattr(kernel, "_FORCE", "compiled")
        assert kernel.active_kernel(ctx) == "compiled"
    monkeypatch.setattr(kernel, "_FORCE", "")
    big = PackContext(7)
    assert kernel.active_kernel(big) == "python"
