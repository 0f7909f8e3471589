import pytest

from parres.algebra import AlgebraError
from parres.groebner import RingMatrix
from parres.complexes import (ChainComplex, ComplexMap, dual, homology_at,
                              homology_presentation, homology_sup,
                              is_minimal, mapping_cone, minimize,
                              minimize_with_tracking, shift,
                              induced_map_on_homology)
from parres.koszul import koszul_complex
from parres import oracle


def test_dd_zero_enforced(r1):
    ring = r1.ring
    a = ring.ambient.parse("a")
    d1 = RingMatrix.from_columns(ring, [[a]], row_degrees=[0])
    bad = RingMatrix.from_columns(ring, [[a]], row_degrees=[1])
    with pytest.raises(AlgebraError):
        ChainComplex(ring, {0: (0,), 1: (1,), 2: (2,)}, {1: d1, 2: bad},
                     check=True)


def test_koszul_is_complex(r1, r2):
    for spec in (r1, r2):
        k = koszul_complex(spec.sop())
        for n in range(2, spec.sop().count + 1):
            assert (k.differential(n - 1) @ k.differential(n)).is_zero()


def test_homology_presentation_matches_oracle(r1):
    k = koszul_complex(r1.sop("x"))
    for n in range(3):
        _, h = homology_presentation(k, n)
        for d in range(6):
            assert oracle.module_dim_at(h, d) == \
                oracle.homology_dim_at(k, n, d)


def test_homology_sup(r1, regular):
    assert homology_sup(koszul_complex(r1.sop("x"))) == 2
    # regular sequence: only H_0 survives
    assert homology_sup(koszul_complex(regular.sop("x"))) == 0


def test_shift(r1):
    k = koszul_complex(r1.sop("x"))
    s = shift(k, 3)
    assert s.module(3) == k.module(0)
    _, h = homology_presentation(k, 1)
    _, hs = homology_presentation(s, 4)
    assert h.graded_length() == hs.graded_length()


def test_mapping_cone_of_identity_is_exact(r1):
    k = koszul_complex(r1.sop("x"))
    comps = {n: RingMatrix.identity(k.ring, k.module(n))
             for n in range(3)}
    ident = ComplexMap(k, k, comps, check=True)
    cone = mapping_cone(ident)
    for n in range(0, 4):
        assert homology_at(cone, n).is_zero()


def test_dual_squares_to_identity_lengths(r1):
    k = koszul_complex(r1.sop("x"))
    d = dual(k)
    dd = dual(d)
    for n in range(3):
        _, h = homology_presentation(k, n)
        _, hdd = homology_presentation(dd, n)
        assert h.graded_length() == hdd.graded_length()


def test_koszul_self_duality(r2):
    x = r2.sop()
    r = x.count
    k = koszul_complex(x)
    d = dual(k)
    for i in range(r + 1):
        _, hi = homology_presentation(k, r - i)
        _, hco = homology_presentation(d, -i)
        assert hi.length() == hco.length()


def test_minimize_preserves_homology(r1):
    from parres.resolutions import general_cone_resolution
    cone = general_cone_resolution(r1.sop("x"), 3)
    mini = minimize(cone)
    assert is_minimal(mini)
    for n in range(0, 4):
        for d in range(0, 8):
            assert oracle.homology_dim_at(cone, n, d) == \
                oracle.homology_dim_at(mini, n, d)


def test_minimize_tracking_gives_submatrix(r1):
    from parres.resolutions import general_cone_resolution
    cone = general_cone_resolution(r1.sop("x"), 2)
    mini, kept = minimize_with_tracking(cone)
    for n in mini.modules:
        assert len(kept[n]) == mini.rank(n)
        assert all(cone.module(n)[i] == mini.module(n)[j]
                   for j, i in enumerate(kept[n]))


def test_induced_identity_is_isomorphism(r1):
    k = koszul_complex(r1.sop("x"))
    comps = {n: RingMatrix.identity(k.ring, k.module(n)) for n in range(3)}
    ident = ComplexMap(k, k, comps, check=True)
    ind = induced_map_on_homology(ident, 1)
    assert ind.is_injective() and ind.is_surjective()
    assert ind.is_isomorphism()
