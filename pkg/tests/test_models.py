import itertools
from fractions import Fraction
from math import comb

import pytest

from qfib.hopf import check_hopf_axioms, torus_word
from qfib.models import (bigrading, build_su2, column_weights, semisimple_projection, torus_grading,
                         torus_projection, z_gamma, zed_generators)
from qfib.qfield import q


def test_counit_and_antipode(su2, su3):
    for m in (su2, su3):
        for i in range(1, m.n + 1):
            for j in range(1, m.n + 1):
                assert m.hopf.counit(m.u(i, j)) == (1 if i == j else 0)
    H = su2.hopf
    assert H.antipode(su2.u(1, 1)) == su2.u(2, 2)
    assert H.antipode(su2.u(1, 2)) == {k: -q * c for k, c in su2.u(1, 2).items()}
    # S^2 is not the identity
    ss = H.antipode(H.antipode(su2.u(1, 2)))
    assert ss == {k: q ** 2 * c for k, c in su2.u(1, 2).items()}


def test_determinant_is_grouplike(su2, su3):
    for m in (su2, su3):
        H = m.hopf
        d = H.delta(m.det_free())
        norm = {}
        for (u, v), c in d.items():
            for x, a in m.alg.nf_word(u).items():
                for y, b in m.alg.nf_word(v).items():
                    norm[(x, y)] = norm.get((x, y), 0) + c * a * b
        assert {k: c for k, c in norm.items() if c} == {((), ()): m.alg.one}


def test_su3_counts_match_commutative(su3):
    for d in range(5):
        assert len(su3.alg.basis_words(d)) == comb(d + 8, 8) - comb(d + 5, 8)


def test_su3_hopf_axioms_low_cap(su3):
    assert all(check_hopf_axioms(su3.hopf, 2))


def test_su2_grading(su2):
    g = torus_grading(su2)
    degs = {su2.names[ij]: g.degree((su2.gen_index(*ij),)) for ij in su2.names}
    assert degs == {"a": (-1,), "c": (-1,), "b": (1,), "d": (1,)}
    proj = torus_projection(su2)
    T = proj.target
    assert proj(su2.u(1, 1)) == {torus_word(T, (-1,)): T.alg.one}
    assert proj(su2.u(2, 2)) == {torus_word(T, (1,)): T.alg.one}
    assert proj(su2.u(1, 2)) == {} and proj(su2.u(2, 1)) == {}


def test_su3_grading_is_column_weight(su3):
    g = torus_grading(su3)
    wts = column_weights(su3)
    assert [w.coords for w in wts] == [(0, -1), (-1, 1), (1, 0)]
    for (i, j) in su3.names:
        assert g.degree((su3.gen_index(i, j),)) == wts[j - 1].coords


def test_bigrading_homogeneous(su2):
    bg = bigrading(su2)
    assert bg.degree((su2.gen_index(1, 2),)) == (-1, 1)
    assert bg.degree((su2.gen_index(2, 1),)) == (1, -1)


def test_projections_are_hopf_maps(su2, su3):
    assert all(torus_projection(su2).check(3))
    assert all(torus_projection(su3).check(2))
    for x in (1, 2):
        levi = torus_projection(su3, {x})
        assert all(levi.check(2))
        assert all(semisimple_projection(su3, levi).check(1))


def test_levi_blocks(su3):
    assert sorted(torus_projection(su3, {2}).killed) == [(1, 3), (2, 3), (3, 1), (3, 2)]
    assert sorted(torus_projection(su3, {1}).killed) == [(1, 2), (1, 3), (2, 1), (3, 1)]
    with pytest.raises(ValueError):
        torus_projection(su3, {1, 2})


def test_zed_generators(su2, su3):
    z = zed_generators(su2)
    assert z.z0[1] == su2.u(2, 2)
    assert z.zbar0[1] == su2.u(1, 1)
    g = torus_grading(su2)
    assert all(g.degree_of(e) == (1,) for e in z.z[1].values())
    z3 = zed_generators(su3)
    assert z3.z[1] == {(i,): su3.u(i, 3) for i in (1, 2, 3)}
    assert z3.z0[2] == su3.minor((2, 3), (2, 3))


def test_z_gamma_degree_and_counit(su2, su3):
    g2 = torus_grading(su2)
    for a in range(-3, 4):
        z = z_gamma(su2, (a,))
        assert g2.degree_of(z) == (a,)
        assert su2.hopf.counit(z) == 1
    g3 = torus_grading(su3)
    for gamma in itertools.product(range(-2, 3), repeat=2):
        z = z_gamma(su3, gamma)
        assert g3.degree_of(z) == gamma
        assert su3.hopf.counit(z) != 0


def test_other_convention_and_specialization():
    m = build_su2(convention="q")
    A = m.alg
    assert A.format(A.parse_poly("a*b")) == "q*b*a"
    assert all(check_hopf_axioms(m.hopf, 3))
    assert torus_grading(m).degree((m.gen_index(1, 2),)) == (1,)
    m2 = build_su2(q=Fraction(2))
    assert all(check_hopf_axioms(m2.hopf, 3))
    with pytest.raises(ValueError):
        build_su2(convention="p")
