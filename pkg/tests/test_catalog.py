import itertools
import json

import pytest

from qfib.catalog import (FAMILIES, builtin_catalog, catalog_to_json, catalog_to_markdown,
                          dynkin_ascii, filter_catalog, fiber_type_from_diagram,
                          fiber_type_from_roots, make_fibration, space_label, stiefel_dimension)
from qfib.rootsys import NodeSubset, cartan_datum


def by_family(name):
    return {e.n: e for e in builtin_catalog() if e.family == name}


def test_six_families():
    assert len(FAMILIES) == 6
    cat = builtin_catalog()
    assert {e.family for e in cat} == set(FAMILIES)
    assert all(e.S_P.members <= e.S_B.members for e in cat)


def test_flag_families_dimensions():
    # classical formulas: dim CP^n = n, full flag of SU_{n+1} = n(n+1)/2, L_n = n(n+1)/2, F_{Sp_n} = n^2
    for n, e in by_family("A full flag").items():
        assert (e.base_dim, e.total_dim, e.fiber_dim) == (n, n * (n + 1) // 2, n * (n - 1) // 2)
        assert e.base_label == f"ℂP^{n}"
    for n, e in by_family("C Lagrangian").items():
        assert (e.base_dim, e.total_dim) == (n * (n + 1) // 2, n * n)
        assert e.base_label == f"L_{n}"
    for n, e in by_family("A projective").items():
        # SU_{n+1}/(U_{n-1} x U_1 x U_1): 2n - 1 complex dimensions
        assert (e.base_dim, e.total_dim, e.fiber_dim) == (n, 2 * n - 1, n - 1)
        assert e.fiber_label == f"ℂP^{n - 1}"
    (e,) = by_family("E6 Cayley plane").values()
    assert (e.base_label, e.total_label, e.fiber_label) == ("𝕆P^2", "E_6/(SO_10×U_1)", "𝐒_5")
    assert (e.base_dim, e.total_dim, e.fiber_dim) == (16, 26, 10)
    assert e.base_real_dim == 32
    assert e.fiber_type == [("D", 5, (5,))]


def test_stiefel_families_dimensions():
    for n, e in by_family("A Stiefel").items():
        assert e.dim_kind == "real"
        # S^{2n+1} and V_2 C^{n+1} = SU_{n+1}/SU_{n-1}
        assert (e.base_dim, e.total_dim, e.fiber_dim) == (2 * n + 1, 4 * n, 2 * n - 1)
        assert e.base_label == f"S^{2 * n + 1}"
        assert e.base_cplx_dim is None
    for n, e in by_family("C Stiefel").items():
        # S^{4n-1} and V_2 H^n = Sp_n/Sp_{n-2}
        assert (e.base_dim, e.total_dim) == (4 * n - 1, 8 * n - 6)
    assert stiefel_dimension(cartan_datum("A", 3), m=3) == 15     # SU_4 itself
    assert stiefel_dimension(cartan_datum("A", 3), m=0) == 0
    with pytest.raises(ValueError):
        stiefel_dimension(cartan_datum("A", 3), m=5)


def test_principal_flags():
    for e in builtin_catalog():
        expect = e.kind == "stiefel" and e.n == 2
        assert e.principal == expect, (e.family, e.n)
    assert by_family("A Stiefel")[2].fiber_label == "SU_2"


def test_base_irreducibility():
    for e in builtin_catalog():
        assert e.base_irreducible == (e.family != "C Stiefel"), (e.family, e.n)
    assert all(e.base_irreducible for e in filter_catalog(builtin_catalog(), irreducible_only=True))


SMALL_TYPES = [("A", 1), ("A", 3), ("A", 5), ("B", 3), ("B", 4), ("C", 3), ("C", 4), ("D", 5),
               ("E", 6), ("F", 4), ("G", 2)]


@pytest.mark.parametrize("series,rank", SMALL_TYPES)
def test_fiber_type_two_ways(series, rank):
    d = cartan_datum(series, rank)
    norm = lambda t: ("B", 2) if t == ("C", 2) else t
    for k in range(rank + 1):
        for S in itertools.combinations(d.nodes, k):
            SB = NodeSubset(d, frozenset(S))
            diag = [norm((s, r)) for s, r, _ in fiber_type_from_diagram(d, SB, SB)]
            roots = [norm(t) for t in fiber_type_from_roots(d, SB)]
            assert diag == roots, S


def test_make_fibration_errors():
    d = cartan_datum("A", 3)
    with pytest.raises(ValueError):
        make_fibration(d, {1}, {1, 2})
    with pytest.raises(ValueError):
        make_fibration(d, {1, 2}, {1}, kind="cone")
    e = make_fibration(d, {1, 2}, {1, 2})
    assert e.principal and e.fiber_dim == 0


def test_labels_fallback():
    assert space_label("A", 1, {1}) == "S^2"
    assert space_label("A", 3, {2}) == "Gr_2(ℂ^4)"
    assert space_label("B", 3, {1, 3}) not in ("", None)


def test_dynkin_ascii():
    assert dynkin_ascii(cartan_datum("A", 2), {2}) == "o---*\n1   2"
    assert dynkin_ascii(cartan_datum("B", 3), {1}).splitlines()[0] == "*---o=>=o"
    assert dynkin_ascii(cartan_datum("C", 3), {1}).splitlines()[0] == "*---o=<=o"
    assert dynkin_ascii(cartan_datum("G", 2), set()).splitlines()[0] == "o<<<o"
    e6 = dynkin_ascii(cartan_datum("E", 6), {6}).splitlines()
    assert e6 == ["o---o---o---o---*", "        |", "        o 2", "1   3   4   5   6"]
    d4 = dynkin_ascii(cartan_datum("D", 4), {4}).splitlines()
    assert d4[0] == "o---o---o" and d4[2] == "    * 4"


def test_rendering():
    cat = builtin_catalog()
    data = json.loads(catalog_to_json(cat))
    assert len(data) == len(cat)
    assert data[0]["diagrams"]["S_B"] == dynkin_ascii(cat[0].datum, cat[0].S_B.colored)
    md = catalog_to_markdown(cat)
    assert "𝕆P^2" in md and "ℂP^2" in md
    assert catalog_to_json(cat) == catalog_to_json(builtin_catalog())
    assert [e.datum.name for e in filter_catalog(cat, series="e")] == ["E6"]
    assert {e.n for e in filter_catalog(cat, family="A Stiefel", rank=3)} == {3}
