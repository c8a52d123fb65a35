import math

import pytest

from qfib.ncalg import (CompletionError, RewriteSystem, TruncationError, parse_presentation,
                        word_key)
from qfib.qfield import q


def weyl():
    A = RewriteSystem(["x", "y"], name="Weyl")
    A.add_relation(A.parse_free("y*x - x*y - 1"))
    return A.complete_up_to(4)


def test_weyl_algebra_pbw():
    A = weyl()
    assert A.confluent_to == math.inf
    assert [len(A.basis_words(d)) for d in range(5)] == [1, 2, 3, 4, 5]
    assert A.format(A.parse_poly("y*y*x")) == "x*y*y + 2*y"


def test_completion_adds_rules():
    # x y x = y x y  and  x x = 0 force further relations
    A = RewriteSystem(["x", "y"])
    A.add_relation(A.parse_free("y*x*y - x*y*x"))
    A.add_relation(A.parse_free("y*y"))
    n0 = len(A.rules)
    A.complete_up_to(6)
    assert not A.unresolved(6)
    assert len(A.rules) > n0


def test_su2_rules(su2):
    A = su2.alg
    assert len(A.rules) == 7
    assert A.confluent_to == math.inf
    for d in range(7):
        assert len(A.basis_words(d)) == (d + 1) ** 2
    # b < c < a < d, so b*a is already normal
    assert A.format(A.parse_poly("b*a")) == "b*a"
    assert A.format(A.parse_poly("a*b")) == "(1/q)*b*a"
    assert A.format(A.parse_poly("c*b")) == "b*c"
    assert A.parse_poly("a*d - q^-1*b*c") == {(): A.one}
    assert A.parse_poly("u11*u22 - q^-1*u12*u21") == {(): A.one}


def test_normal_words_are_ascending_and_irreducible(su2):
    A = su2.alg
    ws = A.basis_words(3)
    assert ws == sorted(ws, key=word_key)
    assert all(A.is_normal(w) for w in ws)


def test_truncation_guard(su3):
    A = su3.alg
    assert A.confluent_to == 10
    with pytest.raises(TruncationError):
        A.basis_words(11)
    with pytest.raises(TruncationError):
        A.parse_poly("u11*u22*u33", cap=2)


def test_round_trip(su2):
    text = su2.alg.dumps()
    B = RewriteSystem.loads(text)
    assert B.gens == su2.alg.gens and B.rules == su2.alg.rules
    assert B.dumps() == text


def test_presentation_errors():
    with pytest.raises(ValueError, match="line 2"):
        parse_presentation("generators x\nbogus 1\n")
    with pytest.raises(ValueError):
        parse_presentation("relation x = 1\n")
    with pytest.raises(ValueError, match="line 3"):
        parse_presentation("generators x y\nfield q\nrelation x*(y = 1\n")
    with pytest.raises(CompletionError):
        # the braid-like relation alone has overlaps generating new rules forever
        parse_presentation("generators x y\nrelation y*x*y = x*y*x\nrelation y*y = x*x*x\ncomplete inf\n")


def test_specialized_field():
    A = parse_presentation("generators x y\nfield q=3/2\nrelation y*x = q*x*y\ncomplete inf\n")["algebra"]
    assert A.parse_poly("y*x") == {(0, 1): A.q}
    assert A.q != q
