from fractions import Fraction

from qfib.linalg import Echelon, in_span, kernel, rank, solve, span_basis
from qfib.qfield import q


def test_rank_and_kernel():
    vs = [{"x": 1, "y": 2}, {"y": 1}, {"x": 1, "y": 3}]
    assert rank(vs) == 2
    ker = kernel(vs)
    assert len(ker) == 1
    (c,) = ker
    tot = {}
    for j, a in c.items():
        for k, v in vs[j].items():
            tot[k] = tot.get(k, 0) + a * v
    assert all(v == 0 for v in tot.values())
    assert all(isinstance(a, (int, Fraction)) for a in c.values())


def test_solve_over_q():
    vs = [{"a": q}, {"a": 1, "b": q - 1}]
    target = {"a": 2, "b": q ** 2 - q}
    sol = solve(vs, target)
    out = {}
    for j, c in sol.items():
        for k, v in vs[j].items():
            out[k] = out.get(k, 0) + c * v
    assert {k: v for k, v in out.items() if v} == target
    assert solve([{"a": 1}], {"b": 1}) is None


def test_echelon_tracking():
    e = Echelon("cheap", track=True)
    assert e.add({"x": 2}, "u") is None
    assert e.add({"y": 1}, "v") is None
    rel = e.add({"x": 4, "y": -1}, "w")
    assert rel == {"u": -2, "v": 1, "w": 1}
    assert in_span([{"x": 1}, {"y": 1}], {"x": 3, "y": q})
    assert len(span_basis([{"x": 1}, {"x": 2}])) == 1
