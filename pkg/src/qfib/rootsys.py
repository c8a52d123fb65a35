"""Cartan data, positive roots and weight-lattice bookkeeping for series A-G.

Nodes are numbered 1..r as in Humphreys.  Roots are stored in simple-root
coordinates, weights in fundamental-weight coordinates.  The Cartan entry is
a_ij = (alpha_i^vee, alpha_j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), with
the shortest simple roots normalised to (alpha, alpha) = 2.

Diagrams (long nodes first for B, F; short first for C, G)::

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n          (alpha_n short)
    C_n   1 - 2 - ... - (n-1) <= n          (alpha_n long)
    D_n   1 - 2 - ... - (n-2) < (n-1), n
    E_n   1 - 3 - 4 - 5 - ... - n,  2 attached to 4
    F_4   1 - 2 => 3 - 4
    G_2   1 <= 2                             (alpha_1 short)
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

__all__ = [
    "CartanDatum", "Weight", "Root", "NodeSubset", "cartan_datum",
    "positive_roots", "pairing", "is_irreducible_flag", "flag_dimension",
    "sublattice_member", "root_to_weight", "dual_weight", "highest_root", "roots_json",
]

SERIES = "ABCDEFG"


def _rank_ok(series, r):
    return {
        "A": r >= 1, "B": r >= 2, "C": r >= 2, "D": r >= 4,
        "E": r in (6, 7, 8), "F": r == 4, "G": r == 2,
    }[series]


def _gram(series, r):
    """Symmetric Gram matrix (alpha_i, alpha_j) of the simple roots."""
    g = [[0] * r for _ in range(r)]
    sq = [2] * r
    edges = []
    if series in "ABCD":
        edges = [(i, i + 1) for i in range(r - 1)]
        if series == "D":
            edges = [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)]
        if series == "B":
            sq = [4] * (r - 1) + [2]
        if series == "C":
            sq = [2] * (r - 1) + [4]
    elif series == "E":
        edges = [(0, 2), (2, 3), (1, 3)] + [(i, i + 1) for i in range(3, r - 1)]
    elif series == "F":
        edges = [(0, 1), (1, 2), (2, 3)]
        sq = [4, 4, 2, 2]
    elif series == "G":
        edges = [(0, 1)]
        sq = [2, 6]
    for i in range(r):
        g[i][i] = sq[i]
    for i, j in edges:
        # the bond is -(min length squared)/2 * multiplicity, i.e. -max/2
        v = -max(sq[i], sq[j]) // 2
        g[i][j] = g[j][i] = v
    return g


@dataclass(frozen=True)
class CartanDatum:
    series: str
    rank: int
    cartan: tuple
    symmetrizer: tuple

    @property
    def name(self):
        return f"{self.series}{self.rank}"

    @property
    def nodes(self):
        return range(1, self.rank + 1)

    def a(self, i, j):
        """Cartan entry a_ij, 1-based."""
        return self.cartan[i - 1][j - 1]

    def neighbours(self, i):
        return [j for j in self.nodes if j != i and self.a(i, j)]

    def to_json(self):
        return {"series": self.series, "rank": self.rank,
                "cartan": [list(r) for r in self.cartan],
                "symmetrizer": list(self.symmetrizer)}

    def __str__(self):
        return self.name


def cartan_datum(series, rank):
    series = series.upper()
    if series not in SERIES or not isinstance(rank, int) or rank < 1 or not _rank_ok(series, rank):
        raise ValueError(f"no Cartan datum of type {series}{rank}")
    g = _gram(series, rank)
    d = tuple(g[i][i] // 2 for i in range(rank))
    cart = tuple(tuple(2 * g[i][j] // g[i][i] for j in range(rank)) for i in range(rank))
    return CartanDatum(series, rank, cart, d)


@dataclass(frozen=True, order=True)
class Weight:
    coords: tuple

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k):
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_dominant(self):
        return all(a >= 0 for a in self.coords)

    @classmethod
    def fundamental(cls, rank, i):
        return cls(tuple(int(j == i) for j in range(1, rank + 1)))

    @classmethod
    def zero(cls, rank):
        return cls((0,) * rank)


@dataclass(frozen=True, order=True)
class Root:
    coords: tuple

    def is_positive(self):
        return all(a >= 0 for a in self.coords) and any(self.coords)

    def height(self):
        return sum(self.coords)

    def support(self):
        return {i + 1 for i, a in enumerate(self.coords) if a}


_ROOT_CACHE = {}


def positive_roots(datum):
    """Positive roots by closure of the simple roots under simple reflections.
    Sorted by height, then coordinates."""
    key = (datum.series, datum.rank)
    if key in _ROOT_CACHE:
        return list(_ROOT_CACHE[key])
    r = datum.rank
    simple = [tuple(int(j == i) for j in range(r)) for i in range(r)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(r):
                c = sum(datum.cartan[i][j] * beta[j] for j in range(r))
                if c == 0:
                    continue
                gamma = list(beta)
                gamma[i] -= c
                gamma = tuple(gamma)
                if all(x >= 0 for x in gamma) and gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    roots = sorted((Root(t) for t in seen), key=lambda b: (b.height(), b.coords))
    _ROOT_CACHE[key] = tuple(roots)
    return roots


def highest_root(datum):
    return positive_roots(datum)[-1]


def pairing(datum, lam, i):
    """(alpha_i^vee, lambda) for a weight in fundamental coordinates."""
    return lam.coords[i - 1]


def root_to_weight(datum, beta):
    """Fundamental coordinates of a root: alpha_j = sum_i a_ij varpi_i."""
    r = datum.rank
    return Weight(tuple(sum(datum.cartan[i][j] * beta.coords[j] for j in range(r)) for i in range(r)))


def dual_weight(datum, lam):
    """-w_0(lambda).  Only series A (coordinate reversal) is provided."""
    if datum.series != "A":
        raise NotImplementedError("dual weights are only implemented for series A")
    return Weight(tuple(reversed(lam.coords)))


@dataclass(frozen=True)
class NodeSubset:
    """A subset S of the simple roots; ``colored`` is its complement S^c."""

    datum: CartanDatum
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        m = frozenset(self.members)
        if not m <= set(self.datum.nodes):
            raise ValueError(f"nodes {sorted(m)} outside 1..{self.datum.rank}")
        object.__setattr__(self, "members", m)

    @classmethod
    def from_colored(cls, datum, colored):
        return cls(datum, frozenset(datum.nodes) - frozenset(colored))

    @property
    def colored(self):
        return frozenset(self.datum.nodes) - self.members

    def is_proper(self):
        return len(self.members) < self.datum.rank

    def to_text(self):
        return f"{self.datum.name}:c={{{','.join(map(str, sorted(self.colored)))}}}"

    @classmethod
    def from_text(cls, text):
        m = re.fullmatch(r"\s*([A-Ga-g])(\d+)\s*:\s*c\s*=\s*\{\s*([\d,\s]*)\}\s*", text)
        if not m:
            raise ValueError(f"bad node subset {text!r}; expected e.g. 'A3:c={{1,3}}'")
        datum = cartan_datum(m.group(1).upper(), int(m.group(2)))
        body = m.group(3).strip()
        colored = [int(x) for x in body.split(",") if x.strip()] if body else []
        return cls.from_colored(datum, colored)

    def to_json(self):
        return {"datum": self.datum.name, "S": sorted(self.members), "S_c": sorted(self.colored)}

    def __str__(self):
        return self.to_text()


def is_irreducible_flag(datum, S):
    colored = S.colored
    if len(colored) != 1:
        return False
    (x,) = colored
    return all(b.coords[x - 1] <= 1 for b in positive_roots(datum))


def flag_dimension(datum, S):
    """Complex dimension of G/L_S: positive roots whose support meets S^c."""
    if not S.is_proper():
        raise ValueError("S must be a proper subset")
    colored = S.colored
    return sum(1 for b in positive_roots(datum) if b.support() & colored)


def sublattice_member(lam, S, which):
    """Membership in P_S^+ (nonnegative, supported on S) or P_{S^c} (supported on S^c)."""
    support = {i + 1 for i, a in enumerate(lam.coords) if a}
    if which in ("P_S^+", "PS+"):
        return support <= S.members and lam.is_dominant()
    if which in ("P_{S^c}", "PSc"):
        return support <= S.colored
    raise ValueError(f"unknown sublattice {which!r}")


def roots_json(datum):
    return json.dumps({"datum": datum.to_json(),
                       "positive_roots": [list(b.coords) for b in positive_roots(datum)]},
                      sort_keys=True)
