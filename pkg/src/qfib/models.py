"""Quantum coordinate algebras O_q(SU_n) (n = 2, 3), tori, and the maps between them.

Convention (fixed here and nowhere else).  With p := q^-1 the generators
u_ij satisfy the FRT relations

    u_ij u_il = p u_il u_ij            (j < l)
    u_ij u_kj = p u_kj u_ij            (i < k)
    u_il u_kj = u_kj u_il              (i < k, j < l)
    u_ij u_kl - u_kl u_ij = (p - p^-1) u_il u_kj   (i < k, j < l)

and det_p := sum_sigma (-p)^l(sigma) u_1s1 ... u_nsn = 1.  For n = 2, with
a, b, c, d = u11, u12, u21, u22, this reads ba = q ab, ca = q ac, db = q bd,
dc = q cd, bc = cb, da - ad = (q - q^-1) bc, ad - q^-1 bc = 1.  Then
Delta(u_ij) = sum_k u_ik (x) u_kj, eps(u_ij) = delta_ij and
S(u_ij) = (-p)^(i-j) * (quantum minor with row j and column i removed).

The basis vector v_n of the defining representation is the highest weight
vector, v_j = v_{j+1} - alpha_{n-j}; the simple root alpha_i therefore acts on
the index pair {n-i, n+1-i}.  ``convention="q"`` swaps q and q^-1 (p = q).

Generator orders: SU_2 uses b < c < a < d, which gives the PBW basis
b^j c^k a^i, b^j c^k d^l.  SU_3 puts the diagonal last,
u12 < u13 < u21 < u23 < u31 < u32 < u11 < u22 < u33.
"""

from __future__ import annotations

import itertools
import math

from .hopf import (Coaction, GradedDecomposition, HopfMap, HopfPresentation, group_algebra,
                   quotient_hopf, torus_degree, torus_word)
from .linalg import vadd
from .ncalg import RewriteSystem
from .qfield import q as QSYM
from .rootsys import NodeSubset, Root, Weight, cartan_datum, root_to_weight

__all__ = ["MatrixModel", "build_su2", "build_su3", "build_sun", "torus_projection",
           "SubgroupProjection", "ZedGenerators", "zed_generators", "column_weights", "z_gamma",
           "torus_grading", "bigrading", "semisimple_projection"]

SU2_NAMES = {(1, 1): "a", (1, 2): "b", (2, 1): "c", (2, 2): "d"}
SU2_ORDER = ["b", "c", "a", "d"]
SU3_ORDER = ["u12", "u13", "u21", "u23", "u31", "u32", "u11", "u22", "u33"]


def _inversions(s):
    return sum(1 for a in range(len(s)) for b in range(a + 1, len(s)) if s[a] > s[b])


class MatrixModel:
    """O_q(SU_n) as a Hopf presentation, plus matrix-entry helpers."""

    def __init__(self, n, convention="q^-1", q=QSYM, cap=None):
        if n not in (2, 3):
            raise ValueError("only SU_2 and SU_3 are modelled")
        if convention not in ("q^-1", "q"):
            raise ValueError("convention is 'q^-1' (ba = q ab) or 'q' (ab = q ba)")
        self.n = n
        self.convention = convention
        self.q = q
        self.p = 1 / q if convention == "q^-1" else q
        if n == 2:
            self.names = {k: v for k, v in SU2_NAMES.items()}
            order = SU2_ORDER
        else:
            self.names = {(i, j): f"u{i}{j}" for i in range(1, 4) for j in range(1, 4)}
            order = SU3_ORDER
        self.datum = cartan_datum("A", n - 1)
        alg = RewriteSystem(order, q=q, name=f"O_q(SU_{n})")
        self.alg = alg
        if n == 2:
            for (i, j), nm in self.names.items():
                alg.aliases[f"u{i}{j}"] = {(alg.index[nm],): alg.one}
        for rel in self.relations():
            alg.add_relation(rel)
        self.cap = cap if cap is not None else (math.inf if n == 2 else 10)
        alg.complete_up_to(6 if n == 2 else self.cap)
        one = alg.one
        delta, counit, anti, anti_inv = {}, {}, {}, {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                g = self.gen_index(i, j)
                delta[g] = {((self.gen_index(i, k),), (self.gen_index(k, j),)): one for k in range(1, n + 1)}
                counit[g] = one if i == j else 0 * one
                s = self.minor_free([r for r in range(1, n + 1) if r != j],
                                    [c for c in range(1, n + 1) if c != i])
                anti[g] = {w: c * (-self.p) ** (i - j) for w, c in s.items()}
                # S^2(u_ij) = p^(2(i-j)) u_ij
                anti_inv[g] = {w: c * self.p ** (2 * (j - i)) for w, c in anti[g].items()}
        self.hopf = HopfPresentation(alg, delta, counit, anti, anti_inv, name=alg.name)

    # -- entries ---------------------------------------------------------------

    def gen_index(self, i, j):
        return self.alg.index[self.names[(i, j)]]

    def u(self, i, j):
        return {(self.gen_index(i, j),): self.alg.one}

    def word(self, *entries):
        return tuple(self.gen_index(i, j) for i, j in entries)

    def minor_free(self, rows, cols):
        """Quantum minor det_p of the submatrix, as a free-algebra polynomial."""
        out = {}
        if not rows:
            return {(): self.alg.one}
        for s in itertools.permutations(range(len(cols))):
            w = tuple(self.gen_index(r, cols[s[k]]) for k, r in enumerate(rows))
            vadd(out, {w: (-self.p) ** _inversions(s) * self.alg.one})
        return out

    def minor(self, rows, cols):
        return self.alg.normal_form(self.minor_free(list(rows), list(cols)))

    def det_free(self):
        r = list(range(1, self.n + 1))
        return self.minor_free(r, r)

    def relations(self):
        n, p, one = self.n, self.p, self.alg.one
        g = lambda i, j: (self.gen_index(i, j),)
        R = range(1, n + 1)
        rels = []
        for i in R:
            for j in R:
                for l in R:
                    if j < l:
                        rels.append({g(i, j) + g(i, l): one, g(i, l) + g(i, j): -p * one})
                        rels.append({g(j, i) + g(l, i): one, g(l, i) + g(j, i): -p * one})
        for i in R:
            for k in R:
                for j in R:
                    for l in R:
                        if i < k and j < l:
                            rels.append({g(i, l) + g(k, j): one, g(k, j) + g(i, l): -one})
                            r = {g(i, j) + g(k, l): one, g(k, l) + g(i, j): -one}
                            vadd(r, {g(i, l) + g(k, j): -(p - 1 / p) * one})
                            rels.append(r)
        det = self.det_free()
        vadd(det, {(): one}, -1)
        rels.append(det)
        return rels

    def gens(self):
        return self.alg.gens

    def dumps(self):
        return self.hopf.dumps()


def build_su2(convention="q^-1", q=QSYM):
    return MatrixModel(2, convention, q)


def build_su3(convention="q^-1", q=QSYM, cap=10):
    return MatrixModel(3, convention, q, cap=cap)


def build_sun(n, **kw):
    return MatrixModel(n, **kw)


def column_weights(model):
    """Weights of v_1..v_n in fundamental coordinates (v_n = varpi_1 highest)."""
    n, d = model.n, model.datum
    wts = [None] * (n + 1)
    wts[n] = Weight.fundamental(n - 1, 1)
    for j in range(n - 1, 0, -1):
        alpha = Root(tuple(int(k == n - j) for k in range(1, n)))
        wts[j] = wts[j + 1] - root_to_weight(d, alpha)
    return wts[1:]


def _as_subset(model, S):
    if isinstance(S, NodeSubset):
        return S
    return NodeSubset(model.datum, frozenset(S or ()))


class SubgroupProjection(HopfMap):
    """A surjective Hopf map from a matrix model onto a quantum subgroup."""

    def __init__(self, model, S, target, images, name, kind):
        super().__init__(model.hopf, target, images, name=name)
        self.model = model
        self.S = S
        self.kind = kind

    def coaction(self):
        return Coaction.from_map(self.model.hopf, self, name=f"ρ_{self.name}")

    def left_coaction_degrees(self):
        """Generator degrees of the left torus coaction (pi (x) id)Delta (rows)."""
        wts = column_weights(self.model)
        degs = [None] * len(self.model.alg.gens)
        for (i, j), nm in self.model.names.items():
            degs[self.model.alg.index[nm]] = wts[i - 1].coords
        return degs


def torus_projection(model, S=()):
    """pi_S: O_q(SU_n) -> O_q(L_S).  S = {} gives the maximal torus C[t^+-1]^(n-1);
    for n = 3 a single node gives the block Levi subgroup (alpha_1 -> rows/cols
    {2,3}, alpha_2 -> rows/cols {1,2})."""
    S = _as_subset(model, S)
    n = model.n
    if not S.members:
        r = n - 1
        H = group_algebra(r, q=model.q)
        wts = column_weights(model)
        images = {}
        for (i, j), nm in model.names.items():
            g = model.alg.index[nm]
            images[g] = {torus_word(H, wts[j - 1].coords): H.alg.one} if i == j else {}
        return SubgroupProjection(model, S, H, images, name="π_T", kind="torus")
    if n == 3 and len(S.members) == 1:
        (x,) = S.members
        block = {n - x, n + 1 - x}
        kill = [(i, j) for (i, j) in model.names if i != j and not ({i, j} <= block)]
        rels = [model.u(i, j) for i, j in kill]
        L = quotient_hopf(model.hopf, rels, cap=model.cap, name=f"O_q(L_{{{x}}})")
        images = {g: {(g,): L.alg.one} for g in range(len(model.alg.gens))}
        proj = SubgroupProjection(model, S, L, images, name=f"π_L{x}", kind="levi")
        proj.block = tuple(sorted(block))
        proj.killed = kill
        return proj
    raise ValueError(f"unsupported subset {S} for SU_{n}")


def semisimple_projection(model, levi):
    """O_q(SU_n) -> O_q(L_S^s): the Levi quotient with its grouplike diagonal entry set to 1."""
    (i0,) = [i for i in range(1, model.n + 1) if i not in levi.block]
    H = quotient_hopf(levi.target, [_minus_one(model.u(i0, i0), levi.target.alg.one)],
                      cap=model.cap, name=f"O_q(L_{{{sorted(levi.S.members)[0]}}}^s)")
    images = {g: {(g,): H.alg.one} for g in range(len(model.alg.gens))}
    proj = SubgroupProjection(model, levi.S, H, images, name=f"π_Ls{sorted(levi.S.members)[0]}", kind="semisimple")
    proj.block = levi.block
    return proj


def _minus_one(p, one):
    out = dict(p)
    vadd(out, {(): one}, -1)
    return out


class ZedGenerators:
    """For each coloured node x: the columns z^{varpi_x}_I and zbar^{varpi_x}_I,
    plus the distinguished elements (counit 1)."""

    def __init__(self, model, colored):
        self.model = model
        self.colored = sorted(colored)
        n = model.n
        self.z, self.zbar, self.z0, self.zbar0 = {}, {}, {}, {}
        for x in self.colored:
            cols = list(range(n - x + 1, n + 1))
            bcols = list(range(1, n - x + 1))
            self.z[x] = {I: model.minor(I, cols) for I in itertools.combinations(range(1, n + 1), len(cols))}
            self.zbar[x] = {I: model.minor(I, bcols) for I in itertools.combinations(range(1, n + 1), len(bcols))}
            self.z0[x] = self.z[x][tuple(cols)]
            self.zbar0[x] = self.zbar[x][tuple(bcols)]

    def z_gamma(self, gamma):
        """prod_x (zhat^{varpi_x})^{a_x}, x ascending; gamma in fundamental coordinates."""
        alg = self.model.alg
        out = {(): alg.one}
        for x in self.colored:
            a = gamma[x - 1]
            f = self.z0[x] if a >= 0 else self.zbar0[x]
            for _ in range(abs(a)):
                out = alg.multiply(out, f)
        for i, a in enumerate(gamma):
            if a and (i + 1) not in self.colored:
                raise ValueError(f"gamma has support outside the coloured nodes: {gamma}")
        return out

    def all_elements(self):
        for x in self.colored:
            for I, e in self.z[x].items():
                yield (f"z[{x}]{I}", +1, x, e)
            for I, e in self.zbar[x].items():
                yield (f"zbar[{x}]{I}", -1, x, e)


def zed_generators(model, S=()):
    S = _as_subset(model, S)
    if S.members and not (model.n == 3 and len(S.members) == 1):
        raise ValueError(f"unsupported subset {S}")
    return ZedGenerators(model, S.colored)


def z_gamma(model, gamma, S=()):
    return zed_generators(model, S).z_gamma(gamma)


def torus_grading(model, proj=None):
    """GradedDecomposition from the right torus coaction."""
    proj = proj or torus_projection(model)
    H = proj.target
    return GradedDecomposition.from_coaction(proj.coaction(), lambda w: torus_degree(H, w))


def bigrading(model):
    """Z^(2r) grading: (left torus degree, right torus degree)."""
    proj = torus_projection(model)
    right = torus_grading(model, proj).degrees
    left = proj.left_coaction_degrees()
    return GradedDecomposition(model.alg, [tuple(l) + tuple(r) for l, r in zip(left, right)])
