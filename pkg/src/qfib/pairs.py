"""Nested pairs B ⊆ P ⊆ A built from torus projections, and the checks run on them.

Supported pairs have P = A (the Levi factor of the torus is abelian, so
L_S^s is trivial): the Podleś pair over O_q(SU_2) and the full flag pair over
O_q(SU_3).  The torus coaction makes P a Z^r-graded algebra, P = ⊕ E_γ, with
B = E_0.  All statements are made at a degree cap and say so.
"""

from __future__ import annotations

import itertools

from .hopf import (HopfMap, grouplikes_among, takeuchi_phi, tensor_map, torus_word,
                   trivial_hopf)
from .linalg import Echelon, kernel, solve, vadd
from .models import (bigrading, build_su2, build_su3, torus_grading, torus_projection,
                     zed_generators)
from .ncalg import RewriteSystem, format_word, word_key
from .report import FAIL, INCONCLUSIVE, PASS, Report, Verdict

__all__ = ["NestedPair", "podles_pair", "su3_flag_pair", "check_nested_identities", "partition_of_unity",
           "segre_certificate", "leading_word_certificate", "quantum_affine_space",
           "strong_grading_check", "line_module_check", "build_lmap", "LMap",
           "verify_lmap_axioms", "check_canonical_inverse", "noncleft_evidence",
           "right_inverse", "check_bplus", "window", "full_report"]


def window(rank, radius):
    """All gamma in Z^rank with max |coordinate| <= radius, in a fixed order."""
    rng = range(-radius, radius + 1)
    return sorted(itertools.product(rng, repeat=rank), key=lambda g: (sum(map(abs, g)), g))


def counit_projection(hopf):
    """The Hopf map A -> C given by the counit."""
    C = trivial_hopf(hopf.alg.q)
    images = {i: ({(): c} if c else {}) for i, c in enumerate(hopf.counit_gen)}
    return HopfMap(hopf, C, images, name="ε")


class NestedPair:
    """B = A^{co pi_B(A)} ⊆ P = A^{co pi_P(A)} ⊆ A with pi_B a torus projection."""

    def __init__(self, model, name=""):
        self.model = model
        self.A = model.hopf
        self.alg = model.alg
        self.piB = torus_projection(model)
        self.piP = counit_projection(self.A)
        self.H = self.piB.target
        self.rho = self.piB.coaction()
        self.grading = torus_grading(model, self.piB)
        self.rank = model.n - 1
        self.zeds = zed_generators(model)
        self.name = name or f"{model.alg.name} torus pair"
        self._comp = {}
        self._zg = {}

    # -- graded pieces ---------------------------------------------------------

    def zero(self):
        return (0,) * self.rank

    def E_words(self, gamma, cap):
        key = (tuple(gamma), cap)
        if key not in self._comp:
            self._comp[key] = self.grading.component(gamma, cap)
        return self._comp[key]

    def E(self, gamma, cap):
        one = self.alg.one
        return [{w: one} for w in self.E_words(gamma, cap)]

    def B(self, cap):
        return self.E(self.zero(), cap)

    def Bplus(self, cap):
        """Basis of B^+ = B ∩ ker ε up to cap: w - ε(w) for nonempty weight-0 words."""
        out = []
        one = self.alg.one
        for w in self.E_words(self.zero(), cap):
            if not w:
                continue
            p = {w: one}
            e = self.A.counit_word(w)
            if e:
                vadd(p, {(): one}, -e)
            out.append(p)
        return out

    def P_words(self, cap):
        return self.alg.basis_upto(cap)

    def in_P(self, x):
        """Coinvariance under the pi_P coaction (P = A here, but checked)."""
        d = tensor_map(self.A.delta(x), [None, self.piP.as_leg_map])
        return d == {(w, ()): c for w, c in x.items()}

    def z(self, gamma):
        gamma = tuple(gamma)
        if gamma not in self._zg:
            self._zg[gamma] = self.zeds.z_gamma(gamma)
        return self._zg[gamma]

    def t(self, gamma):
        return torus_word(self.H, gamma)

    def pi(self, x):
        return self.piB(x)

    def norm(self, gamma):
        return sum(abs(a) for a in gamma)


def podles_pair(model=None):
    return NestedPair(model or build_su2(), name="Podleś pair O_q(S^2) ⊆ O_q(SU_2)")


def su3_flag_pair(model=None):
    return NestedPair(model or build_su3(), name="full flag pair O_q(F) ⊆ O_q(SU_3)")


# -- identities ---------------------------------------------------------------------

def check_nested_identities(pair, cap, radius=None):
    """Degree by degree: B ⊆ P; pi_B(P) equals the pi_P-coinvariants of pi_B(A);
    the image is spanned by grouplikes, and contains t^γ for γ in the window."""
    out = []
    alg, A, H = pair.alg, pair.A, pair.H
    bad = None
    for b in pair.B(cap):
        if not pair.in_P(b):
            bad = pair.alg.format(b)
            break
    out.append(_verdict("B ⊆ P", bad, "every basis element of B is π_P-coinvariant", cap))

    bad = None
    imgP = None
    for d in range(cap + 1):
        imgP = Echelon("lead", key=word_key)
        for w in pair.P_words(d):
            imgP.add(pair.pi({w: alg.one}))
        # independent images of A_{<=d}, with the defect of the induced pi_P-coaction
        imgs, defects = [], []
        indep = Echelon("lead", key=word_key)
        for w in alg.basis_upto(d):
            y = pair.pi({w: alg.one})
            if y and indep.add(y) is None:
                co = tensor_map(A.delta_word(w), [pair.piB.as_leg_map, pair.piP.as_leg_map])
                vadd(co, {(h, ()): c for h, c in y.items()}, -1)
                imgs.append(y)
                defects.append(co)
        co_inv = Echelon("lead", key=word_key)
        for combo in kernel(defects):
            v = {}
            for j, c in combo.items():
                vadd(v, imgs[j], c)
            co_inv.add(v)
        same = len(co_inv) == len(imgP) and all(co_inv.contains(r) for r in imgP.rows.values())
        if not same and bad is None:
            bad = f"degree {d}"
    out.append(_verdict("π_B(P) = π_B(A)^co(π_P(A))", bad,
                        "image of P equals the coinvariants of the image of A, per degree", cap))

    # grouplike spanning: every image basis vector is a combination of torus words t^γ
    words = sorted({h for r in imgP.rows.values() for h in r}, key=word_key)
    gl = grouplikes_among(H, [{h: H.alg.one} for h in words])
    out.append(_verdict("π_B(P) spanned by grouplikes", None if len(gl) == len(words) else "non-grouplike",
                        "image spanned by Γ_H", cap,
                        detail=f"{len(words)} grouplikes t^γ span the image at cap {cap}"))
    if radius is not None:
        miss = [g for g in window(pair.rank, radius)
                if pair.norm(g) * max(1, pair.rank) <= cap and not imgP.contains({pair.t(g): H.alg.one})]
        out.append(_verdict("window covered", miss[0] if miss else None,
                            "t^γ ∈ π_B(P) for γ in the window", cap))
    return out


def _verdict(name, witness, claim, cap=None, detail="", inconclusive=False):
    if witness is None:
        return Verdict(name, PASS, claim, detail=detail, cap=cap)
    return Verdict(name, INCONCLUSIVE if inconclusive else FAIL, claim, detail=detail,
                   witness=str(witness), cap=cap)


# -- strong grading ----------------------------------------------------------------------

def _products(pair, left, right, cap):
    alg = pair.alg
    out = []
    for u in left:
        for v in right:
            if len(u) + len(v) <= cap:
                out.append(((u, v), alg.nf_word(u + v)))
    return out


def strong_grading_check(pair, g1, g2, cap, level=None):
    """E_γ E_γ' ⊇ E_{γ+γ'} at filtration level L (products of total degree <= cap),
    plus a partition of unity sum e_i e'_i = 1 with e_i ∈ E_{-γ}, e'_i ∈ E_γ.

    The default level is cap - D, where D is the least degree of a partition of
    unity in E_{-γ'}E_{γ'} or in E_{γ}E_{-γ}: e = Σ (e a_i) b_i (or Σ a_i (b_i e))
    then writes any e of degree <= L as products within cap."""
    g1, g2 = tuple(g1), tuple(g2)
    alg = pair.alg
    tgt = tuple(a + b for a, b in zip(g1, g2))
    neg1 = tuple(-a for a in g1)
    name = f"E_{_g(g1)} E_{_g(g2)} = E_{_g(tgt)}"
    claim = "E_γ E_γ' = E_{γγ'} (products within cap span the target up to the level)"
    wit = partition_of_unity(pair, g1, cap)
    pu = _verdict(f"partition of unity in E_{_g(neg1)} E_{_g(g1)}",
                  None if wit is not None else "none within cap", "Σ e_i e'_i = 1", cap,
                  detail="" if wit is None else f"{len(wit)} terms, degree {_pu_degree(wit)}",
                  inconclusive=True)
    if wit is not None:
        pu.data["witness"] = [[alg.format(e), alg.format(f)] for e, f in wit]
    if level is None:
        ds = [_pu_degree(w) for w in (partition_of_unity(pair, g2, cap),
                                      partition_of_unity(pair, neg1, cap)) if w is not None]
        if not ds:
            span = Verdict(name, INCONCLUSIVE, claim, cap=cap,
                           detail="no partition of unity within cap to fix a level",
                           witness="raise cap")
            return [span, pu]
        level = cap - min(ds)
    prods = _products(pair, pair.E_words(g1, cap), pair.E_words(g2, cap), cap)
    ech = Echelon("cheap", key=word_key)
    for _, p in prods:
        ech.add(p)
    miss = next((w for w in pair.E_words(tgt, level) if not ech.contains({w: alg.one})), None)
    span = _verdict(name, None if miss is None else format_word(miss, alg.gens), claim, cap,
                    detail=f"level {level}, {len(prods)} products")
    span.data["level"] = level
    return [span, pu]


def _pu_degree(terms):
    if terms is None:
        return None
    return max(max(len(w) for w in e) + max(len(w) for w in f) for e, f in terms)


def partition_of_unity(pair, gamma, cap):
    """[(e_i, e'_i)] with e_i ∈ E_{-γ}, e'_i ∈ E_γ and Σ e_i e'_i = 1 (checked), or None.
    Searches the smallest product degree first."""
    gamma = tuple(gamma)
    key = ("pu", gamma, cap)
    if key in pair._comp:
        return pair._comp[key]
    alg = pair.alg
    neg = tuple(-a for a in gamma)
    found = None
    for d in range(0, cap + 1):
        prods = _products(pair, pair.E_words(neg, cap), pair.E_words(gamma, cap), d)
        sol = solve([p for _, p in prods], {(): alg.one})
        if sol is None:
            continue
        terms = []
        total = {}
        for j in sorted(sol):
            (u, v), _ = prods[j]
            e = {u: sol[j]}
            terms.append((e, {v: alg.one}))
            vadd(total, alg.multiply(e, {v: alg.one}))
        assert total == {(): alg.one}
        found = terms
        break
    pair._comp[key] = found
    return found


def _g(g):
    return str(g[0]) if len(g) == 1 else "(" + ",".join(map(str, g)) + ")"


# -- line modules ------------------------------------------------------------------------------

def line_module_check(pair, gamma, cap, level=None):
    """dim Φ(E_γ) = 1 with [z_γ] spanning and [e] = 0 for e ∈ E_γ^+ (up to the level)."""
    gamma = tuple(gamma)
    alg = pair.alg
    level = cap - 2 if level is None else level
    F = pair.E(gamma, cap)
    res = takeuchi_phi(alg, F, pair.Bplus(cap), cap, functional=pair.pi, level=level)
    z = pair.z(gamma)
    ez = pair.A.counit(z)
    # the explicit directions of the criterion
    zero_cls = None
    for f in pair.E(gamma, level):
        e = dict(f)
        c = pair.A.counit(f)
        if c:
            vadd(e, z, -c / ez)
        if e and not res["contains"](e):
            zero_cls = alg.format(f)
            break
    nonzero = ez != 0                       # ε kills B^+ E_γ, so [z_γ] ≠ 0
    status = res["status"]
    name = f"Φ(E_{_g(gamma)}) = C[z_γ]"
    if status == PASS and nonzero and zero_cls is None:
        v = Verdict(name, PASS, "dim Φ(E_γ) = 1, spanned by [z_γ]; [e] = 0 for e ∈ E_γ^+", cap=cap,
                    detail=f"level {level}: {res['upper']} = dim ≥ {res['lower']}")
    else:
        v = Verdict(name, INCONCLUSIVE if nonzero else FAIL,
                    "dim Φ(E_γ) = 1, spanned by [z_γ]; [e] = 0 for e ∈ E_γ^+", cap=cap,
                    detail=f"level {level}: bounds {res['lower']}..{res['upper']}",
                    witness=zero_cls or ("ε(z_γ) = 0" if not nonzero else None))
    v.data.update({"level": level, "lower": res["lower"], "upper": res["upper"]})
    return v


# -- the l-map ----------------------------------------------------------------------------

class LMap:
    """γ ↦ ℓ(t_γ) ∈ P ⊗ P, with ℓ(t_γ) = (S ⊗ id)Δ(c_γ z_γ)."""

    def __init__(self, pair, values, scales):
        self.pair = pair
        self.values = values
        self.scales = scales

    def __getitem__(self, gamma):
        return self.values[tuple(gamma)]

    def window(self):
        return sorted(self.values, key=lambda g: (sum(map(abs, g)), g))

    def format(self, gamma):
        from .hopf import format_tensor
        g = self.pair.alg.gens
        return format_tensor(self[gamma], (g, g))


def build_lmap(pair, gammas, scale=None):
    """ℓ on the given γ's.  ``scale`` maps γ to a nonzero scalar multiplying z_γ."""
    A, alg = pair.A, pair.alg
    values, scales = {}, {}
    for g in gammas:
        g = tuple(g)
        c = alg.one if scale is None else scale(g) * alg.one
        z = {w: v * c for w, v in pair.z(g).items()}
        t = tensor_map(A.delta(z), [lambda w: {(k,): v for k, v in A.antipode_word(w).items()}, None])
        for side in (0, 1):
            legs = {}
            for key, v in t.items():
                legs.setdefault(key[1 - side], {})[key[side]] = v
            for leg in legs.values():
                if not pair.in_P(leg):
                    raise ValueError(f"ℓ(t_{g}) has a leg outside P: {alg.format(leg)}")
        values[g] = t
        scales[g] = c
    return LMap(pair, values, scales)


def verify_lmap_axioms(lmap, pair, gammas=None):
    """The four ℓ-map conditions, pointwise in γ (t_γ is grouplike)."""
    H, alg = pair.H, pair.alg
    gammas = lmap.window() if gammas is None else [tuple(g) for g in gammas]
    one = alg.one
    bad = {1: None, 2: None, 3: None, 4: None}
    rho = pair.rho

    def rho_leg(w):
        return rho.apply_word(w)

    def delta_L(w):
        # (S ⊗ id) ∘ flip ∘ Δ_R
        out = {}
        for (u, h), c in rho.apply_word(w).items():
            for hh, d in H.antipode_word(h).items():
                vadd(out, {(hh, u): c * d})
        return out

    for g in gammas:
        val = lmap[g]
        tg = pair.t(g)
        if not any(g):
            if val != {((), ()): one}:
                bad[1] = bad[1] or _g(g)
        m = {}
        for (u, v), c in val.items():
            vadd(m, alg.nf_word(u + v), c)
        eps = one  # ε_H(t_γ) = 1
        if m != {(): eps}:
            bad[2] = bad[2] or _g(g)
        lhs3 = {(u, v, tg): c for (u, v), c in val.items()}
        rhs3 = tensor_map(val, [None, rho_leg])
        if lhs3 != rhs3:
            bad[3] = bad[3] or _g(g)
        lhs4 = {(tg, u, v): c for (u, v), c in val.items()}
        rhs4 = tensor_map(val, [delta_L, None])
        if lhs4 != rhs4:
            bad[4] = bad[4] or _g(g)
    claims = {1: "ℓ(1_H) = 1_P ⊗ 1_P", 2: "m_P ∘ ℓ = ε_H 1_P",
              3: "(ℓ ⊗ id)Δ = (id ⊗ Δ_R)ℓ", 4: "(id ⊗ ℓ)Δ = (Δ_L ⊗ id)ℓ, Δ_L = (S ⊗ id) flip Δ_R"}
    out = []
    for k in (1, 2, 3, 4):
        v = _verdict(f"ℓ-map axiom ({k})", None if bad[k] is None else f"γ = {bad[k]}", claims[k],
                     detail=f"{len(gammas)} values of γ")
        out.append(v)
    return out


def check_canonical_inverse(lmap, pair, gammas=None, cap=6, pdeg=None):
    """can(p ℓ(t_γ)) = p ⊗ t_γ for all basis words p of P with deg p <= pdeg."""
    alg = pair.alg
    pdeg = cap - 2 if pdeg is None else pdeg
    gammas = lmap.window() if gammas is None else [tuple(g) for g in gammas]
    one = alg.one
    bad = None
    count = 0
    for g in gammas:
        val = lmap[g]
        tg = pair.t(g)
        for p in pair.P_words(pdeg):
            count += 1
            out = {}
            for (u, v), c in val.items():
                left = alg.nf_word(p + u)
                for (v0, h), d in pair.rho.apply_word(v).items():
                    for x, a in left.items():
                        for y, b in alg.nf_word(x + v0).items():
                            vadd(out, {(y, h): c * d * a * b})
            if out != {(p, tg): one}:
                bad = f"p = {format_word(p, alg.gens)}, γ = {_g(g)}"
                break
        if bad:
            break
    return _verdict("can(p ℓ(t_γ)) = p ⊗ t_γ", bad, "ℓ inverts the canonical map", cap,
                    detail=f"{count} pairs (p, γ), deg p ≤ {pdeg}")


# -- B^+A = AB^+ ----------------------------------------------------------------------------------

def check_bplus(pair, dmax):
    """Per degree d: span{b a} = span{a b} (b ∈ B^+, deg b + deg a <= d), both inside ker π_B."""
    alg = pair.alg
    bp = pair.Bplus(dmax)
    words = alg.basis_upto(dmax)
    out = []
    for d in range(1, dmax + 1):
        spans = []
        in_ker = True
        for side in (0, 1):
            ech = Echelon("cheap", key=word_key)
            for b in bp:
                db = max(len(w) for w in b)
                for w in words:
                    if db + len(w) <= d:
                        x = alg.multiply(b, {w: alg.one}) if side == 0 else alg.multiply({w: alg.one}, b)
                        if ech.add(x) is None and pair.pi(x):
                            in_ker = False
            spans.append(ech)
        s1, s2 = spans
        same = (len(s1) == len(s2) and all(s2.contains(r) for r in s1.rows.values())
                and all(s1.contains(r) for r in s2.rows.values()))
        v = _verdict(f"B^+A = AB^+ (degree {d})", None if same and in_ker else f"degree {d}",
                     "B^+A = AB^+", d, detail=f"dim {len(s1)} vs {len(s2)}")
        v.data["dims"] = [len(s1), len(s2)]
        out.append(v)
    return out


# -- units -------------------------------------------------------------------------------------

def right_inverse(alg, x, cap):
    """Some y of degree <= cap with x y = 1, or None."""
    words = alg.basis_upto(cap)
    imgs = [alg.multiply(x, {w: alg.one}) for w in words]
    sol = solve(imgs, {(): alg.one})
    if sol is None:
        return None
    y = {}
    for j, c in sol.items():
        vadd(y, {words[j]: c})
    return y


def graded_system(alg):
    """The associated graded algebra: keep the top-degree part of every rule."""
    gr = RewriteSystem(alg.gens, q=alg.q, name=f"gr {alg.name}")
    gr.rules = {l: {w: c for w, c in r.items() if len(w) == len(l)} for l, r in alg.rules.items()}
    gr.confluent_to = alg.confluent_to
    gr._refresh()
    return gr


def quantum_affine_space(names, q, s):
    """x_j x_i = s x_i x_j inside each block of names, commuting across blocks."""
    flat = [x for blk in names for x in blk]
    block = {x: k for k, blk in enumerate(names) for x in blk}
    Q = RewriteSystem(flat, q=q, name="quantum affine space")
    for j in range(len(flat)):
        for i in range(j):
            c = s * Q.one if block[flat[i]] == block[flat[j]] else Q.one
            Q.add_relation({(j, i): Q.one, (i, j): -c})
    Q.complete_up_to(4)
    return Q


def leading_word_certificate(alg, cap, degrees=None):
    """None if for all normal words u, v with len <= cap the leading word of uv is
    defined and strictly increasing in u for fixed v and in v for fixed u; otherwise
    the offending pair.  This makes leading words multiplicative, so no zero divisors."""
    lead = {}
    degrees = range(1, cap + 1) if degrees is None else degrees

    def m(u, v):
        k = (u, v)
        if k not in lead:
            p = alg.nf_word(u + v)
            lead[k] = max(p, key=word_key) if p else None
        return lead[k]

    for i in degrees:
        U = alg.basis_words(i)
        for j in degrees:
            V = alg.basis_words(j)
            for v in V:
                prev = None
                for u in U:
                    x = m(u, v)
                    if x is None or (prev is not None and word_key(x) <= word_key(prev)):
                        return (u, v)
                    prev = x
            for u in U:
                prev = None
                for v in V:
                    x = m(u, v)
                    if prev is not None and word_key(x) <= word_key(prev):
                        return (u, v)
                    prev = x
    return None


def segre_certificate(model, cap):
    """gr O_q(SU_2) embeds in a quantum affine space via u_ij -> x_i y_j.

    Checks the map on every graded rule, injectivity in degrees <= cap, and
    multiplicative leading words in the target.  Together: gr A has no zero
    divisors in degrees <= cap, so deg(xy) = deg x + deg y there.
    Returns (ok, message)."""
    if model.n != 2:
        return False, "only available for n = 2"
    alg = model.alg
    gr = graded_system(alg)
    for s in (alg.q, 1 / alg.q):
        Q = quantum_affine_space([["x1", "x2"], ["y1", "y2"]], alg.q, s)
        img = {}
        for i in (1, 2):
            for j in (1, 2):
                img[model.gen_index(i, j)] = {(Q.index[f"x{i}"], Q.index[f"y{j}"]): Q.one}
        phi = {}

        def ph(w):
            if w not in phi:
                phi[w] = {(): Q.one} if not w else Q.multiply(ph(w[:-1]), img[w[-1]])
            return phi[w]

        if all(_apply(Q, ph, {l: gr.one}) == _apply(Q, ph, r) for l, r in gr.rules.items()):
            break
    else:
        return False, "no quantum Segre map respects the graded relations"
    for d in range(1, cap + 1):
        ech = Echelon("lead", key=word_key)
        for w in alg.basis_words(d):
            if ech.add(ph(w)) is not None:
                return False, f"quantum Segre map not injective in degree {d}"
    bad = leading_word_certificate(Q, 2 * cap, degrees=range(2, 2 * cap + 1, 2))
    if bad is not None:
        return False, f"leading words not cancellative at {bad}"
    return True, f"gr A embeds in a quantum affine space in degrees ≤ {cap}; leading words multiplicative"


def _apply(Q, ph, p):
    out = {}
    for w, c in p.items():
        vadd(out, ph(w), c)
    return out


def noncleft_evidence(pair, cap, samples=None):
    """Finite-degree evidence that P has only scalar units (so no cleaving map exists)."""
    alg = pair.alg
    out = []
    try:
        bigrading(pair.model)
        out.append(Verdict("bigrading", PASS, "every relation is homogeneous for left and right torus weights"))
    except ValueError as exc:
        out.append(Verdict("bigrading", FAIL, "every relation is homogeneous", witness=str(exc)))
    ok, msg = segre_certificate(pair.model, cap)
    v = Verdict("units are scalars", PASS if ok else INCONCLUSIVE,
                "x y = 1 with deg x, deg y ≤ cap forces x, y ∈ C",
                detail=msg if ok else "", witness=None if ok else msg, cap=cap)
    v.data["solutions"] = "x = c, y = 1/c (c ≠ 0)" if ok else "undetermined"
    out.append(v)
    if samples is None:
        samples = [("2", {(): 2 * alg.one})]
        m = pair.model
        for i in range(1, m.n + 1):
            samples.append((f"u{i}{i}", m.u(i, i)))
        for x in pair.zeds.colored:
            samples.append((f"z^{x}", pair.zeds.z0[x]))
            samples.append((f"zbar^{x}", pair.zeds.zbar0[x]))
        g = next(i for i in range(len(alg.gens)) if pair.A.counit_gen[i] == 0)
        one_plus = {(g,): alg.one, (): alg.one}
        samples.append((f"1 + {alg.gens[g]}", one_plus))
    found = {}
    for label, x in samples:
        y = right_inverse(alg, x, cap)
        found[label] = None if y is None else alg.format(y)
    scalars_ok = all((y is None) == any(w for w in x) for (_, x), y in
                     zip(samples, (found[l] for l, _ in samples)))
    v = _verdict("unit search", None if scalars_ok else "a non-scalar sample has an inverse",
                 "only scalar samples have right inverses of degree ≤ cap", cap)
    v.data["solutions"] = found
    out.append(v)
    return out


# -- everything at once -------------------------------------------------------------------------------

def full_report(pair, cap=6, radius=3, sg_radius=2, can_radius=2, bplus_deg=5, title=None):
    rep = Report(title or pair.name, {"cap": cap, "window": radius, "q": str(pair.alg.q)})
    rep.add(check_nested_identities(pair, cap, radius))
    seen = set()
    for g1 in window(pair.rank, sg_radius):
        for g2 in window(pair.rank, sg_radius):
            span, pu = strong_grading_check(pair, g1, g2, cap)
            rep.add(span)
            if pu.name not in seen:
                seen.add(pu.name)
                rep.add(pu)
    for g in window(pair.rank, radius):
        rep.add(line_module_check(pair, g, cap))
    lm = build_lmap(pair, window(pair.rank, radius))
    rep.add(verify_lmap_axioms(lm, pair))
    rep.add(check_canonical_inverse(lm, pair, window(pair.rank, can_radius), cap))
    rep.add(check_bplus(pair, bplus_deg))
    return rep
