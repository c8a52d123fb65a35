"""Hopf structure on presented algebras, coactions, coinvariants and friends.

Tensors are dicts ``(w_1, ..., w_k) -> coefficient`` whose legs are normal
words of the algebras the caller has in mind.  Structure maps are extended
from generator tables: Delta and epsilon multiplicatively, S
anti-multiplicatively.
"""

from __future__ import annotations

import math

from .linalg import Echelon, kernel, vadd
from .ncalg import (RewriteSystem, TruncationError, format_word, parse_presentation,
                    word_key)
from .report import FAIL, INCONCLUSIVE, PASS, Verdict
from .qfield import q as QSYM

__all__ = [
    "HopfPresentation", "HopfMap", "Coaction", "GradedDecomposition", "FiniteComodule",
    "tensor_mul", "tensor_map", "legs", "format_tensor", "group_algebra", "trivial_hopf",
    "check_hopf_axioms", "coinvariants", "grouplikes_among", "quotient_K", "quotient_hopf", "cotensor",
    "takeuchi_phi", "same_presentation", "torus_word", "torus_degree", "check_hopf_axioms",
]


# -- tensors ------------------------------------------------------------------

def legs(p):
    """An NCPoly viewed as a one-leg tensor."""
    return {(w,): c for w, c in p.items()}


def tensor_mul(systems, s, t):
    """Product in A_1 (x) ... (x) A_k, legwise."""
    out = {}
    for ks, a in s.items():
        for kt, b in t.items():
            acc = {(): a * b}
            for sys, u, v in zip(systems, ks, kt):
                piece = sys.nf_word(u + v)
                nxt = {}
                for k, c in acc.items():
                    for w, d in piece.items():
                        vadd(nxt, {k + (w,): c * d})
                acc = nxt
            vadd(out, acc)
    return out


def tensor_map(t, maps):
    """Apply a linear map to each leg.  ``maps[i]`` takes a word and returns a
    dict of key-tuples (so a map may split one leg into several); ``None``
    keeps the leg."""
    out = {}
    for key, c in t.items():
        acc = {(): c}
        for w, m in zip(key, maps):
            part = {(w,): 1} if m is None else m(w)
            nxt = {}
            for k, x in acc.items():
                for k2, y in part.items():
                    vadd(nxt, {k + k2: x * y})
            acc = nxt
        vadd(out, acc)
    return out


def flip(t):
    return {(k[1], k[0]): c for k, c in t.items()}


def multiply_legs(sys, t):
    """m: A (x) A -> A."""
    out = {}
    for (u, v), c in t.items():
        vadd(out, sys.nf_word(u + v), c)
    return out


def format_tensor(t, names_per_leg, sep=" ⊗ "):
    from .ncalg import _coef_str
    if not t:
        return "0"
    parts = []
    for key in sorted(t, key=lambda k: tuple(word_key(w) for w in k), reverse=True):
        cs = _coef_str(t[key])
        body = sep.join(format_word(w, n) for w, n in zip(key, names_per_leg))
        s = cs + body if cs not in ("",) else body
        if s.startswith("-"):
            parts.append(("- " if parts else "-") + s[1:])
        else:
            parts.append(("+ " if parts else "") + s)
    return " ".join(parts)


# -- Hopf presentations -----------------------------------------------------------

class HopfPresentation:
    """A presented algebra with Delta, epsilon and S given on generators.

    ``delta[g]`` is a tensor dict ``(u, v) -> c``; ``counit[g]`` a scalar;
    ``antipode[g]`` an NCPoly; ``antipode_inv`` optional (needed when S^2 != id).
    ``grouplike_gens`` lists declared grouplike elements (NCPolys).
    """

    def __init__(self, alg, delta, counit, antipode, antipode_inv=None,
                 grouplike_gens=(), name=None):
        self.alg = alg
        self.name = name or alg.name
        n = len(alg.gens)
        self.delta_gen = [_norm_tensor(alg, delta[i]) for i in range(n)]
        self.counit_gen = [counit[i] for i in range(n)]
        self.antipode_gen = [alg.normal_form(antipode[i]) for i in range(n)]
        self.antipode_inv_gen = (None if antipode_inv is None
                                 else [alg.normal_form(antipode_inv[i]) for i in range(n)])
        self.grouplike_gens = [alg.normal_form(g) for g in grouplike_gens]
        self._dmemo = {}
        self._smemo = {}
        self._simemo = {}

    @property
    def gens(self):
        return self.alg.gens

    def reset_caches(self):
        self._dmemo, self._smemo, self._simemo = {}, {}, {}

    # structure maps on words
    def delta_word(self, w):
        r = self._dmemo.get(w)
        if r is None:
            if not w:
                r = {((), ()): self.alg.one}
            elif len(w) == 1:
                r = self.delta_gen[w[0]]
            else:
                r = tensor_mul((self.alg, self.alg), self.delta_word(w[:-1]), self.delta_gen[w[-1]])
            self._dmemo[w] = r
        return r

    def counit_word(self, w):
        c = self.alg.one
        for g in w:
            c = c * self.counit_gen[g]
            if not c:
                break
        return c

    def _anti(self, w, table, memo):
        r = memo.get(w)
        if r is None:
            if not w:
                r = {(): self.alg.one}
            elif len(w) == 1:
                r = table[w[0]]
            else:
                r = self.alg.multiply(table[w[-1]], self._anti(w[:-1], table, memo))
            memo[w] = r
        return r

    def antipode_word(self, w):
        return self._anti(w, self.antipode_gen, self._smemo)

    def antipode_inv_word(self, w):
        if self.antipode_inv_gen is None:
            raise ValueError(f"{self.name}: no inverse antipode table")
        return self._anti(w, self.antipode_inv_gen, self._simemo)

    # linear extensions
    def delta(self, x, cap=None):
        if cap is not None and max((len(w) for w in x), default=0) > cap:
            raise TruncationError(f"degree exceeds cap {cap}")
        out = {}
        for w, c in x.items():
            vadd(out, self.delta_word(w), c)
        return out

    def counit(self, x):
        out = 0 * self.alg.one
        for w, c in x.items():
            out = out + c * self.counit_word(w)
        return out

    def antipode(self, x):
        out = {}
        for w, c in x.items():
            vadd(out, self.antipode_word(w), c)
        return out

    def antipode_inv(self, x):
        out = {}
        for w, c in x.items():
            vadd(out, self.antipode_inv_word(w), c)
        return out

    def delta_as_map(self, w):
        return self.delta_word(w)

    def counit_as_map(self, w):
        c = self.counit_word(w)
        return {(): c} if c else {}

    def element(self, text):
        return self.alg.parse_poly(text)

    # text format
    def dumps(self):
        a = self.alg
        lines = a.dumps().rstrip("\n").split("\n")
        lines[0] = f"algebra {self.name}"
        for i, g in enumerate(a.gens):
            lines.append(f"counit {g} = {self.counit_gen[i]}")
        for i, g in enumerate(a.gens):
            lines.append(f"delta {g} = {format_tensor(self.delta_gen[i], (a.gens, a.gens))}")
        for i, g in enumerate(a.gens):
            lines.append(f"antipode {g} = {a.format(self.antipode_gen[i])}")
        if self.antipode_inv_gen is not None:
            for i, g in enumerate(a.gens):
                lines.append(f"antipode_inv {g} = {a.format(self.antipode_inv_gen[i])}")
        for gl in self.grouplike_gens:
            lines.append(f"grouplike {a.format(gl)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text):
        parsed = parse_presentation(text)
        alg = parsed["algebra"]
        delta, counit, anti, anti_inv, gls = {}, {}, {}, {}, []
        for head, rest, lineno in parsed["extra"]:
            if head == "grouplike":
                gls.append(alg.parse_poly(rest))
                continue
            g, sep, rhs = rest.partition("=")
            g = g.strip()
            if not sep or g not in alg.index:
                raise ValueError(f"line {lineno}: expected '<generator> = ...'")
            i = alg.index[g]
            if head == "counit":
                c = alg.parse_poly(rhs)
                if any(w for w in c):
                    raise ValueError(f"line {lineno}: counit must be a scalar")
                counit[i] = c.get((), 0 * alg.one)
            elif head == "antipode":
                anti[i] = alg.parse_poly(rhs)
            elif head == "antipode_inv":
                anti_inv[i] = alg.parse_poly(rhs)
            elif head == "delta":
                delta[i] = _parse_tensor(alg, rhs, lineno)
        n = len(alg.gens)
        for table, what in ((delta, "delta"), (counit, "counit"), (anti, "antipode")):
            missing = [alg.gens[i] for i in range(n) if i not in table]
            if missing:
                raise ValueError(f"missing {what} for {', '.join(missing)}")
        return cls(alg, delta, counit, anti, anti_inv if anti_inv else None, gls, name=alg.name)


def _norm_tensor(alg, t):
    out = {}
    for (u, v), c in t.items():
        lu, lv = alg.nf_word(u), alg.nf_word(v)
        for x, a in lu.items():
            for y, b in lv.items():
                vadd(out, {(x, y): c * a * b})
    return out


def _parse_tensor(alg, text, lineno):
    text = text.replace("(x)", "⊗")
    out = {}
    # split into signed summands at top level, then each summand at its single ⊗
    depth, start, terms = 0, 0, []
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            prev = text[:i].rstrip()
            if prev and prev[-1] not in "*/^⊗(":
                terms.append(text[start:i])
                start = i
    terms.append(text[start:])
    for term in terms:
        term = term.strip()
        if not term:
            continue
        if term.count("⊗") != 1:
            raise ValueError(f"line {lineno}: each summand needs exactly one ⊗: {term!r}")
        left, right = term.split("⊗")
        sign = 1
        left = left.strip()
        if left.startswith("+"):
            left = left[1:]
        elif left.startswith("-"):
            left, sign = left[1:], -1
        lp, rp = alg.parse_poly(left.strip() or "1"), alg.parse_poly(right.strip())
        for u, a in lp.items():
            for v, b in rp.items():
                vadd(out, {(u, v): sign * a * b})
    return out


def group_algebra(r, q=QSYM, names=None):
    """C[t_1^{+-1}, ..., t_r^{+-1}] with grouplike generators."""
    if names is None:
        names = ["t"] if r == 1 else [f"t{i}" for i in range(1, r + 1)]
    gens = []
    for n in names:
        gens += [n, n + "i"]
    alg = RewriteSystem(gens, q=q, name=f"C[T^{r}]")
    one = alg.one
    for i in range(r):
        t, ti = 2 * i, 2 * i + 1
        alg.add_relation({(ti, t): one, (): -one})
        alg.add_relation({(t, ti): one, (): -one})
        for j in range(2 * i + 2, 2 * r):
            alg.add_relation({(j, t): one, (t, j): -one})
            alg.add_relation({(j, ti): one, (ti, j): -one})
    alg.complete_up_to(4)
    n = len(gens)
    delta = {k: {((k,), (k,)): one} for k in range(n)}
    counit = {k: one for k in range(n)}
    anti = {k: {(k ^ 1,): one} for k in range(n)}
    H = HopfPresentation(alg, delta, counit, anti, anti,
                         grouplike_gens=[{(2 * i,): one} for i in range(r)], name=alg.name)
    H.rank = r
    return H


def torus_word(H, gamma):
    """The normal word of t^gamma in a group algebra built by group_algebra."""
    w = ()
    for i, a in enumerate(gamma):
        w += ((2 * i) if a > 0 else (2 * i + 1),) * abs(a)
    return w


def torus_degree(H, w):
    deg = [0] * H.rank
    for g in w:
        deg[g // 2] += 1 if g % 2 == 0 else -1
    return tuple(deg)


def trivial_hopf(q=QSYM):
    """The one-dimensional Hopf algebra C."""
    alg = RewriteSystem((), q=q, name="C")
    alg.confluent_to = math.inf
    return HopfPresentation(alg, {}, {}, {}, {}, name="C")


# -- maps and coactions -------------------------------------------------------------

class HopfMap:
    """Algebra map source -> target given on generators (candidate Hopf map)."""

    def __init__(self, source, target, images, name=""):
        self.source = source
        self.target = target
        self.images = [target.alg.normal_form(images[i]) for i in range(len(source.gens))]
        self.name = name
        self._memo = {}

    def apply_word(self, w):
        r = self._memo.get(w)
        if r is None:
            if not w:
                r = {(): self.target.alg.one}
            elif len(w) == 1:
                r = self.images[w[0]]
            else:
                r = self.target.alg.multiply(self.apply_word(w[:-1]), self.images[w[-1]])
            self._memo[w] = r
        return r

    def __call__(self, x):
        out = {}
        for w, c in x.items():
            vadd(out, self.apply_word(w), c)
        return out

    def as_leg_map(self, w):
        return legs(self.apply_word(w))

    def check(self, words_cap=1):
        """Relations respected; commutes with Delta, epsilon, S on words of length <= words_cap."""
        A, H = self.source, self.target
        out = []
        bad = None
        for lhs, rhs in A.alg.defining_pairs():
            d = dict(self.apply_word(lhs))
            vadd(d, self(rhs), -1)
            if d:
                bad = format_word(lhs, A.gens)
                break
        out.append(_v(f"{self.name}: relations", bad, "pi(lhs) = pi(rhs) for every rule"))
        bad = {"delta": None, "counit": None, "antipode": None}
        for w in A.alg.basis_upto(words_cap):
            img = self.apply_word(w)
            if bad["delta"] is None:
                lhs = H.delta(img)
                rhs = tensor_map(A.delta_word(w), [self.as_leg_map, self.as_leg_map])
                if lhs != rhs:
                    bad["delta"] = format_word(w, A.gens)
            if bad["counit"] is None and H.counit(img) != A.counit_word(w):
                bad["counit"] = format_word(w, A.gens)
            if bad["antipode"] is None and H.antipode(img) != self(A.antipode_word(w)):
                bad["antipode"] = format_word(w, A.gens)
        for k in ("delta", "counit", "antipode"):
            out.append(_v(f"{self.name}: commutes with {k}", bad[k], f"{k} intertwined on words of length <= {words_cap}",
                          cap=words_cap))
        # surjectivity: every target generator is hit by the image of words of length <= 2
        ech = Echelon("lead", key=word_key)
        for w in A.alg.basis_upto(2):
            ech.add(self.apply_word(w))
        miss = [g for i, g in enumerate(H.gens) if not ech.contains(H.alg.nf_word((i,)))]
        out.append(_v(f"{self.name}: surjective", miss[0] if miss else None,
                      "each target generator lies in the image"))
        return out


def _v(name, witness, claim="", cap=None, detail=""):
    if witness is None:
        return Verdict(name, PASS, claim, detail=detail, cap=cap)
    return Verdict(name, FAIL, claim, detail=detail, witness=str(witness), cap=cap)


class Coaction:
    """Right coaction rho: A -> A (x) H given on generators, extended multiplicatively."""

    def __init__(self, A, H, images, name=""):
        self.A = A            # HopfPresentation or anything with .alg
        self.H = H
        self.images = [_norm_pair(A.alg, H.alg, images[i]) for i in range(len(A.alg.gens))]
        self.name = name
        self._memo = {}

    @classmethod
    def from_map(cls, A, pi, name=""):
        images = {i: tensor_map(A.delta_word((i,)), [None, pi.as_leg_map]) for i in range(len(A.gens))}
        co = cls(A, pi.target, images, name=name or f"(id ⊗ {pi.name})Δ")
        co.map = pi
        return co

    def apply_word(self, w):
        r = self._memo.get(w)
        if r is None:
            if not w:
                r = {((), ()): self.A.alg.one}
            elif len(w) == 1:
                r = self.images[w[0]]
            else:
                r = tensor_mul((self.A.alg, self.H.alg), self.apply_word(w[:-1]), self.images[w[-1]])
            self._memo[w] = r
        return r

    def __call__(self, x):
        out = {}
        for w, c in x.items():
            vadd(out, self.apply_word(w), c)
        return out

    def is_coinvariant(self, x):
        d = self(x)
        vadd(d, {(w, ()): c for w, c in x.items()}, -1)
        return not d

    def check(self):
        A, H = self.A, self.H
        out = []
        bad = None
        for lhs, rhs in A.alg.defining_pairs():
            d = dict(self.apply_word(lhs))
            vadd(d, self(rhs), -1)
            if d:
                bad = format_word(lhs, A.alg.gens)
                break
        out.append(_v(f"{self.name}: algebra map", bad, "rho respects every relation"))
        bad_c = bad_u = None
        for i, g in enumerate(A.alg.gens):
            r = self.images[i]
            left = tensor_map(r, [None, H.delta_as_map])
            right = tensor_map(r, [lambda w: self.apply_word(w), None])
            if left != right and bad_c is None:
                bad_c = g
            u = tensor_map(r, [None, H.counit_as_map])
            if u != {(w,): c for w, c in {(i,): A.alg.one}.items()} and bad_u is None:
                bad_u = g
        out.append(_v(f"{self.name}: coassociative", bad_c, "(id ⊗ Δ)ρ = (ρ ⊗ id)ρ on generators"))
        out.append(_v(f"{self.name}: counital", bad_u, "(id ⊗ ε)ρ = id on generators"))
        return out


def _norm_pair(a1, a2, t):
    out = {}
    for (u, v), c in t.items():
        for x, a in a1.nf_word(u).items():
            for y, b in a2.nf_word(v).items():
                vadd(out, {(x, y): c * a * b})
    return out


class GradedDecomposition:
    """A Z^k-grading given by generator degrees; every rule must be homogeneous."""

    def __init__(self, alg, degrees):
        self.alg = alg
        self.degrees = [tuple(d) for d in degrees]
        self.k = len(self.degrees[0]) if self.degrees else 0
        for lhs, rhs in alg.rules.items():
            dl = self.degree(lhs)
            for w in rhs:
                if self.degree(w) != dl:
                    raise ValueError(f"rule for {format_word(lhs, alg.gens)} is not homogeneous")

    def degree(self, w):
        d = [0] * self.k
        for g in w:
            for i, x in enumerate(self.degrees[g]):
                d[i] += x
        return tuple(d)

    def degree_of(self, p):
        """Degree of a homogeneous NCPoly (None for 0, error if mixed)."""
        degs = {self.degree(w) for w in p}
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop() if degs else None

    def component(self, gamma, cap):
        """Normal words of length <= cap and degree gamma."""
        gamma = tuple(gamma)
        return [w for w in self.alg.basis_upto(cap) if self.degree(w) == gamma]

    def components(self, cap):
        out = {}
        for w in self.alg.basis_upto(cap):
            out.setdefault(self.degree(w), []).append(w)
        return out

    @classmethod
    def from_coaction(cls, co, degree_of_target_word):
        """Generator degrees from a diagonal coaction rho(g) = g (x) h_g."""
        degs = []
        for i, img in enumerate(co.images):
            if len(img) != 1:
                raise ValueError(f"coaction is not diagonal on {co.A.alg.gens[i]}")
            ((u, h), c), = img.items()
            if u != (i,) or c != co.A.alg.one:
                raise ValueError(f"coaction is not diagonal on {co.A.alg.gens[i]}")
            degs.append(degree_of_target_word(h))
        return cls(co.A.alg, degs)


# -- operations -----------------------------------------------------------------------

def check_hopf_axioms(H, cap):
    """Coassociativity, counit and antipode laws on all normal words of length <= cap,
    plus well-definedness of Delta, epsilon, S (and S^-1) on the relations."""
    alg = H.alg
    out = []
    one = alg.one

    def settle(name, claim, eq, longest, witness):
        # a mismatch is only conclusive where normal forms are known unique
        if eq:
            return Verdict(name, PASS, claim, cap=cap)
        if longest > alg.confluent_to:
            return Verdict(name, INCONCLUSIVE, claim, detail=f"needs confluence to length {longest}",
                           witness=witness, cap=cap)
        return Verdict(name, FAIL, claim, witness=witness, cap=cap)

    # well-definedness on relations
    rel = {"delta": None, "counit": None, "antipode": None, "antipode_inv": None}
    for lhs, rhs in alg.defining_pairs():
        name = format_word(lhs, alg.gens)
        d = dict(H.delta_word(lhs))
        vadd(d, H.delta(rhs), -1)
        if d and rel["delta"] is None:
            rel["delta"] = name
        if H.counit_word(lhs) != H.counit(rhs) and rel["counit"] is None:
            rel["counit"] = name
        s = dict(H.antipode_word(lhs))
        vadd(s, H.antipode(rhs), -1)
        if s and rel["antipode"] is None:
            rel["antipode"] = name
        if H.antipode_inv_gen is not None:
            s = dict(H.antipode_inv_word(lhs))
            vadd(s, H.antipode_inv(rhs), -1)
            if s and rel["antipode_inv"] is None:
                rel["antipode_inv"] = name
    for k, w in rel.items():
        if k == "antipode_inv" and H.antipode_inv_gen is None:
            continue
        out.append(_v(f"{k} respects relations", w, f"{k}(lhs) = {k}(rhs) for every rule"))

    if H.antipode_inv_gen is not None:
        bad = None
        for i, g in enumerate(alg.gens):
            x = {(i,): one}
            if H.antipode(H.antipode_inv(x)) != x or H.antipode_inv(H.antipode(x)) != x:
                bad = g
                break
        out.append(_v("antipode bijective", bad, "S S^-1 = S^-1 S = id on generators"))

    first = {"coassociativity": None, "counit": None, "antipode": None}
    longest = {"coassociativity": 0, "counit": 0, "antipode": 0}
    count = 0
    for w in alg.basis_upto(cap):
        count += 1
        name = format_word(w, alg.gens)
        dw = H.delta_word(w)
        if first["coassociativity"] is None:
            l = tensor_map(dw, [H.delta_as_map, None])
            r = tensor_map(dw, [None, H.delta_as_map])
            if l != r:
                first["coassociativity"] = name
            longest["coassociativity"] = max(longest["coassociativity"], len(w))
        if first["counit"] is None:
            l = tensor_map(dw, [H.counit_as_map, None])
            r = tensor_map(dw, [None, H.counit_as_map])
            target = {(w,): one}
            if l != target or r != target:
                first["counit"] = name
        if first["antipode"] is None:
            eps = H.counit_word(w)
            target = {(): eps} if eps else {}
            l, r = {}, {}
            deg = 0
            for (u, v), c in dw.items():
                su, sv = H.antipode_word(u), H.antipode_word(v)
                vadd(l, alg.multiply(su, {v: one}), c)
                vadd(r, alg.multiply({u: one}, sv), c)
                deg = max(deg, max((len(x) for x in su), default=0) + len(v),
                          max((len(x) for x in sv), default=0) + len(u))
            longest["antipode"] = max(longest["antipode"], deg)
            if l != target or r != target:
                first["antipode"] = name
    out.append(settle("coassociativity", "(Δ ⊗ id)Δ = (id ⊗ Δ)Δ", first["coassociativity"] is None,
                      longest["coassociativity"], first["coassociativity"]))
    out.append(settle("counit law", "(ε ⊗ id)Δ = id = (id ⊗ ε)Δ", first["counit"] is None, cap, first["counit"]))
    out.append(settle("antipode law", "m(S ⊗ id)Δ = ηε = m(id ⊗ S)Δ", first["antipode"] is None,
                      longest["antipode"], first["antipode"]))
    for v in out[-3:]:
        v.data["words_checked"] = count
    return out


def coinvariants(rho, d):
    """Basis of {x in A_{<=d} : rho(x) = x (x) 1}, as NCPolys (kernel of rho - id (x) 1)."""
    alg = rho.A.alg
    words = alg.basis_upto(d)
    images = []
    for w in words:
        im = dict(rho.apply_word(w))
        vadd(im, {(w, ()): alg.one}, -1)
        images.append(im)
    out = []
    for combo in kernel(images):
        x = {}
        for j, c in combo.items():
            vadd(x, {words[j]: c})
        out.append(x)
    return sorted(out, key=lambda p: word_key(max(p, key=word_key)))


def grouplikes_among(H, candidates):
    out = []
    for x in candidates:
        x = H.alg.normal_form(x)
        if not x or H.counit(x) != 1:
            continue
        xx = {}
        for u, a in x.items():
            for v, b in x.items():
                vadd(xx, {(u, v): a * b})
        if H.delta(x) == xx:
            out.append(x)
    return out


def quotient_hopf(H, relations, cap=6, name=None):
    """H / <relations> with Delta, epsilon, S inherited; the ideal must be a Hopf ideal
    (checked on the rewrite rules of the quotient)."""
    alg = H.alg.copy(name=name or f"{H.name}/I")
    for rel in relations:
        alg.add_relation(rel)
    alg.complete_up_to(cap)
    n = len(alg.gens)
    K = HopfPresentation(
        alg,
        {i: _norm_tensor(alg, H.delta_gen[i]) for i in range(n)},
        {i: H.counit_gen[i] for i in range(n)},
        {i: H.antipode_gen[i] for i in range(n)},
        None if H.antipode_inv_gen is None else {i: H.antipode_inv_gen[i] for i in range(n)},
        grouplike_gens=(), name=alg.name)
    bad = [v for v in check_hopf_axioms(K, 0) if v.name.endswith("relations") and not v]
    if bad:
        raise ValueError(f"induced structure is not well defined: {bad[0].name} at {bad[0].witness}")
    return K


def quotient_K(H, grouplikes=None, cap=6):
    """K_H = H / <g - 1 : g in the declared grouplikes>, with inherited structure maps."""
    gl = H.grouplike_gens if grouplikes is None else [H.alg.normal_form(g) for g in grouplikes]
    verified = grouplikes_among(H, gl)
    if len(verified) != len(gl):
        raise ValueError("a declared grouplike is not grouplike")
    rels = []
    for g in gl:
        rel = dict(g)
        vadd(rel, {(): H.alg.one}, -1)
        rels.append(rel)
    return quotient_hopf(H, rels, cap, name=f"K({H.name})")


def same_presentation(H1, H2):
    """Identical generators and rewrite rules (so identical normal-word bases)."""
    return H1.alg.gens == H2.alg.gens and H1.alg.rules == H2.alg.rules


class FiniteComodule:
    """A finite-dimensional comodule: labels plus coaction, either
    right  v_i -> sum v_j (x) h   (coaction[i] = {(j, hword): c})  or
    left   w_i -> sum h (x) w_j   (coaction[i] = {(hword, j): c})."""

    def __init__(self, H, labels, coaction, side):
        self.H = H
        self.labels = list(labels)
        self.coaction = coaction
        self.side = side

    @classmethod
    def trivial(cls, H, side="left"):
        one = H.alg.one
        co = {0: {((), 0): one}} if side == "left" else {0: {(0, ()): one}}
        return cls(H, ["1"], co, side)


def cotensor(V, W):
    """Basis of V □_H W = ker(rho_V (x) id - id (x) rho_W), as dicts (i, k) -> c."""
    if V.side != "right" or W.side != "left":
        raise ValueError("need a right comodule V and a left comodule W")
    pairs = [(i, k) for i in range(len(V.labels)) for k in range(len(W.labels))]
    images = []
    for i, k in pairs:
        im = {}
        for (j, h), c in V.coaction[i].items():
            vadd(im, {(j, h, k): c})
        for (h, l), c in W.coaction[k].items():
            vadd(im, {(i, h, l): -c})
        images.append(im)
    out = []
    for combo in kernel(images):
        out.append({pairs[j]: c for j, c in combo.items()})
    return out


def takeuchi_phi(alg, F, Bplus, cap, functional=None, level=None):
    """Phi(F) = F / B^+ F at truncation.

    ``F``: basis NCPolys of F_{<=cap} (a left B-submodule); ``Bplus``: basis of
    B^+ up to cap.  The span U of products b f with deg b + deg f <= cap is a
    lower approximation of B^+ F; ``functional`` (a linear map on NCPolys
    vanishing on B^+ F, such as pi_B) gives the matching lower bound on the
    quotient dimension.  Equal bounds certify the quotient exactly.
    With ``level`` only F elements of degree <= level are classified, while U
    still uses all products up to cap.
    """
    deg = lambda p: max((len(w) for w in p), default=0)
    U = Echelon("cheap", key=word_key)
    for b in Bplus:
        db = deg(b)
        for f in F:
            if db + deg(f) <= cap:
                U.add(alg.multiply(b, f))
    if level is not None:
        F = [f for f in F if deg(f) <= level]
    reps, coords = [], []
    ext = Echelon("cheap", track=True, key=word_key)
    for r in U.rows.values():
        ext.add(r, None)
    for j, f in enumerate(F):
        if ext.add(f, ("F", j)) is None:
            reps.append(j)
    upper = len(reps)
    # quotient map: coordinates of each F element in the chosen representatives
    for f in F:
        combo = {}
        ext.reduce(f, combo)
        coords.append({k[1]: -c for k, c in combo.items() if k is not None and k[0] == "F"})
    lower = None
    if functional is not None:
        ech = Echelon("cheap")
        for f in F:
            ech.add(functional(f))
        lower = len(ech)
    status = PASS if lower is not None and lower == upper else INCONCLUSIVE
    return {"representatives": [F[j] for j in reps], "rep_index": reps, "quotient_map": coords,
            "upper": upper, "lower": lower, "status": status, "Bplus_F_dim": len(U),
            "contains": lambda x: U.contains(dict(x))}
