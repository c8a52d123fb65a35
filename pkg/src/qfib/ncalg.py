"""Noncommutative polynomials over Q(q) and a degree-truncated rewriting engine.

Words are tuples of generator indices.  A generator's index *is* its rank in
the monomial order, so the graded lexicographic order is simply
``(len(w), w)``.  An NCPoly is a plain dict ``word -> coefficient`` without
zero entries; the empty word is the unit.

Coefficients are ``Scalar`` (symbolic q) or ``Fraction`` (q specialized);
nothing here depends on which.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction

from .expr import ParseError, evaluate, parse
from .linalg import vadd
from .qfield import ONE, Scalar, q as QSYM

__all__ = [
    "RewriteError", "TruncationError", "CompletionError", "RewriteSystem",
    "word_key", "degree", "poly_add", "poly_scale", "free_mul",
    "format_poly", "format_word", "parse_presentation",
]

UNIT = ()


class RewriteError(RuntimeError):
    """Rewriting did not terminate within the step budget."""


class TruncationError(ValueError):
    """An operation would need words longer than the permitted cap."""


class CompletionError(RuntimeError):
    def __init__(self, message, overlap=None):
        super().__init__(message)
        self.overlap = overlap


def word_key(w):
    return (len(w), w)


def degree(p):
    return max((len(w) for w in p), default=-1)


def poly_add(*ps):
    out = {}
    for p in ps:
        vadd(out, p)
    return out


def poly_scale(p, c):
    if not c:
        return {}
    return {w: v * c for w, v in p.items()}


def free_mul(p, r):
    """Product in the free algebra (concatenation, no rewriting)."""
    out = {}
    for u, a in p.items():
        for v, b in r.items():
            w = u + v
            x = out.get(w)
            x = a * b if x is None else x + a * b
            if x:
                out[w] = x
            else:
                out.pop(w, None)
    return out


def _coef_str(c):
    s = str(c)
    if s == "1":
        return ""
    if s == "-1":
        return "-"
    simple = s.lstrip("-")
    if simple.isdigit() or (simple.startswith("q") and " " not in simple and "/" not in simple):
        return s + "*"
    return f"({s})*"


def format_word(w, names, sep="*"):
    return sep.join(names[i] for i in w) if w else "1"


def format_poly(p, names, sep="*"):
    """Deterministic text rendering, terms in descending monomial order."""
    if not p:
        return "0"
    parts = []
    for w in sorted(p, key=word_key, reverse=True):
        c = p[w]
        cs = _coef_str(c)
        if not w:
            s = str(c)
            body = f"({s})" if (" " in s or "/" in s and not s.lstrip("-")[0].isdigit()) else s
        else:
            body = cs + format_word(w, names, sep)
        if parts:
            if body.startswith("-"):
                parts.append("- " + body[1:])
            else:
                parts.append("+ " + body)
        else:
            parts.append(body)
    return " ".join(parts)


class RewriteSystem:
    """Ordered rewrite rules ``lhs -> rhs`` for a finitely presented algebra.

    ``gens`` are listed in increasing monomial order.  ``q`` is the value of
    the deformation parameter used by the text loader (``Scalar`` q, or a
    ``Fraction`` in specialized mode).
    """

    max_steps = 2_000_000

    def __init__(self, gens, relations=(), q=QSYM, name=""):
        self.gens = tuple(gens)
        self.index = {g: i for i, g in enumerate(self.gens)}
        if len(self.index) != len(self.gens):
            raise ValueError("duplicate generator names")
        self.q = q
        self.one = ONE if isinstance(q, Scalar) else Fraction(1)
        self.name = name
        self.aliases = {}
        self.relations = []     # defining relations as given (free-algebra polys)
        self.rules = {}
        self.confluent_to = 0
        self._lens = ()
        self._memo = {}
        self._lmemo = {}
        self._basis = {}
        self._steps = 0
        for rel in relations:
            self.add_relation(rel)

    # -- construction --------------------------------------------------------

    def copy(self, name=None):
        new = RewriteSystem(self.gens, q=self.q, name=name or self.name)
        new.rules = {l: dict(r) for l, r in self.rules.items()}
        new.confluent_to = self.confluent_to
        new.aliases = dict(self.aliases)
        new.relations = list(self.relations)
        new._refresh()
        return new

    def _refresh(self):
        self._lens = tuple(sorted({len(l) for l in self.rules}))
        self._memo = {}
        self._lmemo = {}
        self._basis = {}

    def gen(self, name):
        return {(self.index[name],): self.one}

    def scalar(self, c):
        return {UNIT: c * self.one} if c else {}

    def orient(self, p):
        """Turn a relation p = 0 into (lhs, rhs) with lhs the leading word."""
        lead = max(p, key=word_key)
        lc = p[lead]
        inv = -1 / lc
        rhs = {w: c * inv for w, c in p.items() if w != lead}
        return lead, rhs

    def add_relation(self, p):
        """Add the relation p = 0, keeping the rule set inter-reduced.
        Returns the list of lhs words of rules that were (re)inserted."""
        self.relations.append(dict(p))
        return self._insert(p)

    def defining_pairs(self):
        """The defining relations as (lead word, remainder) pairs in the free algebra,
        i.e. lead = remainder holds in the algebra."""
        out = []
        for rel in self.relations:
            lead, rhs = self.orient(rel)
            out.append((lead, rhs))
        return out

    def _insert(self, p):
        pending = [p]
        inserted = []
        while pending:
            rel = self.normal_form(pending.pop())
            if not rel:
                continue
            lhs, rhs = self.orient(rel)
            if any(len(w) > len(lhs) for w in rhs):
                raise ValueError("rule is not degree-nonincreasing")
            # rules whose lhs contains the new lhs must be re-derived
            for old in [l for l in self.rules if _contains(l, lhs)]:
                old_rhs = self.rules.pop(old)
                back = dict(old_rhs)
                vadd(back, {old: self.one}, -1)
                pending.append(back)
            self.rules[lhs] = rhs
            self._refresh()
            for l in list(self.rules):
                if l != lhs:
                    self.rules[l] = self.normal_form(self.rules[l])
            self._memo = {}
            self._lmemo = {}
            inserted.append(lhs)
        self.confluent_to = 0
        return inserted

    # -- rewriting -----------------------------------------------------------

    def _find(self, w):
        rules = self.rules
        n = len(w)
        for i in range(n):
            for l in self._lens:
                if i + l > n:
                    break
                if w[i:i + l] in rules:
                    return i, l
        return None

    def is_normal(self, w):
        return self._find(w) is None

    def _nfw(self, w):
        r = self._memo.get(w)
        if r is not None:
            return r
        if not w or self._find(w) is None:
            r = {w: self.one}
        else:
            # normal form of the tail, then multiply the first letter back on
            r = {}
            for v, c in self._nfw(w[1:]).items():
                vadd(r, self._lmul(w[0], v), c)
        self._memo[w] = r
        return r

    def _lmul(self, g, v):
        """Normal form of g*v for a generator g and a normal word v."""
        key = (g,) + v
        r = self._lmemo.get(key)
        if r is not None:
            return r
        rules = self.rules
        hit = None
        for l in self._lens:
            if l > len(key):
                break
            if key[:l] in rules:
                hit = l
                break
        if hit is None:
            r = {key: self.one}
        else:
            self._steps += 1
            if self._steps > self.max_steps:
                raise RewriteError(f"rewriting budget exhausted at word {format_word(key, self.gens)}")
            rest = key[hit:]
            r = {}
            for u, c in rules[key[:hit]].items():
                acc = {rest: self.one}
                for letter in reversed(u):
                    nxt = {}
                    for x, a in acc.items():
                        vadd(nxt, self._lmul(letter, x), a)
                    acc = nxt
                vadd(r, acc, c)
        self._lmemo[key] = r
        return r

    def nf_word(self, w):
        return self._nfw(tuple(w))

    def normal_form(self, p, cap=None):
        if cap is not None and degree(p) > cap:
            raise TruncationError(f"degree {degree(p)} exceeds cap {cap}")
        self._steps = 0
        out = {}
        for w, c in p.items():
            vadd(out, self._nfw(w), c)
        return out

    def multiply(self, p, r, cap=None):
        """Normal form of the product; p and r must be in normal form."""
        if cap is not None and degree(p) + degree(r) > cap:
            raise TruncationError(f"product degree {degree(p) + degree(r)} exceeds cap {cap}")
        out = {}
        for u, a in p.items():
            for v, b in r.items():
                vadd(out, self._nfw(u + v), a * b)
        return out

    def mul_many(self, factors, cap=None):
        out = {UNIT: self.one}
        for f in factors:
            out = self.multiply(out, f, cap)
        return out

    def power(self, p, k, cap=None):
        return self.mul_many([p] * k, cap)

    # -- completion ----------------------------------------------------------

    def overlaps(self, l1, l2):
        """Lengths k of proper overlaps: suffix of l1 == prefix of l2."""
        m = min(len(l1), len(l2))
        return [k for k in range(1, m) if l1[-k:] == l2[:k]] if m > 1 else []

    def _overlap_residual(self, l1, l2, k):
        r1, r2 = self.rules[l1], self.rules[l2]
        tail, head = l2[k:], l1[:len(l1) - k]
        a = self.normal_form(free_mul(r1, {tail: self.one}))
        b = self.normal_form(free_mul({head: self.one}, r2))
        vadd(a, b, -1)
        return a

    def ambiguities(self, cap=math.inf):
        """All overlap ambiguities (l1, l2, k) whose overlap word has length <= cap."""
        out = []
        for l1 in self.rules:
            for l2 in self.rules:
                for k in self.overlaps(l1, l2):
                    if len(l1) + len(l2) - k <= cap:
                        out.append((l1, l2, k))
        return out

    def complete_up_to(self, cap, max_rules=20000):
        """Resolve every overlap ambiguity of length <= cap, adding rules as needed.

        Afterwards the system is confluent on words of length <= cap; if no
        ambiguity longer than cap remains the system is confluent outright
        (diamond lemma) and ``confluent_to`` is ``inf``.
        """
        while True:
            heap = []
            for l1, l2, k in self.ambiguities(cap):
                heapq.heappush(heap, (len(l1) + len(l2) - k, l1, l2, k))
            changed = False
            while heap:
                _, l1, l2, k = heapq.heappop(heap)
                if l1 not in self.rules or l2 not in self.rules:
                    continue
                res = self._overlap_residual(l1, l2, k)
                if not res:
                    continue
                changed = True
                new = self._insert(res)
                if len(self.rules) > max_rules:
                    raise CompletionError(
                        f"completion budget exceeded ({len(self.rules)} rules)",
                        overlap=format_word(l1 + l2[k:], self.gens))
                for n in new:
                    if n not in self.rules:
                        continue
                    for other in list(self.rules):
                        for a, b in ((n, other), (other, n)):
                            for kk in self.overlaps(a, b):
                                ln = len(a) + len(b) - kk
                                if ln <= cap:
                                    heapq.heappush(heap, (ln, a, b, kk))
            if not changed:
                break
        beyond = [a for a in self.ambiguities() if len(a[0]) + len(a[1]) - a[2] > cap]
        self.confluent_to = math.inf if not beyond else cap
        self._refresh()
        return self

    def unresolved(self, cap):
        """Ambiguities of length <= cap that do not resolve (should be empty after completion)."""
        return [(l1, l2, k) for l1, l2, k in self.ambiguities(cap) if self._overlap_residual(l1, l2, k)]

    # -- bases ---------------------------------------------------------------

    def basis_words(self, d):
        """Normal words of length exactly d, ascending."""
        if d > self.confluent_to:
            raise TruncationError(f"system only known confluent up to length {self.confluent_to}")
        got = self._basis.get(d)
        if got is not None:
            return got
        if d == 0:
            out = [UNIT]
        else:
            out = []
            for w in self.basis_words(d - 1):
                for g in range(len(self.gens)):
                    x = w + (g,)
                    n = len(x)
                    if not any(x[n - l:] in self.rules for l in self._lens if l <= n):
                        out.append(x)
        self._basis[d] = out
        return out

    def basis_upto(self, d):
        out = []
        for k in range(d + 1):
            out.extend(self.basis_words(k))
        return out

    # -- text format -----------------------------------------------------------

    def parse_poly(self, text, cap=None):
        """Parse an expression in the generators and q; returns its normal form."""
        p = evaluate(parse(text), _PolyContext(self), text)
        return self.normal_form(p, cap)

    def parse_free(self, text):
        return evaluate(parse(text), _PolyContext(self), text)

    def format(self, p, sep="*"):
        return format_poly(p, self.gens, sep)

    def dumps(self):
        lines = [f"algebra {self.name or 'A'}", _field_line(self.q),
                 "generators " + " ".join(self.gens)]
        for lhs in sorted(self.rules, key=word_key):
            lines.append(f"relation {format_word(lhs, self.gens)} = {self.format(self.rules[lhs])}")
        if self.confluent_to:
            lines.append(f"complete {'inf' if self.confluent_to == math.inf else self.confluent_to}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text):
        return parse_presentation(text)["algebra"]


def _contains(big, small):
    n, m = len(big), len(small)
    return any(big[i:i + m] == small for i in range(n - m + 1))


def _field_line(qv):
    if isinstance(qv, Scalar):
        return "field q"
    return f"field q={qv.numerator}/{qv.denominator}"


class _PolyContext:
    def __init__(self, sys):
        self.sys = sys

    def const(self, k):
        return self.sys.scalar(k)

    def name(self, s):
        if s in self.sys.index:
            return {(self.sys.index[s],): self.sys.one}
        if s in self.sys.aliases:
            return dict(self.sys.aliases[s])
        if s == "q":
            return {UNIT: self.sys.q}
        raise ValueError(f"unknown generator {s!r}")

    def add(self, a, b):
        return poly_add(a, b)

    def sub(self, a, b):
        out = dict(a)
        vadd(out, b, -1)
        return out

    def mul(self, a, b):
        return free_mul(a, b)

    def neg(self, a):
        return poly_scale(a, -1)

    def _as_scalar(self, a):
        if any(w for w in a):
            raise ValueError("expected a scalar")
        return a.get(UNIT, 0 * self.sys.one)

    def div(self, a, b):
        c = self._as_scalar(b)
        if not c:
            raise ZeroDivisionError("division by zero")
        return poly_scale(a, 1 / c)

    def pow(self, a, k):
        if k < 0:
            c = self._as_scalar(a)
            if not c:
                raise ZeroDivisionError("zero to a negative power")
            return {UNIT: c ** k}
        out = {UNIT: self.sys.one}
        for _ in range(k):
            out = free_mul(out, a)
        return out


def parse_presentation(text):
    """Parse the declarative presentation format.

    Lines (``#`` starts a comment)::

        algebra NAME
        field q            | field q=P/R
        generators g1 g2 ...        # listed in increasing monomial order
        relation LHS = RHS          # any two expressions
        complete N | inf            # run completion up to N
        counit g = EXPR
        antipode g = EXPR
        antipode_inv g = EXPR
        delta g = EXPR ⊗ EXPR + EXPR ⊗ EXPR ...   ('(x)' also accepted)
        grouplike g

    Returns a dict with the algebra and the raw Hopf-structure entries.
    """
    name, qv, gens = "A", QSYM, None
    relations, extra, complete = [], [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "algebra":
            name = rest
        elif head == "field":
            if rest == "q":
                qv = QSYM
            elif rest.startswith("q="):
                qv = Fraction(rest[2:])
                if qv in (-1, 0, 1):
                    raise ValueError(f"line {lineno}: q must avoid -1, 0, 1")
            else:
                raise ValueError(f"line {lineno}: bad field line {raw!r}")
        elif head == "generators":
            gens = rest.split()
        elif head == "relation":
            lhs, sep, rhs = rest.partition("=")
            if not sep:
                raise ValueError(f"line {lineno}: relation needs '='")
            relations.append((lhs.strip(), rhs.strip(), lineno))
        elif head == "complete":
            complete = math.inf if rest == "inf" else int(rest)
        elif head in ("counit", "antipode", "antipode_inv", "delta", "grouplike"):
            extra.append((head, rest, lineno))
        else:
            raise ValueError(f"line {lineno}: unknown directive {head!r}")
    if gens is None:
        raise ValueError("missing 'generators' line")
    sys = RewriteSystem(gens, q=qv, name=name)
    for lhs, rhs, lineno in relations:
        try:
            p = sys.parse_free(lhs)
            vadd(p, sys.parse_free(rhs), -1)
        except ParseError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        sys.add_relation(p)
    if complete is not None:
        cap = complete if complete != math.inf else max((len(l) for l in sys.rules), default=1) * 2
        sys.complete_up_to(cap)
        if complete == math.inf and sys.confluent_to != math.inf:
            raise CompletionError("presentation declared 'complete inf' but is not confluent")
    return {"algebra": sys, "extra": extra}
