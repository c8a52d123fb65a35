"""Sparse exact linear algebra over Q(q) (or any exact field).

Vectors are dicts ``key -> coefficient`` with no zero entries.  Keys must be
mutually comparable (words, tuples, ints) so that results are deterministic.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "vadd", "vscale", "vsub_scaled", "Echelon", "kernel", "span_basis",
    "solve", "in_span", "rank",
]


def vadd(acc, vec, c=1):
    """acc += c * vec, in place; returns acc."""
    for k, v in vec.items():
        x = acc.get(k)
        x = v * c if x is None else x + v * c
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)
    return acc


def vscale(vec, c):
    if not c:
        return {}
    return {k: v * c for k, v in vec.items()}


def vsub_scaled(acc, vec, c):
    """acc -= c * vec, in place."""
    for k, v in vec.items():
        x = acc.get(k)
        x = -(v * c) if x is None else x - v * c
        if x:
            acc[k] = x
        else:
            del acc[k]
    return acc


def _cost(c):
    size = getattr(c, "size", None)
    if size is not None:
        return size()
    return len(str(c))


def _inverse(c):
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


class Echelon:
    """Incrementally maintained reduced row echelon form.

    ``pivot="lead"`` pivots on the largest key (gives a canonical basis of the
    row space, independent of insertion order); ``pivot="cheap"`` pivots on
    the entry with the smallest coefficient, ties broken by the largest key.
    With ``track=True`` every row remembers which inserted vectors built it,
    so dependent insertions return their linear relation.
    """

    def __init__(self, pivot="lead", track=False, key=None):
        self.rows = {}          # pivot key -> row (pivot entry 1)
        self.combos = {}        # pivot key -> combination of tags
        self.pivot = pivot
        self.track = track
        self.key = key

    def __len__(self):
        return len(self.rows)

    def _choose(self, vec):
        key = self.key
        if self.pivot == "lead":
            return max(vec, key=key) if key else max(vec)
        best = min(_cost(c) for c in vec.values())
        cands = [k for k, c in vec.items() if _cost(c) == best]
        return max(cands, key=key) if key else max(cands)

    def reduce(self, vec, combo=None):
        vec = dict(vec)
        for p in [k for k in vec if k in self.rows]:
            c = vec.get(p)
            if c:
                vsub_scaled(vec, self.rows[p], c)
                if combo is not None:
                    vsub_scaled(combo, self.combos[p], c)
        return vec

    def add(self, vec, tag=None):
        """Insert ``vec``.  Returns None if it was independent, otherwise the
        residual relation (a combination of tags summing to zero) when
        tracking, or ``{}`` when not tracking."""
        combo = {tag: 1} if self.track else None
        r = self.reduce(vec, combo)
        if not r:
            return combo if self.track else {}
        p = self._choose(r)
        inv = _inverse(r[p])
        r = {k: v * inv for k, v in r.items()}
        if self.track:
            combo = {k: v * inv for k, v in combo.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                vsub_scaled(row, r, c)
                if self.track:
                    vsub_scaled(self.combos[q], combo, c)
        self.rows[p] = r
        if self.track:
            self.combos[p] = combo
        return None

    def contains(self, vec):
        return not self.reduce(vec)

    def basis(self):
        """Rows sorted by pivot, descending."""
        keys = sorted(self.rows, key=self.key, reverse=True) if self.key else sorted(self.rows, reverse=True)
        return [self.rows[k] for k in keys]


def span_basis(vectors, key=None):
    """Canonical (reduced, lead-pivoted) basis of the span."""
    ech = Echelon("lead", key=key)
    for v in vectors:
        ech.add(v)
    return ech.basis()


def rank(vectors):
    ech = Echelon("cheap")
    for v in vectors:
        ech.add(v)
    return len(ech)


def in_span(vectors, target):
    ech = Echelon("cheap")
    for v in vectors:
        ech.add(v)
    return ech.contains(target)


def kernel(images):
    """Basis of {c : sum_j c_j images[j] = 0}, as dicts index -> coefficient,
    in canonical reduced form (pivot = largest index)."""
    ech = Echelon("cheap", track=True)
    rels = []
    for j, v in enumerate(images):
        rel = ech.add(v, j)
        if rel is not None:
            rels.append(rel)
    return span_basis(rels)


def solve(vectors, target):
    """Some c with sum_j c_j vectors[j] == target, or None."""
    ech = Echelon("cheap", track=True)
    for j, v in enumerate(vectors):
        ech.add(v, j)
    combo = {}
    r = ech.reduce(target, combo)
    if r:
        return None
    # reduce() subtracted combos; the solution is the negation
    return {k: -v for k, v in combo.items()}
