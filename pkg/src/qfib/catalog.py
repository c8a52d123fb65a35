"""Quantum homogeneous fibrations B ↪ P ↠ fiber from pairs of node subsets S_P ⊆ S_B.

Two kinds:
  flag     O_q(G/L_{S_B}) ↪ O_q(G/L_{S_P}) ↠ O_q(L_{S_B}/L_{S_P})        complex dimensions
  stiefel  O_q(G/L^s_{S_B}) ↪ O_q(G/L^s_{S_P}) ↠ O_q(L^s_{S_B}/L^s_{S_P})  real dimensions

Dimensions come from positive roots.  Node numbering is Humphreys' throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .rootsys import NodeSubset, cartan_datum, is_irreducible_flag, positive_roots

__all__ = ["FibrationDescriptor", "make_fibration", "stiefel_dimension", "flag_dim",
           "identify_component", "fiber_type_from_diagram", "fiber_type_from_roots",
           "space_label", "builtin_catalog", "FAMILIES", "dynkin_ascii",
           "catalog_to_json", "catalog_to_markdown", "filter_catalog"]


# -- dimensions --------------------------------------------------------------------

def _roots_inside(datum, nodes):
    nodes = set(nodes)
    return [b for b in positive_roots(datum) if b.support() <= nodes]


def flag_dim(datum, colored, within=None):
    """Complex dimension of L_within / L_{within minus colored}: roots supported in
    ``within`` (default: all nodes) whose support meets ``colored``."""
    within = set(datum.nodes) if within is None else set(within)
    colored = set(colored) & within
    return sum(1 for b in _roots_inside(datum, within) if b.support() & colored)


def stiefel_dimension(datum, m=None, S=None):
    """Real dimension of G/L^s_S: 2 * flag dimension + |S^c|.  Either m (S = S_{>m})
    or an explicit NodeSubset S."""
    if S is None:
        if m is None or not 0 <= m <= datum.rank:
            raise ValueError(f"need 0 <= m <= {datum.rank}")
        S = NodeSubset(datum, frozenset(range(m + 1, datum.rank + 1)))
    colored = S.colored
    return 2 * flag_dim(datum, colored) + len(colored)


def S_greater(datum, m):
    """S_{>m} = {α_{m+1}, ..., α_n}."""
    return NodeSubset(datum, frozenset(range(m + 1, datum.rank + 1)))


# -- Dynkin types of subdiagrams ------------------------------------------------------

_E_ORDER = [1, 3, 4, 5, 6, 7, 8]


def identify_component(datum, nodes, prefer="B"):
    """Standard type of the connected subdiagram on ``nodes``.

    Returns (series, rank, relabel) where relabel maps original nodes to the
    standard numbering.  ``prefer`` breaks the B_2 = C_2 tie."""
    nodes = sorted(nodes)
    r = len(nodes)
    adj = {i: [j for j in nodes if j != i and datum.a(i, j) != 0] for i in nodes}
    d = {i: datum.symmetrizer[i - 1] for i in nodes}
    mult = lambda i, j: datum.a(i, j) * datum.a(j, i)
    if r == 1:
        return "A", 1, {nodes[0]: 1}
    branch = [i for i in nodes if len(adj[i]) == 3]
    if branch:
        (b,) = branch
        arms = []
        for s in sorted(adj[b]):
            arm, prev, cur = [], b, s
            while True:
                arm.append(cur)
                nxt = [j for j in adj[cur] if j != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
            arms.append(arm)
        arms.sort(key=lambda a: (len(a), a))
        lens = tuple(len(a) for a in arms)
        if lens[:2] == (1, 1):
            # D_r: long arm ends at node 1, leaves are r-1, r
            long_arm = arms[2]
            order = list(reversed(long_arm)) + [b, arms[0][0], arms[1][0]]
            return "D", r, {x: k + 1 for k, x in enumerate(order)}
        if lens[:2] == (1, 2) and lens[2] in (2, 3, 4):
            relabel = {arms[0][0]: 2, arms[1][1]: 1, arms[1][0]: 3, b: 4}
            for k, x in enumerate(arms[2]):
                relabel[x] = 5 + k
            return "E", r, relabel
        raise ValueError(f"not a Dynkin diagram: {nodes}")
    ends = [i for i in nodes if len(adj[i]) == 1]
    path = [min(ends)]
    while len(path) < r:
        path.append(next(j for j in adj[path[-1]] if j not in path))
    edges = [mult(path[k], path[k + 1]) for k in range(r - 1)]
    if all(e == 1 for e in edges):
        return "A", r, {x: k + 1 for k, x in enumerate(path)}
    if 3 in edges:
        short = min(path, key=lambda i: d[i])
        path = [short] + [x for x in path if x != short]
        return "G", 2, {x: k + 1 for k, x in enumerate(path)}
    k = edges.index(2)
    if r == 4 and k == 1:
        if d[path[0]] < d[path[-1]]:
            path.reverse()
        return "F", 4, {x: i + 1 for i, x in enumerate(path)}
    if k == 0:
        path.reverse()
    short = [x for x in path if d[x] == min(d.values())]
    if r == 2:
        series = prefer if prefer in ("B", "C") else "B"
        end = path[-1]
        want_short_end = series == "B"
        if (end in short) != want_short_end:
            path.reverse()
        return series, 2, {x: i + 1 for i, x in enumerate(path)}
    series = "B" if len(short) == 1 else "C"
    return series, r, {x: i + 1 for i, x in enumerate(path)}


def _components(datum, nodes):
    nodes = set(nodes)
    out = []
    while nodes:
        stack = [min(nodes)]
        comp = set()
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(j for j in nodes if j not in comp and datum.a(x, j) != 0)
        nodes -= comp
        out.append(sorted(comp))
    return sorted(out)


def fiber_type_from_diagram(datum, S_B, S_P):
    """Components of the diagram restricted to S_B, each with its colored nodes
    (S_B minus S_P) in standard numbering: [(series, rank, colored)]."""
    out = []
    colored = set(S_B.members) - set(S_P.members)
    for comp in _components(datum, S_B.members):
        s, r, rel = identify_component(datum, comp, prefer=datum.series)
        out.append((s, r, tuple(sorted(rel[x] for x in comp if x in colored))))
    return out


def _root_length2(datum, b):
    c = b.coords
    n = datum.rank
    return sum(c[i] * c[j] * datum.symmetrizer[i] * datum.cartan[i][j] for i in range(n) for j in range(n))


def fiber_type_from_roots(datum, S_B):
    """Types of the root subsystem generated by S_B, read off from (rank, number of
    positive roots, number of short positive roots) per component."""
    roots = _roots_inside(datum, S_B.members)
    out = []
    for comp in _components(datum, S_B.members):
        cr = [b for b in roots if b.support() <= set(comp)]
        lens = [_root_length2(datum, b) for b in cr]
        short = sum(1 for x in lens if x == min(lens))
        r, N = len(comp), len(cr)
        if short == N:
            if N == r * (r + 1) // 2:
                t = ("A", r)
            elif r >= 4 and N == r * (r - 1):
                t = ("D", r)
            else:
                t = ("E", r)
        elif r == 2 and N == 6:
            t = ("G", 2)
        elif r == 4 and N == 24:
            t = ("F", 4)
        elif r == 2:
            t = (datum.series if datum.series in ("B", "C") else "B", 2)
        else:
            t = ("B", r) if short == r else ("C", r)
        out.append(t)
    return out


# -- labels ------------------------------------------------------------------------------

def _flag_label(series, r, c):
    c = tuple(sorted(c))
    full = tuple(range(1, r + 1))
    if not c:
        return "pt"
    if series == "A":
        if r == 1:
            return "S^2"
        if c == full:
            return f"F_{{SU_{r + 1}}}"
        if c in ((1,), (r,)):
            return f"ℂP^{r}"
        if c == (1, r):
            return f"SU_{r + 1}/(U_{r - 1}×U_1)"
        if len(c) == 1:
            return f"Gr_{c[0]}(ℂ^{r + 1})"
    if series == "C":
        if c == (r,):
            return f"L_{r}"
        if c == full:
            return f"F_{{Sp_{r}}}"
    if series == "D" and r >= 4 and c in ((r - 1,), (r,)):
        return f"𝐒_{r}"
    if series == "E" and r == 6:
        if c in ((1,), (6,)):
            return "𝕆P^2"
        if c == (5, 6):
            return "E_6/(SO_10×U_1)"
    return None


def _stiefel_label(series, r, c):
    c = tuple(sorted(c))
    full = tuple(range(1, r + 1))
    if series == "A":
        if c == full:
            return "SU_2" if r == 1 else f"SU_{r + 1}"
        if c == tuple(range(1, len(c) + 1)):
            m = len(c)
            return f"S^{2 * r + 1}" if m == 1 else f"V_{m}ℂ^{r + 1}"
    if series == "C":
        if c == full and r == 1:
            return "SU_2"
        if c == tuple(range(1, len(c) + 1)):
            m = len(c)
            return f"S^{4 * r - 1}_ℍ" if m == 1 else f"V_{m}ℍ^{r}"
    return None


def space_label(series, r, colored, kind="flag"):
    """Known name of G/L_S (flag) or G/L^s_S (stiefel), else a systematic label."""
    lab = (_flag_label if kind == "flag" else _stiefel_label)(series, r, colored)
    if lab is None:
        sup = "" if kind == "flag" else "^s"
        lab = f"{series}_{r}/L{sup}_S, S^c={{{','.join(map(str, sorted(colored)))}}}"
    return lab


def _fiber_label(parts, kind):
    if not parts:
        return "pt"
    labs = [space_label(s, r, c, kind) for s, r, c in parts]
    labs = [x for x in labs if x != "pt"] or ["pt"]
    return " × ".join(labs)


# -- descriptor -------------------------------------------------------------------------------

@dataclass
class FibrationDescriptor:
    datum: object
    S_B: NodeSubset
    S_P: NodeSubset
    kind: str
    base_label: str
    total_label: str
    fiber_label: str
    base_dim: int
    total_dim: int
    fiber_dim: int
    dim_kind: str                        # "complex" or "real"
    fiber_type: list
    principal: bool
    principal_reason: str
    base_irreducible: bool
    family: str = ""
    n: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def base_cplx_dim(self):
        return self.base_dim if self.dim_kind == "complex" else None

    @property
    def fiber_cplx_dim(self):
        return self.fiber_dim if self.dim_kind == "complex" else None

    @property
    def base_real_dim(self):
        return 2 * self.base_dim if self.dim_kind == "complex" else self.base_dim

    @property
    def fiber_real_dim(self):
        return 2 * self.fiber_dim if self.dim_kind == "complex" else self.fiber_dim

    def formula(self):
        return f"O_q({self.base_label}) ↪ O_q({self.total_label}) ↠ O_q({self.fiber_label})"

    def to_json(self):
        return {
            "family": self.family, "n": self.n, "datum": self.datum.name, "kind": self.kind,
            "S_B_c": sorted(self.S_B.colored), "S_P_c": sorted(self.S_P.colored),
            "base": self.base_label, "total": self.total_label, "fiber": self.fiber_label,
            "dims": {"kind": self.dim_kind, "base": self.base_dim, "total": self.total_dim,
                     "fiber": self.fiber_dim, "base_real": self.base_real_dim,
                     "fiber_real": self.fiber_real_dim},
            "fiber_type": [{"series": s, "rank": r, "colored": list(c)} for s, r, c in self.fiber_type],
            "principal": self.principal, "principal_reason": self.principal_reason,
            "base_irreducible": self.base_irreducible,
            "diagrams": {"S_B": dynkin_ascii(self.datum, self.S_B.colored),
                         "S_P": dynkin_ascii(self.datum, self.S_P.colored)},
        }


def make_fibration(datum, S_B, S_P, kind="flag", family="", n=None):
    """Descriptor for the triple determined by S_P ⊆ S_B ⊆ Π."""
    if isinstance(S_B, (set, frozenset, list, tuple)):
        S_B = NodeSubset(datum, frozenset(S_B))
    if isinstance(S_P, (set, frozenset, list, tuple)):
        S_P = NodeSubset(datum, frozenset(S_P))
    if not S_P.members <= S_B.members:
        raise ValueError(f"need S_P ⊆ S_B, got S_P = {sorted(S_P.members)}, S_B = {sorted(S_B.members)}")
    if kind not in ("flag", "stiefel"):
        raise ValueError(f"unknown kind {kind!r}")
    s, r = datum.series, datum.rank
    parts = fiber_type_from_diagram(datum, S_B, S_P)
    colored_f = set(S_B.members) - set(S_P.members)
    if kind == "flag":
        base = flag_dim(datum, S_B.colored)
        total = flag_dim(datum, S_P.colored)
        fib = flag_dim(datum, colored_f, within=S_B.members)
        dk = "complex"
    else:
        base = stiefel_dimension(datum, S=S_B)
        total = stiefel_dimension(datum, S=S_P)
        fib = 2 * flag_dim(datum, colored_f, within=S_B.members) + len(colored_f)
        dk = "real"
    if S_B.members == S_P.members:
        principal, why = True, "trivial fiber"
    elif kind == "stiefel" and not (S_P.members & S_B.members):
        principal, why = True, "fiber is O_q(L^s_{S_B}), a Hopf algebra"
    elif kind == "stiefel":
        principal, why = False, "fiber is a quantum homogeneous space, not a Hopf algebra"
    else:
        principal, why = False, "fiber is a quantum flag manifold, not a Hopf algebra"
    return FibrationDescriptor(
        datum, S_B, S_P, kind,
        base_label=space_label(s, r, S_B.colored, kind),
        total_label=space_label(s, r, S_P.colored, kind),
        fiber_label=_fiber_label(parts, kind),
        base_dim=base, total_dim=total, fiber_dim=fib, dim_kind=dk,
        fiber_type=parts, principal=principal, principal_reason=why,
        base_irreducible=is_irreducible_flag(datum, S_B) if S_B.is_proper() else False,
        family=family, n=n)


# -- the six families -------------------------------------------------------------------------------

def _colored(datum, c):
    return NodeSubset.from_colored(datum, c)


def _a_full_flag(n):
    d = cartan_datum("A", n)
    return make_fibration(d, _colored(d, {n}), _colored(d, d.nodes), "flag", "A full flag", n)


def _a_projective(n):
    d = cartan_datum("A", n)
    return make_fibration(d, _colored(d, {n}), _colored(d, {1, n}), "flag", "A projective", n)


def _c_lagrangian(n):
    d = cartan_datum("C", n)
    return make_fibration(d, _colored(d, {n}), _colored(d, d.nodes), "flag", "C Lagrangian", n)


def _e6_cayley(n=6):
    d = cartan_datum("E", 6)
    return make_fibration(d, _colored(d, {6}), _colored(d, {5, 6}), "flag", "E6 Cayley plane", 6)


def _a_stiefel(n):
    d = cartan_datum("A", n)
    return make_fibration(d, S_greater(d, 1), S_greater(d, 2), "stiefel", "A Stiefel", n)


def _c_stiefel(n):
    d = cartan_datum("C", n)
    return make_fibration(d, S_greater(d, 1), S_greater(d, 2), "stiefel", "C Stiefel", n)


# name -> (builder, smallest n, default ns)
FAMILIES = {
    "A full flag": (_a_full_flag, 2, (2, 3, 4)),
    "A projective": (_a_projective, 3, (3, 4, 5)),
    "C Lagrangian": (_c_lagrangian, 2, (2, 3, 4)),
    "E6 Cayley plane": (_e6_cayley, 6, (6,)),
    "A Stiefel": (_a_stiefel, 2, (2, 3, 4)),
    "C Stiefel": (_c_stiefel, 2, (2, 3, 4)),
}


def builtin_catalog(ns=None):
    """Every family at its default parameters (or at ``ns`` where it makes sense)."""
    out = []
    for name, (build, lo, default) in FAMILIES.items():
        vals = default if ns is None or name.startswith("E6") else [m for m in ns if m >= lo]
        out.extend(build(m) for m in vals)
    return out


def filter_catalog(entries, series=None, rank=None, irreducible_only=False, family=None):
    out = []
    for e in entries:
        if series and e.datum.series != series.upper():
            continue
        if rank is not None and e.datum.rank != rank:
            continue
        if irreducible_only and not e.base_irreducible:
            continue
        if family and e.family != family:
            continue
        out.append(e)
    return out


# -- rendering -------------------------------------------------------------------------------------

_BOND = {(1, 1): "---", (2, 1): "=>=", (1, 2): "=<=", (3, 1): ">>>", (1, 3): "<<<"}


def dynkin_ascii(datum, colored):
    """Two or three text lines: nodes (* colored, o plain), bonds, and node numbers.
    Multiple bonds point towards the short root."""
    s, r = datum.series, datum.rank
    colored = set(colored)
    mark = lambda i: "*" if i in colored else "o"
    if s == "D" and r >= 4:
        main, hang, under = list(range(1, r)), r, r - 2
    elif s == "E":
        main, hang, under = [x for x in _E_ORDER if x <= r], 2, 4
    else:
        main, hang, under = list(range(1, r + 1)), None, None
    top, nums = "", ""
    for k, i in enumerate(main):
        if k:
            j = main[k - 1]
            lj, li = datum.symmetrizer[j - 1], datum.symmetrizer[i - 1]
            m = datum.a(i, j) * datum.a(j, i)
            key = (1, 1) if m == 1 else ((m, 1) if lj > li else (1, m))
            top += _BOND[key]
            nums += "   "
        top += mark(i)
        nums += str(i)
    lines = [top]
    if hang is not None:
        pos = 4 * main.index(under)
        lines.append(" " * pos + "|")
        lines.append(" " * pos + mark(hang) + f" {hang}")
    lines.append(nums)
    return "\n".join(lines)


def catalog_to_json(entries):
    return json.dumps([e.to_json() for e in entries], indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def catalog_to_markdown(entries):
    lines = ["| family | n | g | S_B^c | S_P^c | fibration | dims (base, total, fiber) | principal |",
             "|---|---|---|---|---|---|---|---|"]
    for e in entries:
        lines.append(
            f"| {e.family} | {e.n} | {e.datum.name} | {sorted(e.S_B.colored)} | {sorted(e.S_P.colored)} | "
            f"{e.formula()} | {e.base_dim}, {e.total_dim}, {e.fiber_dim} ({e.dim_kind}) | "
            f"{'yes' if e.principal else 'no'} |")
    lines.append("")
    for e in entries:
        lines += [f"### {e.family}, n = {e.n}: {e.formula()}", "", "S_B:", "```",
                  dynkin_ascii(e.datum, e.S_B.colored), "```", "S_P:", "```",
                  dynkin_ascii(e.datum, e.S_P.colored), "```", ""]
    return "\n".join(lines)
