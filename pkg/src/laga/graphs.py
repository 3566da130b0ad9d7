"""Layered graphs: data model, builders, combinatorial statistics.

A layered graph has vertices partitioned into levels V_0..V_N with every
edge dropping exactly one level.  Vertices are (level, index) pairs; the
total order by (level, index) is the canonical tie-breaker everywhere.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, NamedTuple, Optional

from .errors import (
    EdgeLevelMismatch,
    EmptySuccessor,
    MixedLevels,
    MultipleMinimal,
    UnsupportedField,
)
from .fields import GF
from .linalg import rref


class V(NamedTuple):
    """A vertex: its level (rank) and index within the level."""

    level: int
    index: int


Edge = tuple[V, V]


@dataclass(frozen=True)
class LayeredGraph:
    levels: tuple[int, ...]
    edges: frozenset[Edge]
    unique_minimal: bool = False
    positive_outdegree: bool = False
    labels: tuple[tuple[V, str], ...] = ()

    @property
    def top_level(self) -> int:
        return len(self.levels) - 1

    def level_vertices(self, n: int) -> list[V]:
        return [V(n, i) for i in range(self.levels[n])]

    def vertices(self) -> list[V]:
        return [v for n in range(len(self.levels)) for v in self.level_vertices(n)]

    def positive_vertices(self) -> list[V]:
        return [v for v in self.vertices() if v.level >= 1]

    def succ(self, v: V) -> tuple[V, ...]:
        return _succ_map(self).get(v, ())

    def pred(self, v: V) -> tuple[V, ...]:
        return _pred_map(self).get(v, ())

    def out_degree(self, v: V) -> int:
        return len(self.succ(v))

    def label(self, v: V) -> str | None:
        return dict(self.labels).get(v)

    def reaches(self, v: V, w: V) -> bool:
        """True iff there is a directed path (possibly empty) from v to w."""
        return w == v or w in _reach_map(self)[v]


@cache
def _succ_map(g: LayeredGraph) -> dict[V, tuple[V, ...]]:
    out: dict[V, list[V]] = {}
    for t, h in g.edges:
        out.setdefault(t, []).append(h)
    return {v: tuple(sorted(ws)) for v, ws in out.items()}


@cache
def _pred_map(g: LayeredGraph) -> dict[V, tuple[V, ...]]:
    out: dict[V, list[V]] = {}
    for t, h in g.edges:
        out.setdefault(h, []).append(t)
    return {v: tuple(sorted(ws)) for v, ws in out.items()}


@cache
def _reach_map(g: LayeredGraph) -> dict[V, frozenset[V]]:
    """Strictly-below reachability, computed level by level."""
    reach: dict[V, set[V]] = {v: set() for v in g.vertices()}
    for n in range(1, len(g.levels)):
        for v in g.level_vertices(n):
            for w in g.succ(v):
                reach[v].add(w)
                reach[v] |= reach[w]
    return {v: frozenset(s) for v, s in reach.items()}


def build_graph(
    levels: Iterable[int],
    edges: Iterable[Edge],
    *,
    unique_minimal: bool = False,
    positive_outdegree: bool = False,
    labels: Optional[dict[V, str]] = None,
) -> LayeredGraph:
    """Validate and freeze a layered graph."""
    levels = tuple(int(x) for x in levels)
    norm_edges = set()
    for t, h in edges:
        t, h = V(*t), V(*h)
        if not (0 <= t.level < len(levels) and 0 <= t.index < levels[t.level]):
            raise EdgeLevelMismatch(f"tail {t} out of range")
        if not (0 <= h.level < len(levels) and 0 <= h.index < levels[h.level]):
            raise EdgeLevelMismatch(f"head {h} out of range")
        if h.level != t.level - 1:
            raise EdgeLevelMismatch(f"edge {t}->{h} does not drop one level")
        norm_edges.add((t, h))
    g = LayeredGraph(
        levels=levels,
        edges=frozenset(norm_edges),
        unique_minimal=unique_minimal,
        positive_outdegree=positive_outdegree,
        labels=tuple(sorted((labels or {}).items())),
    )
    if unique_minimal and levels[0] != 1:
        raise MultipleMinimal(f"|V_0| = {levels[0]}")
    if positive_outdegree:
        for v in g.positive_vertices():
            if not g.succ(v):
                raise EmptySuccessor(f"vertex {v} has no successors")
    return g


def build_boolean(n: int) -> LayeredGraph:
    """The Boolean lattice 2^[n]; level i holds the i-subsets of {1..n}
    in lexicographic order."""
    subsets = [list(itertools.combinations(range(1, n + 1), i)) for i in range(n + 1)]
    index = {s: V(i, j) for i, lv in enumerate(subsets) for j, s in enumerate(lv)}
    edges = []
    for i in range(1, n + 1):
        for s in subsets[i]:
            for drop in s:
                t = tuple(x for x in s if x != drop)
                edges.append((index[s], index[t]))
    labels = {index[s]: "{" + ",".join(map(str, s)) + "}" for lv in subsets for s in lv}
    return build_graph(
        [len(lv) for lv in subsets],
        edges,
        unique_minimal=True,
        positive_outdegree=True,
        labels=labels,
    )


def _rref_matrices(q: int, n: int, k: int):
    """All k x n RREF matrices over F_q (row spaces = k-dim subspaces),
    entries as plain ints."""
    if k == 0:
        yield ()
        return
    fld = GF(q)
    for pivots in itertools.combinations(range(n), k):
        free_pos = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, n)
            if c not in pivots
        ]
        for vals in itertools.product(range(q), repeat=len(free_pos)):
            mat = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                mat[r][p] = 1
            for (r, c), val in zip(free_pos, vals):
                mat[r][c] = val
            yield tuple(tuple(row) for row in mat)
    del fld


def build_subspace_lattice(q: int, n: int) -> LayeredGraph:
    """Lattice of subspaces of F_q^n; level i holds the i-dim subspaces
    keyed (and ordered) by canonical RREF basis matrices."""
    if q < 2 or not _is_prime(q):
        raise UnsupportedField(f"q = {q}: only prime fields are supported")
    fld = GF(q)
    by_level = [sorted(_rref_matrices(q, n, k)) for k in range(n + 1)]
    edges = []
    for k in range(1, n + 1):
        for j, upper in enumerate(by_level[k]):
            basis = [[fld(x) for x in row] for row in upper]
            reduced, _ = rref(basis, fld)
            for j2, lower in enumerate(by_level[k - 1]):
                if _rows_in_span(lower, reduced, fld):
                    edges.append((V(k, j), V(k - 1, j2)))
    labels = {
        V(k, j): "/".join("".join(map(str, row)) for row in m) or "0"
        for k in range(n + 1)
        for j, m in enumerate(by_level[k])
    }
    return build_graph(
        [len(lv) for lv in by_level],
        edges,
        unique_minimal=True,
        positive_outdegree=True,
        labels=labels,
    )


def _rows_in_span(rows, rref_basis, fld) -> bool:
    from .linalg import reduce_vector

    for row in rows:
        residual = reduce_vector([fld(x) for x in row], rref_basis, fld)
        if any(x != 0 for x in residual):
            return False
    return True


def _is_prime(n: int) -> bool:
    from .fields import _is_prime as p

    return p(n)


def build_complete_layered(sizes: Iterable[int]) -> LayeredGraph:
    """Every vertex covers every vertex one level down."""
    sizes = tuple(sizes)
    edges = [
        (V(n, i), V(n - 1, j))
        for n in range(1, len(sizes))
        for i in range(sizes[n])
        for j in range(sizes[n - 1])
    ]
    return build_graph(
        sizes,
        edges,
        unique_minimal=(sizes[0] == 1),
        positive_outdegree=True,
    )


def restrict(g: LayeredGraph, n: int) -> LayeredGraph:
    """Keep levels 0..n and the edges among them."""
    if not 0 <= n <= g.top_level:
        raise EdgeLevelMismatch(f"level {n} outside 0..{g.top_level}")
    return build_graph(
        g.levels[: n + 1],
        [e for e in g.edges if e[0].level <= n],
        unique_minimal=g.unique_minimal,
        positive_outdegree=g.positive_outdegree,
        labels={v: s for v, s in g.labels if v.level <= n},
    )


def _common_level(vertex_set: Iterable[V]) -> int | None:
    levels = {v.level for v in vertex_set}
    if len(levels) > 1:
        raise MixedLevels(f"vertex set spans levels {sorted(levels)}")
    return levels.pop() if levels else None


def successors(g: LayeredGraph, vertex_set: Iterable[V]) -> frozenset[V]:
    """S(T): the union of S(t) over t in T."""
    vertex_set = set(vertex_set)
    _common_level(vertex_set)
    return frozenset(w for t in vertex_set for w in g.succ(t))


@dataclass(frozen=True)
class ClassPartition:
    """Equivalence classes of V_{n-1} under co-coverage from T in V_n."""

    ground_level: int
    classes: tuple[tuple[V, ...], ...]
    source: frozenset[V]
    successor_set: frozenset[V]

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def k_meeting(self) -> int:
        """Number of classes that meet S(T) (k_T^T)."""
        return sum(1 for c in self.classes if self.successor_set.intersection(c))


def class_partition(
    g: LayeredGraph, vertex_set: Iterable[V], *, level: int | None = None
) -> ClassPartition:
    """Union-find closure of co-coverage: v ~ w when some t in T covers both."""
    vertex_set = frozenset(vertex_set)
    set_level = _common_level(vertex_set)
    if set_level is None and level is None:
        raise MixedLevels("empty vertex set needs an explicit level")
    n = set_level if set_level is not None else level
    if n < 1:
        raise MixedLevels("vertex sets at level 0 have no partition below them")
    ground = g.level_vertices(n - 1)
    parent = {w: w for w in ground}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in vertex_set:
        ws = g.succ(t)
        for a, b in zip(ws, ws[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups: dict[V, list[V]] = {}
    for w in ground:
        groups.setdefault(find(w), []).append(w)
    classes = tuple(sorted(tuple(sorted(c)) for c in groups.values()))
    return ClassPartition(
        ground_level=n - 1,
        classes=classes,
        source=vertex_set,
        successor_set=successors(g, vertex_set) if vertex_set else frozenset(),
    )


def check_identities(g: LayeredGraph, vertex_set: Iterable[V], *, level: int | None = None):
    """The three counting identities tying |V_{n-1}|, |S(T)|, k_T, k_T^T.

    Returns a dict of the six numbers; raises AssertionError on any
    violation (which would indicate a library bug).
    """
    part = class_partition(g, vertex_set, level=level)
    n = part.ground_level + 1
    ground_size = g.levels[n - 1]
    s_size = len(part.successor_set)
    report = {
        "ground_size": ground_size,
        "k_empty": ground_size,
        "k": part.k,
        "k_meeting": part.k_meeting,
        "successor_size": s_size,
        "complement_size": ground_size - s_size,
    }
    assert ground_size == class_partition(g, (), level=n).k
    assert ground_size - s_size == part.k - part.k_meeting
    assert s_size == ground_size - part.k + part.k_meeting
    return report


def is_uniform(g: LayeredGraph, *, oracle: bool = False):
    """(True, None) or (False, witness vertex with its split classes).

    With oracle=True, uses down-up-sequence connectivity on S(v) instead
    of the class-partition count; both must agree.
    """
    for n in range(2, len(g.levels)):
        for v in g.level_vertices(n):
            sv = g.succ(v)
            if len(sv) <= 1:
                continue
            if oracle:
                linked = _down_up_connected(g, sv)
            else:
                # S(v) is linked iff the classes of V_{n-2} under
                # co-coverage from S(v) meet S(S(v)) exactly once
                part = class_partition(g, sv)
                linked = part.k_meeting == 1
            if not linked:
                groups: dict[object, list[V]] = {}
                part = class_partition(g, sv)
                cls_of = {w: i for i, c in enumerate(part.classes) for w in c}
                for u in sv:
                    su = g.succ(u)
                    key = cls_of[su[0]] if su else ("lone", u)
                    groups.setdefault(key, []).append(u)
                split = tuple(tuple(c) for c in groups.values())
                return False, (v, split)
    return True, None


def _down_up_connected(g: LayeredGraph, sv: tuple[V, ...]) -> bool:
    """BFS on S(v) with x ~ x' when S(x) and S(x') intersect."""
    sv = list(sv)
    succ_sets = {x: set(g.succ(x)) for x in sv}
    seen = {sv[0]}
    frontier = [sv[0]]
    while frontier:
        x = frontier.pop()
        for y in sv:
            if y not in seen and succ_sets[x] & succ_sets[y]:
                seen.add(y)
                frontier.append(y)
    return len(seen) == len(sv)


def is_non_nesting(g: LayeredGraph):
    """(True, None) or (False, (p, q)) with S(p) contained in S(q)."""
    for n in range(1, len(g.levels)):
        wide = [(v, frozenset(g.succ(v))) for v in g.level_vertices(n) if g.out_degree(v) > 1]
        for (p, sp), (q, sq) in itertools.permutations(wide, 2):
            if sp <= sq:
                return False, (p, q)
    return True, None


def is_atomic_lattice(g: LayeredGraph) -> bool:
    """True iff the reachability poset is a lattice in which every
    element is the join of the atoms below it."""
    if g.levels[0] != 1:
        raise MultipleMinimal("atomic-lattice test needs a unique minimal vertex")
    verts = g.vertices()
    leq = {(a, b): g.reaches(b, a) for a in verts for b in verts}  # a <= b

    def join(a, b):
        ups = [z for z in verts if leq[(a, z)] and leq[(b, z)]]
        least = [z for z in ups if all(leq[(z, u)] for u in ups)]
        return least[0] if len(least) == 1 else None

    def meet(a, b):
        downs = [z for z in verts if leq[(z, a)] and leq[(z, b)]]
        greatest = [z for z in downs if all(leq[(d, z)] for d in downs)]
        return greatest[0] if len(greatest) == 1 else None

    for a, b in itertools.combinations(verts, 2):
        if join(a, b) is None or meet(a, b) is None:
            return False
    atoms = g.level_vertices(1)
    for v in verts:
        if v.level == 0:
            continue
        below = [a for a in atoms if leq[(a, v)]]
        if not below:
            return False
        j = below[0]
        for a in below[1:]:
            j = join(j, a)
            if j is None:
                return False
        if j != v:
            return False
    return True


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dim subspaces of F_q^n, by the product formula."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def are_isomorphic(
    g1: LayeredGraph, g2: LayeredGraph, rng=None
) -> Optional[dict[V, V]]:
    """Level-preserving graph isomorphism by per-level backtracking.

    Returns a vertex bijection or None.  Candidates are pruned by
    (out-degree, in-degree) profile and, above level 0, by the image of
    the successor set (already fully mapped).  Passing an `rng` shuffles
    the candidate order, so with g2 == g1 this samples a random
    automorphism.
    """
    if g1.levels != g2.levels:
        return None

    def profile(g, v):
        return (g.out_degree(v), len(g.pred(v)))

    for n in range(len(g1.levels)):
        p1 = sorted(profile(g1, v) for v in g1.level_vertices(n))
        p2 = sorted(profile(g2, v) for v in g2.level_vertices(n))
        if p1 != p2:
            return None

    verts = g1.vertices()
    pools = {n: list(g2.level_vertices(n)) for n in range(len(g2.levels))}
    if rng is not None:
        for ws in pools.values():
            rng.shuffle(ws)
    mapping: dict[V, V] = {}
    used: set[V] = set()

    def constrained(v: V) -> int:
        return sum(1 for u in g1.succ(v) + g1.pred(v) if u in mapping)

    def candidates(v: V):
        # mapped neighbors of v must map exactly onto the mapped
        # neighborhood of the candidate, in both directions
        want_succ = {mapping[s] for s in g1.succ(v) if s in mapping}
        n_succ = sum(1 for s in g1.succ(v) if s in mapping)
        want_pred = {mapping[p] for p in g1.pred(v) if p in mapping}
        n_pred = sum(1 for p in g1.pred(v) if p in mapping)
        for w in pools[v.level]:
            if w in used or profile(g1, v) != profile(g2, w):
                continue
            have_succ = {s for s in g2.succ(w) if s in used}
            if len(have_succ) != n_succ or have_succ != want_succ:
                continue
            have_pred = {p for p in g2.pred(w) if p in used}
            if len(have_pred) != n_pred or have_pred != want_pred:
                continue
            yield w

    def backtrack() -> bool:
        if len(mapping) == len(verts):
            return True
        # most-constrained vertex first: forced assignments collapse the
        # search on highly symmetric graphs
        v = max(
            (u for u in verts if u not in mapping),
            key=lambda u: (constrained(u), u.level, -u.index),
        )
        for w in candidates(v):
            mapping[v] = w
            used.add(w)
            if backtrack():
                return True
            used.remove(w)
            del mapping[v]
        return False

    if not backtrack():
        return None
    # post-hoc certificate: the map must carry the edge set exactly
    mapped_edges = {(mapping[t], mapping[h]) for t, h in g1.edges}
    assert mapped_edges == set(g2.edges)
    return dict(mapping)


def upper_part(g: LayeredGraph, from_level: int) -> LayeredGraph:
    """Levels >= from_level re-based so that from_level becomes level 0."""
    shift = from_level
    return build_graph(
        g.levels[from_level:],
        [
            (V(t.level - shift, t.index), V(h.level - shift, h.index))
            for t, h in g.edges
            if h.level >= from_level
        ],
    )


# --- serialization ---------------------------------------------------------


def to_json_dict(g: LayeredGraph) -> dict:
    return {
        "levels": list(g.levels),
        "edges": sorted([list(t), list(h)] for t, h in g.edges),
        "flags": {
            "unique_minimal": g.unique_minimal,
            "positive_outdegree": g.positive_outdegree,
        },
        "labels": {f"{v.level},{v.index}": s for v, s in g.labels},
    }


def from_json_dict(data: dict) -> LayeredGraph:
    flags = data.get("flags", {})
    labels = {}
    for key, s in data.get("labels", {}).items():
        lvl, idx = key.split(",")
        labels[V(int(lvl), int(idx))] = s
    return build_graph(
        data["levels"],
        [(V(*t), V(*h)) for t, h in data["edges"]],
        unique_minimal=flags.get("unique_minimal", False),
        positive_outdegree=flags.get("positive_outdegree", False),
        labels=labels,
    )


def to_json(g: LayeredGraph) -> str:
    return json.dumps(to_json_dict(g), sort_keys=True)


def from_json(text: str) -> LayeredGraph:
    return from_json_dict(json.loads(text))


def to_dot(g: LayeredGraph) -> str:
    lines = ["digraph layered {", "  rankdir=TB;"]
    for n in range(g.top_level, -1, -1):
        names = []
        for v in g.level_vertices(n):
            name = f"v{n}_{v.index}"
            text = g.label(v) or f"({n},{v.index})"
            lines.append(f'  {name} [label="{text}"];')
            names.append(name)
        if names:
            lines.append("  { rank=same; " + "; ".join(names) + "; }")
    for t, h in sorted(g.edges):
        lines.append(f"  v{t.level}_{t.index} -> v{h.level}_{h.index};")
    lines.append("}")
    return "\n".join(lines)
