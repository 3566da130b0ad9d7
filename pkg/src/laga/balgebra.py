"""The bigraded quotient algebra on positive-level vertices.

Degree-2 relations kill products along non-edges and successor sums;
every computation here is per-bidegree exact linear algebra.  The kappa
subspace of an element (kernel of left multiplication) has a purely
combinatorial description via class sums, which is the primary path;
the kernel computation serves as an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    LevelMismatch,
    MixedLevels,
    NotUniform,
)
from .fields import QQ, FieldSpec
from .graphs import LayeredGraph, V, class_partition, is_uniform, successors
from .gralgebra import HilbertTable
from .linalg import (
    Subspace,
    enumeration_budget,
    full_space,
    left_kernel,
    matrix_apply,
    rank,
    reduce_vector,
    rref,
    span,
    zero_space,
)

Word = tuple[V, ...]


@dataclass(frozen=True)
class BElement:
    """A degree-1 element: exact coordinates over the vertex basis of one
    level."""

    field: FieldSpec
    level: int
    coords: tuple

    def support(self) -> frozenset[V]:
        return frozenset(
            V(self.level, i) for i, c in enumerate(self.coords) if c != 0
        )

    def __add__(self, other: "BElement") -> "BElement":
        if other.level != self.level:
            raise LevelMismatch(f"{self.level} vs {other.level}")
        return BElement(
            self.field,
            self.level,
            tuple(a + b for a, b in zip(self.coords, other.coords)),
        )


def vertex_element(g: LayeredGraph, v: V, field: FieldSpec = QQ) -> BElement:
    coords = [field.zero] * g.levels[v.level]
    coords[v.index] = field.one
    return BElement(field, v.level, tuple(coords))


def element(g: LayeredGraph, level: int, coords, field: FieldSpec = QQ) -> BElement:
    if len(coords) != g.levels[level]:
        raise DimensionMismatch(f"{len(coords)} coords for level of size {g.levels[level]}")
    return BElement(field, level, tuple(field(c) for c in coords))


def relation_space(g: LayeredGraph, n: int, field: FieldSpec = QQ) -> Subspace:
    """Degree-2 relation span inside V_n (x) V_{n-1} coordinates
    (row-major): non-successor products plus successor sums.

    At n = 1 the level below holds no generators, so every product
    vanishes: the full space."""
    if n < 1 or n > g.top_level:
        return zero_space(0, field)
    cols = g.levels[n] * g.levels[n - 1]
    if cols == 0:
        return zero_space(cols, field)
    if n == 1:
        return full_space(cols, field)
    width = g.levels[n - 1]
    gens = []
    for v in g.level_vertices(n):
        sv = set(g.succ(v))
        row_base = v.index * width
        for w in g.level_vertices(n - 1):
            if w not in sv:
                vec = [field.zero] * cols
                vec[row_base + w.index] = field.one
                gens.append(vec)
        vec = [field.zero] * cols
        for w in sv:
            vec[row_base + w.index] = field.one
        gens.append(vec)
    return span(gens, cols, field)


def gr_quadratic_space(g: LayeredGraph, n: int, field: FieldSpec = QQ) -> Subspace:
    """Span of v (x) (u - w) for u, w successors of v, in the same
    coordinates as relation_space."""
    if n < 2 or n > g.top_level:
        cols = 0 if n < 1 or n > g.top_level else g.levels[n] * g.levels[n - 1]
        return zero_space(cols, field)
    width = g.levels[n - 1]
    cols = g.levels[n] * width
    gens = []
    for v in g.level_vertices(n):
        sv = g.succ(v)
        for u in sv[1:]:
            vec = [field.zero] * cols
            vec[v.index * width + sv[0].index] = field.one
            vec[v.index * width + u.index] = -field.one
            gens.append(vec)
    return span(gens, cols, field)


@dataclass(frozen=True)
class BigradedComponent:
    """One bidegree slice: its word basis, the relation span inside the
    word-coordinate space, and the resulting dimension."""

    m: int
    n: int
    field: FieldSpec
    basis_words: tuple[Word, ...]
    relations: Subspace
    free_columns: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.free_columns)

    def word_index(self, word: Word) -> int:
        return self._index()[word]

    def _index(self):
        return {w: i for i, w in enumerate(self.basis_words)}

    def project(self, vector) -> tuple:
        """Quotient coordinates: residual against the relation basis,
        restricted to non-pivot columns."""
        residual = reduce_vector(vector, self.relations.basis, self.field)
        return tuple(residual[c] for c in self.free_columns)


def _component_words(g: LayeredGraph, m: int, n: int) -> list[Word]:
    """Words that survive the non-edge relations: levels must descend by
    one, so the start level is forced by (m, n)."""
    twice = 2 * n + m * (m - 1)
    if twice % (2 * m) != 0:
        return []
    s = twice // (2 * m)
    if s - m + 1 < 1 or s > g.top_level:
        return []
    level_ranges = [g.level_vertices(s - i) for i in range(m)]
    count = 1
    for lv in level_ranges:
        count *= len(lv)
    if count > enumeration_budget():
        raise BudgetExceeded(f"bidegree ({m},{n}) has {count} words")
    return [tuple(word) for word in itertools.product(*level_ranges)]


@cache
def component(g: LayeredGraph, m: int, n: int, field: FieldSpec = QQ) -> BigradedComponent:
    """Exact bidegree-(m, n) component of the quotient algebra."""
    if m == 1:
        words = tuple((v,) for v in g.level_vertices(n)) if 1 <= n <= g.top_level else ()
        rel = zero_space(len(words), field)
        return BigradedComponent(m, n, field, words, rel, tuple(range(len(words))))
    words = _component_words(g, m, n)
    if not words:
        return BigradedComponent(m, n, field, (), zero_space(0, field), ())
    index = {w: i for i, w in enumerate(words)}
    start_level = words[0][0].level
    gens: list[list] = []
    for pos in range(m - 1):
        lvl = start_level - pos
        pair_space = relation_space(g, lvl, field)
        width = g.levels[lvl - 1]
        if pair_space.dim == 0:
            continue
        left_levels = [g.level_vertices(start_level - i) for i in range(pos)]
        right_levels = [
            g.level_vertices(start_level - i) for i in range(pos + 2, m)
        ]
        for lword in itertools.product(*left_levels):
            for rword in itertools.product(*right_levels):
                for rel_row in pair_space.basis:
                    vec = [field.zero] * len(words)
                    for flat, c in enumerate(rel_row):
                        if c == 0:
                            continue
                        v = V(lvl, flat // width)
                        w = V(lvl - 1, flat % width)
                        word = tuple(lword) + (v, w) + tuple(rword)
                        vec[index[word]] = vec[index[word]] + c
                    gens.append(vec)
    relations = span(gens, len(words), field)
    pivots = [
        next(c for c, x in enumerate(row) if x != 0) for row in relations.basis
    ]
    free_cols = tuple(c for c in range(len(words)) if c not in set(pivots))
    return BigradedComponent(m, n, field, tuple(words), relations, free_cols)


def b_dimension(g: LayeredGraph, m: int, n: int, field: FieldSpec = QQ) -> int:
    return component(g, m, n, field).dim


def b_hilbert_table(
    g: LayeredGraph, max_m: int, max_n: int, field: FieldSpec = QQ
) -> HilbertTable:
    entries = []
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            dim = b_dimension(g, m, n, field)
            if dim:
                entries.append(((m, n), dim))
    return HilbertTable("B", max_m, max_n, tuple(entries))


def kappa_combinatorial(
    g: LayeredGraph, vertex_set, *, level: int | None = None, field: FieldSpec = QQ
) -> Subspace:
    """Span of the class sums of the co-coverage partition, in the
    coordinates of the level below."""
    part = class_partition(g, vertex_set, level=level)
    width = g.levels[part.ground_level]
    gens = []
    for cls in part.classes:
        vec = [field.zero] * width
        for w in cls:
            vec[w.index] = field.one
        gens.append(vec)
    return span(gens, width, field)


def kappa_of_element(g: LayeredGraph, a: BElement) -> Subspace:
    """Primary path: kappa of an arbitrary element via its support."""
    if not a.support():
        return full_space(g.levels[a.level - 1], a.field)
    return kappa_combinatorial(g, a.support(), field=a.field)


@cache
def _projected_word_images(g: LayeredGraph, n: int, field: FieldSpec):
    """Quotient coordinates of every length-2 word v*w with v at level n,
    computed once per graph so kernels of many elements stay cheap."""
    comp = component(g, 2, 2 * n - 1, field)
    images = {}
    for pos, word in enumerate(comp.basis_words):
        vec = [field.zero] * len(comp.basis_words)
        vec[pos] = field.one
        images[word] = comp.project(vec)
    return images


def kappa_kernel(g: LayeredGraph, a: BElement, field: FieldSpec | None = None) -> Subspace:
    """Oracle path: kernel of left multiplication into the degree-2
    component, computed from structure constants."""
    field = field or a.field
    n = a.level
    if n < 1:
        raise MixedLevels("kappa needs a positive level")
    if n == 1:
        # products with the minimal level all vanish
        return full_space(g.levels[0], field)
    images = _projected_word_images(g, n, field)
    width = g.levels[n - 1]
    support = [
        (v, field(a.coords[v.index]))
        for v in g.level_vertices(n)
        if a.coords[v.index] != 0
    ]
    rows = []
    for w in g.level_vertices(n - 1):
        acc = None
        for v, c in support:
            img = images[(v, w)]
            if acc is None:
                acc = [c * x for x in img]
            else:
                acc = [u + c * x for u, x in zip(acc, img)]
        rows.append(acc if acc is not None else [])
    free_dim = max((len(r) for r in rows), default=0)
    if free_dim == 0:
        return full_space(width, field)
    rows = [r if r else [field.zero] * free_dim for r in rows]
    transpose = [[rows[i][j] for i in range(width)] for j in range(free_dim)]
    from .linalg import kernel

    return kernel(transpose, width, field)


def k_stats(g: LayeredGraph, vertex_set, *, level: int | None = None):
    """(k_A, k_A^A, |S(A)|); asserts the kappa dimension matches k_A."""
    part = class_partition(g, vertex_set, level=level)
    s_size = len(part.successor_set)
    kappa = kappa_combinatorial(g, vertex_set, level=level)
    assert kappa.dim == part.k
    return part.k, part.k_meeting, s_size


def quadratic_dual_check(g: LayeredGraph, n: int, field: FieldSpec = QQ) -> bool:
    """The degree-2 relation space and the graded quadratic space must be
    exact annihilators of each other under the coordinate pairing."""
    uniform, _ = is_uniform(g)
    if not uniform:
        raise NotUniform("quadratic duality needs a uniform graph")
    if n < 2 or n > g.top_level:
        return True
    rb = relation_space(g, n, field)
    rgr = gr_quadratic_space(g, n, field)
    total = g.levels[n] * g.levels[n - 1]
    if rb.dim + rgr.dim != total:
        return False
    for x in rb.basis:
        for y in rgr.basis:
            if sum((a * b for a, b in zip(x, y)), field.zero) != 0:
                return False
    return True


def iso_condition_check(
    g1: LayeredGraph,
    g2: LayeredGraph,
    level_maps: dict[int, list[list]],
    field: FieldSpec = QQ,
) -> bool:
    """Whether invertible per-level maps induce a bigraded isomorphism:
    the image of every vertex kappa must be the kappa of the image.

    level_maps[n][i] is the coordinate vector (over g2's level-n vertex
    basis) of the image of g1's vertex (n, i).
    """
    if g1.levels != g2.levels:
        raise DimensionMismatch(f"{g1.levels} vs {g2.levels}")
    maps = {}
    for lvl in range(1, g1.top_level + 1):
        mat = level_maps.get(lvl)
        if mat is None:
            mat = [
                [field.one if i == j else field.zero for j in range(g1.levels[lvl])]
                for i in range(g1.levels[lvl])
            ]
        mat = [[field(x) for x in row] for row in mat]
        if len(mat) != g1.levels[lvl] or rank(mat, field) != g1.levels[lvl]:
            raise DimensionMismatch(f"level {lvl} map is not invertible")
        maps[lvl] = mat
    for n in range(2, g1.top_level + 1):
        for v in g1.level_vertices(n):
            kv = kappa_combinatorial(g1, [v], field=field)
            image_rows = [
                matrix_apply(
                    [[maps[n - 1][i][j] for i in range(g1.levels[n - 1])]
                     for j in range(g1.levels[n - 1])],
                    row,
                    field,
                )
                for row in kv.basis
            ]
            phi_kv = span(image_rows, g1.levels[n - 1], field)
            image_v = BElement(field, n, tuple(maps[n][v.index]))
            k_phi_v = kappa_of_element(g2, image_v)
            if phi_kv != k_phi_v:
                return False
    return True


def kappa_profile(g: LayeredGraph, n: int, field: FieldSpec = QQ):
    """Per-vertex (k, |S|) data for one level, for reporting."""
    out = []
    for v in g.level_vertices(n):
        k, km, s = k_stats(g, [v])
        out.append({"vertex": [v.level, v.index], "k": k, "out_degree": s})
    return out
