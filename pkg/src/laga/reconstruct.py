"""Graph recovery from bigraded algebra data alone.

The pipeline sees only an `AlgebraView`: per-level dimensions plus the
bilinear structure constants of degree-1 times degree-1 multiplication,
in an opaque (possibly scrambled) coordinate basis.  From that it builds
upper vertex-like bases by a greedy max-kernel scan, reads off
out-degree multisets and successor intersections, and reconstructs the
hidden graph for non-nesting posets, Boolean lattices, and subspace
lattices.  Every reconstruction is certified against an independently
built reference with the graph isomorphism checker.

Convention: the view reports level 0 as dimension 0 (the minimal vertex
generates nothing), so the kernel of left multiplication at level 1 is
the zero space and the out-degree formula still returns 1 there.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .balgebra import BElement, component, iso_condition_check, kappa_combinatorial
from .errors import (
    LevelMismatch,
    NonNestingViolated,
    NotUniform,
    ReconstructionFailed,
    UnsupportedField,
    VerificationFailed,
)
from .fields import GF, FieldSpec, Fp
from .graphs import (
    LayeredGraph,
    V,
    are_isomorphic,
    build_boolean,
    build_graph,
    build_subspace_lattice,
    gaussian_binomial,
    is_uniform,
)
from .linalg import (
    Subspace,
    enumerate_rays,
    full_space,
    kernel,
    left_kernel,
    rank,
    reduce_vector,
    rref,
    span,
    zero_space,
)

F3 = GF(3)

# above this many rays the default basis search switches from the
# exhaustive greedy scan to kernel sampling
_EXHAUSTIVE_RAY_LIMIT = 20000


@dataclass(frozen=True)
class AlgebraView:
    """Structure constants of the algebra in an opaque basis.

    level_dims[n] is the dimension of the degree-(1, n) component
    (entry 0 is always 0).  tensors[n][i][j] holds the quotient
    coordinates of the product of level-n basis vector i with
    level-(n-1) basis vector j, for n >= 2.  Reconstruction code may
    consult nothing else.
    """

    field: FieldSpec
    level_dims: tuple[int, ...]
    tensors: tuple
    plain: bool = False

    @property
    def top_level(self) -> int:
        return len(self.level_dims) - 1

    def multiply(self, n: int, x, y) -> tuple:
        """Bilinear product of a level-n vector and a level-(n-1) vector."""
        if n < 2 or n > self.top_level or self.tensors[n] is None:
            return ()
        t = self.tensors[n]
        width = len(t[0][0]) if t and t[0] else 0
        acc = [self.field.zero] * width
        for i, a in enumerate(x):
            a = self.field(a)
            if a == 0:
                continue
            for j, b in enumerate(y):
                b = self.field(b)
                if b == 0:
                    continue
                c = a * b
                acc = [u + c * w for u, w in zip(acc, t[i][j])]
        return tuple(acc)


def _identity_maps(g: LayeredGraph, field: FieldSpec) -> dict[int, list[list]]:
    return {
        n: [
            [field.one if i == j else field.zero for j in range(g.levels[n])]
            for i in range(g.levels[n])
        ]
        for n in range(1, g.top_level + 1)
    }


def _compose(first: list[list], second: list[list], field: FieldSpec) -> list[list]:
    """Row-convention product: row i of the result is the image of row i
    of `first` under the map whose basis images are the rows of `second`."""
    width = len(second[0])
    out = []
    for row in first:
        acc = [field.zero] * width
        for j, c in enumerate(row):
            if c == 0:
                continue
            acc = [x + c * y for x, y in zip(acc, second[j])]
        out.append(acc)
    return out


def _propose_move(g, n, kappas, field, rng, nonzero):
    """One candidate elementary level-n move: unipotent shear along a
    kappa containment, a swap inside a kappa-equality class, or a single
    vertex scaling.  May return None when no candidate exists."""
    d = g.levels[n]
    eye = [
        [field.one if i == j else field.zero for j in range(d)] for i in range(d)
    ]
    kind = rng.randrange(3)
    verts = g.level_vertices(n)
    if kind == 0:
        pairs = [
            (v, w)
            for v in verts
            for w in verts
            if v != w and kappas[w].contains_subspace(kappas[v])
        ]
        if not pairs:
            return None
        v, w = rng.choice(pairs)
        eye[v.index][w.index] = field(rng.choice(nonzero))
    elif kind == 1:
        groups: dict = {}
        for v in verts:
            groups.setdefault(kappas[v].key(), []).append(v)
        fat = [vs for vs in groups.values() if len(vs) >= 2]
        if not fat:
            return None
        a, b = rng.sample(rng.choice(fat), 2)
        eye[a.index], eye[b.index] = eye[b.index], eye[a.index]
    else:
        i = rng.randrange(d)
        eye[i][i] = field(rng.choice(nonzero))
    return eye


def _scramble_maps(g: LayeredGraph, field: FieldSpec, rng) -> dict[int, list[list]]:
    """Random per-level invertible maps certified to induce a bigraded
    isomorphism: a random graph automorphism, whole-level scalars, and
    elementary moves each individually validated by the kappa criterion."""
    auto = are_isomorphic(g, g, rng=rng)
    maps = {}
    for n in range(1, g.top_level + 1):
        d = g.levels[n]
        mat = [[field.zero] * d for _ in range(d)]
        for i in range(d):
            mat[i][auto[V(n, i)].index] = field.one
        maps[n] = mat
    kappas = {
        v: kappa_combinatorial(g, [v], field=field) for v in g.positive_vertices()
    }
    nonzero = list(range(1, field.p)) if field.p else [1, 2, 3, -1, -2]
    for n in range(1, g.top_level + 1):
        lam = field(rng.choice(nonzero))
        maps[n] = [[lam * x for x in row] for row in maps[n]]
        if g.levels[n] < 2:
            continue
        for _ in range(3 * g.levels[n]):
            move = _propose_move(g, n, kappas, field, rng, nonzero)
            if move is None:
                continue
            if iso_condition_check(g, g, {n: move}, field):
                maps[n] = _compose(maps[n], move, field)
    assert iso_condition_check(g, g, maps, field)
    return maps


def algebra_view(
    g: LayeredGraph, field: FieldSpec = F3, scramble_seed: int | None = None
) -> AlgebraView:
    """Structure constants of the algebra of a uniform graph; with a
    seed, degree-1 coordinates are conjugated by certified random maps."""
    uniform, witness = is_uniform(g)
    if not uniform:
        raise NotUniform(f"witness: {witness}")
    if scramble_seed is None:
        maps = _identity_maps(g, field)
    else:
        import random

        maps = _scramble_maps(g, field, random.Random(scramble_seed))
    tensors: list = [None, None]
    for n in range(2, g.top_level + 1):
        comp = component(g, 2, 2 * n - 1, field)
        index = {w: i for i, w in enumerate(comp.basis_words)}
        level_tensor = []
        for i in range(g.levels[n]):
            row = []
            for j in range(g.levels[n - 1]):
                vec = [field.zero] * len(comp.basis_words)
                for vi, a in enumerate(maps[n][i]):
                    if a == 0:
                        continue
                    for wi, b in enumerate(maps[n - 1][j]):
                        if b == 0:
                            continue
                        pos = index[(V(n, vi), V(n - 1, wi))]
                        vec[pos] = vec[pos] + a * b
                row.append(comp.project(vec))
            level_tensor.append(tuple(row))
        tensors.append(tuple(level_tensor))
    return AlgebraView(
        field=field,
        level_dims=(0,) + g.levels[1:],
        tensors=tuple(tensors),
        plain=scramble_seed is None,
    )


@lru_cache(maxsize=None)
def _kappa_view_cached(view: AlgebraView, n: int, coords: tuple) -> Subspace:
    field = view.field
    d_prev = view.level_dims[n - 1]
    if n == 1:
        return zero_space(0, field)
    t = view.tensors[n]
    rows = []
    for j in range(d_prev):
        width = len(t[0][j]) if t else 0
        acc = [field.zero] * width
        for i, a in enumerate(coords):
            if a == 0:
                continue
            acc = [u + a * w for u, w in zip(acc, t[i][j])]
        rows.append(acc)
    if not rows:
        return zero_space(0, field)
    if not rows[0]:
        return full_space(d_prev, field)
    transpose = [[rows[i][j] for i in range(d_prev)] for j in range(len(rows[0]))]
    return kernel(transpose, d_prev, field)


def kappa_view(view: AlgebraView, n: int, coords) -> Subspace:
    """Kernel of left multiplication by a level-n view element, as a
    canonical subspace in level-(n-1) view coordinates."""
    if not 1 <= n <= view.top_level:
        raise LevelMismatch(f"level {n} outside 1..{view.top_level}")
    norm = tuple(view.field(c) for c in coords)
    if len(norm) != view.level_dims[n]:
        raise LevelMismatch(f"{len(norm)} coords at level of dimension {view.level_dims[n]}")
    return _kappa_view_cached(view, n, norm)


@dataclass(frozen=True)
class UpperBasis:
    """A greedy max-k basis of one degree-(1, n) component, with the
    kernel subspace and its dimension recorded per vector."""

    level: int
    vectors: tuple
    kappas: tuple
    ks: tuple


def _unit(field: FieldSpec, d: int, i: int) -> tuple:
    return tuple(field.one if j == i else field.zero for j in range(d))


def _fi_chain_check(view: AlgebraView, n: int, scored, chosen) -> None:
    """The first vectors chosen at each k threshold must span the space
    generated by all candidates with kernel dimension >= that threshold."""
    field = view.field
    d = view.level_dims[n]
    frows: list = []
    filtration = {}
    idx = 0
    while idx < len(scored):
        k = -scored[idx][0]
        while idx < len(scored) and -scored[idx][0] == k:
            x = scored[idx][2]
            residual = reduce_vector(x, frows, field)
            if any(c != 0 for c in residual):
                frows, _ = rref(frows + [list(x)], field)
            idx += 1
        filtration[k] = span([list(r) for r in frows], d, field)
    for t, target in filtration.items():
        prefix = [list(x) for x, kap in chosen if kap.dim >= t]
        if span(prefix, d, field) != target:
            raise VerificationFailed(f"basis incompatible with the k >= {t} filtration")


def _right_mult_kernel(view: AlgebraView, n: int, y) -> Subspace:
    """{a in the level-n component : a * y = 0} for y one level down."""
    field = view.field
    d = view.level_dims[n]
    t = view.tensors[n]
    width = len(t[0][0]) if t and t[0] else 0
    rows = []
    for i in range(d):
        acc = [field.zero] * width
        for j, b in enumerate(y):
            if b == 0:
                continue
            acc = [u + b * w for u, w in zip(acc, t[i][j])]
        rows.append(acc)
    if width == 0:
        return full_space(d, field)
    return left_kernel(rows, field)


def _sampled_vertex_rays(view: AlgebraView, n: int):
    """Vertex rays by kernel sampling, for components too large to scan.

    The degree-2 relation space splits as a direct sum over left
    factors, so for any y one level down, {a : a * y = 0} is the span of
    the hidden vertices v with y in the kernel of v.  A sampled y whose
    right-multiplication kernel is one dimensional therefore exhibits a
    vertex ray exactly.  Reliable when every kernel dimension is a
    sizable fraction of the level below; the final isomorphism
    certificate backstops correctness either way.
    """
    import random

    field = view.field
    d = view.level_dims[n]
    d_prev = view.level_dims[n - 1]
    if d == 1:
        ray = (field.one,)
        return [(ray, kappa_view(view, n, ray))]
    rng = random.Random(0x1A6A ^ (n << 16) ^ d)
    found: dict[tuple, Subspace] = {}
    for _ in range(500 * d):
        if len(found) == d:
            break
        y = tuple(field(rng.randrange(field.p)) for _ in range(d_prev))
        ker = _right_mult_kernel(view, n, y)
        if ker.dim != 1:
            continue
        ray = ker.basis[0]
        if ray not in found:
            found[ray] = kappa_view(view, n, ray)
    if len(found) < d:
        raise VerificationFailed(
            f"kernel sampling found {len(found)} of {d} vertex rays at level {n}"
        )
    if rank([list(r) for r in found], field) != d:
        raise VerificationFailed(f"sampled rays at level {n} are dependent")
    from .linalg import vector_key

    pairs = sorted(
        found.items(), key=lambda item: (-item[1].dim, vector_key(item[0]))
    )
    return pairs


@lru_cache(maxsize=None)
def upper_vertex_like_basis(
    view: AlgebraView, n: int, mode: str = "auto"
) -> UpperBasis:
    """Greedy basis: repeatedly take, among candidates outside the span
    of those already chosen, one maximizing the kernel dimension of left
    multiplication; ties break by candidate enumeration (lex) order.

    exhaustive mode scans every ray of the component (finite fields
    only); vertex mode scans only the standard basis and is a
    cross-validation shortcut for unscrambled views; sampled mode finds
    vertex rays through right-multiplication kernels when the ray count
    is too large to scan; auto picks exhaustive or sampled by size.
    """
    if not 1 <= n <= view.top_level:
        raise LevelMismatch(f"level {n} outside 1..{view.top_level}")
    field = view.field
    d = view.level_dims[n]
    if mode == "auto":
        if field.is_rational or field.p**d > _EXHAUSTIVE_RAY_LIMIT:
            mode = "sampled"
        else:
            mode = "exhaustive"
    if mode == "sampled":
        if field.is_rational:
            raise UnsupportedField("kernel sampling needs a finite field")
        pairs = _sampled_vertex_rays(view, n)
        return UpperBasis(
            level=n,
            vectors=tuple(x for x, _ in pairs),
            kappas=tuple(kap for _, kap in pairs),
            ks=tuple(kap.dim for _, kap in pairs),
        )
    if mode == "vertex":
        if not view.plain:
            raise VerificationFailed("vertex mode needs an unscrambled view")
        candidates = [_unit(field, d, i) for i in range(d)]
    elif mode == "exhaustive":
        if field.is_rational:
            raise UnsupportedField("exhaustive ray scan needs a finite field")
        candidates = list(enumerate_rays(field, d))
    else:
        raise ValueError(f"unknown mode: {mode}")
    scored = []
    for pos, x in enumerate(candidates):
        kap = kappa_view(view, n, x)
        scored.append((-kap.dim, pos, x, kap))
    scored.sort(key=lambda s: s[:2])
    chosen = []
    rows: list = []
    for negk, _, x, kap in scored:
        if len(chosen) == d:
            break
        residual = reduce_vector(x, rows, field)
        if all(c == 0 for c in residual):
            continue
        rows, _ = rref(rows + [list(x)], field)
        chosen.append((x, kap))
    if len(chosen) < d:
        raise VerificationFailed(f"candidates span only {len(chosen)} of {d} dimensions")
    if mode == "exhaustive":
        _fi_chain_check(view, n, scored, chosen)
    if view.plain:
        vertex_forms = sorted(
            kappa_view(view, n, _unit(field, d, i)).key() for i in range(d)
        )
        basis_forms = sorted(kap.key() for _, kap in chosen)
        if vertex_forms != basis_forms:
            raise VerificationFailed("kernel multiset does not match the vertex basis")
    return UpperBasis(
        level=n,
        vectors=tuple(x for x, _ in chosen),
        kappas=tuple(kap for _, kap in chosen),
        ks=tuple(kap.dim for _, kap in chosen),
    )


def outdegree_multiset(view: AlgebraView, n: int, mode: str = "exhaustive") -> list[int]:
    """Hidden out-degrees at level n: level_dims[n-1] - k + 1 per basis
    vector, sorted ascending."""
    basis = upper_vertex_like_basis(view, n, mode)
    return sorted(view.level_dims[n - 1] - k + 1 for k in basis.ks)


def intersection_size(view: AlgebraView, b1: BElement, b2: BElement) -> int:
    """|S(v) meet S(w)| for the hidden vertices behind two upper-basis
    vectors; values <= 1 do not distinguish 0 from 1."""
    if b1.level != b2.level:
        raise LevelMismatch(f"{b1.level} vs {b2.level}")
    n = b1.level
    kap1 = kappa_view(view, n, b1.coords)
    kap2 = kappa_view(view, n, b2.coords)
    k12 = kap1.intersect(kap2).dim
    return view.level_dims[n - 1] + k12 - kap1.dim - kap2.dim + 1


def _nonnesting_core(view: AlgebraView):
    """Upper bases for every level >= 2 plus the recovered Hasse diagram
    on those levels (re-based so the old level 2 becomes level 0)."""
    top = view.top_level
    if top < 2:
        raise ReconstructionFailed("no levels above 1 to recover")
    bases = {i: upper_vertex_like_basis(view, i) for i in range(2, top + 1)}
    for i in range(2, top + 1):
        basis = bases[i]
        d_prev = view.level_dims[i - 1]
        for pos, k in enumerate(basis.ks):
            if d_prev - k + 1 <= 1:
                raise NonNestingViolated(
                    f"level {i} vector {pos} has successor count <= 1"
                )
        for a, b in itertools.permutations(range(len(basis.vectors)), 2):
            if basis.kappas[a].contains_subspace(basis.kappas[b]):
                raise NonNestingViolated(
                    f"nested successor sets at level {i} (vectors {a}, {b})"
                )
    edges = []
    for i in range(3, top + 1):
        upper, lower = bases[i], bases[i - 1]
        for a, kap in enumerate(upper.kappas):
            succ = [
                j for j, x in enumerate(lower.vectors) if not kap.contains_vector(x)
            ]
            expected = view.level_dims[i - 1] - upper.ks[a] + 1
            if len(succ) != expected:
                raise NonNestingViolated(
                    f"level {i} vector {a}: {len(succ)} successors, expected {expected}"
                )
            edges += [(V(i - 2, a), V(i - 3, j)) for j in succ]
    graph = build_graph(tuple(view.level_dims[2:]), edges)
    return graph, bases


def reconstruct_nonnesting(
    view: AlgebraView, expect_levels=None
) -> LayeredGraph:
    """The hidden graph on levels >= 2, up to within-level relabeling.

    Raises NonNestingViolated when the view exhibits nested or
    singleton successor sets, which make the hidden graph ambiguous.
    """
    graph, _ = _nonnesting_core(view)
    if expect_levels is not None and tuple(expect_levels) != graph.levels:
        raise ReconstructionFailed(
            f"recovered level sizes {graph.levels}, expected {tuple(expect_levels)}"
        )
    return graph


def _annihilator(sub: Subspace) -> list[list]:
    """RREF rows whose right kernel is exactly the given subspace."""
    if sub.dim == 0:
        return [list(row) for row in full_space(sub.ambient_dim, sub.field).basis]
    return [
        list(row)
        for row in kernel(
            [list(r) for r in sub.basis], sub.ambient_dim, sub.field
        ).basis
    ]


def _level_one_sets(view: AlgebraView, basis2: UpperBasis, size: int, count: int):
    """Subsets A of the level-2 basis, |A| = size, with dim kappa_A >= 2;
    exactly `count` must exist, one per hidden level-1 vertex."""
    field = view.field
    d1 = view.level_dims[1]
    anns = [_annihilator(kap) for kap in basis2.kappas]
    m = len(anns)
    found = []

    def extend(start: int, left: int, rows: list):
        if left == 0:
            found.append(tuple(current))
            return
        for j in range(start, m - left + 1):
            new_rows = rows
            for r in anns[j]:
                residual = reduce_vector(r, new_rows, field)
                if any(c != 0 for c in residual):
                    new_rows, _ = rref(new_rows + [r], field)
            if d1 - len(new_rows) < 2:
                continue
            current.append(j)
            extend(j + 1, left - 1, new_rows)
            current.pop()

    current: list[int] = []
    extend(0, size, [])
    if len(found) != count:
        raise ReconstructionFailed(
            f"found {len(found)} level-1 candidate sets of size {size}, expected {count}"
        )
    return [frozenset(a) for a in sorted(found)]


def _assemble_and_certify(
    view: AlgebraView, upper: LayeredGraph, asets, reference: LayeredGraph, name: str
) -> LayeredGraph:
    d1 = view.level_dims[1]
    levels = (1, d1) + tuple(view.level_dims[2:])
    edges = [(V(1, i), V(0, 0)) for i in range(d1)]
    for i, a_set in enumerate(asets):
        for b in range(view.level_dims[2]):
            if b not in a_set:
                edges.append((V(2, b), V(1, i)))
    edges += [
        (V(t.level + 2, t.index), V(h.level + 2, h.index)) for t, h in upper.edges
    ]
    result = build_graph(levels, edges, unique_minimal=True)
    if are_isomorphic(result, reference) is None:
        raise ReconstructionFailed(f"output is not isomorphic to the {name}")
    return result


def reconstruct_boolean(view: AlgebraView, n: int) -> LayeredGraph:
    """Full recovery of the rank-n Boolean lattice, certified."""
    expected = tuple(math.comb(n, i) for i in range(1, n + 1))
    if view.level_dims[1:] != expected:
        raise ReconstructionFailed(
            f"level dimensions {view.level_dims[1:]} do not match rank {n}: {expected}"
        )
    upper, bases = _nonnesting_core(view)
    asets = _level_one_sets(view, bases[2], math.comb(n - 1, 2), n)
    return _assemble_and_certify(
        view, upper, asets, build_boolean(n), f"rank-{n} Boolean lattice"
    )


def reconstruct_subspace(view: AlgebraView, q: int, n: int) -> LayeredGraph:
    """Full recovery of the subspace lattice of F_q^n (n >= 3), certified."""
    if n < 3:
        raise ReconstructionFailed("subspace recovery needs rank n >= 3")
    expected = tuple(gaussian_binomial(n, k, q) for k in range(1, n + 1))
    if view.level_dims[1:] != expected:
        raise ReconstructionFailed(
            f"level dimensions {view.level_dims[1:]} do not match q={q}, n={n}: {expected}"
        )
    size = (q**n - q**2) * (q ** (n - 1) - 1) // ((q - 1) * (q**2 - 1))
    upper, bases = _nonnesting_core(view)
    asets = _level_one_sets(view, bases[2], size, gaussian_binomial(n, 1, q))
    return _assemble_and_certify(
        view,
        upper,
        asets,
        build_subspace_lattice(q, n),
        f"subspace lattice of F_{q}^{n}",
    )


# --- reporting and serialization -------------------------------------------


def _scalar_to_json(x):
    return x.v if isinstance(x, Fp) else str(x)


def _scalar_from_json(field: FieldSpec, raw):
    if field.is_rational:
        return Fraction(raw)
    return field(int(raw))


def view_to_json_dict(view: AlgebraView) -> dict:
    tensors = {}
    for n in range(2, view.top_level + 1):
        tensors[str(n)] = [
            [[_scalar_to_json(c) for c in cell] for cell in row]
            for row in view.tensors[n]
        ]
    return {
        "field": view.field.p,
        "level_dims": list(view.level_dims),
        "plain": view.plain,
        "tensors": tensors,
    }


def view_from_json_dict(data: dict) -> AlgebraView:
    field = FieldSpec(data["field"])
    dims = tuple(int(x) for x in data["level_dims"])
    tensors: list = [None] * len(dims)
    for key, level_tensor in data["tensors"].items():
        tensors[int(key)] = tuple(
            tuple(tuple(_scalar_from_json(field, c) for c in cell) for cell in row)
            for row in level_tensor
        )
    return AlgebraView(
        field=field,
        level_dims=dims,
        tensors=tuple(tensors),
        plain=bool(data.get("plain", False)),
    )


def reconstruction_report(
    view: AlgebraView,
    family: str,
    n: int | None = None,
    q: int | None = None,
    reference: LayeredGraph | None = None,
) -> dict:
    """Run one certified reconstruction and package the evidence: chosen
    bases, k values, kernel dimensions, recovered edges, verdict."""
    from .graphs import to_json_dict, upper_part

    if family == "boolean":
        if n is None:
            raise ReconstructionFailed("boolean recovery needs the rank n")
        graph = reconstruct_boolean(view, n)
        certified = True
    elif family == "subspace":
        if n is None or q is None:
            raise ReconstructionFailed("subspace recovery needs q and n")
        graph = reconstruct_subspace(view, q, n)
        certified = True
    elif family == "nonnesting":
        graph = reconstruct_nonnesting(view)
        certified = None
        if reference is not None:
            target = upper_part(reference, 2) if reference.top_level >= 2 else None
            certified = target is not None and are_isomorphic(graph, target) is not None
            if not certified:
                raise ReconstructionFailed("output does not match the reference graph")
    else:
        raise ReconstructionFailed(f"unknown family: {family}")
    per_level = []
    for i in range(2, view.top_level + 1):
        basis = upper_vertex_like_basis(view, i)
        per_level.append(
            {
                "level": i,
                "basis": [[_scalar_to_json(c) for c in x] for x in basis.vectors],
                "k_values": list(basis.ks),
                "kappa_dims": [kap.dim for kap in basis.kappas],
            }
        )
    return {
        "family": family,
        "levels": list(graph.levels),
        "edges": sorted([list(t), list(h)] for t, h in graph.edges),
        "graph": to_json_dict(graph),
        "per_level": per_level,
        "certified": certified,
    }
