"""Tour of the basic objects: layered graphs and their bigraded algebras.

A layered graph partitions its vertices into levels, with every edge
dropping exactly one level.  The workbench ships builders for the
standard families and computes exact dimension tables for the two
algebras attached to a graph: the quotient by non-edge products and
successor sums (the "B" table below), and the associated graded algebra
of the universal labeling algebra (the "grA" table).
"""

from laga import (
    b_hilbert_table,
    build_boolean,
    build_subspace_lattice,
    gr_hilbert_table,
    is_uniform,
    kappa_profile,
    to_dot,
)


def main() -> None:
    g = build_boolean(3)
    print("Boolean lattice on {1,2,3}:")
    print(f"  level sizes {g.levels}, {len(g.edges)} edges")
    print(f"  uniform: {is_uniform(g)[0]}")
    print()

    print("Bigraded dimensions of the successor-sum quotient:")
    print(b_hilbert_table(g, 3, 6).render())
    print()
    print("Bigraded dimensions of the graded labeling algebra:")
    print(gr_hilbert_table(g, 3, 6).render())
    print()

    print("Per-vertex kernel profile at level 2 (k = dim of the kernel of")
    print("left multiplication; out-degree = |level below| - k + 1):")
    for row in kappa_profile(g, 2):
        v = row["vertex"]
        print(f"  ({v[0]},{v[1]})  k={row['k']}  out-degree={row['out_degree']}")
    print()

    q, n = 2, 3
    lat = build_subspace_lattice(q, n)
    print(f"Subspace lattice of F_{q}^{n}: level sizes {lat.levels}")
    print("(7 lines and 7 planes of the Fano configuration)")
    print()

    print("DOT rendering of the Boolean lattice (pipe into graphviz):")
    print(to_dot(g))


if __name__ == "__main__":
    main()
