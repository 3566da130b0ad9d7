"""Limits of reconstruction: graphs the algebra cannot tell apart.

Move the target of an out-degree-1 vertex within its level and nothing
in the algebra changes: such a vertex multiplies the entire level below
to zero either way, so every relation space — and hence every bigraded
dimension — is byte-for-byte identical.  Yet the graphs are not
isomorphic.  Reconstruction from algebra data alone is therefore only
possible up to this kind of ambiguity, which is why the recovery
routines require every successor set to have at least two elements and
no successor set to contain another.
"""

from laga import (
    are_isomorphic,
    b_hilbert_table,
    build_graph,
    relation_space,
)

BASE = [
    ((2, 0), (1, 0)),
    ((2, 0), (1, 1)),
    ((2, 1), (1, 1)),
    ((2, 1), (1, 2)),
    ((1, 0), (0, 0)),
    ((1, 1), (0, 0)),
    ((1, 2), (0, 0)),
]


def main() -> None:
    g1 = build_graph([1, 3, 3], BASE + [((2, 2), (1, 0))])
    g2 = build_graph([1, 3, 3], BASE + [((2, 2), (1, 1))])
    print("two graphs, identical except the single out-edge of vertex (2,2):")
    print("  g1: (2,2) -> (1,0)      g2: (2,2) -> (1,1)")
    print()

    same_relations = all(
        relation_space(g1, n) == relation_space(g2, n) for n in (1, 2)
    )
    print(f"all degree-2 relation spaces identical: {same_relations}")

    t1 = b_hilbert_table(g1, 3, 8).as_dict()
    t2 = b_hilbert_table(g2, 3, 8).as_dict()
    print(f"bigraded dimension tables identical up to (3, 8): {t1 == t2}")

    print(f"graphs isomorphic: {are_isomorphic(g1, g2) is not None}")
    print()
    print("same algebra, different graphs — the (2,2) vertex has a")
    print("singleton successor set, exactly what the recovery routines exclude.")
    print()
    print("compare them from the command line:")
    print("  laga compare g1.json g2.json")


if __name__ == "__main__":
    main()
