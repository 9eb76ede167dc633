"""Recompute hom dimensions into limit objects the slow way.

The closed forms in the quiver module answer instantly.  The towers here
grind out the same numbers from truncated systems of finite-level hom
spaces, which is the whole point: two independent routes, one answer.
"""

from infgon import (
    FiniteInd,
    PruferInd,
    build_hom_tower,
    build_inverse_hom_tower,
    hom_dim,
    prufer_prufer_tower,
    truncated_colim,
    truncated_lim,
)


def main():
    y = FiniteInd(0, 0)

    t = build_hom_tower(y, 0, 12)
    print("direct tower from the slice base")
    print("  dims ", "".join(str(d) for d in t.dims))
    print("  flags", "".join("^" if f else "." for f in t.transition_nonzero))
    c = truncated_colim(t)
    print(f"  colimit {c.value} (stable from {c.stable_from})")
    print(f"  closed form {hom_dim(y, PruferInd(0)).value}")
    print()

    below = FiniteInd(-4, 2)
    t2 = build_hom_tower(below, 0, 12)
    print("a source that falls out of the wedge")
    print("  dims ", "".join(str(d) for d in t2.dims))
    print(f"  colimit {truncated_colim(t2).value}")
    print()

    t3 = build_inverse_hom_tower(y, 0, 12)
    print("inverse tower into the same object")
    print("  dims ", "".join(str(d) for d in t3.dims))
    lim = truncated_lim(t3)
    print(f"  limit {lim.value}, closed form {hom_dim(PruferInd(0), y).value}")
    print()

    print("limit against limit, nested towers")
    for m, n in [(0, 0), (0, 1), (3, -2)]:
        got = prufer_prufer_tower(m, n, 20)
        want = int(n <= m)
        print(f"  slots ({m:>2},{n:>2})  tower {got}  closed form {want}")


if __name__ == "__main__":
    main()
