"""Arcs as coordinates for objects, and crossings as extensions.

A finite object becomes a chord between two integers, a limit object a
vertical ray.  The punchline is the bridge: two arcs cross exactly when
the corresponding objects extend each other.
"""

from infgon import (
    FiniteArc,
    InfiniteArc,
    arc_to_object,
    arcs_cross,
    ext_dim,
    ext_via_crossing,
    format_arc,
    object_to_arc,
    overarcs_crossing_infinite,
    FiniteInd,
    PruferInd,
)


def main():
    print("Coordinates")
    for obj in [FiniteInd(0, 0), FiniteInd(1, 0), FiniteInd(-2, 3), PruferInd(0)]:
        print(f"  {obj}  ->  {format_arc(object_to_arc(obj))}")
    print()

    print("Crossing is a strict interleaving test")
    pairs = [
        (FiniteArc(0, 2), FiniteArc(1, 3)),
        (FiniteArc(0, 4), FiniteArc(1, 3)),
        (FiniteArc(0, 2), FiniteArc(2, 4)),
        (FiniteArc(0, 4), InfiniteArc(2)),
        (FiniteArc(0, 4), InfiniteArc(4)),
    ]
    for x, y in pairs:
        print(f"  {format_arc(x):>8} vs {format_arc(y):<8} {arcs_cross(x, y).value}")
    print()

    print("The bridge: crossing agrees with ext in both directions")
    x, y = FiniteArc(-2, 0), FiniteArc(-3, -1)
    ox, oy = arc_to_object(x), arc_to_object(y)
    print(f"  via crossing          {ext_via_crossing(x, y).value}")
    print(f"  via regions (x to y)  {ext_dim(ox, oy).value}")
    print(f"  via regions (y to x)  {ext_dim(oy, ox).value}")
    print()

    print("Arcs over a point are exactly the ones crossing its ray")
    for arc in overarcs_crossing_infinite(0, (-2, 2)):
        print(f"  {format_arc(arc)}")


if __name__ == "__main__":
    main()
