"""Classify the standard zoo of arc configurations.

Two families succeed: a locally finite maximal family (the zigzag), and
a fountain paired with its own infinite arc (the fan).  Everything else
fails for a reason the classifier names explicitly.
"""

from infgon import (
    ArcConfiguration,
    Explicit,
    Fan,
    FiniteArc,
    SplitFan,
    Zigzag,
    classify,
    overarc_antichain,
    render_classification,
    strong_overarc,
)

WINDOW = (-12, 12)


def demo(title, c):
    print(f"== {title}")
    print(render_classification(classify(c, WINDOW)), end="")
    print()


def main():
    demo("fan at 0 with its infinite arc", ArcConfiguration([Fan(0)], [0]))
    demo("zigzag at 0", ArcConfiguration([Zigzag(0)], []))
    demo("fan at 0, no infinite arc", ArcConfiguration([Fan(0)], []))
    demo("fan at 0, infinite arc misplaced", ArcConfiguration([Fan(0)], [1]))
    demo("split fountains", ArcConfiguration([SplitFan(0, 3)], []))
    demo("two infinite arcs", ArcConfiguration([Zigzag(0)], [3, 7]))
    demo("one lonely arc", ArcConfiguration([Explicit({FiniteArc(0, 2)})], []))

    print("== overarcs in the zigzag")
    z = ArcConfiguration([Zigzag(0)], [])
    arc = FiniteArc(-1, 1)
    for _ in range(4):
        over = strong_overarc(z, arc)
        print(f"  {arc.a},{arc.b} sits strictly under {over.a},{over.b}")
        arc = over
    print()

    print("== an antichain reaching toward the limit object")
    chain = overarc_antichain(z, FiniteArc(-1, 1), 5)
    print(" ", ", ".join(f"{a.a},{a.b}" for a in chain))
    print("  no member maps to any other; each maps onto the limit object at slot -1")


if __name__ == "__main__":
    main()
