"""Render arc diagrams to SVG files.

Writes three pictures into ./arc_diagrams: a fan with its infinite arc,
a zigzag, and a deliberately crossing pair with the crossing highlighted.
"""

import os

from infgon import (
    ArcConfiguration,
    Explicit,
    Fan,
    FiniteArc,
    Zigzag,
    render_to_file,
)

OUT_DIR = "arc_diagrams"


def main():
    os.makedirs(OUT_DIR, exist_ok=True)

    fan = ArcConfiguration([Fan(0)], [0])
    path = os.path.join(OUT_DIR, "fan.svg")
    render_to_file(fan, (-6, 6), path)
    print(f"wrote {path}")

    zig = ArcConfiguration([Zigzag(0)], [])
    path = os.path.join(OUT_DIR, "zigzag.svg")
    render_to_file(zig, (-6, 6), path)
    print(f"wrote {path}")

    crossing = ArcConfiguration(
        [Explicit({FiniteArc(-2, 0), FiniteArc(-1, 2), FiniteArc(1, 4)})], []
    )
    path = os.path.join(OUT_DIR, "crossing.svg")
    render_to_file(crossing, (-4, 5), path, highlight_crossings=True)
    print(f"wrote {path} (crossing pair drawn in red)")


if __name__ == "__main__":
    main()
