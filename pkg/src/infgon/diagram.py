"""Deterministic SVG pictures of arc configurations.

Finite arcs become semicircles over a number line, arcs to infinity
become vertical rays.  Output is plain SVG 1.1 assembled by string
concatenation with integer coordinates only, so a fixed input yields a
byte-identical document on every run.  Finite arcs are <path> elements
and rays are <line class="ray"> elements; the axis and ticks are plain
lines, which keeps the element classes countable in tests.
"""
from __future__ import annotations

from .arcs import CrossResult, FiniteArc, InfiniteArc, arcs_cross
from .configurations import ArcConfiguration, materialize

__all__ = ["render_svg", "render_to_file"]

UNIT = 40
MARGIN = 40

_STYLE = (
    ".axis{stroke:#444;stroke-width:2}"
    ".tick{stroke:#444;stroke-width:1}"
    ".lbl{font:12px monospace;fill:#444;text-anchor:middle}"
    ".arc{stroke:#1f77b4;stroke-width:2;fill:none}"
    ".ray{stroke:#2ca02c;stroke-width:2}"
    ".crossing{stroke:#d62728}"
)


def render_svg(
    c: ArcConfiguration,
    window: tuple[int, int],
    highlight_crossings: bool = False,
) -> str:
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty window {window}")
    arcs = materialize(c, window)
    finite = [t for t in arcs if isinstance(t, FiniteArc)]
    infinite = [t for t in arcs if isinstance(t, InfiniteArc)]

    crossing: set = set()
    if highlight_crossings:
        for i, t1 in enumerate(arcs):
            for t2 in arcs[i + 1 :]:
                if arcs_cross(t1, t2) is CrossResult.CROSS:
                    crossing.add(t1)
                    crossing.add(t2)

    max_r = max((t.span * UNIT // 2 for t in finite), default=UNIT)
    width = (hi - lo) * UNIT + 2 * MARGIN
    height = max_r + 2 * MARGIN + 20
    base = height - MARGIN

    def x(v: int) -> int:
        return MARGIN + (v - lo) * UNIT

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f"<style>{_STYLE}</style>",
        f'<line class="axis" x1="{x(lo) - 20}" y1="{base}" '
        f'x2="{x(hi) + 20}" y2="{base}"/>',
    ]
    for v in range(lo, hi + 1):
        parts.append(
            f'<line class="tick" x1="{x(v)}" y1="{base - 4}" '
            f'x2="{x(v)}" y2="{base + 4}"/>'
        )
        parts.append(f'<text class="lbl" x="{x(v)}" y="{base + 18}">{v}</text>')
    for t in finite:
        r = t.span * UNIT // 2
        cls = "arc crossing" if t in crossing else "arc"
        parts.append(
            f'<path class="{cls}" d="M {x(t.a)} {base} '
            f'A {r} {r} 0 0 1 {x(t.b)} {base}"/>'
        )
    for t in infinite:
        cls = "ray crossing" if t in crossing else "ray"
        parts.append(
            f'<line class="{cls}" x1="{x(t.m)}" y1="{base}" '
            f'x2="{x(t.m)}" y2="{MARGIN // 2}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_to_file(
    c: ArcConfiguration,
    window: tuple[int, int],
    path: str,
    highlight_crossings: bool = False,
) -> None:
    svg = render_svg(c, window, highlight_crossings)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
