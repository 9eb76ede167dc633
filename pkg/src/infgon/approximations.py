"""Right-approximation case analysis and direct-system limits.

Against a cluster tilting configuration with fountain vertex f, every
indecomposable admits an almost-right-approximation of one of three
shapes: the zero map, a map from a single coslice member, or a map from
the limit object sitting in the configuration.  The split is decided by
where the arc of the object lies relative to the wedge over the
fountain.  `approximation_report` returns the shape plus a window
inventory: which configuration members with a nonzero map to the object
are covered by the chosen target, at the level of hom dimensions.

`classify_direct_system` computes the homotopy colimit of a one-way
infinite path in the repetition quiver described by a finite prefix of
moves and an eventual-behavior tag.  Only the tail matters: a path that
eventually rides a slice has the corresponding limit object as its
colimit, a path that zigzags forever has colimit zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .arcs import Arc, FiniteArc, InfiniteArc, arc_to_object, object_to_arc
from .configurations import (
    ArcConfiguration,
    Verdict,
    classify,
    DEFAULT_WINDOW,
    materialize,
)
from .quiver import FiniteInd, IndObject, PruferInd, hom_dim

__all__ = [
    "ApproximationKind",
    "ApproximationReport",
    "approximation_report",
    "Move",
    "RidesSliceFrom",
    "ZigzagsForever",
    "TailBehavior",
    "DirectSystemDescriptor",
    "PruferLimit",
    "ZeroLimit",
    "SystemLimit",
    "classify_direct_system",
]


class ApproximationKind(Enum):
    ZERO_SUFFICES = "ZeroSuffices"
    COSLICE_OBJECT = "CosliceObject"
    PRUFER_OBJECT = "PruferObject"


@dataclass(frozen=True)
class ApproximationReport:
    kind: ApproximationKind
    target: Optional[IndObject]
    fountain_vertex: int
    limit_slot: int
    window: tuple[int, int]
    handled: tuple[Arc, ...]
    exceptions: tuple[Arc, ...]


def approximation_report(
    c: ArcConfiguration, d: IndObject, window: tuple[int, int] = DEFAULT_WINDOW
) -> ApproximationReport:
    """Shape of an almost-right-approximation of d against c.

    Requires c to classify as cluster tilting; f is its fountain vertex
    and n = -f-2 the slot of the limit object in c.  Writing the arc of
    a finite d as (a, b): if a >= -n-3 or b <= -n-3 the zero map
    suffices.  Otherwise d lies in the wedge over slot n+2 and a coslice
    member (-n-k, -n-2) with k large enough maps onto every wedge map.
    A limit object in slot n+t needs: the configuration's own limit
    object for t <= 0, nothing at all for t = 1, and a coslice member
    of span >= t for t >= 2.

    The handled list contains the window members t with nonzero
    hom_dim(t, d) whose maps factor through the target at dimension
    level; the rest land in exceptions (a finite leftover is the point
    of "almost").
    """
    cls = classify(c, window)
    if cls.verdict is not Verdict.CLUSTER_TILTING:
        raise ValueError(
            f"approximation analysis needs a cluster tilting configuration,"
            f" classification gave {cls.verdict.value}"
        )
    f = c.infinite_arcs[0]
    n = -f - 2

    target: Optional[IndObject]
    if isinstance(d, PruferInd):
        k = d.slot - n
        if k <= 0:
            kind, target = ApproximationKind.PRUFER_OBJECT, PruferInd(n)
        elif k == 1:
            kind, target = ApproximationKind.ZERO_SUFFICES, None
        else:
            # the coslice arc needs span >= k for its wedge test at
            # slot n + k to pass
            kt = max(4, k + 2)
            kind = ApproximationKind.COSLICE_OBJECT
            target = arc_to_object(FiniteArc(-n - kt, -n - 2))
    else:
        arc = object_to_arc(d)
        if arc.a >= -n - 3 or arc.b <= -n - 3:
            kind, target = ApproximationKind.ZERO_SUFFICES, None
        else:
            kt = max(4, -n - arc.a)
            kind = ApproximationKind.COSLICE_OBJECT
            target = arc_to_object(FiniteArc(-n - kt, -n - 2))

    handled: list[Arc] = []
    exceptions: list[Arc] = []
    for member in materialize(c, window):
        t_obj = arc_to_object(member)
        if hom_dim(t_obj, d).value != 1:
            continue
        if kind is ApproximationKind.ZERO_SUFFICES:
            exceptions.append(member)
        elif kind is ApproximationKind.PRUFER_OBJECT:
            on_slice = isinstance(member, FiniteArc) and member.a == f
            if on_slice or isinstance(t_obj, PruferInd):
                handled.append(member)
            else:
                exceptions.append(member)
        else:
            if isinstance(t_obj, PruferInd):
                exceptions.append(member)
            elif hom_dim(t_obj, target).value == 1:
                handled.append(member)
            else:
                exceptions.append(member)
    return ApproximationReport(
        kind=kind,
        target=target,
        fountain_vertex=f,
        limit_slot=n,
        window=window,
        handled=tuple(handled),
        exceptions=tuple(exceptions),
    )


# --- direct systems -------------------------------------------------------


class Move(Enum):
    """One step in the repetition quiver, read left to right.

    UP goes from (s, d) to (s-1, d+1); DOWN goes to (s-1, d-1) and needs
    d >= 1 to stay inside.
    """

    UP = "up"
    DOWN = "down"


@dataclass(frozen=True, slots=True)
class RidesSliceFrom:
    slot: int


@dataclass(frozen=True, slots=True)
class ZigzagsForever:
    pass


TailBehavior = Union[RidesSliceFrom, ZigzagsForever]


@dataclass(frozen=True)
class DirectSystemDescriptor:
    start: Optional[FiniteInd]
    moves: tuple[Move, ...]
    tail: TailBehavior

    def __init__(self, start=None, moves=(), tail=None) -> None:
        if tail is None:
            raise ValueError("a direct system needs an eventual-behavior tag")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "moves", tuple(moves))
        object.__setattr__(self, "tail", tail)


@dataclass(frozen=True, slots=True)
class PruferLimit:
    slot: int


@dataclass(frozen=True, slots=True)
class ZeroLimit:
    pass


SystemLimit = Union[PruferLimit, ZeroLimit]


def classify_direct_system(path: DirectSystemDescriptor) -> SystemLimit:
    """Homotopy colimit of the described system.

    The finite prefix is validated (a DOWN move at index 0 leaves the
    quiver) but has no influence on the answer: any finite amount of
    zigzagging washes out in the limit.  The tail tag alone decides.
    """
    if path.moves and path.start is None:
        raise ValueError("a move prefix needs a start object")
    if path.start is not None:
        cur = path.start
        for step in path.moves:
            if step is Move.UP:
                cur = FiniteInd(cur.shift - 1, cur.index + 1)
            else:
                if cur.index < 1:
                    raise ValueError(
                        f"DOWN move from index {cur.index} leaves the quiver"
                    )
                cur = FiniteInd(cur.shift - 1, cur.index - 1)
    if isinstance(path.tail, RidesSliceFrom):
        return PruferLimit(path.tail.slot)
    return ZeroLimit()
