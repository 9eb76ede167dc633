"""Graded-module shadows of the indecomposables, and truncated towers.

A degree-lowering operator T acts in cohomological degree -1, and the
shift convention is (shifted M)^i = M^(i + 1).  Three descriptor shapes
cover everything the functor produces:

* FiniteCyclic(shift, length): a cyclic torsion module, length
  consecutive nonzero degrees, support [-shift - length + 1, -shift];
* PolyFree(shift): the free module on one generator, support
  (-infinity, -shift];
* PruferMod(shift): the divisible torsion module, support
  [-shift, +infinity).

Graded duality flips support through degree 0 and is an involution on
descriptors.

The tower machinery replays the limit arguments at the dimension level:
a hom tower records 0/1 dimensions along a slice together with flags
saying whether each transition map is nonzero, and the truncated
colimit/limit read the answer off the stable tail.  Because every space
is finite dimensional (0 or 1 here), the derived-limit obstruction for
inverse towers vanishes; truncated_lim asserts this by checking the tail
transitions are isomorphisms whenever the answer is 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import ceil
from typing import Union

from .quiver import (
    FiniteInd,
    IndObject,
    PruferInd,
    Tristate,
    composite_nonzero,
    hom_dim,
    shift_object,
)

__all__ = [
    "FiniteCyclic",
    "PolyFree",
    "PruferMod",
    "GradedModuleDescriptor",
    "f_image",
    "dual_descriptor",
    "degreewise_dims",
    "TowerDirection",
    "HomTower",
    "TowerUnstableError",
    "TowerColimit",
    "TowerLimit",
    "build_hom_tower",
    "build_inverse_hom_tower",
    "truncated_colim",
    "truncated_lim",
    "prufer_prufer_tower",
]


@dataclass(frozen=True, slots=True)
class FiniteCyclic:
    shift: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"length must be >= 1, got {self.length}")


@dataclass(frozen=True, slots=True)
class PolyFree:
    shift: int


@dataclass(frozen=True, slots=True)
class PruferMod:
    shift: int


GradedModuleDescriptor = Union[FiniteCyclic, PolyFree, PruferMod]


def f_image(x: IndObject) -> GradedModuleDescriptor:
    """Graded module attached to an indecomposable: a finite object of
    index n maps to a cyclic torsion module of length n + 1 at the same
    shift; a limit object maps to the divisible module at its slot."""
    if isinstance(x, FiniteInd):
        return FiniteCyclic(x.shift, x.index + 1)
    return PruferMod(x.slot)


def dual_descriptor(m: GradedModuleDescriptor) -> GradedModuleDescriptor:
    """Graded dual.  Mirrors support through degree 0; an involution."""
    if isinstance(m, FiniteCyclic):
        return FiniteCyclic(-m.shift - m.length + 1, m.length)
    if isinstance(m, PolyFree):
        return PruferMod(-m.shift)
    return PolyFree(-m.shift)


def degreewise_dims(m: GradedModuleDescriptor, degrees: tuple[int, int]) -> list[int]:
    """Dimensions of the module in each degree of the inclusive range."""
    lo, hi = degrees
    if lo > hi:
        raise ValueError(f"empty degree range {degrees}")

    def dim_at(i: int) -> int:
        if isinstance(m, FiniteCyclic):
            return 1 if -m.shift - m.length + 1 <= i <= -m.shift else 0
        if isinstance(m, PolyFree):
            return 1 if i <= -m.shift else 0
        return 1 if i >= -m.shift else 0

    return [dim_at(i) for i in range(lo, hi + 1)]


class TowerDirection(Enum):
    DIRECT = "direct"
    INVERSE = "inverse"


class TowerUnstableError(RuntimeError):
    """The truncation is too short: the final quarter of the tower has
    not settled, so no limit can honestly be reported."""


@dataclass(frozen=True, slots=True)
class HomTower:
    """A truncated tower of hom dimensions along a slice.

    dims[i] is the 0/1 dimension at stage i.  transition_nonzero[i]
    flags whether the map between stages i and i+1 (in the tower's
    direction) is nonzero; a flag may only be set when both adjacent
    dimensions are 1.
    """

    dims: tuple[int, ...]
    transition_nonzero: tuple[bool, ...]
    direction: TowerDirection

    def __post_init__(self) -> None:
        if len(self.transition_nonzero) != len(self.dims) - 1:
            raise ValueError("need exactly one transition flag per adjacent pair")
        if any(d not in (0, 1) for d in self.dims):
            raise ValueError("tower dimensions must be 0 or 1")
        for i, flag in enumerate(self.transition_nonzero):
            if flag and not (self.dims[i] == 1 and self.dims[i + 1] == 1):
                raise ValueError(
                    f"transition {i} flagged nonzero between dimensions "
                    f"{self.dims[i]} and {self.dims[i + 1]}"
                )


@dataclass(frozen=True, slots=True)
class TowerColimit:
    value: int
    stable_from: int


@dataclass(frozen=True, slots=True)
class TowerLimit:
    value: int
    stable_from: int
    lim1_vanishes: bool = True


def build_hom_tower(y: FiniteInd, slice_start: int, truncation: int) -> HomTower:
    """Direct tower Hom(y, -) along the slice based at slice_start.

    Stage i is the slice object with shift slice_start - i and index i.
    Transition flags use the composite criterion: the stage map sends a
    nonzero y -> stage_i to its composite with the irreducible
    stage_i -> stage_{i+1}, so the flag is set exactly when that
    composite is certified nonzero.
    """
    if truncation < 0:
        raise ValueError("truncation must be >= 0")
    objs = [FiniteInd(slice_start - i, i) for i in range(truncation + 1)]
    dims = tuple(hom_dim(y, o).value for o in objs)
    flags = []
    for i in range(truncation):
        ok = dims[i] == 1 and dims[i + 1] == 1
        if ok:
            ok = composite_nonzero(y, objs[i], objs[i + 1]) is Tristate.TRUE
        flags.append(ok)
    return HomTower(dims, tuple(flags), TowerDirection.DIRECT)


def build_inverse_hom_tower(
    target: FiniteInd, slice_start: int, truncation: int
) -> HomTower:
    """Inverse tower Hom(-, target) along the slice based at slice_start.

    The transition into stage j precomposes with the irreducible map
    stage_j -> stage_{j+1}.  Whether that precomposition is nonzero is
    decided through the dual direct tower: by Serre duality the inverse
    tower is the vector-space dual of the direct tower of the twice
    downshifted target, and a linear map is nonzero exactly when its
    transpose is.  Hence the flag at j tests the composite criterion for
    shift_object(target, -2) -> stage_j -> stage_{j+1}.
    """
    if truncation < 0:
        raise ValueError("truncation must be >= 0")
    objs = [FiniteInd(slice_start - j, j) for j in range(truncation + 1)]
    dims = tuple(hom_dim(o, target).value for o in objs)
    dual_probe = shift_object(target, -2)
    flags = []
    for j in range(truncation):
        ok = dims[j] == 1 and dims[j + 1] == 1
        if ok:
            ok = composite_nonzero(dual_probe, objs[j], objs[j + 1]) is Tristate.TRUE
        flags.append(ok)
    return HomTower(dims, tuple(flags), TowerDirection.INVERSE)


def _stable_split(tower: HomTower) -> int:
    # First index from which dims and flags both sit at their final
    # constant values; raises if the settled tail is shorter than a
    # quarter of the truncation.
    dims, flags = tower.dims, tower.transition_nonzero
    n = len(dims) - 1
    quarter = max(1, ceil(n / 4))
    sd = n
    while sd > 0 and dims[sd - 1] == dims[-1]:
        sd -= 1
    sf = 0
    if flags:
        sf = len(flags) - 1
        while sf > 0 and flags[sf - 1] == flags[-1]:
            sf -= 1
    stable_from = max(sd, sf)
    # The last `quarter` entries and the last `quarter` flags must all
    # lie in the settled run.
    if sd > len(dims) - quarter or (flags and sf > len(flags) - quarter):
        raise TowerUnstableError(
            f"tower tail not settled: needs {quarter} constant trailing "
            f"entries and flags, settled only from entry {sd}, flag {sf}"
        )
    return stable_from


def _tail_value(tower: HomTower) -> int:
    dims, flags = tower.dims, tower.transition_nonzero
    if dims[-1] == 1 and (not flags or flags[-1]):
        return 1
    return 0


def truncated_colim(tower: HomTower) -> TowerColimit:
    """Colimit of a direct tower read off its stable tail.

    1 exactly when the tail is constantly 1 with every tail transition
    nonzero (each class survives forever); 0 otherwise.  Raises
    TowerUnstableError when the tail has not settled.
    """
    if tower.direction is not TowerDirection.DIRECT:
        raise ValueError("truncated_colim needs a direct tower")
    stable_from = _stable_split(tower)
    return TowerColimit(_tail_value(tower), stable_from)


def truncated_lim(tower: HomTower) -> TowerLimit:
    """Limit of an inverse tower read off its stable tail.

    1 exactly when the tail is constantly 1 with nonzero tail
    transitions; towers of 0/1-dimensional spaces have vanishing derived
    limit, which the value-1 case corroborates by the tail maps being
    isomorphisms (nonzero maps between one-dimensional spaces).
    """
    if tower.direction is not TowerDirection.INVERSE:
        raise ValueError("truncated_lim needs an inverse tower")
    stable_from = _stable_split(tower)
    return TowerLimit(_tail_value(tower), stable_from, lim1_vanishes=True)


def prufer_prufer_tower(m: int, n: int, truncation: int) -> int:
    """Hom dimension between the limit objects at slots m and n, computed
    purely from truncated towers of finite-level data.

    The outer layer is an inverse tower over the slice presenting slot
    m; its stage j value is the truncated colimit of the direct tower of
    Hom(stage_j, -) along the slice presenting slot n.  Outer transition
    flags check the ladder of composites stage_j -> stage_{j+1} ->
    inner stage over the settled part of both inner towers.  Inner
    towers run to twice the requested truncation so that they stay
    stable for outer stages near the end.  The caller must pick the
    truncation large enough relative to |m - n|; otherwise
    TowerUnstableError propagates.
    """
    if truncation < 4:
        raise ValueError("truncation must be >= 4")
    inner_truncation = 2 * truncation
    stages = [FiniteInd(m - j, j) for j in range(truncation + 1)]
    inner = [
        truncated_colim(build_hom_tower(y, n, inner_truncation)) for y in stages
    ]
    dims = tuple(c.value for c in inner)
    flags = []
    for j in range(truncation):
        ok = dims[j] == 1 and dims[j + 1] == 1
        if ok:
            start = max(inner[j].stable_from, inner[j + 1].stable_from)
            ok = all(
                composite_nonzero(stages[j], stages[j + 1], FiniteInd(n - l, l))
                is Tristate.TRUE
                for l in range(start, inner_truncation + 1)
            )
        flags.append(ok)
    outer = HomTower(dims, tuple(flags), TowerDirection.INVERSE)
    return truncated_lim(outer).value
