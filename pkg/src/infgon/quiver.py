"""Indecomposable objects and their hom/ext dimensions.

The model has two kinds of indecomposables: finite ones, laid out on a
doubly infinite translation quiver and addressed by a shift exponent and a
nonnegative index, and limit objects ("Prufer" objects), one per integer
slot, each arising as the colimit of the diagonal slice of finite objects
that starts at its slot on the base row.

Every hom space in sight is zero- or one-dimensional over the ground
field, so dimensions are reported as plain 0/1 integers together with a
witness explaining which membership rule fired.  All functions here are
pure and operate on exact integers (no overflow: Python ints).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

__all__ = [
    "FiniteInd",
    "PruferInd",
    "IndObject",
    "RegionPart",
    "HomWitness",
    "HomDim",
    "Tristate",
    "shift_object",
    "wedge_contains",
    "h_region_contains",
    "hom_dim",
    "ext_dim",
    "composite_nonzero",
]


@dataclass(frozen=True, slots=True)
class FiniteInd:
    """A finite indecomposable: the index-th object on the base diagonal,
    shifted `shift` times.  The index must be nonnegative; shift is any
    integer."""

    shift: int
    index: int

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"index must be >= 0, got {self.index}")


@dataclass(frozen=True, slots=True)
class PruferInd:
    """The limit object attached to integer slot `slot`.  Shifting by t
    moves the slot by t."""

    slot: int


IndObject = Union[FiniteInd, PruferInd]


class RegionPart(Enum):
    """Which of the two nonzero-map regions to test."""

    MINUS = "minus"
    PLUS = "plus"
    EITHER = "either"


@dataclass(frozen=True, slots=True)
class HomWitness:
    """Reason a hom dimension came out the way it did.

    rule is one of "finite-finite", "finite-prufer", "prufer-finite",
    "prufer-prufer".  For the finite-finite rule, region is "minus",
    "plus" or None and params carries the solved region parameters
    (m, n).  For the wedge-based rules params carries (base, j, index)
    where j = base - shift must land in [0, index].  For two limit
    objects params carries their slots.
    """

    rule: str
    region: Optional[str]
    params: tuple


@dataclass(frozen=True, slots=True)
class HomDim:
    """A hom-space dimension (always 0 or 1) plus its witness."""

    value: int
    witness: HomWitness

    def __post_init__(self) -> None:
        if self.value not in (0, 1):
            raise ValueError(f"hom dimension must be 0 or 1, got {self.value}")


class Tristate(Enum):
    """Outcome of the composite-nonvanishing test.

    TRUE: the sufficient criterion certifies a nonzero composite.
    FALSE: the ambient hom space vanishes, so the composite is zero.
    INDETERMINATE: neither; the test does not decide.
    """

    TRUE = "true"
    FALSE = "false"
    INDETERMINATE = "indeterminate"


def shift_object(x: IndObject, t: int) -> IndObject:
    """Apply the suspension t times (t may be negative)."""
    if isinstance(x, FiniteInd):
        return FiniteInd(x.shift + t, x.index)
    return PruferInd(x.slot + t)


def wedge_contains(base: int, obj: FiniteInd) -> bool:
    """Membership in the wedge hanging off base slot `base`.

    The wedge collects the finite objects Sigma^(base-j) X_k with
    0 <= j <= k; solving for j gives the one-line test below.  It is the
    exact region of finite objects with a nonzero map to the limit
    object in slot `base`.
    """
    j = base - obj.shift
    return 0 <= j <= obj.index


def _region_params(obj: FiniteInd) -> tuple[int, int]:
    # Unique (m, n) with obj = Sigma^(-n) X_(n-m-2).  These coincide with
    # the object's arc coordinates.
    n = -obj.shift
    m = -obj.shift - obj.index - 2
    return m, n


def h_region_contains(center: FiniteInd, obj: FiniteInd, part: RegionPart) -> bool:
    """Test whether obj lies in a nonzero-map region of `center`.

    The two regions are given as parametrized families over integers
    (m, n); the parameters are uniquely solvable from obj, so membership
    reduces to the integer inequalities below.  Region edges belong to
    the regions.  The minus region sits up-left of the center, the plus
    region down-right; they are disjoint.  A finite object receives a
    nonzero map from u exactly when it lies in either region of the
    shifted center shift_object(u, 1).
    """
    r, s = center.shift, center.index
    m, n = _region_params(obj)
    if part is RegionPart.MINUS:
        return m <= -r - s - 3 and -r - s - 1 <= n <= -r - 1
    if part is RegionPart.PLUS:
        return -r - s - 1 <= m <= -r - 1 and n >= -r + 1
    return h_region_contains(center, obj, RegionPart.MINUS) or h_region_contains(
        center, obj, RegionPart.PLUS
    )


def hom_dim(a: IndObject, b: IndObject) -> HomDim:
    """Dimension of Hom(a, b) with a witness for the rule that decided it.

    Four cases by the kinds of a and b:

    * finite, finite: 1 iff b lies in a nonzero-map region of the
      once-shifted a;
    * finite, limit at slot n: 1 iff a is in the wedge at base n;
    * limit at slot n, finite: 1 iff b is in the wedge at base n + 2;
    * limit m, limit n: 1 iff n <= m (note the asymmetry).
    """
    if isinstance(a, FiniteInd) and isinstance(b, FiniteInd):
        center = FiniteInd(a.shift + 1, a.index)
        m, n = _region_params(b)
        if h_region_contains(center, b, RegionPart.MINUS):
            return HomDim(1, HomWitness("finite-finite", "minus", (m, n)))
        if h_region_contains(center, b, RegionPart.PLUS):
            return HomDim(1, HomWitness("finite-finite", "plus", (m, n)))
        return HomDim(0, HomWitness("finite-finite", None, (m, n)))
    if isinstance(a, FiniteInd):
        base = b.slot
        j = base - a.shift
        value = 1 if 0 <= j <= a.index else 0
        return HomDim(value, HomWitness("finite-prufer", None, (base, j, a.index)))
    if isinstance(b, FiniteInd):
        base = a.slot + 2
        j = base - b.shift
        value = 1 if 0 <= j <= b.index else 0
        return HomDim(value, HomWitness("prufer-finite", None, (base, j, b.index)))
    value = 1 if b.slot <= a.slot else 0
    return HomDim(value, HomWitness("prufer-prufer", None, (a.slot, b.slot)))


def ext_dim(a: IndObject, b: IndObject) -> HomDim:
    """Dimension of Ext(a, b), computed as Hom(a, shift_object(b, 1))."""
    return hom_dim(a, shift_object(b, 1))


def composite_nonzero(u: FiniteInd, v: FiniteInd, w: FiniteInd) -> Tristate:
    """Decide, when possible, whether nonzero maps u -> v -> w compose to
    a nonzero map.

    Requires Hom(u, v) and Hom(v, w) both nonzero (raises otherwise).
    Returns TRUE when v and w both lie in the plus region of the shifted
    u and w lies in the plus region of the shifted v; this criterion is
    sufficient for the composite of any two nonzero maps to be nonzero.
    Returns FALSE when Hom(u, w) = 0 (there is nowhere nonzero to land).
    Otherwise INDETERMINATE: this test is deliberately not a decision
    procedure.
    """
    for name, obj in (("u", u), ("v", v), ("w", w)):
        if not isinstance(obj, FiniteInd):
            raise TypeError(
                f"composite_nonzero is defined for finite objects only, "
                f"{name} is {type(obj).__name__}"
            )
    if hom_dim(u, v).value != 1:
        raise ValueError("composite_nonzero requires Hom(u, v) nonzero")
    if hom_dim(v, w).value != 1:
        raise ValueError("composite_nonzero requires Hom(v, w) nonzero")
    su = FiniteInd(u.shift + 1, u.index)
    sv = FiniteInd(v.shift + 1, v.index)
    if (
        h_region_contains(su, v, RegionPart.PLUS)
        and h_region_contains(su, w, RegionPart.PLUS)
        and h_region_contains(sv, w, RegionPart.PLUS)
    ):
        return Tristate.TRUE
    if hom_dim(u, w).value == 0:
        return Tristate.FALSE
    return Tristate.INDETERMINATE
