"""Walk through the basic hom calculus between indecomposables.

Every hom space here is 0- or 1-dimensional, so a whole morphism theory
collapses into yes/no questions: does the target sit in the right region
of the source's hammock, does a finite object sit inside a wedge, how do
two limit objects compare by slot.
"""

from infgon import (
    FiniteInd,
    PruferInd,
    Tristate,
    composite_nonzero,
    ext_dim,
    hom_dim,
    shift_object,
)


def show(label, value):
    print(f"{label:<44} {value}")


def main():
    x0 = FiniteInd(0, 0)
    e0 = PruferInd(0)

    print("Endomorphisms and the first few neighbours")
    show("hom(X0, X0)", hom_dim(x0, x0).value)
    show("hom(X0, shifted X0 by 2)", hom_dim(x0, shift_object(x0, 2)).value)
    show("ext(X0, shifted X0 by 1) ", ext_dim(x0, shift_object(x0, 1)).value)
    print()

    print("Finite against limit objects: wedge membership decides")
    show("hom(X0, E0)", hom_dim(x0, e0).value)
    show("hom(E0, X0)", hom_dim(e0, x0).value)
    for slot in (0, 1, 2):
        y = FiniteInd(-slot, slot)
        show(f"hom(object at shift {-slot} index {slot}, E0)", hom_dim(y, e0).value)
    print()

    print("Limit against limit: slot comparison")
    for a, b in [(0, 0), (1, 0), (0, 1), (3, -2)]:
        show(f"hom(E{a}, E{b})", hom_dim(PruferInd(a), PruferInd(b)).value)
    print()

    print("A witness explains which rule fired")
    d = hom_dim(x0, shift_object(x0, 2))
    print(f"  rule={d.witness.rule} region={d.witness.region} params={d.witness.params}")
    print()

    print("Composite certification is deliberately three-valued")
    u, v, w = FiniteInd(0, 0), FiniteInd(-1, 1), FiniteInd(-2, 2)
    show("down the slice (certified)", composite_nonzero(u, v, w).value)
    w2 = FiniteInd(2, 0)
    verdict = composite_nonzero(u, v, w2)
    show("around the corner (unknown)", verdict.value)
    assert verdict is Tristate.INDETERMINATE


if __name__ == "__main__":
    main()
