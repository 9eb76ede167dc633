"""Right-approximation case analysis and direct-system limits.

The fixture configuration is the fan at 0 with its matching infinite
arc, the smallest cluster tilting example.  Its limit slot is -2, so the
case split on a Pruefer input E_slot reads: slot <= -2 factors through
the configuration's own limit object, slot = -1 is the trivially-zero
case, and slot >= 0 needs a finite coslice target.
"""

import pytest

from infgon import (
    ApproximationKind,
    ArcConfiguration,
    DirectSystemDescriptor,
    Explicit,
    Fan,
    FiniteArc,
    FiniteInd,
    InfiniteArc,
    Move,
    PruferInd,
    PruferLimit,
    RidesSliceFrom,
    ZeroLimit,
    Zigzag,
    ZigzagsForever,
    approximation_report,
    arc_to_object,
    classify_direct_system,
    hom_dim,
    materialize,
    object_to_arc,
)

FAN_CT = ArcConfiguration([Fan(0)], [0])


def members_with_hom_to(c, d, window):
    out = []
    for arc in materialize(c, window):
        if hom_dim(arc_to_object(arc), d).value == 1:
            out.append(arc)
    return out


class TestPruferInputs:
    @pytest.mark.parametrize("slot", [-5, -4, -3, -2])
    def test_at_or_below_limit_slot_factor_through_it(self, slot):
        r = approximation_report(FAN_CT, PruferInd(slot))
        assert r.kind is ApproximationKind.PRUFER_OBJECT
        assert r.target == PruferInd(-2)
        assert r.exceptions == ()

    def test_one_above_limit_slot_is_trivially_zero(self):
        r = approximation_report(FAN_CT, PruferInd(-1))
        assert r.kind is ApproximationKind.ZERO_SUFFICES
        assert r.target is None
        assert r.exceptions == ()

    @pytest.mark.parametrize(
        "slot,target",
        [
            (0, FiniteInd(0, 0)),
            (1, FiniteInd(0, 1)),
            (2, FiniteInd(0, 2)),
            (3, FiniteInd(0, 3)),
        ],
    )
    def test_above_limit_slot_need_coslice_targets(self, slot, target):
        d = PruferInd(slot)
        r = approximation_report(FAN_CT, d)
        assert r.kind is ApproximationKind.COSLICE_OBJECT
        assert r.target == target
        # the chosen coslice object must actually map onto d
        assert hom_dim(r.target, d).value == 1

    def test_prufer_handled_list(self):
        r = approximation_report(FAN_CT, PruferInd(-4))
        assert r.handled == tuple(
            FiniteArc(0, b) for b in range(4, 17)
        ) + (InfiniteArc(0),)
        assert r.exceptions == ()


class TestFiniteInputs:
    def test_wedge_member_coslice(self):
        r = approximation_report(FAN_CT, arc_to_object(FiniteArc(-2, 0)))
        assert r.kind is ApproximationKind.COSLICE_OBJECT
        assert r.target == FiniteInd(0, 0)
        assert r.handled == tuple(
            FiniteArc(a, 0) for a in range(-16, -1)
        ) + tuple(FiniteArc(0, b) for b in range(2, 17))
        assert r.exceptions == (InfiniteArc(0),)

    @pytest.mark.parametrize(
        "arc,target,handled_count",
        [
            (FiniteArc(-6, 0), FiniteInd(0, 4), 26),
            (FiniteArc(-6, 2), FiniteInd(0, 4), 24),
        ],
    )
    def test_deeper_wedge_members(self, arc, target, handled_count):
        d = arc_to_object(arc)
        r = approximation_report(FAN_CT, d)
        assert r.kind is ApproximationKind.COSLICE_OBJECT
        assert r.target == target
        assert hom_dim(r.target, d).value == 1
        assert len(r.handled) == handled_count
        assert r.exceptions == (InfiniteArc(0),)

    def test_right_of_slice_zero_case(self):
        r = approximation_report(FAN_CT, arc_to_object(FiniteArc(1, 3)))
        assert r.kind is ApproximationKind.ZERO_SUFFICES
        assert r.handled == ()
        assert r.exceptions == (FiniteArc(0, 3),)

    def test_left_of_coslice_zero_case(self):
        r = approximation_report(FAN_CT, arc_to_object(FiniteArc(-8, -4)))
        assert r.kind is ApproximationKind.ZERO_SUFFICES
        assert r.handled == ()
        assert r.exceptions == (
            FiniteArc(-6, 0),
            FiniteArc(-5, 0),
            FiniteArc(-4, 0),
        )

    def test_fountain_identification(self):
        r = approximation_report(FAN_CT, arc_to_object(FiniteArc(-2, 0)))
        assert r.fountain_vertex == 0
        assert r.limit_slot == -2


class TestReportCoherence:
    # every configuration member with a nonzero hom to the input must be
    # accounted for exactly once, as handled or as an exception
    @pytest.mark.parametrize(
        "d",
        [
            arc_to_object(FiniteArc(-2, 0)),
            arc_to_object(FiniteArc(-6, 2)),
            arc_to_object(FiniteArc(1, 3)),
            arc_to_object(FiniteArc(-8, -4)),
            PruferInd(-4),
            PruferInd(-1),
            PruferInd(2),
        ],
    )
    def test_partition(self, d):
        r = approximation_report(FAN_CT, d)
        mapped = members_with_hom_to(FAN_CT, d, r.window)
        assert sorted(r.handled + r.exceptions, key=repr) == sorted(
            mapped, key=repr
        )
        assert not set(r.handled) & set(r.exceptions)

    def test_window_override(self):
        r = approximation_report(
            FAN_CT, arc_to_object(FiniteArc(-2, 0)), window=(-5, 5)
        )
        assert r.window == (-5, 5)
        assert r.handled == tuple(
            FiniteArc(a, 0) for a in range(-5, -1)
        ) + tuple(FiniteArc(0, b) for b in range(2, 6))

    def test_requires_cluster_tilting(self):
        with pytest.raises(ValueError):
            approximation_report(
                ArcConfiguration([Zigzag(0)], []), FiniteInd(0, 0)
            )
        with pytest.raises(ValueError):
            approximation_report(
                ArcConfiguration([Explicit({FiniteArc(0, 2)})], []),
                FiniteInd(0, 0),
            )


class TestDirectSystems:
    def test_bare_slice_ride(self):
        d = DirectSystemDescriptor(None, (), RidesSliceFrom(0))
        assert classify_direct_system(d) == PruferLimit(0)

    def test_prefix_is_forgotten(self):
        d = DirectSystemDescriptor(
            FiniteInd(0, 0), (Move.UP, Move.UP, Move.DOWN), RidesSliceFrom(7)
        )
        assert classify_direct_system(d) == PruferLimit(7)

    def test_forever_zigzag_collapses(self):
        d = DirectSystemDescriptor(None, (), ZigzagsForever())
        assert classify_direct_system(d) == ZeroLimit()

    def test_down_then_up_is_fine(self):
        d = DirectSystemDescriptor(
            FiniteInd(0, 1), (Move.DOWN, Move.UP), RidesSliceFrom(2)
        )
        assert classify_direct_system(d) == PruferLimit(2)

    def test_tail_tag_required(self):
        with pytest.raises(ValueError):
            DirectSystemDescriptor(FiniteInd(0, 0), (), None)

    def test_moves_need_a_start(self):
        d = DirectSystemDescriptor(None, (Move.UP,), ZigzagsForever())
        with pytest.raises(ValueError):
            classify_direct_system(d)

    def test_cannot_walk_below_the_base_row(self):
        d = DirectSystemDescriptor(FiniteInd(0, 0), (Move.DOWN,), ZigzagsForever())
        with pytest.raises(ValueError, match="leaves the quiver"):
            classify_direct_system(d)
        d2 = DirectSystemDescriptor(
            FiniteInd(0, 1), (Move.DOWN, Move.DOWN), RidesSliceFrom(2)
        )
        with pytest.raises(ValueError, match="leaves the quiver"):
            classify_direct_system(d2)


class TestObjectArcAgreement:
    def test_fixture_object_names(self):
        # the finite fixtures above, written as quiver objects
        assert object_to_arc(FiniteInd(0, 0)) == FiniteArc(-2, 0)
        assert object_to_arc(FiniteInd(0, 4)) == FiniteArc(-6, 0)
        assert object_to_arc(FiniteInd(-2, 6)) == FiniteArc(-6, 2)
