"""Witness construction for nontrivial profiles, joins, pipeline, bounds."""

from fractions import Fraction

import pytest

from degseq import (
    ArgumentError,
    ConstructionCase,
    NotGraphicError,
    ResourceLimitError,
    SequenceStats,
    SimpleGraph,
    build_basic_witness,
    check_bounds,
    chromatic_number,
    graph6_encode,
    join_witness_realizations,
    plan_construction,
    verify_witness,
    witness_pipeline,
)
from degseq.oracle import enumerate_graphic_sequences
from degseq.sequences import SOURCE_ORACLE

from helpers import petersen


def subdivided_pairs(w):
    return [(p[0], p[-1]) for p in w.paths if len(p) == 3]


def check_construction(seq):
    degrees = tuple(sorted(seq, reverse=True))
    m = (len(degrees) - 1) // 2
    g, w = build_basic_witness(degrees)
    assert tuple(sorted(g.degrees(), reverse=True)) == degrees
    assert w.order == m + 1
    assert verify_witness(g, w), degrees
    hub = w.branch_vertices[-1]
    assert hub == m + 1
    for u, v in subdivided_pairs(w):
        assert hub in (u, v), degrees
    return g, w


# -- planning ----------------------------------------------------------------


def test_plan_five_cycle_sequence():
    plan = plan_construction((2, 2, 2, 2, 2))
    assert plan.m == 2
    assert plan.alpha == 0 and plan.beta == 0
    assert plan.r == 1
    assert plan.t == (1, 1)
    assert plan.case is ConstructionCase.CASE_ONE
    assert plan.a_targets == (1, 1)
    assert plan.b_targets == (0, 1, 1)


def test_plan_case_two_instance():
    plan = plan_construction((4, 3, 3, 3, 3, 3, 3))
    assert plan.m == 3
    assert plan.case is ConstructionCase.CASE_TWO
    assert sum(plan.t) == 2 * plan.r


def test_plan_to_dict_round_trips_fields():
    plan = plan_construction((2, 2, 2, 2, 2))
    d = plan.to_dict()
    assert d["case"] == "CaseOne"
    assert d["t"] == [1, 1] and d["m"] == 2


def test_plan_rejects_wrong_profiles():
    with pytest.raises(ArgumentError) as exc:
        plan_construction((2, 2, 2, 2))
    assert "NotOddLength" in str(exc.value)
    with pytest.raises(ArgumentError) as exc:
        plan_construction((2, 2, 2, 1, 1))
    assert "MinDegTooLow" in str(exc.value)
    with pytest.raises(ArgumentError) as exc:
        plan_construction((4, 4, 4, 4, 4))
    assert "LargeCliqueExists" in str(exc.value)
    with pytest.raises(NotGraphicError):
        plan_construction((3, 3, 3, 1, 1, 1, 1))


# -- the construction itself --------------------------------------------------


def test_build_five_cycle_sequence_frozen_output():
    g, w = build_basic_witness((2, 2, 2, 2, 2))
    assert graph6_encode(g) == "DdW"
    assert g.edges == frozenset({(1, 2), (1, 4), (2, 5), (3, 4), (3, 5)})
    assert w.branch_vertices == (1, 2, 3)
    assert set(w.paths) == {(1, 2), (1, 4, 3), (2, 5, 3)}
    assert w.stars == (((1, 3), (2, 3)),)


def test_build_case_two_instance():
    g, w = check_construction((4, 3, 3, 3, 3, 3, 3))
    assert plan_construction((4, 3, 3, 3, 3, 3, 3)).case is ConstructionCase.CASE_TWO
    assert w.order == 4


def test_build_regular_sequences():
    # (m)^(2m+1) is the canonical nontrivial family; its sum is odd for odd
    # m, where bumping one degree restores graphicality
    for m in (2, 4, 6):
        check_construction((m,) * (2 * m + 1))
    for m in (3, 5):
        check_construction((m + 1,) + (m,) * (2 * m))


def test_build_all_qualifying_sequences_up_to_nine():
    from degseq import ProfileVerdict, classify_basic_profile

    seen = 0
    for n in (5, 7, 9):
        for s in enumerate_graphic_sequences(n):
            if classify_basic_profile(s).verdict is ProfileVerdict.NONTRIVIAL_BASIC:
                check_construction(s.degrees)
                seen += 1
    assert seen > 0


# -- joining -------------------------------------------------------------------


def test_join_witnesses_two_five_cycles():
    part = build_basic_witness((2, 2, 2, 2, 2))
    host, w = join_witness_realizations([part, part])
    assert host.n == 10
    assert sorted(host.degrees()) == [7] * 10
    assert w.order == 6
    assert verify_witness(host, w)


def test_join_witnesses_rejects_empty_and_invalid():
    with pytest.raises(ArgumentError):
        join_witness_realizations([])
    g, w = build_basic_witness((2, 2, 2, 2, 2))
    broken = SimpleGraph(g.n)  # host without any edges no longer fits w
    with pytest.raises(ArgumentError):
        join_witness_realizations([(broken, w)])


# -- pipeline ------------------------------------------------------------------


def test_pipeline_five_cycle():
    g = SimpleGraph.cycle(5)
    host, w = witness_pipeline(g)
    assert w.order >= 3
    assert verify_witness(host, w)


def test_pipeline_complete_graph():
    host, w = witness_pipeline(SimpleGraph.complete(4))
    assert w.order == 4
    assert verify_witness(host, w)


def test_pipeline_petersen():
    g = petersen()
    host, w = witness_pipeline(g)
    assert verify_witness(host, w)
    assert w.order >= chromatic_number(g)


def test_pipeline_disconnected_and_empty():
    host, w = witness_pipeline(SimpleGraph.empty(0))
    assert host.n == 0 and w.order == 0
    c5_plus_isolate = SimpleGraph(6, SimpleGraph.cycle(5).edges)
    host, w = witness_pipeline(c5_plus_isolate)
    assert w.order >= 3
    assert verify_witness(host, w)


def test_pipeline_limit():
    with pytest.raises(ResourceLimitError):
        witness_pipeline(SimpleGraph.empty(13))


# -- bound reports --------------------------------------------------------------


def full_stats():
    return SequenceStats(
        chi=3,
        omega=2,
        h1=3,
        delta_max=2,
        sources={"chi": SOURCE_ORACLE, "omega": SOURCE_ORACLE, "h1": SOURCE_ORACLE},
    )


def test_check_bounds_tight_family():
    rep = check_bounds(full_stats())
    for name in ("sf", "reed", "hajos", "hajos2a", "hajos2b"):
        c = rep.get(name)
        assert c.evaluated and c.holds, name
        assert c.tight and c.slack == 0, name
    assert rep.all_hold


def test_check_bounds_slack_values():
    stats = SequenceStats(
        chi=6,
        omega=5,
        h1=6,
        delta_max=7,
        sources={"chi": SOURCE_ORACLE, "omega": SOURCE_ORACLE, "h1": SOURCE_ORACLE},
    )
    rep = check_bounds(stats)
    assert rep.get("sf").slack == Fraction(3, 5)
    assert rep.get("reed").slack == Fraction(2, 5)
    assert not rep.get("sf").tight


def test_check_bounds_missing_fields():
    rep = check_bounds(SequenceStats(omega=2, delta_max=2))
    sf = rep.get("sf")
    assert not sf.evaluated and "chi" in sf.missing
    assert rep.get("hajos").missing == ("chi", "h1")
    # an unevaluated check neither holds nor is tight
    assert not sf.holds and not sf.tight


def test_check_bounds_unknown_name():
    rep = check_bounds(full_stats())
    with pytest.raises(ArgumentError):
        rep.get("nope")


def test_bound_report_serialization():
    rep = check_bounds(full_stats())
    d = rep.to_dict()
    assert d["sf"] == {"evaluated": True, "holds": True, "tight": True, "slack": "0"}
    rep2 = check_bounds(SequenceStats(omega=2, delta_max=2))
    assert rep2.to_dict()["sf"] == {"evaluated": False, "missing": ["chi"]}
