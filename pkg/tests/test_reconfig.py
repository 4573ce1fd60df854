import pytest
from hypothesis import given, settings, strategies as st

from corpus import ALMOST_5x7, INTERESTING, KPERP_5, THREE_BENDS_5x5, grid9, simple
from squareswitch.analysis import classify_form, is_simple
from squareswitch.errors import DimsMismatch, NotCanonical, NotSimple, ParseError, ReplayDivergence
from squareswitch.grid import GridDims, from_moves, make_canonical, transpose
from squareswitch.reconfig import (
    ROT180,
    TRANSPOSE,
    Phase,
    SwitchTrace,
    TraceEntry,
    parse_trace,
    reconfig_canonical_to_canonical,
    reconfig_to_canonical,
    reconfigure,
    replay,
)
from squareswitch.switching import SwitchRecord

D5 = GridDims(5, 5)


def test_canonical_input_needs_no_switches():
    for kind in ("EW", "NS"):
        trace = reconfig_to_canonical(make_canonical(D5, kind))
        assert len(trace) == 0 and trace.entries == ()


def test_almost_canonical_uses_only_step_c():
    p = from_moves(GridDims(5, 7), ALMOST_5x7)
    trace = reconfig_to_canonical(p)
    assert trace.count(Phase.STEP_C) == len(trace) > 0
    assert len(trace) <= p.dims.size() / 4
    assert classify_form(trace.final).canonical


def test_larger_path_runs_all_three_steps_in_order():
    p = grid9(KPERP_5)
    trace = reconfig_to_canonical(p)
    phases = [e.phase for e in trace.entries if e.record]
    assert phases == sorted(phases, key=[Phase.STEP_A, Phase.STEP_B, Phase.STEP_C].index)
    assert trace.count(Phase.STEP_A) > 0
    assert len(trace) <= p.dims.size() / 2
    assert all(is_simple(q) for q in trace.paths())


def test_row_separated_input_is_transposed_and_back():
    p = transpose(grid9(KPERP_5))
    trace = reconfig_to_canonical(p)
    transforms = [e.transform for e in trace.entries if e.transform]
    assert transforms[0] == TRANSPOSE and transforms[-1] == TRANSPOSE
    assert transforms.count(TRANSPOSE) == 2
    assert transforms.count(ROT180) % 2 == 0
    assert trace.final.dims == p.dims


def test_canonical_to_canonical():
    ns, ew = make_canonical(D5, "NS"), make_canonical(D5, "EW")
    assert len(reconfig_canonical_to_canonical(ew, ew)) == 0
    forward = reconfig_canonical_to_canonical(ns, ew)
    assert forward.final == ew
    assert len(forward) <= 25 / 4
    assert len(forward) == 4  # (m-1)(n-1)/4
    assert reconfig_canonical_to_canonical(ew, ns).final == ns
    with pytest.raises(DimsMismatch):
        reconfig_canonical_to_canonical(ns, make_canonical(GridDims(5, 7), "EW"))
    with pytest.raises(NotCanonical):
        reconfig_canonical_to_canonical(from_moves(GridDims(5, 7), ALMOST_5x7), make_canonical(GridDims(5, 7), "EW"))


def test_reconfigure_input_errors():
    p = make_canonical(D5, "NS")
    assert len(reconfigure(p, p)) == 0
    with pytest.raises(DimsMismatch):
        reconfigure(p, make_canonical(GridDims(5, 3), "NS"))
    with pytest.raises(NotSimple):
        reconfigure(from_moves(D5, THREE_BENDS_5x5), p)
    with pytest.raises(NotSimple):
        reconfig_to_canonical(from_moves(D5, THREE_BENDS_5x5))


def test_all_pairs_on_5x5():
    paths = simple(5, 5)
    for a in paths:
        for b in paths:
            trace = reconfigure(a, b)
            assert len(trace) <= 5 * 25 // 4
            assert trace.final == b
            assert all(is_simple(q) for q in trace.paths())


@pytest.mark.parametrize("m,n", INTERESTING)
def test_to_canonical_on_every_simple_path(m, n):
    for p in simple(m, n):
        trace = reconfig_to_canonical(p)
        assert len(trace) <= m * n // 2
        assert classify_form(trace.final).canonical
        assert trace.count(Phase.STEP_A) + trace.count(Phase.STEP_B) + trace.count(Phase.STEP_C) == len(trace)


def test_replay_empty_and_divergence():
    p = make_canonical(D5, "NS")
    assert replay(SwitchTrace(p, p, ()), p) == p
    ew = make_canonical(D5, "EW")
    good = reconfigure(p, ew)
    with pytest.raises(ReplayDivergence):
        replay(good, ew)
    # a record whose square is not switchable for the start path
    rec = good.records[0]
    bogus = SwitchRecord(rec.center, rec.zipline, rec.added, rec.removed)
    with pytest.raises(ReplayDivergence):
        replay(SwitchTrace(p, ew, (TraceEntry(Phase.CANONICAL_SWEEP, record=bogus),)), p)


def test_trace_text_format():
    p = grid9(KPERP_5)
    q = transpose(p)
    trace = reconfigure(p, make_canonical(p.dims, "EW"))
    text = trace.format()
    lines = text.splitlines()
    assert lines[0] == "9 9" and lines[1] == p.moves
    assert lines[3].split()[-1] == "StepA"
    assert parse_trace(text) == trace
    with pytest.raises(ParseError):
        parse_trace("9 9\n" + p.moves + "\n" + q.moves + "\n1 1 row 1 SIDEWAYS 0 StepA\n")
    with pytest.raises(ParseError):
        parse_trace("9 9\n")


PAIR_GRIDS = [g for g in INTERESTING if len(simple(*g)) > 1]


@st.composite
def pairs(draw):
    m, n = draw(st.sampled_from(PAIR_GRIDS))
    return draw(st.sampled_from(simple(m, n))), draw(st.sampled_from(simple(m, n)))


@settings(max_examples=150, deadline=None)
@given(pairs())
def test_trace_round_trips_and_replays(pair):
    a, b = pair
    trace = reconfigure(a, b)
    again = parse_trace(trace.format())
    assert again == trace
    assert replay(again, a) == b
    paths = list(trace.paths())
    assert paths[0] == a and paths[-1] == b
    assert len(paths) == len(trace) + 1


@settings(max_examples=60, deadline=None)
@given(pairs())
def test_fast_mode_gives_the_same_trace(pair):
    a, b = pair
    assert reconfigure(a, b, check=False) == reconfigure(a, b)
