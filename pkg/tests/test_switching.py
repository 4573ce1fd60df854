import pytest
from hypothesis import given, settings, strategies as st

from corpus import ALMOST_5x7, INTERESTING, simple
from squareswitch.analysis import decompose, is_simple, separator_lines
from squareswitch.errors import NotSwitchable
from squareswitch.grid import EdgeBoard, GridDims, Vertex, from_moves, make_canonical, validate
from squareswitch.switching import (
    COL,
    ROW,
    Square,
    Zipline,
    _cycle_in_track,
    _switch_cell,
    all_squares,
    cell_edges,
    find_frame,
    is_switchable_cell,
    is_switchable_square,
    path_cycle_cover_after_cell_switch,
    square_edges,
    square_switch,
    squares_at,
    switch_in_place,
)

NS_3x3 = make_canonical(GridDims(3, 3), "NS")  # DDRUURDD: column 1 runs N-S


def test_switchable_cell_examples():
    # cell (0,0) of DDRUURDD: left and right sides on the path, top and bottom off it
    assert is_switchable_cell(NS_3x3, (0, 0))
    ew = make_canonical(GridDims(3, 3), "EW")  # RRDLLDRR
    # cell (1,0): top, bottom and right sides on the path
    assert not is_switchable_cell(ew, (1, 0))
    # cell (0,1) of the NS path: left side (0,1)-(0,2) and bottom (0,2)-(1,2) only
    assert not is_switchable_cell(NS_3x3, (0, 1))
    assert not is_switchable_cell(NS_3x3, (5, 5))


def test_zipline_validation_and_names():
    z = Zipline(ROW, 1, 1, 0)
    assert (z.direction_name, z.lb_index) == ("W2E", 2)
    assert Zipline.from_name(COL, 3, "S2N", 4) == Zipline(COL, 3, -1, 4)
    with pytest.raises(ValueError):
        Zipline(ROW, 1, 1, 3)
    with pytest.raises(ValueError):
        Square.on(GridDims(5, 5), (0, 1), z)
    with pytest.raises(ValueError):
        Square.on(GridDims(5, 5), (2, 2), z)


@pytest.mark.parametrize("square", list(squares_at(GridDims(5, 5), (2, 2))))
def test_square_geometry(square):
    dims = GridDims(5, 5)
    labels = square.labels()
    assert len(set(labels.values())) == 9 and all(dims.contains(v) for v in labels.values())
    assert labels["p5"] == square.center
    far, near = square.far_side_cell, square.near_main_cell
    assert abs(far.x - near.x) == 1 and abs(far.y - near.y) == 1
    cells = square.cells()
    assert set(cells.values()) == {Vertex(1, 1), Vertex(2, 1), Vertex(1, 2), Vertex(2, 2)}
    assert far in (cells["c_fl"], cells["c_fr"]) and near in (cells["c_nl"], cells["c_nr"])


def test_first_square_on_almost_canonical_row_zipline():
    # horizontal zipline in Row 1, l_a = Row 0, centre on the first separator
    p = from_moves(GridDims(5, 7), ALMOST_5x7)
    x1 = separator_lines(decompose(p))[0]
    sq = Square.on(p.dims, (x1, 1), Zipline(ROW, 1, 1, 0))
    assert sq.far_side_cell == sq.cells()["c_fr"]
    assert sq.near_main_cell == sq.cells()["c_nl"]
    assert is_switchable_square(p, sq)
    q, rec = square_switch(p, sq)
    assert q.edge_count() == p.dims.size() - 1
    assert is_simple(q)
    assert not rec.removed & rec.added
    assert len(rec.removed) == len(rec.added) == 4
    cell_sides = {frozenset(e) for c in (sq.far_side_cell, sq.near_main_cell) for e in cell_edges(c)}
    assert {frozenset(e) for e in rec.removed | rec.added} == cell_sides


def test_near_cell_with_three_edges_blocks_the_square():
    found = 0
    for m, n in INTERESTING[:12]:
        for p in simple(m, n):
            for sq in all_squares(p.dims):
                near = sq.near_main_cell
                if sum(_has(p, e) for e in cell_edges(near)) == 3:
                    assert not is_switchable_square(p, sq)
                    found += 1
    assert found > 0


def _has(p, e):
    return p.has_edge(*e)


def test_square_switch_rejects_unswitchable():
    blocked = [sq for sq in squares_at(NS_3x3.dims, (1, 1)) if not is_switchable_square(NS_3x3, sq)]
    assert blocked
    with pytest.raises(NotSwitchable):
        square_switch(NS_3x3, blocked[0])


def test_far_cell_switch_leaves_cycle_in_main_track():
    p = from_moves(GridDims(5, 7), ALMOST_5x7)
    for sq in all_squares(p.dims):
        if not is_switchable_square(p, sq):
            continue
        cover = path_cycle_cover_after_cell_switch(p, sq.far_side_cell)
        assert len(cover.cycles) == 1
        assert all(sq.in_main_track(v) for v in cover.cycles[0])
        assert cover.path[0] == p.dims.s and cover.path[-1] == p.dims.t
        assert len(cover.path) + len(cover.cycles[0]) == p.dims.size()


def test_interior_cell_switch_on_canonical_splits_off_a_cycle():
    p = make_canonical(GridDims(5, 5), "EW")
    cover = path_cycle_cover_after_cell_switch(p, (1, 1))
    assert len(cover.cycles) == 1
    board = EdgeBoard(p)
    _switch_cell(board, (1, 1))
    _switch_cell(board, (1, 1))
    assert board.freeze() == p
    with pytest.raises(NotSwitchable):
        path_cycle_cover_after_cell_switch(p, (0, 1))


@pytest.mark.parametrize("m,n", INTERESTING)
def test_every_valid_switch_gives_a_hamiltonian_path(m, n):
    for p in simple(m, n):
        for sq in all_squares(p.dims):
            board = EdgeBoard(p)
            if is_switchable_square(board, sq):
                switch_in_place(board, sq, check=False)
                q = board.freeze()
                validate(q.horiz, q.vert, q.dims)


def test_one_way_switches_close_long_cycles():
    # the inverse of a switch need not be a switch; when it is not, the far-cell
    # switch closed a cycle longer than a single cell
    one_way = 0
    for m, n in INTERESTING:
        for p in simple(m, n):
            for sq in all_squares(p.dims):
                board = EdgeBoard(p)
                if not is_switchable_square(board, sq):
                    continue
                _switch_cell(board, sq.far_side_cell)
                cycle = _cycle_in_track(board, sq)
                _switch_cell(board, sq.far_side_cell)
                rec = switch_in_place(board, sq, check=False)
                if find_frame(board, rec.added, rec.removed, rec.center) is None:
                    one_way += 1
                    assert len(cycle) > 4
    assert one_way > 0


@st.composite
def path_and_square(draw):
    m, n = draw(st.sampled_from(INTERESTING))
    p = draw(st.sampled_from(simple(m, n)))
    sq = draw(st.sampled_from(list(all_squares(p.dims))))
    return p, sq


@settings(max_examples=300)
@given(path_and_square())
def test_switch_record_matches_square_edges(case):
    p, sq = case
    removed, added = square_edges(sq, p)
    assert not removed & added
    if is_switchable_square(p, sq):
        q, rec = square_switch(p, sq)
        assert (rec.removed, rec.added) == (removed, added)
        assert find_frame(p, removed, added, sq.center) is not None
