"""The two zip sweeps.

``zip_s_to_n`` works west of the first straight separator: the zipline is the
column two west of it, directed south to north, and the squares sit on the
odd-indexed delta-segments (horizontal path segments running from the column
just west of the separator to the W boundary).  ``zip_w_to_e`` works on an
almost canonical path along the row just below the current top, squares on
the odd-indexed straight separators.

With ``check=True`` (the default) every structural fact the sweep relies on
is asserted as it runs, every square is re-verified as switchable and every
intermediate path must be simple.  ``check=False`` skips all of that; each
switch then costs O(1) and a sweep costs O(line length).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .analysis import Form, InternalSubpath, Kind, classify_form, decompose, is_simple, separator_lines
from .errors import FrameUnavailable, NotAlmostCanonical, NotSwitchable, StructureViolation
from .grid import EdgeBoard, GridDims, HamPath, Vertex
from .switching import COL, ROW, Square, SwitchRecord, Zipline, switch_in_place

OnSwitch = Callable[[SwitchRecord, EdgeBoard], None]


@dataclass(frozen=True)
class Frame:
    """Column layout of an S->N zip, all relative to the first separator."""

    eta1: int

    @property
    def zipline(self) -> int:
        return self.eta1 - 2

    @property
    def la(self) -> int:
        return self.eta1 - 1

    @property
    def lb(self) -> int:
        return self.eta1 - 3


@dataclass(frozen=True)
class DeltaSegments:
    rows: tuple[int, ...]  # bottom-up, i.e. in zipline order
    lo: int
    hi: int

    @property
    def k_perp(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class ZipResult:
    path: HamPath
    records: tuple[SwitchRecord, ...] = field(default_factory=tuple)

    @property
    def squares_switched(self) -> int:
        return len(self.records)


def _fail(msg: str) -> None:
    raise StructureViolation(msg)


def _part_map(dec) -> dict[Vertex, InternalSubpath]:
    return {v: p for p in dec.parts for v in p.vertices[1:-1]}


# -- S -> N ------------------------------------------------------------------------


def locate_eta1_frame(path: HamPath) -> Frame:
    dec = decompose(path)
    if not dec.classified:
        raise FrameUnavailable("path is not simple")
    if dec.orientation != "NS":
        raise FrameUnavailable("straight separators do not run N-S")
    eta1 = dec.separators[0]
    if eta1.entry.x < 3:
        raise FrameUnavailable(f"first separator in column {eta1.entry.x}; path is canonical or almost canonical")
    if eta1.entry.y != path.dims.m - 1:
        _fail("first straight separator does not run from S to N")
    frame = Frame(eta1.entry.x)
    _check_frame_corner(path, frame, dec)
    return frame


def _vertical_run_from_top(board, col: int) -> int:
    """Row of the lower end of the path segment hanging down from (col, 0)."""
    y = 0
    while board.has_v(col, y):
        y += 1
    return y


def _zipline_start(board, col: int) -> int:
    """Centre row of sq_1: upper end of the first non-edge met climbing ``col`` from S."""
    y = board.dims.m - 2
    while y >= 0 and board.has_v(col, y):
        y -= 1
    return y


def _runs_to_west(board, col: int, y: int) -> bool:
    return all(board.has_h(x, y) for x in range(col))


def _check_frame_corner(board, frame: Frame, dec) -> None:
    m = board.dims.m
    a, z = frame.la, frame.zipline
    if not board.has_h(z, 0):
        _fail(f"edge ({z},0)-({a},0) on N is missing")
    hi = _vertical_run_from_top(board, a)
    if not 1 <= hi <= m - 2:
        _fail(f"vertical segment down column {a} ends at row {hi}, not at an internal node")
    if not _runs_to_west(board, a, hi):
        _fail(f"row {hi} is not a segment from column {a} to W")
    part = _part_map(dec).get(Vertex(a, hi))
    mus = dec.of_kind(Kind.CORNER_SEP_MU)
    is_last_mu_bend = part is not None and part.kind == Kind.CORNER_SEP_MU and part.index == len(mus) and part.bend == Vertex(a, hi)
    on_corner_cookie = part is not None and part.kind == Kind.CORNER_COOKIE
    if not (is_last_mu_bend or on_corner_cookie):
        _fail(f"node ({a},{hi}) is neither the bend of the last mu nor on a W corner cookie")


def find_delta_segments(path: HamPath, frame: Frame, check: bool = True) -> DeltaSegments:
    return _delta_segments(path, frame, decompose(path) if check else None)


def _delta_segments(board, frame: Frame, dec) -> DeltaSegments:
    a = frame.la
    hi = _vertical_run_from_top(board, a)
    lo = _zipline_start(board, frame.zipline)
    segs = DeltaSegments(tuple(range(lo, hi - 1, -1)), lo, hi)
    if dec is not None:
        _check_delta_structure(board, frame, segs, dec)
    return segs


def _check_delta_structure(board, frame: Frame, segs: DeltaSegments, dec) -> None:
    dims = board.dims
    m = dims.m
    a, z = frame.la, frame.zipline
    full = [y for y in range(1, m - 1) if _runs_to_west(board, a, y)]
    # odd count, consecutive rows, matching the zipline scan
    if not full:
        _fail("no segment of the path runs from the column west of eta_1 to W")
    if full != list(range(full[0], full[-1] + 1)):
        _fail(f"delta rows {full} are not consecutive")
    if len(full) % 2 == 0:
        _fail(f"even number ({len(full)}) of delta-segments")
    if (full[0], full[-1]) != (segs.hi, segs.lo):
        _fail(f"delta rows {full} disagree with zipline scan hi={segs.hi} lo={segs.lo}")
    parts = _part_map(dec)
    for y in full:
        # interior nodes of a delta-segment carry no vertical edges
        for x in range(1, a):
            if board.has_v(x, y - 1) or board.has_v(x, y):
                _fail(f"interior node ({x},{y}) of a delta-segment has a vertical edge")
        # the node below a delta end that is joined upward
        if not board.has_v(a, y - 1):
            continue
        u = Vertex(a, y + 1)
        if u.y == m - 1:
            if not all(board.has_h(x, m - 1) for x in range(0, frame.eta1)):
                _fail(f"node {u} on S is not on seg[alpha, s(eta_1)]")
            continue
        part = parts.get(u)
        joined = board.has_h(a - 1, u.y) and board.has_v(a, u.y)
        if part is None or not joined:
            _fail(f"node {u} below a delta-segment is not a top-right cookie corner")
        if part.kind == Kind.COOKIE_W:
            continue
        if part.kind == Kind.COOKIE_S and {part.entry.x, part.exit.x} == {z, a}:
            continue
        _fail(f"node {u} below a delta-segment lies on {part.kind}")


def _zip_s_to_n_board(board: EdgeBoard, eta1: int, check: bool, on_switch: Optional[OnSwitch] = None) -> list[SwitchRecord]:
    frame = Frame(eta1)
    if eta1 < 3:
        raise FrameUnavailable(f"first separator in column {eta1}")
    dec = None
    k_before = None
    if check:
        path = board.freeze()
        dec = decompose(path)
        if not dec.classified:
            raise StructureViolation("input to zip S->N is not simple")
        lines = separator_lines(dec)
        if dec.orientation != "NS" or lines[0] != eta1:
            _fail(f"expected first N-S separator in column {eta1}, found {dec.orientation} {lines[:1]}")
        k_before = dec.k
        _check_frame_corner(board, frame, dec)
    segs = _delta_segments(board, frame, dec)
    zl = Zipline(COL, frame.zipline, -1, frame.la)
    records = []
    for y in segs.rows[::2]:
        sq = Square(Vertex(frame.zipline, y), zl)
        try:
            rec = switch_in_place(board, sq, check=check)
        except NotSwitchable as exc:
            raise NotSwitchable(f"S->N zip: {exc}") from None
        records.append(rec)
        if on_switch is not None:
            on_switch(rec, board)
    if check:
        after = decompose(board.freeze())
        if after.k != k_before + 2 or separator_lines(after)[0] != eta1 - 2:
            _fail(f"zip S->N left k={after.k} (was {k_before}), first separator {separator_lines(after)[:1]}")
        if len(records) != (segs.k_perp + 1) // 2:
            _fail("switch count differs from (k_perp + 1) / 2")
    return records


def zip_s_to_n(path: HamPath, check: bool = True) -> ZipResult:
    """One S->N zip west of the first straight separator."""
    frame = locate_eta1_frame(path)
    board = EdgeBoard(path)
    records = _zip_s_to_n_board(board, frame.eta1, check, _simple_guard if check else None)
    return ZipResult(board.freeze(), tuple(records))


def _simple_guard(rec: SwitchRecord, board: EdgeBoard) -> None:
    if not is_simple(board.freeze()):
        raise StructureViolation(f"path after switching the square at {rec.center} is not simple")


# -- W -> E ------------------------------------------------------------------------


def sub_path(path: HamPath, top: int) -> HamPath:
    """The part of the path on rows ``top``.. as a path of that subgrid."""
    dims = GridDims(path.dims.m - top, path.dims.n)
    return HamPath(dims, path.horiz[top:], tuple(w >> top for w in path.vert))


def _prefix_is_rows(board, top: int) -> bool:
    """Rows above ``top`` are full segments joined alternately at E and W."""
    n = board.dims.n
    for y in range(top):
        if not all(board.has_h(x, y) for x in range(n - 1)):
            return False
        if not board.has_v(n - 1 if y % 2 == 0 else 0, y):
            return False
    return True


def _check_w_to_e_input(board, top: int) -> HamPath:
    path = board.freeze() if isinstance(board, EdgeBoard) else board
    if top % 2 or top > path.dims.m - 3:
        raise NotAlmostCanonical(f"no W->E zipline below row {top} of a {path.dims} grid")
    if not _prefix_is_rows(path, top):
        raise NotAlmostCanonical(f"rows above {top} are not already filled row by row")
    sub = sub_path(path, top)
    form = classify_form(sub)
    if form not in (Form.ALMOST_CANONICAL, Form.CANONICAL_NS):
        raise NotAlmostCanonical(f"path below row {top} is {form}")
    if decompose(sub).orientation != "NS":
        raise NotAlmostCanonical("straight separators run E-W")
    return sub


def _separator_columns_at(board, top: int) -> list[int]:
    y = top + 1
    return [x for x in range(1, board.dims.n - 1) if board.has_v(x, y - 1) and board.has_v(x, y)]


def _zip_w_to_e_board(board: EdgeBoard, top: int, check: bool, on_switch: Optional[OnSwitch] = None) -> list[SwitchRecord]:
    cols = _separator_columns_at(board, top)
    if check:
        sub = _check_w_to_e_input(board, top)
        expected = separator_lines(decompose(sub))
        if cols != expected:
            _fail(f"separator columns on row {top + 1} are {cols}, decomposition says {expected}")
    zl = Zipline(ROW, top + 1, 1, top)
    records = []
    for x in cols[::2]:
        sq = Square(Vertex(x, top + 1), zl)
        try:
            rec = switch_in_place(board, sq, check=check)
        except NotSwitchable as exc:
            raise NotSwitchable(f"W->E zip: {exc}") from None
        records.append(rec)
        if on_switch is not None:
            on_switch(rec, board)
    if check:
        if not _prefix_is_rows(board, top + 2):
            _fail(f"rows {top} and {top + 1} are not two segments after the zip")
        if len(records) != (len(cols) + 1) // 2:
            _fail("switch count differs from (k + 1) / 2")
    return records


def zip_w_to_e(path: HamPath, top: int = 0, check: bool = True) -> ZipResult:
    """One W->E zip along row ``top + 1`` with ``l_a`` = row ``top``.

    The part of the path below ``top`` must be almost canonical with N-S
    separators (a column-filling canonical part is accepted as well, which
    is what the canonical-to-canonical sweep feeds in).
    """
    _check_w_to_e_input(path, top)
    board = EdgeBoard(path)
    records = _zip_w_to_e_board(board, top, check, _simple_guard if check else None)
    return ZipResult(board.freeze(), tuple(records))
