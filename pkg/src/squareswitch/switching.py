"""Cell switches, squares on directed ziplines and the square-switch.

A square is the block of four cells around an internal vertex, read in the
frame of a directed zipline through that vertex.  The zipline's neighbour
``l_a`` bounds the main track ``tr``; the other neighbour ``l_b`` bounds the
side track ``tr'``.  Walking the zipline, "near" cells come first and "far"
cells second.  A square-switch exchanges the path edges of the far cell in
``tr'`` and the near cell in ``tr`` for their non-edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Protocol, Union

from .errors import NotSwitchable
from .grid import EdgeBoard, GridDims, HamPath, Vertex, validate

ROW = "row"
COL = "col"

EdgeKey = tuple[Vertex, Vertex]


class _Edges(Protocol):
    dims: GridDims

    def has_h(self, x: int, y: int) -> bool: ...

    def has_v(self, x: int, y: int) -> bool: ...


@dataclass(frozen=True)
class Zipline:
    orientation: str  # ROW or COL
    index: int
    direction: int  # +1: increasing coordinate along the line, -1: decreasing
    la_index: int

    def __post_init__(self):
        if self.orientation not in (ROW, COL):
            raise ValueError(f"bad orientation {self.orientation!r}")
        if self.direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")
        if abs(self.la_index - self.index) != 1:
            raise ValueError("l_a must be adjacent to the zipline")

    @property
    def lb_index(self) -> int:
        return 2 * self.index - self.la_index

    @property
    def direction_name(self) -> str:
        if self.orientation == ROW:
            return "W2E" if self.direction == 1 else "E2W"
        return "N2S" if self.direction == 1 else "S2N"

    @classmethod
    def from_name(cls, orientation: str, index: int, name: str, la_index: int) -> Zipline:
        direction = {"W2E": 1, "E2W": -1, "N2S": 1, "S2N": -1}[name]
        return cls(orientation, index, direction, la_index)

    def is_internal(self, dims: GridDims) -> bool:
        limit = dims.m if self.orientation == ROW else dims.n
        return 1 <= self.index <= limit - 2


def cell_edges(cell: tuple[int, int]) -> tuple[EdgeKey, EdgeKey, EdgeKey, EdgeKey]:
    """(top, bottom, left, right) sides of the cell with top-left corner ``cell``."""
    x, y = cell
    a, b, c, d = Vertex(x, y), Vertex(x + 1, y), Vertex(x, y + 1), Vertex(x + 1, y + 1)
    return (a, b), (c, d), (a, c), (b, d)


@dataclass(frozen=True)
class Square:
    center: Vertex
    zipline: Zipline

    @classmethod
    def on(cls, dims: GridDims, center: tuple[int, int], zipline: Zipline) -> Square:
        """Build a square, rejecting centers whose 9 nodes leave the grid."""
        center = Vertex(*center)
        if not dims.is_internal(center):
            raise ValueError(f"square centre {center} is not an internal vertex of the {dims} grid")
        on_line = center.y if zipline.orientation == ROW else center.x
        if on_line != zipline.index:
            raise ValueError(f"centre {center} is not on the zipline")
        return cls(center, zipline)

    def _coords(self, along: int, perp: int) -> Vertex:
        if self.zipline.orientation == ROW:
            return Vertex(along, perp)
        return Vertex(perp, along)

    def _split(self) -> tuple[int, int]:
        c = self.center
        return (c.x, c.y) if self.zipline.orientation == ROW else (c.y, c.x)

    def labels(self) -> dict[str, Vertex]:
        """Local names p1..p9: l_a nodes, then l_z, then l_b, along the direction."""
        along, _ = self._split()
        z = self.zipline
        d = z.direction
        out = {}
        for row, line in enumerate((z.la_index, z.index, z.lb_index)):
            for col, step in enumerate((-d, 0, d)):
                out[f"p{3 * row + col + 1}"] = self._coords(along + step, line)
        return out

    def _cell(self, far: bool, main_track: bool) -> Vertex:
        along, perp = self._split()
        z = self.zipline
        toward_far = z.direction == 1
        a = along if far == toward_far else along - 1
        side = z.la_index if main_track else z.lb_index
        p = perp if side > perp else perp - 1
        return self._coords(a, p)

    @property
    def far_side_cell(self) -> Vertex:
        """Far cell in the side track tr'."""
        return self._cell(far=True, main_track=False)

    @property
    def near_main_cell(self) -> Vertex:
        """Near cell in the main track tr."""
        return self._cell(far=False, main_track=True)

    def cells(self) -> dict[str, Vertex]:
        """c_nl, c_nr, c_fl, c_fr: near/far, left/right of the directed zipline."""
        along, perp = self._split()
        z = self.zipline
        # walking the line, left is -perp for a row going +x and +perp for a column going +y
        left = -z.direction if z.orientation == ROW else z.direction
        out = {}
        for name_nf, far in (("n", False), ("f", True)):
            for name_lr, sign in (("l", left), ("r", -left)):
                a = along if far == (z.direction == 1) else along - 1
                p = perp if sign > 0 else perp - 1
                out[f"c_{name_nf}{name_lr}"] = self._coords(a, p)
        return out

    def in_main_track(self, v: Vertex) -> bool:
        z = self.zipline
        coord = v.y if z.orientation == ROW else v.x
        return min(z.index, z.la_index) <= coord <= max(z.index, z.la_index)


@dataclass(frozen=True)
class SwitchRecord:
    center: Vertex
    zipline: Zipline
    removed: frozenset[EdgeKey]
    added: frozenset[EdgeKey]

    @property
    def square(self) -> Square:
        return Square(self.center, self.zipline)

    def format(self) -> str:
        z = self.zipline
        return f"{self.center.x} {self.center.y} {z.orientation} {z.index} {z.direction_name} {z.la_index}"


def _has(board: _Edges, e: EdgeKey) -> bool:
    (a, b) = e
    if a.y == b.y:
        return board.has_h(min(a.x, b.x), a.y)
    return board.has_v(a.x, min(a.y, b.y))


def _flip(board: EdgeBoard, e: EdgeKey) -> None:
    (a, b) = e
    if a.y == b.y:
        board.flip_h(min(a.x, b.x), a.y)
    else:
        board.flip_v(a.x, min(a.y, b.y))


def is_switchable_cell(path: _Edges, cell: tuple[int, int]) -> bool:
    """Two parallel sides on the path, the other two off it."""
    x, y = cell
    dims = path.dims
    if not (0 <= x < dims.n - 1 and 0 <= y < dims.m - 1):
        return False
    top, bottom, left, right = (_has(path, e) for e in cell_edges(cell))
    return (top and bottom and not left and not right) or (left and right and not top and not bottom)


def _switch_cell(board: EdgeBoard, cell: tuple[int, int]) -> None:
    for e in cell_edges(cell):
        _flip(board, e)


def _board_neighbors(board: EdgeBoard, v: Vertex) -> list[Vertex]:
    x, y = v
    out = []
    if board.has_h(x - 1, y):
        out.append(Vertex(x - 1, y))
    if board.has_h(x, y):
        out.append(Vertex(x + 1, y))
    if board.has_v(x, y - 1):
        out.append(Vertex(x, y - 1))
    if board.has_v(x, y):
        out.append(Vertex(x, y + 1))
    return out


def _trace_from(board: EdgeBoard, start: Vertex) -> tuple[list[Vertex], bool]:
    """Follow edges from ``start``; returns (vertices, closed)."""
    nb = _board_neighbors(board, start)
    if not nb:
        return [start], False
    seq = [start]
    prev, cur = start, nb[0]
    limit = board.dims.size()
    while cur != start and len(seq) <= limit:
        seq.append(cur)
        nxt = [w for w in _board_neighbors(board, cur) if w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
    if cur == start and len(seq) > 2:
        return seq, True
    if len(nb) == 2:
        # open walk: extend backwards through the other neighbour too
        back, _ = _trace_one_way(board, start, nb[1])
        seq = list(reversed(back)) + seq
    return seq, False


def _trace_one_way(board: EdgeBoard, start: Vertex, first: Vertex) -> tuple[list[Vertex], bool]:
    seq = []
    prev, cur = start, first
    while True:
        seq.append(cur)
        nxt = [w for w in _board_neighbors(board, cur) if w != prev]
        if not nxt:
            return seq, False
        prev, cur = cur, nxt[0]


@dataclass(frozen=True)
class PathCycleCover:
    path: tuple[Vertex, ...]
    cycles: tuple[tuple[Vertex, ...], ...]


def _components(board: EdgeBoard) -> PathCycleCover:
    dims = board.dims
    main, _ = _trace_from(board, dims.s)
    seen = set(main)
    cycles = []
    for y in range(dims.m):
        for x in range(dims.n):
            v = Vertex(x, y)
            if v in seen:
                continue
            seq, _ = _trace_from(board, v)
            seen.update(seq)
            cycles.append(tuple(seq))
    return PathCycleCover(tuple(main), tuple(cycles))


def path_cycle_cover_after_cell_switch(path: HamPath, cell: tuple[int, int]) -> PathCycleCover:
    if not is_switchable_cell(path, cell):
        raise NotSwitchable(f"cell {tuple(cell)} is not switchable")
    board = EdgeBoard(path)
    _switch_cell(board, cell)
    return _components(board)


def _cycle_in_track(board: EdgeBoard, square: Square) -> Optional[list[Vertex]]:
    """The cycle through the new edge p5-p6, if it closes without leaving tr."""
    labels = square.labels()
    p5, p6 = labels["p5"], labels["p6"]
    if not _has(board, (p5, p6)):
        return None
    seq = [p5]
    prev, cur = p5, p6
    for _ in range(board.dims.size()):
        if cur == p5:
            return seq
        if not square.in_main_track(cur):
            return None
        seq.append(cur)
        nxt = [w for w in _board_neighbors(board, cur) if w != prev]
        if not nxt:
            return None
        prev, cur = cur, nxt[0]
    return None


def _square_ok(board: EdgeBoard, square: Square) -> bool:
    far, near = square.far_side_cell, square.near_main_cell
    if not (is_switchable_cell(board, far) and is_switchable_cell(board, near)):
        return False
    _switch_cell(board, far)
    try:
        cycle = _cycle_in_track(board, square)
        if cycle is None:
            return False
        # the near-cell switch must splice the cycle into the path: exactly
        # one of its two path edges may lie on the cycle
        ring = {frozenset(e) for e in zip(cycle, cycle[1:] + cycle[:1])}
        hits = sum(1 for e in cell_edges(near) if _has(board, e) and frozenset(e) in ring)
        return hits == 1
    finally:
        _switch_cell(board, far)


def is_switchable_square(path: Union[HamPath, EdgeBoard], square: Square) -> bool:
    """Both cells switchable and the far-cell switch closes a cycle inside tr."""
    dims = path.dims
    if not dims.is_internal(square.center) or not square.zipline.is_internal(dims):
        return False
    board = EdgeBoard(path) if isinstance(path, HamPath) else path
    return _square_ok(board, square)


def square_edges(square: Square, board: _Edges) -> tuple[frozenset[EdgeKey], frozenset[EdgeKey]]:
    removed, added = set(), set()
    for cell in (square.far_side_cell, square.near_main_cell):
        for e in cell_edges(cell):
            (removed if _has(board, e) else added).add(e)
    return frozenset(removed), frozenset(added)


def switch_in_place(board: EdgeBoard, square: Square, check: bool = True) -> SwitchRecord:
    """Apply a square-switch to a working board; O(1) when ``check`` is off."""
    if check and not is_switchable_square(board, square):
        raise NotSwitchable(f"square at {square.center} on {square.zipline} is not switchable")
    removed, added = square_edges(square, board)
    for e in removed | added:
        _flip(board, e)
    return SwitchRecord(square.center, square.zipline, removed, added)


def square_switch(path: HamPath, square: Square) -> tuple[HamPath, SwitchRecord]:
    board = EdgeBoard(path)
    record = switch_in_place(board, square, check=True)
    out = board.freeze()
    return validate(out.horiz, out.vert, out.dims), record


def apply_exchange(board: EdgeBoard, removed: frozenset[EdgeKey], added: frozenset[EdgeKey]) -> bool:
    """Flip the given edges if the board matches; returns False on mismatch."""
    if not all(_has(board, e) for e in removed) or any(_has(board, e) for e in added):
        return False
    for e in removed | added:
        _flip(board, e)
    return True


def squares_at(dims: GridDims, center: tuple[int, int]) -> Iterator[Square]:
    """All eight zipline frames through an internal centre."""
    center = Vertex(*center)
    for orientation, index in ((ROW, center.y), (COL, center.x)):
        for direction in (1, -1):
            for la in (index - 1, index + 1):
                yield Square(center, Zipline(orientation, index, direction, la))


def all_squares(dims: GridDims) -> Iterator[Square]:
    for y in range(1, dims.m - 1):
        for x in range(1, dims.n - 1):
            yield from squares_at(dims, (x, y))


def find_frame(board: Union[HamPath, EdgeBoard], removed: frozenset[EdgeKey], added: frozenset[EdgeKey], center: Vertex) -> Optional[Square]:
    """A valid square whose switch performs exactly this exchange, if one exists."""
    work = EdgeBoard(board) if isinstance(board, HamPath) else board
    for sq in squares_at(work.dims, center):
        r, a = square_edges(sq, work)
        if r == removed and a == added and is_switchable_square(work, sq):
            return sq
    return None
