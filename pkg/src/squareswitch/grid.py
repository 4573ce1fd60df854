"""Grid geometry, the bit-vector path representation and path serialization.

Coordinates follow the usual raster convention: ``Vertex(x, y)`` with ``x``
the column and ``y`` the row, ``s = (0, 0)`` top-left and positive ``y``
pointing down.  A path is stored as one bitmask per row (``horiz[y]`` bit
``x`` is the edge ``(x, y)-(x+1, y)``) and one per column (``vert[x]`` bit
``y`` is the edge ``(x, y)-(x, y+1)``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    BadShape,
    DegreeViolation,
    Disconnected,
    NoSuchCanonical,
    OutOfBounds,
    ParseError,
    PathError,
    Revisit,
    WrongEndpoints,
    WrongTerminal,
)


class Vertex(NamedTuple):
    x: int
    y: int


Edge = tuple[Vertex, Vertex]

MOVES = {"U": (0, -1), "D": (0, 1), "L": (-1, 0), "R": (1, 0)}
_STEP_TO_MOVE = {d: k for k, d in MOVES.items()}


@dataclass(frozen=True)
class GridDims:
    m: int  # rows
    n: int  # columns

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)) or self.m < 1 or self.n < 1:
            raise BadShape(f"grid dimensions must be positive integers, got {self.m}x{self.n}")

    def size(self) -> int:
        return self.m * self.n

    @property
    def s(self) -> Vertex:
        return Vertex(0, 0)

    @property
    def t(self) -> Vertex:
        return Vertex(self.n - 1, self.m - 1)

    @property
    def alpha(self) -> Vertex:
        return Vertex(0, self.m - 1)

    @property
    def beta(self) -> Vertex:
        return Vertex(self.n - 1, 0)

    def contains(self, v: tuple[int, int]) -> bool:
        return 0 <= v[0] < self.n and 0 <= v[1] < self.m

    def sides(self, v: tuple[int, int]) -> frozenset[str]:
        """Boundaries (subset of "NSEW") the vertex lies on."""
        x, y = v
        out = set()
        if y == 0:
            out.add("N")
        if y == self.m - 1:
            out.add("S")
        if x == 0:
            out.add("W")
        if x == self.n - 1:
            out.add("E")
        return frozenset(out)

    def is_internal(self, v: tuple[int, int]) -> bool:
        return 0 < v[0] < self.n - 1 and 0 < v[1] < self.m - 1

    def transposed(self) -> GridDims:
        return GridDims(self.n, self.m)

    def admits_path(self) -> bool:
        """An s,t Hamiltonian path exists unless both dimensions are even."""
        return self.m % 2 == 1 or self.n % 2 == 1

    def __str__(self) -> str:
        return f"{self.m}x{self.n}"


@dataclass(frozen=True)
class Segment:
    u: Vertex
    v: Vertex

    def __post_init__(self):
        if self.u.x != self.v.x and self.u.y != self.v.y:
            raise ValueError(f"segment endpoints {self.u} and {self.v} are not aligned")

    def edges(self) -> Iterator[Edge]:
        (x0, y0), (x1, y1) = self.u, self.v
        if y0 == y1:
            for x in range(min(x0, x1), max(x0, x1)):
                yield Vertex(x, y0), Vertex(x + 1, y0)
        else:
            for y in range(min(y0, y1), max(y0, y1)):
                yield Vertex(x0, y), Vertex(x0, y + 1)

    def __len__(self) -> int:
        return abs(self.u.x - self.v.x) + abs(self.u.y - self.v.y)


def _reverse_bits(word: int, width: int) -> int:
    if width <= 0:
        return 0
    return int(format(word, f"0{width}b")[::-1], 2)


@dataclass(frozen=True)
class HamPath:
    """An s,t Hamiltonian path of a rectangular grid.

    Instances built through :func:`validate`, :func:`from_moves` or the
    transforms are guaranteed valid; the raw constructor trusts its caller.
    """

    dims: GridDims
    horiz: tuple[int, ...]
    vert: tuple[int, ...]

    # -- edge queries -------------------------------------------------------

    def has_h(self, x: int, y: int) -> bool:
        return 0 <= y < self.dims.m and 0 <= x < self.dims.n - 1 and (self.horiz[y] >> x) & 1 == 1

    def has_v(self, x: int, y: int) -> bool:
        return 0 <= x < self.dims.n and 0 <= y < self.dims.m - 1 and (self.vert[x] >> y) & 1 == 1

    def has_edge(self, a: tuple[int, int], b: tuple[int, int]) -> bool:
        (ax, ay), (bx, by) = sorted((a, b))
        if ay == by and bx == ax + 1:
            return self.has_h(ax, ay)
        if ax == bx and by == ay + 1:
            return self.has_v(ax, ay)
        return False

    def edges(self) -> Iterator[Edge]:
        for y, row in enumerate(self.horiz):
            for x in range(self.dims.n - 1):
                if (row >> x) & 1:
                    yield Vertex(x, y), Vertex(x + 1, y)
        for x, col in enumerate(self.vert):
            for y in range(self.dims.m - 1):
                if (col >> y) & 1:
                    yield Vertex(x, y), Vertex(x, y + 1)

    def edge_count(self) -> int:
        return sum(bin(w).count("1") for w in self.horiz) + sum(bin(w).count("1") for w in self.vert)

    def neighbors(self, v: tuple[int, int]) -> list[Vertex]:
        x, y = v
        out = []
        if self.has_h(x - 1, y):
            out.append(Vertex(x - 1, y))
        if self.has_h(x, y):
            out.append(Vertex(x + 1, y))
        if self.has_v(x, y - 1):
            out.append(Vertex(x, y - 1))
        if self.has_v(x, y):
            out.append(Vertex(x, y + 1))
        return out

    # -- traversal ------------------------------------------------------------

    @cached_property
    def order(self) -> tuple[Vertex, ...]:
        """Vertices in s -> t order."""
        seq = _walk(self, self.dims.s)
        return tuple(seq)

    @cached_property
    def position(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.order)}

    @property
    def moves(self) -> str:
        seq = self.order
        return "".join(
            _STEP_TO_MOVE[(b.x - a.x, b.y - a.y)] for a, b in zip(seq, seq[1:])
        )

    def rotate180(self) -> HamPath:
        return rotate180(self)

    def transpose(self) -> HamPath:
        return transpose(self)

    def __repr__(self) -> str:
        return f"HamPath({self.dims.m}x{self.dims.n}, {self.moves!r})"


def _walk(path: HamPath, start: Vertex) -> list[Vertex]:
    seq = [start]
    prev = None
    cur = start
    limit = path.dims.size()
    while len(seq) <= limit:
        nxt = [w for w in path.neighbors(cur) if w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        seq.append(cur)
    return seq


def validate(horiz: Sequence[int], vert: Sequence[int], dims: GridDims) -> HamPath:
    """Check that the edge bit vectors form an s,t Hamiltonian path.

    Raises BadShape, DegreeViolation, WrongEndpoints or Disconnected.
    """
    m, n = dims.m, dims.n
    if len(horiz) != m or len(vert) != n:
        raise BadShape(f"expected {m} row vectors and {n} column vectors, got {len(horiz)} and {len(vert)}")
    for y, w in enumerate(horiz):
        if w < 0 or w >> max(n - 1, 0):
            raise BadShape(f"row vector {y} wider than {n - 1} bits")
    for x, w in enumerate(vert):
        if w < 0 or w >> max(m - 1, 0):
            raise BadShape(f"column vector {x} wider than {m - 1} bits")

    path = HamPath(dims, tuple(horiz), tuple(vert))
    s, t = dims.s, dims.t
    if s == t:
        if path.edge_count():
            raise DegreeViolation("a 1x1 grid has no edges")
        return path

    ends = []
    for y in range(m):
        for x in range(n):
            d = len(path.neighbors((x, y)))
            if d == 0 or d > 2:
                raise DegreeViolation(f"vertex ({x}, {y}) has degree {d}")
            if d == 1:
                ends.append(Vertex(x, y))
    if sorted(ends) != sorted([s, t]):
        raise WrongEndpoints(f"path ends at {ends}, expected {s} and {t}")
    if path.edge_count() != dims.size() - 1 or len(path.order) != dims.size():
        raise Disconnected("edge set has more than one component")
    return path


def from_moves(dims: GridDims, moves: str) -> HamPath:
    """Walk from s applying unit moves and return the validated path."""
    moves = moves.strip()
    if len(moves) != dims.size() - 1:
        raise BadShape(f"expected {dims.size() - 1} moves for a {dims} grid, got {len(moves)}")
    horiz = [0] * dims.m
    vert = [0] * dims.n
    cur = dims.s
    seen = {cur}
    for i, ch in enumerate(moves):
        if ch not in MOVES:
            raise BadShape(f"unknown move {ch!r} at offset {i}")
        dx, dy = MOVES[ch]
        nxt = Vertex(cur.x + dx, cur.y + dy)
        if not dims.contains(nxt):
            raise OutOfBounds(f"move {i} ({ch}) leaves the grid at {nxt}")
        if nxt in seen:
            raise Revisit(f"move {i} ({ch}) revisits {nxt}")
        if dy == 0:
            horiz[cur.y] |= 1 << min(cur.x, nxt.x)
        else:
            vert[cur.x] |= 1 << min(cur.y, nxt.y)
        seen.add(nxt)
        cur = nxt
    if cur != dims.t:
        raise WrongTerminal(f"walk ends at {cur}, expected {dims.t}")
    return validate(horiz, vert, dims)


def to_moves(path: HamPath) -> str:
    return path.moves


def rotate180(path: HamPath) -> HamPath:
    """Image under v(x, y) -> v(n-1-x, m-1-y), read again from s."""
    m, n = path.dims.m, path.dims.n
    horiz = tuple(_reverse_bits(w, n - 1) for w in reversed(path.horiz))
    vert = tuple(_reverse_bits(w, m - 1) for w in reversed(path.vert))
    return HamPath(path.dims, horiz, vert)


def transpose(path: HamPath) -> HamPath:
    """Image under v(x, y) -> v(y, x) on the n x m grid."""
    return HamPath(path.dims.transposed(), path.vert, path.horiz)


class EdgeBoard:
    """Mutable copy of a path's bit vectors used while a sweep is running.

    Switches flip bits in place, so each one costs O(1); ``freeze`` hands
    the result back as an immutable :class:`HamPath`.
    """

    __slots__ = ("dims", "h", "v")

    def __init__(self, path: HamPath):
        self.dims = path.dims
        self.h = list(path.horiz)
        self.v = list(path.vert)

    def has_h(self, x: int, y: int) -> bool:
        return 0 <= y < self.dims.m and 0 <= x < self.dims.n - 1 and (self.h[y] >> x) & 1 == 1

    def has_v(self, x: int, y: int) -> bool:
        return 0 <= x < self.dims.n and 0 <= y < self.dims.m - 1 and (self.v[x] >> y) & 1 == 1

    def flip_h(self, x: int, y: int) -> None:
        self.h[y] ^= 1 << x

    def flip_v(self, x: int, y: int) -> None:
        self.v[x] ^= 1 << y

    def rotate180(self) -> None:
        m, n = self.dims.m, self.dims.n
        self.h = [_reverse_bits(w, n - 1) for w in reversed(self.h)]
        self.v = [_reverse_bits(w, m - 1) for w in reversed(self.v)]

    def transpose(self) -> None:
        self.dims = self.dims.transposed()
        self.h, self.v = self.v, self.h

    def freeze(self) -> HamPath:
        return HamPath(self.dims, tuple(self.h), tuple(self.v))


def make_canonical(dims: GridDims, kind: str) -> HamPath:
    """Boustrophedon path filling rows ("EW") or columns ("NS").

    Raises NoSuchCanonical when the parity of the grid rules the kind out.
    """
    m, n = dims.m, dims.n
    if kind == "EW":
        if m % 2 == 0 and n > 1:
            raise NoSuchCanonical(f"no row-filling s,t path on a {dims} grid (m even)")
        rows = [("R" if y % 2 == 0 else "L") * (n - 1) for y in range(m)]
        return from_moves(dims, "D".join(rows))
    if kind == "NS":
        if n % 2 == 0 and m > 1:
            raise NoSuchCanonical(f"no column-filling s,t path on a {dims} grid (n even)")
        cols = [("D" if x % 2 == 0 else "U") * (m - 1) for x in range(n)]
        return from_moves(dims, "R".join(cols))
    raise ValueError(f"unknown canonical kind {kind!r}")


# -- text serialization -------------------------------------------------------


def parse_dims_line(line: str, lineno: int = 1) -> GridDims:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError("expected header 'm n'", lineno, 1)
    try:
        m, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer grid dimension in {line.strip()!r}", lineno, 1) from None
    if m < 1 or n < 1:
        raise ParseError("grid dimensions must be positive", lineno, 1)
    return GridDims(m, n)


def parse_moves_text(text: str) -> tuple[GridDims, str]:
    """Syntax only: the ``m n`` header and a move string over U/D/L/R."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", 1, 1)
    dims = parse_dims_line(lines[0], 1)
    chunks = []
    for lineno, line in enumerate(lines[1:], start=2):
        for col, ch in enumerate(line, start=1):
            if ch not in MOVES and not ch.isspace():
                raise ParseError(f"unexpected character {ch!r}", lineno, col)
        chunks.append("".join(line.split()))
    return dims, "".join(chunks)


def parse_path_text(text: str) -> HamPath:
    """Parse the ``m n`` header plus move string format."""
    dims, moves = parse_moves_text(text)
    try:
        return from_moves(dims, moves)
    except PathError as exc:
        raise ParseError(str(exc), 2, 1) from exc


def format_path_text(path: HamPath) -> str:
    return f"{path.dims.m} {path.dims.n}\n{path.moves}\n"
