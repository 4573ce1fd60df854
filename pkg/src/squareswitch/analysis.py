"""Internal-subpath decomposition, simplicity and canonical-form tests.

An internal subpath is a maximal run of internal vertices of the path
together with the two boundary vertices that bracket it.  A path is simple
when each such subpath bends as little as its endpoints allow: never for
opposite boundaries, once for adjacent ones, twice for the same boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import NoSuchCanonical
from .grid import GridDims, HamPath, Vertex, make_canonical


class Kind(str, Enum):
    COOKIE_N = "CookieN"
    COOKIE_S = "CookieS"
    COOKIE_E = "CookieE"
    COOKIE_W = "CookieW"
    CORNER_COOKIE = "CornerCookie"
    CORNER_SEP_MU = "CornerSepMu"
    CORNER_SEP_NU = "CornerSepNu"
    STRAIGHT_SEP = "StraightSep"
    UNCLASSIFIABLE = "Unclassifiable"

    def __str__(self) -> str:
        return self.value


COOKIE_KINDS = {"N": Kind.COOKIE_N, "S": Kind.COOKIE_S, "E": Kind.COOKIE_E, "W": Kind.COOKIE_W}
OPPOSITE = {"N": "S", "S": "N", "E": "W", "W": "E"}


class Form(str, Enum):
    CANONICAL_EW = "Canonical_EW"
    CANONICAL_NS = "Canonical_NS"
    ALMOST_CANONICAL = "AlmostCanonical"
    GENERAL_SIMPLE = "GeneralSimple"
    NOT_SIMPLE = "NotSimple"

    def __str__(self) -> str:
        return self.value

    @property
    def canonical(self) -> bool:
        return self in (Form.CANONICAL_EW, Form.CANONICAL_NS)


@dataclass(frozen=True)
class InternalSubpath:
    kind: Kind
    entry: Vertex
    exit: Vertex
    vertices: tuple[Vertex, ...]
    bends: int
    bend: Optional[Vertex] = None  # corner separators only
    size: Optional[int] = None  # cookies only
    index: int = 0  # 1-based ordinal within its kind

    @property
    def internal_count(self) -> int:
        return len(self.vertices) - 2

    @property
    def vertical(self) -> bool:
        """For straight separators: True when the subpath runs N-S."""
        return self.entry.x == self.exit.x

    def describe(self) -> str:
        fields = [str(self.kind), _fmt(self.entry), _fmt(self.exit)]
        if self.bend is not None:
            fields.append(_fmt(self.bend))
        if self.size is not None:
            fields.append(str(self.size))
        return " ".join(fields)


def _fmt(v: Vertex) -> str:
    return f"{v.x},{v.y}"


@dataclass(frozen=True)
class SubpathDecomposition:
    dims: GridDims
    parts: tuple[InternalSubpath, ...]

    def of_kind(self, kind: Kind) -> list[InternalSubpath]:
        return [p for p in self.parts if p.kind == kind]

    @property
    def j(self) -> int:
        return len(self.of_kind(Kind.CORNER_SEP_MU))

    @property
    def k(self) -> int:
        return len(self.of_kind(Kind.STRAIGHT_SEP))

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.of_kind(Kind.CORNER_SEP_NU))

    @property
    def separators(self) -> list[InternalSubpath]:
        return self.of_kind(Kind.STRAIGHT_SEP)

    @property
    def orientation(self) -> Optional[str]:
        """"NS" or "EW" for the straight separators, None if there are none."""
        seps = self.separators
        if not seps:
            return None
        return "NS" if seps[0].vertical else "EW"

    @property
    def classified(self) -> bool:
        return all(p.kind != Kind.UNCLASSIFIABLE for p in self.parts)

    def cookie_count(self) -> int:
        return sum(1 for p in self.parts if p.kind in COOKIE_KINDS.values() or p.kind == Kind.CORNER_COOKIE)

    def format(self) -> str:
        return "".join(p.describe() + "\n" for p in self.parts)


def _count_bends(seq: tuple[Vertex, ...]) -> tuple[int, Optional[Vertex]]:
    bends = 0
    first = None
    for a, b, c in zip(seq, seq[1:], seq[2:]):
        if (b.x - a.x, b.y - a.y) != (c.x - b.x, c.y - b.y):
            bends += 1
            if first is None:
                first = b
    return bends, first


def _side(dims: GridDims, v: Vertex) -> str:
    sides = dims.sides(v)
    # internal subpath endpoints are never corners once m, n >= 3
    (side,) = sides
    return side


def _segment_to(path: HamPath, corner: Vertex, v: Vertex) -> bool:
    """True iff the straight line from corner to v is entirely on the path."""
    if corner.x == v.x:
        lo, hi = sorted((corner.y, v.y))
        return all(path.has_v(v.x, y) for y in range(lo, hi))
    if corner.y == v.y:
        lo, hi = sorted((corner.x, v.x))
        return all(path.has_h(x, v.y) for x in range(lo, hi))
    return False


def _classify(path: HamPath, seq: tuple[Vertex, ...]) -> tuple[Kind, Optional[Vertex], Optional[int], int]:
    dims = path.dims
    entry, exit_ = seq[0], seq[-1]
    a, b = _side(dims, entry), _side(dims, exit_)
    bends, first_bend = _count_bends(seq)
    if a == b:
        if bends == 2:
            size = abs(first_bend.x - entry.x) + abs(first_bend.y - entry.y)
            return COOKIE_KINDS[a], None, size, bends
    elif OPPOSITE[a] == b:
        if bends == 0:
            return Kind.STRAIGHT_SEP, None, None, bends
    elif bends == 1:
        pair = {a, b}
        if pair == {"N", "W"}:
            corner, kind = dims.s, Kind.CORNER_SEP_MU
        elif pair == {"S", "E"}:
            corner, kind = dims.t, Kind.CORNER_SEP_NU
        else:
            # cutting off alpha or beta would strand that corner; cannot occur
            return Kind.UNCLASSIFIABLE, first_bend, None, bends
        if _segment_to(path, corner, entry) or _segment_to(path, corner, exit_):
            return Kind.CORNER_COOKIE, first_bend, None, bends
        return kind, first_bend, None, bends
    return Kind.UNCLASSIFIABLE, None, None, bends


def internal_runs(path: HamPath) -> list[tuple[Vertex, ...]]:
    """Vertex sequences of the maximal internal subpaths, in s -> t order."""
    dims = path.dims
    if dims.m <= 2 or dims.n <= 2:
        return []
    runs = []
    seq = path.order
    i = 0
    while i < len(seq):
        if dims.is_internal(seq[i]):
            start = i
            while dims.is_internal(seq[i]):
                i += 1
            runs.append(tuple(seq[start - 1 : i + 1]))
        else:
            i += 1
    return runs


def decompose(path: HamPath) -> SubpathDecomposition:
    parts = []
    counters: dict[Kind, int] = {}
    for seq in internal_runs(path):
        kind, bend, size, bends = _classify(path, seq)
        counters[kind] = counters.get(kind, 0) + 1
        parts.append(
            InternalSubpath(kind, seq[0], seq[-1], seq, bends, bend, size, counters[kind])
        )
    return SubpathDecomposition(path.dims, tuple(parts))


def is_simple(path: HamPath) -> bool:
    return decompose(path).classified


def visits_alpha_first(path: HamPath) -> bool:
    pos = path.position
    return pos[path.dims.alpha] <= pos[path.dims.beta]


def canonical_kind(path: HamPath) -> Optional[str]:
    """"EW" or "NS" if the path is a boustrophedon, else None."""
    dims = path.dims
    order = ("NS", "EW") if dims.n == 1 and dims.m > 1 else ("EW", "NS")
    for kind in order:
        try:
            if make_canonical(dims, kind) == path:
                return kind
        except NoSuchCanonical:
            pass
    return None


def separator_lines(dec: SubpathDecomposition) -> list[int]:
    """Column (NS) or row (EW) index of each straight separator, in path order."""
    return [p.entry.x if p.vertical else p.entry.y for p in dec.separators]


def _almost_canonical(dec: SubpathDecomposition) -> bool:
    if not dec.separators:
        return False
    width = dec.dims.n if dec.orientation == "NS" else dec.dims.m
    lines = separator_lines(dec)
    contiguous = sorted(lines) == list(range(min(lines), max(lines) + 1))
    return contiguous and min(lines) <= 2 and max(lines) >= width - 3


def classify_form(path: HamPath) -> Form:
    dec = decompose(path)
    if not dec.classified:
        return Form.NOT_SIMPLE
    kind = canonical_kind(path)
    if kind == "EW":
        return Form.CANONICAL_EW
    if kind == "NS":
        return Form.CANONICAL_NS
    if _almost_canonical(dec):
        return Form.ALMOST_CANONICAL
    return Form.GENERAL_SIMPLE


def internal_bend_free(path: HamPath) -> bool:
    """No bend at any internal vertex (the geometric reading of 'canonical')."""
    seq = path.order
    dims = path.dims
    for a, b, c in zip(seq, seq[1:], seq[2:]):
        if dims.is_internal(b) and (b.x - a.x, b.y - a.y) != (c.x - b.x, c.y - b.y):
            return False
    return True
