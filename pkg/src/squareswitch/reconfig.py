"""Full reconfiguration between simple paths.

``reconfig_to_canonical`` drives any simple path to a canonical one:
S->N zips west of the first separator until it sits in column 1 or 2, the
same again in the half-turned grid, then W->E zips down the rows if the
result is only almost canonical.  ``reconfigure`` joins two such runs
through ``reconfig_canonical_to_canonical`` and plays the second run
backwards.

Traces record frame changes (half turn, transpose) as explicit entries;
switch records that follow a frame change are in that frame's coordinates,
and every driver closes the frames it opens.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .analysis import canonical_kind, classify_form, decompose, is_simple, separator_lines
from .errors import (
    DimsMismatch,
    NoSimplePath,
    NotCanonical,
    NotSimple,
    ParseError,
    ReplayDivergence,
    StructureViolation,
)
from .grid import EdgeBoard, HamPath, Vertex, from_moves, make_canonical, parse_dims_line
from .switching import (
    Square,
    SwitchRecord,
    Zipline,
    apply_exchange,
    is_switchable_square,
    square_edges,
)
from .zips import _zip_s_to_n_board, _zip_w_to_e_board

__all__ = [
    "Phase",
    "ROT180",
    "TRANSPOSE",
    "SwitchTrace",
    "TraceEntry",
    "make_canonical",
    "parse_trace",
    "reconfig_canonical_to_canonical",
    "reconfig_to_canonical",
    "reconfigure",
    "replay",
]

ROT180 = "ROT180"
TRANSPOSE = "TRANSPOSE"


class Phase(str, Enum):
    STEP_A = "StepA"
    STEP_B = "StepB"
    STEP_C = "StepC"
    CANONICAL_SWEEP = "CanonicalSweep"
    REVERSED_TAIL = "ReversedTail"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TraceEntry:
    phase: Phase
    record: Optional[SwitchRecord] = None
    transform: Optional[str] = None

    def format(self) -> str:
        body = self.transform if self.transform else self.record.format()
        return f"{body} {self.phase}"


@dataclass(frozen=True)
class SwitchTrace:
    initial: HamPath
    final: HamPath
    entries: tuple[TraceEntry, ...] = ()

    @property
    def records(self) -> list[SwitchRecord]:
        return [e.record for e in self.entries if e.record is not None]

    def __len__(self) -> int:
        return sum(1 for e in self.entries if e.record is not None)

    def count(self, phase: Phase) -> int:
        return sum(1 for e in self.entries if e.record is not None and e.phase == phase)

    def paths(self) -> Iterator[HamPath]:
        """Initial path, then the path after every switch, in the original frame."""
        board = EdgeBoard(self.initial)
        rot = tr = False
        yield self.initial
        for e in self.entries:
            if e.transform:
                _apply_transform(board, e.transform)
                rot ^= e.transform == ROT180
                tr ^= e.transform == TRANSPOSE
                continue
            if not apply_exchange(board, e.record.removed, e.record.added):
                raise ReplayDivergence(f"record at {e.record.center} does not match the path")
            yield _to_original(board.freeze(), rot, tr)

    def format(self) -> str:
        lines = [f"{self.initial.dims.m} {self.initial.dims.n}", self.initial.moves, self.final.moves]
        lines += [e.format() for e in self.entries]
        return "\n".join(lines) + "\n"


def _apply_transform(board: EdgeBoard, kind: str) -> None:
    if kind == ROT180:
        board.rotate180()
    elif kind == TRANSPOSE:
        board.transpose()
    else:
        raise ValueError(f"unknown frame transform {kind!r}")


def _to_original(path: HamPath, rot: bool, tr: bool) -> HamPath:
    # the two transforms commute, so the net frame is just two flags
    if rot:
        path = path.rotate180()
    if tr:
        path = path.transpose()
    return path


class _Runner:
    def __init__(self, path: HamPath, check: bool):
        self.start = path
        self.board = EdgeBoard(path)
        self.entries: list[TraceEntry] = []
        self.check = check
        self.phase = Phase.STEP_A

    def transform(self, kind: str) -> None:
        _apply_transform(self.board, kind)
        self.entries.append(TraceEntry(self.phase, transform=kind))

    def on_switch(self, rec: SwitchRecord, board: EdgeBoard) -> None:
        self.entries.append(TraceEntry(self.phase, record=rec))
        if self.check and not is_simple(board.freeze()):
            raise StructureViolation(f"{self.phase}: path after switching the square at {rec.center} is not simple")

    def zip_s_to_n(self, eta1: int) -> None:
        _zip_s_to_n_board(self.board, eta1, self.check, self.on_switch)

    def zip_w_to_e(self, top: int) -> None:
        _zip_w_to_e_board(self.board, top, self.check, self.on_switch)

    def finish(self) -> SwitchTrace:
        return SwitchTrace(self.start, self.board.freeze(), tuple(self.entries))


def _require_simple(path: HamPath) -> None:
    if not path.dims.admits_path():
        raise NoSimplePath(f"a {path.dims} grid has no s,t Hamiltonian path")
    if not is_simple(path):
        raise NotSimple(f"{path!r} is not simple")


def reconfig_to_canonical(path: HamPath, check: bool = True) -> SwitchTrace:
    """Switch squares until the path is canonical; at most m*n/2 switches."""
    _require_simple(path)
    run = _Runner(path, check)
    if classify_form(path).canonical:
        return run.finish()

    dec = decompose(path)
    transposed = dec.orientation == "EW"
    if transposed:
        run.transform(TRANSPOSE)
    lines = separator_lines(dec)
    width = run.board.dims.n

    run.phase = Phase.STEP_A
    first = lines[0]
    while first >= 3:
        run.zip_s_to_n(first)
        first -= 2

    # the last separator is untouched by step (a); half-turned it becomes the first
    run.phase = Phase.STEP_B
    last = width - 1 - lines[-1]
    if last >= 3:
        run.transform(ROT180)
        while last >= 3:
            run.zip_s_to_n(last)
            last -= 2
        run.transform(ROT180)

    run.phase = Phase.STEP_C
    if not (first == 1 and last == 1):
        for top in range(0, run.board.dims.m - 2, 2):
            run.zip_w_to_e(top)
    if transposed:
        run.transform(TRANSPOSE)

    trace = run.finish()
    if check and not classify_form(trace.final).canonical:
        raise StructureViolation(f"reconfiguration ended at non-canonical {trace.final!r}")
    return trace


def reconfig_canonical_to_canonical(path: HamPath, target: HamPath, check: bool = True) -> SwitchTrace:
    """Row sweep turning one canonical path into the other; at most m*n/4 switches."""
    if path.dims != target.dims:
        raise DimsMismatch(f"{path.dims} vs {target.dims}")
    kind, target_kind = canonical_kind(path), canonical_kind(target)
    if kind is None or target_kind is None:
        raise NotCanonical("both paths must be canonical")
    run = _Runner(path, check)
    run.phase = Phase.CANONICAL_SWEEP
    if path == target:
        return run.finish()
    if kind == "EW":
        run.transform(TRANSPOSE)
    for top in range(0, run.board.dims.m - 2, 2):
        run.zip_w_to_e(top)
    if kind == "EW":
        run.transform(TRANSPOSE)
    trace = run.finish()
    if trace.final != target:
        raise StructureViolation("canonical sweep did not reach the target")
    return trace


def _reversed_entries(trace: SwitchTrace) -> list[TraceEntry]:
    """Undo a trace: inverse exchanges in reverse order.

    Each record keeps the frame of the switch it undoes, so replay can check
    that switching that square from the new path restores the old one.
    """
    out = []
    for e in reversed(trace.entries):
        if e.transform:
            out.append(TraceEntry(Phase.REVERSED_TAIL, transform=e.transform))
            continue
        rec = e.record
        inv = SwitchRecord(rec.center, rec.zipline, rec.added, rec.removed)
        out.append(TraceEntry(Phase.REVERSED_TAIL, record=inv))
    return out


def reconfigure(path: HamPath, target: HamPath, check: bool = True) -> SwitchTrace:
    """Square-switch sequence from ``path`` to ``target``, at most 5*m*n/4 long."""
    if path.dims != target.dims:
        raise DimsMismatch(f"{path.dims} vs {target.dims}")
    _require_simple(path)
    _require_simple(target)
    if path == target:
        return SwitchTrace(path, target, ())
    head = reconfig_to_canonical(path, check)
    tail = reconfig_to_canonical(target, check)
    middle = reconfig_canonical_to_canonical(head.final, tail.final, check)
    entries = head.entries + middle.entries + tuple(_reversed_entries(tail))
    trace = SwitchTrace(path, target, entries)
    if replay(trace, path, check=check) != target:
        raise ReplayDivergence("trace does not end at the target path")
    return trace


def _is_valid_switch(board: EdgeBoard, rec: SwitchRecord) -> bool:
    sq = rec.square
    return square_edges(sq, board) == (rec.removed, rec.added) and is_switchable_square(board, sq)


def _undoes_valid_switch(board: EdgeBoard, rec: SwitchRecord) -> bool:
    """After an inverse exchange: the recorded square is switchable and switching it goes back."""
    sq = rec.square
    return square_edges(sq, board) == (rec.added, rec.removed) and is_switchable_square(board, sq)


def replay(trace: SwitchTrace, start: HamPath, check: bool = True) -> HamPath:
    """Re-apply a trace and return the final path.

    Ordinary records must be switchable squares when applied.  A reversed-tail
    record must be the exact inverse of one: after the exchange, its square is
    switchable and switching it would restore the previous path.
    """
    if start != trace.initial:
        raise ReplayDivergence("start path differs from the trace's initial path")
    board = EdgeBoard(start)
    for i, e in enumerate(trace.entries):
        if e.transform:
            _apply_transform(board, e.transform)
            continue
        rec = e.record
        if e.phase == Phase.REVERSED_TAIL:
            ok = apply_exchange(board, rec.removed, rec.added) and _undoes_valid_switch(board, rec)
        else:
            ok = _is_valid_switch(board, rec) and apply_exchange(board, rec.removed, rec.added)
        if not ok:
            raise ReplayDivergence(f"entry {i}: square at {rec.center} is not switchable here")
        if check and not is_simple(board.freeze()):
            raise ReplayDivergence(f"entry {i}: path is not simple after the switch")
    return board.freeze()


def parse_trace(text: str) -> SwitchTrace:
    """Inverse of :meth:`SwitchTrace.format`; records are rebuilt against the replayed path."""
    lines = [ln for ln in text.splitlines()]
    if len(lines) < 3:
        raise ParseError("trace needs a header, an initial and a final move string", len(lines) + 1)
    dims = parse_dims_line(lines[0], 1)
    try:
        initial = from_moves(dims, lines[1].strip())
        final = from_moves(dims, lines[2].strip())
    except ValueError as exc:
        raise ParseError(str(exc), 2) from exc
    board = EdgeBoard(initial)
    entries = []
    for lineno, line in enumerate(lines[3:], start=4):
        tok = line.split()
        if not tok:
            continue
        try:
            if tok[0] in (ROT180, TRANSPOSE):
                phase = Phase(tok[1])
                _apply_transform(board, tok[0])
                entries.append(TraceEntry(phase, transform=tok[0]))
                continue
            cx, cy, orient, index, direction, la, phase = tok
            zl = Zipline.from_name(orient, int(index), direction, int(la))
            center = Vertex(int(cx), int(cy))
            phase = Phase(phase)
        except (ValueError, KeyError, IndexError) as exc:
            raise ParseError(f"bad trace entry {line!r}: {exc}", lineno, 1) from None
        sq = Square(center, zl)
        if not board.dims.is_internal(center):
            raise ParseError(f"square centre {center} is not internal", lineno, 1)
        removed, added = square_edges(sq, board)
        apply_exchange(board, removed, added)
        entries.append(TraceEntry(phase, record=SwitchRecord(center, zl, removed, added)))
    return SwitchTrace(initial, final, tuple(entries))
