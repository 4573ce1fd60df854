"""ASCII and SVG pictures of paths and trace steps.

The ASCII canvas has a character per vertex at even (row, column)
positions, edge glyphs between them and cell interiors at odd/odd
positions.  Rows grow downward, matching grid coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .grid import HamPath

_JUNCTIONS = {
    frozenset("LR"): "─",
    frozenset("UD"): "│",
    frozenset("RD"): "┌",
    frozenset("LD"): "┐",
    frozenset("RU"): "└",
    frozenset("LU"): "┘",
    frozenset("R"): "╶",
    frozenset("L"): "╴",
    frozenset("U"): "╵",
    frozenset("D"): "╷",
    frozenset(): "·",
}
CELL_MARK = "░"


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"  # or "svg"
    show_cells: bool = True


def switched_cells(before: HamPath, after: HamPath) -> list[tuple[int, int]]:
    """Cells (by top-left vertex) whose four sides all changed between two paths."""
    dims = before.dims
    dh = [a ^ b for a, b in zip(before.horiz, after.horiz)]
    dv = [a ^ b for a, b in zip(before.vert, after.vert)]
    out = []
    for y in range(dims.m - 1):
        for x in range(dims.n - 1):
            if dh[y] >> x & 1 and dh[y + 1] >> x & 1 and dv[x] >> y & 1 and dv[x + 1] >> y & 1:
                out.append((x, y))
    return out


def _incident(path: HamPath, x: int, y: int) -> frozenset[str]:
    dirs = set()
    if x > 0 and path.has_h(x - 1, y):
        dirs.add("L")
    if x < path.dims.n - 1 and path.has_h(x, y):
        dirs.add("R")
    if y > 0 and path.has_v(x, y - 1):
        dirs.add("U")
    if y < path.dims.m - 1 and path.has_v(x, y):
        dirs.add("D")
    return frozenset(dirs)


def render_ascii(path: HamPath, marked: Optional[list[tuple[int, int]]] = None) -> str:
    m, n = path.dims.m, path.dims.n
    canvas = [[" "] * (2 * n - 1) for _ in range(2 * m - 1)]
    for y in range(m):
        for x in range(n):
            canvas[2 * y][2 * x] = _JUNCTIONS[_incident(path, x, y)]
            if x < n - 1 and path.has_h(x, y):
                canvas[2 * y][2 * x + 1] = "─"
            if y < m - 1 and path.has_v(x, y):
                canvas[2 * y + 1][2 * x] = "│"
    for x, y in marked or ():
        canvas[2 * y + 1][2 * x + 1] = CELL_MARK
    return "".join("".join(row).rstrip() + "\n" for row in canvas)


def render_svg(path: HamPath, marked: Optional[list[tuple[int, int]]] = None, before: Optional[HamPath] = None, unit: int = 32) -> str:
    """SVG drawing; ``marked`` cells are shaded and outlined as one square,
    and edges of ``before`` that were removed are drawn dashed."""
    m, n = path.dims.m, path.dims.n
    pad = unit // 2
    width, height = pad * 2 + unit * (n - 1), pad * 2 + unit * (m - 1)

    def px(v: int) -> int:
        return pad + unit * v

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">']
    out.append(f'<rect width="{width}" height="{height}" fill="white"/>')
    if marked:
        xs = [x for x, _ in marked]
        ys = [y for _, y in marked]
        x0, y0 = min(xs), min(ys)
        w, h = max(xs) - x0 + 1, max(ys) - y0 + 1
        out.append(f'<rect x="{px(x0)}" y="{px(y0)}" width="{w * unit}" height="{h * unit}" fill="none" stroke="#d62728" stroke-width="2"/>')
        for x, y in marked:
            out.append(f'<rect x="{px(x)}" y="{px(y)}" width="{unit}" height="{unit}" fill="#fdd" stroke="none"/>')
    for y in range(m):
        for x in range(n):
            out.append(f'<circle cx="{px(x)}" cy="{px(y)}" r="2" fill="#999"/>')
    if before is not None:
        for a, b in before.edges():
            if not path.has_edge(a, b):
                out.append(_line(a, b, px, 'stroke="#888" stroke-width="2" stroke-dasharray="4 3"'))
    for a, b in path.edges():
        out.append(_line(a, b, px, 'stroke="#1f4e9c" stroke-width="4" stroke-linecap="round"'))
    for v, label in ((path.dims.s, "s"), (path.dims.t, "t")):
        out.append(f'<circle cx="{px(v.x)}" cy="{px(v.y)}" r="6" fill="#1f4e9c"/>')
        out.append(f'<text x="{px(v.x) + 8}" y="{px(v.y) - 6}" font-size="12" font-family="monospace">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _line(a, b, px, style: str) -> str:
    return f'<line x1="{px(a.x)}" y1="{px(a.y)}" x2="{px(b.x)}" y2="{px(b.y)}" {style}/>'


def render_steps(paths: list[HamPath], spec: RenderSpec) -> Iterator[tuple[int, str]]:
    """(step, drawing) for each path of a trace; step 0 is the start."""
    prev = None
    for i, p in enumerate(paths):
        marked = switched_cells(prev, p) if prev is not None and spec.show_cells else None
        if spec.format == "svg":
            yield i, render_svg(p, marked, prev)
        else:
            yield i, render_ascii(p, marked)
        prev = p
