"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline;
they are repeated in the terminal summary either way.
"""

import random
import time

from corpus import ACCEPTANCE_LOG, GRIDS, hamiltonian, simple
from squareswitch.analysis import Form, classify_form, decompose, is_simple, separator_lines
from squareswitch.errors import StructureViolation
from squareswitch.grid import EdgeBoard, GridDims, make_canonical
from squareswitch.oracle import build_hp_graph, graph_stats, independent_is_simple
from squareswitch.reconfig import (
    Phase,
    _apply_transform,
    parse_trace,
    reconfig_canonical_to_canonical,
    reconfig_to_canonical,
    reconfigure,
    replay,
)
from squareswitch.switching import apply_exchange, find_frame
from squareswitch.zips import find_delta_segments, locate_eta1_frame, zip_s_to_n, zip_w_to_e

SIMPLE_GRIDS = [(m, n) for m, n in GRIDS if simple(m, n)]


def verdict(number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})"
    print(line)
    ACCEPTANCE_LOG.append(line)
    assert ok, line


def both_canonicals(m, n):
    dims = GridDims(m, n)
    return make_canonical(dims, "NS"), make_canonical(dims, "EW")


def ns_frame(path):
    """The path turned so its straight separators run N-S."""
    return path if decompose(path).orientation != "EW" else path.transpose()


def test_criterion_1_simplicity_preserved():
    runs = steps = violations = 0
    for m, n in SIMPLE_GRIDS:
        for p in simple(m, n):
            runs += 1
            try:
                trace = reconfig_to_canonical(p, check=True)
            except StructureViolation:
                violations += 1
                continue
            for q in trace.paths():
                steps += 1
                violations += not is_simple(q)
    verdict(1, "every intermediate path is simple", violations == 0, f"{runs} runs, {steps} paths, {violations} violations")


def test_criterion_2_switch_bounds():
    bad = []
    runs = 0
    for m, n in SIMPLE_GRIDS:
        size = m * n
        for p in simple(m, n):
            runs += 1
            if len(reconfig_to_canonical(p, check=False)) > size // 2:
                bad.append(("to_canonical", m, n, p.moves))
        if m % 2 and n % 2:
            ns, ew = both_canonicals(m, n)
            for a, b in ((ns, ew), (ew, ns)):
                runs += 1
                if len(reconfig_canonical_to_canonical(a, b)) > size // 4:
                    bad.append(("canonical", m, n, a.moves))
    rng = random.Random(2)
    pairs = [(m, n, a, b) for m, n in SIMPLE_GRIDS if m <= 5 and n <= 5 for a in simple(m, n) for b in simple(m, n)]
    six = simple(6, 5)
    pairs += [(6, 5, rng.choice(six), rng.choice(six)) for _ in range(200)]
    for m, n, a, b in pairs:
        runs += 1
        if len(reconfigure(a, b, check=False)) > 5 * m * n // 4:
            bad.append(("reconfigure", m, n, a.moves))
    verdict(2, "switch counts within mn/2, mn/4, 5mn/4", not bad, f"{runs} runs, {len(bad)} over")


def test_criterion_3_connected():
    counts = {(m, n): graph_stats(build_hp_graph(GridDims(m, n)), traces=False).components for m, n in SIMPLE_GRIDS}
    bad = {k: c for k, c in counts.items() if c != 1}
    verdict(3, "switch graph has one component", not bad, f"{len(counts)} grids, disconnected: {bad or 'none'}")


def test_criterion_4_diameter():
    over, short = [], []
    for m, n in SIMPLE_GRIDS:
        g = build_hp_graph(GridDims(m, n))
        diameter = graph_stats(g, traces=False).diameter
        if diameter is None or diameter > 5 * m * n // 4:
            over.append((m, n, diameter))
        if m >= 3 and n >= 3 and m % 2 and n % 2:
            ns, ew = both_canonicals(m, n)
            d = g.distance(ns, ew)
            if d < -(-m * n // 4):
                short.append(f"{m}x{n}: {d} < {-(-m * n // 4)}")
    detail = f"diameter over bound on {len(over)} grids; NS-EW distance below ceil(mn/4) on {len(short)} grids"
    if short:
        detail += ": " + ", ".join(short)
    verdict(4, "diameter within 5mn/4 and NS-EW distance at least mn/4", not over and not short, detail)


def test_criterion_5_zip_arithmetic():
    s2n = w2e = 0
    bad = []
    for m, n in SIMPLE_GRIDS:
        for p in simple(m, n):
            q = ns_frame(p)
            dec = decompose(q)
            if dec.orientation == "NS" and separator_lines(dec)[0] >= 3:
                s2n += 1
                k_perp = find_delta_segments(q, locate_eta1_frame(q)).k_perp
                res = zip_s_to_n(q)
                after = decompose(res.path)
                if res.squares_switched != (k_perp + 1) // 2 or after.k != dec.k + 2:
                    bad.append(("S->N", m, n, p.moves))
            if classify_form(q) == Form.ALMOST_CANONICAL:
                w2e += 1
                if zip_w_to_e(q).squares_switched != (dec.k + 1) // 2:
                    bad.append(("W->E", m, n, p.moves))
    verdict(5, "zips switch (k+1)/2 squares and add two separators", not bad and s2n and w2e, f"{s2n} S->N zips, {w2e} W->E zips, {len(bad)} wrong")


def test_criterion_6_structure_assertions_hold():
    checked = fired = 0
    for m, n in SIMPLE_GRIDS:
        for p in simple(m, n):
            q = ns_frame(p)
            dec = decompose(q)
            if dec.orientation != "NS" or separator_lines(dec)[0] < 3:
                continue
            checked += 1
            try:
                # frame location asserts the N-boundary edge and the delta-end node;
                # the checked segment scan asserts the rest
                find_delta_segments(q, locate_eta1_frame(q), check=True)
                zip_s_to_n(q, check=True)
            except StructureViolation:
                fired += 1
    verdict(6, "structural assertions never fire", fired == 0 and checked > 0, f"{checked} zip inputs, {fired} fired")


def test_criterion_7_oracle_equivalence():
    m, n = 4, 5
    g = build_hp_graph(GridDims(m, n))
    idx = g.index()
    outside = 0
    for p in g.nodes:
        dist = g.distances_from(idx[p.moves])
        reachable = {g.nodes[i].moves for i, d in enumerate(dist) if d >= 0}
        for q in g.nodes:
            outside += sum(r.moves not in reachable for r in reconfigure(p, q).paths())
    total = disagree = 0
    for gm, gn in GRIDS:
        for p in hamiltonian(gm, gn):
            total += 1
            disagree += is_simple(p) != independent_is_simple(p.dims, p.moves)
    ok = outside == 0 and disagree == 0
    verdict(7, "traces stay in the BFS-reachable set and both simplicity tests agree", ok, f"{outside} trace paths outside on {m}x{n}, {disagree}/{total} disagreements")


def _best_time(a, b, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        reconfigure(a, b, check=False)
        best = min(best, time.perf_counter() - start)
    return best


def test_criterion_8_linear_time():
    sizes = (11, 21, 41, 81)
    times = [_best_time(*both_canonicals(n, n)) for n in sizes]
    ratios = [b / a for a, b in zip(times, times[1:])]
    detail = ", ".join(f"{sizes[i + 1]}/{sizes[i]}: {r:.2f}" for i, r in enumerate(ratios))
    verdict(8, "NS-to-EW time ratio per doubling at most 5", max(ratios) <= 5, detail)


def _tail_checks(trace):
    """(valid switches, inverse-of-valid switches, tail records) over the reversed tail."""
    board = EdgeBoard(trace.initial)
    valid = undo = total = 0
    for e in trace.entries:
        if e.transform:
            _apply_transform(board, e.transform)
            continue
        rec = e.record
        if e.phase == Phase.REVERSED_TAIL:
            total += 1
            valid += find_frame(board, rec.removed, rec.added, rec.center) is not None
        apply_exchange(board, rec.removed, rec.added)
        if e.phase == Phase.REVERSED_TAIL:
            undo += find_frame(board, rec.added, rec.removed, rec.center) is not None
    return valid, undo, total


def test_criterion_9_replay_fidelity():
    rng = random.Random(9)
    grids = [(m, n) for m, n in SIMPLE_GRIDS if 3 <= m <= 6 and 3 <= n <= 6]
    mismatches = valid = undo = total = 0
    for _ in range(1000):
        m, n = rng.choice(grids)
        a, b = rng.choice(simple(m, n)), rng.choice(simple(m, n))
        trace = reconfigure(a, b)
        final = replay(parse_trace(trace.format()), a)
        mismatches += (final.horiz, final.vert) != (b.horiz, b.vert)
        v, u, t = _tail_checks(trace)
        valid, undo, total = valid + v, undo + u, total + t
    detail = (
        f"{mismatches} replay mismatches; {valid}/{total} reversed-tail records are valid switches, "
        f"{undo}/{total} undo a valid switch"
    )
    verdict(9, "bit-exact replay and valid reversed-tail switches", mismatches == 0 and valid == total, detail)
