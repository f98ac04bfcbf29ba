"""Integer-interval oracle for the projection-relation layer.

Intervals are closed ``[a, b]`` with integer endpoints ``0 <= a < b <= BOUND``.
The oracle enumerates them exhaustively to

* regenerate the full 13x13 composition table by brute force,
* check the inclusion theorem (containment of the first projection forces one
  of ``s``, ``f``, ``d``, ``=``),
* check that point-sharing projections exclude ``<`` and ``>``,
* regenerate the axis-reversal (reflection) table.

All arithmetic is exact (ints); verdicts are frozensets of relation symbols.
"""

from __future__ import annotations

from itertools import combinations

from ..allen import SYMBOLS, relation_of

BOUND = 8


def all_intervals(bound: int = BOUND) -> list[tuple[int, int]]:
    return [(a, b) for a, b in combinations(range(bound + 1), 2)]


def brute_composition_table(bound: int = BOUND) -> dict[tuple[str, str], frozenset[str]]:
    """Observed relation(x,z) for every (relation(x,y), relation(y,z)) pair."""
    ivs = all_intervals(bound)
    seen: dict[tuple[str, str], set[str]] = {
        (r1, r2): set() for r1 in SYMBOLS for r2 in SYMBOLS
    }
    by_left: dict[str, dict[tuple[int, int], list[tuple[int, int]]]] = {
        r: {} for r in SYMBOLS
    }
    for y in ivs:
        for z in ivs:
            by_left[relation_of(y, z)].setdefault(y, []).append(z)
    for x in ivs:
        for y in ivs:
            r1 = relation_of(x, y)
            for r2 in SYMBOLS:
                for z in by_left[r2].get(y, ()):
                    seen[(r1, r2)].add(relation_of(x, z))
    return {cell: frozenset(rels) for cell, rels in seen.items()}


def brute_reflection_table(bound: int = BOUND) -> dict[str, frozenset[str]]:
    """relation(x,y) -> set of relations observed after mirroring the axis."""
    ivs = all_intervals(bound)
    seen: dict[str, set[str]] = {r: set() for r in SYMBOLS}
    for x in ivs:
        for y in ivs:
            mx = (-x[1], -x[0])
            my = (-y[1], -y[0])
            seen[relation_of(x, y)].add(relation_of(mx, my))
    return {r: frozenset(v) for r, v in seen.items()}


def inclusion_respects_within(bound: int = BOUND) -> list[tuple]:
    """Counterexamples to: x ⊆ y implies relation(x,y) in {s, f, d, =}."""
    bad = []
    for x in all_intervals(bound):
        for y in all_intervals(bound):
            if y[0] <= x[0] and x[1] <= y[1]:
                if relation_of(x, y) not in {"s", "f", "d", "="}:
                    bad.append((x, y, relation_of(x, y)))
    return bad


def connection_excludes_precedence(bound: int = BOUND) -> list[tuple]:
    """Counterexamples to: sharing a point implies relation not in {<, >}."""
    bad = []
    for x in all_intervals(bound):
        for y in all_intervals(bound):
            if max(x[0], y[0]) <= min(x[1], y[1]):  # closed intervals meet
                if relation_of(x, y) in {"<", ">"}:
                    bad.append((x, y, relation_of(x, y)))
    return bad
