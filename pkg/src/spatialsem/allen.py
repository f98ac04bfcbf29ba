"""The thirteen interval relations and their algebra.

Relations compare the projections of two individuals onto an oriented axis:
``<`` before, ``m`` meets, ``o`` overlaps, ``s`` starts, ``d`` during,
``f`` finishes, ``=`` equal, and the six converses ``>``, ``mi``, ``oi``,
``si``, ``di``, ``fi``.

Three tables drive the engine:

* ``CONVERSE`` — swap the two intervals;
* ``REFLECT`` — reverse the axis (projections are mirrored); note that this
  is *not* the converse: ``s`` reflects to ``f``;
* ``COMPOSITION`` — the standard 13x13 composition table, hardcoded from the
  published matrix and checked cell-by-cell against brute-force enumeration
  over integer intervals in the test suite.

Constraint sets are frozensets of relation symbols; an empty set after
refinement signals an inconsistent network.
"""

from __future__ import annotations

from typing import Iterable

SYMBOLS: tuple[str, ...] = (
    "<", "m", "o", "fi", "di", "s", "=", "si", "d", "f", "oi", "mi", ">",
)

FULL: frozenset[str] = frozenset(SYMBOLS)

#: relations possible between connected (point-sharing) projections
CONNECTED: frozenset[str] = FULL - {"<", ">"}

#: relations forced by inclusion of the first projection in the second
WITHIN: frozenset[str] = frozenset({"s", "f", "d", "="})

#: relations forced when the first projection strictly follows the second
AFTER: frozenset[str] = frozenset({"mi", ">"})

CONVERSE: dict[str, str] = {
    "<": ">", ">": "<",
    "m": "mi", "mi": "m",
    "o": "oi", "oi": "o",
    "s": "si", "si": "s",
    "d": "di", "di": "d",
    "f": "fi", "fi": "f",
    "=": "=",
}

REFLECT: dict[str, str] = {
    "<": ">", ">": "<",
    "m": "mi", "mi": "m",
    "o": "oi", "oi": "o",
    "s": "f", "f": "s",
    "si": "fi", "fi": "si",
    "d": "d", "di": "di",
    "=": "=",
}


def _s(text: str) -> frozenset[str]:
    return frozenset(text.split())


_ROWS: dict[str, dict[str, frozenset[str]]] = {
    "<": {
        "<": _s("<"), "m": _s("<"), "o": _s("<"), "fi": _s("<"), "di": _s("<"),
        "s": _s("<"), "=": _s("<"), "si": _s("<"),
        "d": _s("< m o s d"), "f": _s("< m o s d"),
        "oi": _s("< m o s d"), "mi": _s("< m o s d"),
        ">": FULL,
    },
    "m": {
        "<": _s("<"), "m": _s("<"), "o": _s("<"), "fi": _s("<"), "di": _s("<"),
        "s": _s("m"), "=": _s("m"), "si": _s("m"),
        "d": _s("o s d"), "f": _s("o s d"), "oi": _s("o s d"),
        "mi": _s("f = fi"),
        ">": _s("di si oi mi >"),
    },
    "o": {
        "<": _s("<"), "m": _s("<"),
        "o": _s("< m o"), "fi": _s("< m o"),
        "di": _s("< m o fi di"),
        "s": _s("o"), "=": _s("o"), "si": _s("o fi di"),
        "d": _s("o s d"), "f": _s("o s d"),
        "oi": _s("o fi di s = si d f oi"),
        "mi": _s("di si oi"),
        ">": _s("di si oi mi >"),
    },
    "fi": {
        "<": _s("<"), "m": _s("m"),
        "o": _s("o"), "fi": _s("fi"), "di": _s("di"),
        "s": _s("o"), "=": _s("fi"), "si": _s("di"),
        "d": _s("o s d"), "f": _s("f = fi"),
        "oi": _s("di si oi"), "mi": _s("di si oi"),
        ">": _s("di si oi mi >"),
    },
    "di": {
        "<": _s("< m o fi di"), "m": _s("o fi di"),
        "o": _s("o fi di"), "fi": _s("di"), "di": _s("di"),
        "s": _s("o fi di"), "=": _s("di"), "si": _s("di"),
        "d": _s("o fi di s = si d f oi"), "f": _s("di si oi"),
        "oi": _s("di si oi"), "mi": _s("di si oi"),
        ">": _s("di si oi mi >"),
    },
    "s": {
        "<": _s("<"), "m": _s("<"),
        "o": _s("< m o"), "fi": _s("< m o"), "di": _s("< m o fi di"),
        "s": _s("s"), "=": _s("s"), "si": _s("s = si"),
        "d": _s("d"), "f": _s("d"),
        "oi": _s("d f oi"), "mi": _s("mi"),
        ">": _s(">"),
    },
    "=": {r: frozenset({r}) for r in SYMBOLS},
    "si": {
        "<": _s("< m o fi di"), "m": _s("o fi di"),
        "o": _s("o fi di"), "fi": _s("di"), "di": _s("di"),
        "s": _s("s = si"), "=": _s("si"), "si": _s("si"),
        "d": _s("d f oi"), "f": _s("oi"),
        "oi": _s("oi"), "mi": _s("mi"),
        ">": _s(">"),
    },
    "d": {
        "<": _s("<"), "m": _s("<"),
        "o": _s("< m o s d"), "fi": _s("< m o s d"), "di": FULL,
        "s": _s("d"), "=": _s("d"), "si": _s("d f oi mi >"),
        "d": _s("d"), "f": _s("d"),
        "oi": _s("d f oi mi >"), "mi": _s(">"),
        ">": _s(">"),
    },
    "f": {
        "<": _s("<"), "m": _s("m"),
        "o": _s("o s d"), "fi": _s("f = fi"), "di": _s("di si oi mi >"),
        "s": _s("d"), "=": _s("f"), "si": _s("oi mi >"),
        "d": _s("d"), "f": _s("f"),
        "oi": _s("oi mi >"), "mi": _s(">"),
        ">": _s(">"),
    },
    "oi": {
        "<": _s("< m o fi di"), "m": _s("o fi di"),
        "o": _s("o fi di s = si d f oi"), "fi": _s("di si oi"),
        "di": _s("di si oi mi >"),
        "s": _s("d f oi"), "=": _s("oi"), "si": _s("oi mi >"),
        "d": _s("d f oi"), "f": _s("oi"),
        "oi": _s("oi mi >"), "mi": _s(">"),
        ">": _s(">"),
    },
    "mi": {
        "<": _s("< m o fi di"), "m": _s("s = si"),
        "o": _s("d f oi"), "fi": _s("mi"), "di": _s(">"),
        "s": _s("d f oi"), "=": _s("mi"), "si": _s(">"),
        "d": _s("d f oi"), "f": _s("mi"),
        "oi": _s(">"), "mi": _s(">"),
        ">": _s(">"),
    },
    ">": {
        "<": FULL, "m": _s("d f oi mi >"),
        "o": _s("d f oi mi >"), "fi": _s(">"), "di": _s(">"),
        "s": _s("d f oi mi >"), "=": _s(">"), "si": _s(">"),
        "d": _s("d f oi mi >"), "f": _s(">"),
        "oi": _s(">"), "mi": _s(">"),
        ">": _s(">"),
    },
}

COMPOSITION: dict[tuple[str, str], frozenset[str]] = {
    (r1, r2): _ROWS[r1][r2] for r1 in SYMBOLS for r2 in SYMBOLS
}


def converse_set(rels: Iterable[str]) -> frozenset[str]:
    return frozenset(CONVERSE[r] for r in rels)


def reflect_set(rels: Iterable[str]) -> frozenset[str]:
    return frozenset(REFLECT[r] for r in rels)


def compose_sets(r1: Iterable[str], r2: Iterable[str]) -> frozenset[str]:
    """Union of cell compositions; the standard constraint-network step."""
    out: set[str] = set()
    for a in r1:
        for b in r2:
            out.update(COMPOSITION[(a, b)])
            if len(out) == 13:
                return FULL
    return frozenset(out)


def relation_of(x: tuple[int, int], y: tuple[int, int]) -> str:
    """Relation between two closed intervals given as (start, end) pairs."""
    xs, xe = x
    ys, ye = y
    if xs >= xe or ys >= ye:
        raise ValueError("intervals need start < end")
    if xe < ys:
        return "<"
    if xe == ys:
        return "m"
    if xs < ys and ys < xe and xe < ye:
        return "o"
    if xs == ys and xe < ye:
        return "s"
    if xs > ys and xe < ye:
        return "d"
    if xs > ys and xe == ye:
        return "f"
    if xs == ys and xe == ye:
        return "="
    if xs == ys and xe > ye:
        return "si"
    if xs < ys and xe == ye:
        return "fi"
    if xs < ys and xe > ye:
        return "di"
    if ys < xs and xs < ye and ye < xe:
        return "oi"
    if xs == ye:
        return "mi"
    if xs > ye:
        return ">"
    raise AssertionError("unreachable")
