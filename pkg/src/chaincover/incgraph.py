"""Incomparability-graph structure: components, the lexicographic-sum
decomposition, and the incomparability metric.

Every poset is the lexicographic sum of the posets induced on the connected
components of its incomparability graph, indexed by a chain.  Components are
found by breadth-first traversal over incomparability adjacency computed on
demand from the relation bitrows; the incomparability graph can be dense, so
no edge list is materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .core import (InternalInconsistency, Poset, PreconditionError, induced,
                   iter_bits, mask_of)


class MalformedDecomposition(ValueError):
    """A hand-built decomposition does not describe a lexicographic sum."""


@dataclass(frozen=True)
class LexDecomposition:
    """Ordered incomparability components of a poset.

    ``parts[i]`` lists the original element indices of the i-th component in
    the chain order: everything in an earlier part lies below everything in a
    later part.  ``part_posets[i]`` is the poset induced on ``parts[i]`` and
    ``parts[i][k]`` is the original index of its local element k.
    """

    n: int
    parts: tuple[tuple[int, ...], ...]
    part_posets: tuple[Poset, ...]


def _components(p: Poset) -> list[int]:
    """Connected components of Inc(P) as bitmasks, in order of least element."""
    seen = 0
    comps = []
    for start in range(p.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        seen |= comp
        while frontier:
            x = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            fresh = p.inc_mask(x) & ~seen
            seen |= fresh
            comp |= fresh
            frontier |= fresh
        comps.append(comp)
    return comps


def inc_components(p: Poset, verify: bool = True) -> LexDecomposition:
    """Decompose into incomparability components ordered as a chain.

    The order on parts is fixed by comparing one representative pair; with
    ``verify`` (the default) the uniform cross-part comparability is then
    rechecked exhaustively, and a failure raises InternalInconsistency since
    it can only mean a bug in the relation.
    """
    comps = _components(p)

    def cmp(a: int, b: int) -> int:
        x = (a & -a).bit_length() - 1
        y = (b & -b).bit_length() - 1
        return -1 if p.lt(x, y) else 1

    comps.sort(key=cmp_to_key(cmp))
    if verify:
        for i, low in enumerate(comps):
            for high in comps[i + 1:]:
                for x in iter_bits(low):
                    if p.up[x] & high != high:
                        raise InternalInconsistency(
                            "component order is not uniform; the relation is "
                            "not transitively closed")
    parts = tuple(tuple(iter_bits(c)) for c in comps)
    part_posets = tuple(induced(p, part)[0] for part in parts)
    return LexDecomposition(p.n, parts, part_posets)


def recompose(d: LexDecomposition) -> Poset:
    """Rebuild the poset a decomposition describes, on the original indices."""
    seen = 0
    for part, sub in zip(d.parts, d.part_posets):
        if sub.n != len(part):
            raise MalformedDecomposition("part poset size differs from part")
        pm = mask_of(part)
        if pm & seen:
            raise MalformedDecomposition("parts are not disjoint")
        seen |= pm
    if seen != (1 << d.n) - 1:
        raise MalformedDecomposition("parts do not partition the elements")
    rows = [0] * d.n
    later = (1 << d.n) - 1
    for part, sub in zip(d.parts, d.part_posets):
        later &= ~mask_of(part)
        for local, orig in enumerate(part):
            row = later
            for other in iter_bits(sub.up[local]):
                row |= 1 << part[other]
            rows[orig] = row
    return Poset(d.n, tuple(rows))


def inc_distance_path(p: Poset, x: int, y: int) -> tuple[int, list[int]] | None:
    """Shortest path between x and y in the incomparability graph.

    Returns (distance, path) where distance counts edges, or None when the
    endpoints lie in different components (the poset analog of an infinite
    distance).  Among minimum-length paths the lexicographically least one is
    returned, so reports are reproducible.
    """
    for v in (x, y):
        if not 0 <= v < p.n:
            raise IndexError(f"element {v} out of range")
    if x == y:
        return 0, [x]
    # breadth-first from y so the path can be grown greedily from x
    dist = {y: 0}
    level = 1 << y
    levels = [level]
    seen = level
    while level:
        nxt = 0
        for v in iter_bits(level):
            nxt |= p.inc_mask(v) & ~seen
        for v in iter_bits(nxt):
            dist[v] = len(levels)
        seen |= nxt
        levels.append(nxt)
        level = nxt
    if x not in dist:
        return None
    path = [x]
    current = x
    while current != y:
        step = p.inc_mask(current) & levels[dist[current] - 1]
        current = (step & -step).bit_length() - 1
        path.append(current)
    return dist[x], path


@dataclass(frozen=True)
class MetricReport:
    """Checked consequences of the incomparability metric for one pair x < y."""

    x: int
    y: int
    d: int
    path: tuple[int, ...]
    item1_ok: bool
    item2_ok: bool
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.item1_ok and self.item2_ok


def check_metric_lemma(p: Poset, x: int, y: int) -> MetricReport:
    """Verify, along the shortest incomparability path from x to y (x < y):

    1. far-apart path vertices are increasingly ordered (x_i < x_j once
       j >= i + 2), and
    2. the interval [x, y] is covered by the incomparability sets of the
       interior path vertices.

    Both are finite theorems; a False anywhere signals an implementation bug.
    """
    if not p.lt(x, y):
        raise PreconditionError(f"{x} < {y} must hold in the poset")
    hop = inc_distance_path(p, x, y)
    if hop is None:
        raise PreconditionError(
            f"{x} and {y} lie in different incomparability components")
    d, path = hop
    violations = []
    for i in range(len(path)):
        for j in range(i + 2, len(path)):
            if not p.lt(path[i], path[j]):
                violations.append(f"path[{i}]={path[i]} not below path[{j}]={path[j]}")
    item1_ok = not violations
    interval = (p.up[x] | (1 << x)) & (p.down[y] | (1 << y))
    union = 0
    for v in path[1:-1]:
        union |= p.inc_mask(v)
    uncovered = interval & ~union
    item2_ok = uncovered == 0
    for z in iter_bits(uncovered):
        violations.append(f"interval element {z} not incomparable to any interior vertex")
    return MetricReport(x, y, d, tuple(path), item1_ok, item2_ok, tuple(violations))


def to_dot(p: Poset, include_inc: bool = False) -> str:
    """DOT rendering of the Hasse diagram; incomparability edges dashed."""
    lines = ["digraph poset {", "  rankdir=BT;"]
    for x in range(p.n):
        lines.append(f'  v{x} [label="{p.label(x)}"];')
    for u, v in p.cover_pairs():
        lines.append(f"  v{u} -> v{v};")
    if include_inc:
        for x in range(p.n):
            for y in iter_bits(p.inc_mask(x)):
                if y > x:
                    lines.append(f"  v{x} -> v{y} [style=dashed, dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
