"""Finite strict partial orders and the region primitives built on them.

A poset is stored as its full reachability relation, one bitmask row per
element: bit ``y`` of ``up[x]`` is set iff ``x < y``.  Construction takes the
transitive closure (bit-parallel Warshall) and rejects anything that is not a
strict order.  Values are immutable after construction; every operation here
is a pure function, so concurrent use needs no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class CycleError(ValueError):
    """Input relation is not a strict order; carries one violating cycle."""

    def __init__(self, cycle: list[int]):
        self.cycle = cycle
        pretty = " < ".join(str(v) for v in cycle)
        super().__init__(f"relation closes into a cycle: {pretty} < {cycle[0]}")


class EmptyPoset(ValueError):
    """Operation undefined on the empty poset."""


class PreconditionError(ValueError):
    """Caller violated an operation's stated precondition."""


class InternalInconsistency(RuntimeError):
    """Two routes that must agree by theorem disagreed: an implementation bug."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


@dataclass(frozen=True, eq=False)
class Poset:
    """Strict partial order on elements 0..n-1, relation reachability-closed.

    ``labels`` is presentation metadata (e.g. grid coordinates); it never
    participates in equality.
    """

    n: int
    up: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.up) != self.n:
            raise ValueError("relation row count does not match element count")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count does not match element count")

    # -- relation queries ---------------------------------------------------

    def lt(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def leq(self, x: int, y: int) -> bool:
        return x == y or self.lt(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return x == y or self.lt(x, y) or self.lt(y, x)

    def incomparable(self, x: int, y: int) -> bool:
        return not self.comparable(x, y)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def down(self) -> tuple[int, ...]:
        """Transpose of ``up``: bit y of down[x] is set iff y < x."""
        rows = [0] * self.n
        for x in range(self.n):
            row = self.up[x]
            while row:
                low = row & -row
                rows[low.bit_length() - 1] |= 1 << x
                row ^= low
        return tuple(rows)

    def up_mask(self, x: int) -> int:
        """Strict up-set of x as a bitmask (x excluded)."""
        return self.up[x]

    def down_mask(self, x: int) -> int:
        return self.down[x]

    def inc_mask(self, x: int) -> int:
        """Elements incomparable to x, as a bitmask."""
        return self.full_mask & ~(self.up[x] | self.down[x] | (1 << x))

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    # -- derived structure --------------------------------------------------

    @cached_property
    def maximal_mask(self) -> int:
        return mask_of(x for x in range(self.n) if not self.up[x])

    @cached_property
    def minimal_mask(self) -> int:
        return mask_of(x for x in range(self.n) if not self.down[x])

    def greatest(self) -> int | None:
        """The greatest element, or None if there is none."""
        for x in iter_bits(self.maximal_mask):
            if self.down[x] | (1 << x) == self.full_mask:
                return x
        return None

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Edges of the Hasse diagram: x < y with nothing in between."""
        out = []
        for x in range(self.n):
            row = self.up[x]
            for y in iter_bits(row):
                if not row & self.down[y]:
                    out.append((x, y))
        return out

    def relation_pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in iter_bits(self.up[x])]

    def to_text(self) -> str:
        """Serialize in the poset text format (cover pairs only)."""
        lines = [f"n {self.n}"]
        lines += [f"{u} {v}" for u, v in self.cover_pairs()]
        return "\n".join(lines) + "\n"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.n, self.up))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, lt={self.relation_pairs()!r})"


def _close(rows: list[int], n: int) -> list[int]:
    # Bit-parallel Warshall over bitmask rows.
    for k in range(n):
        kbit = 1 << k
        krow = rows[k]
        for i in range(n):
            if rows[i] & kbit:
                rows[i] |= krow
    return rows


def _find_cycle(n: int, adj: list[int], start: int) -> list[int]:
    """Recover a cycle through ``start`` in the raw input edges, for reporting."""
    parent = {start: -1}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for v in iter_bits(adj[u]):
                if v == start:
                    path = [u]
                    while parent[path[-1]] != -1:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                if v not in parent:
                    parent[v] = u
                    nxt.append(v)
        frontier = nxt
    raise AssertionError("cycle reported but not reconstructible")


def from_relations(n: int, pairs: Iterable[tuple[int, int]],
                   labels: tuple[str, ...] | None = None) -> Poset:
    """Build a poset from generating pairs ``u < v``; closes transitively.

    Raises CycleError if the closure creates a cycle or a reflexive pair,
    IndexError for out-of-range indices.
    """
    if n < 0:
        raise ValueError("element count must be nonnegative")
    adj = [0] * n
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError(f"pair ({u}, {v}) out of range for {n} elements")
        adj[u] |= 1 << v
    rows = _close(list(adj), n)
    for x in range(n):
        if rows[x] >> x & 1:
            raise CycleError(_find_cycle(n, adj, x))
    return Poset(n, tuple(rows), labels)


def from_text(text: str) -> Poset:
    """Parse the poset text format.

    Line 1 is ``n <count>``; each later non-comment line is ``<u> <v>``
    asserting u < v.  ``#`` starts a comment.  The closure is applied on
    load; a cycle raises CycleError with the cycle in the message.
    """
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise ValueError(f"line {lineno}: expected 'n <count>' header")
            n = int(fields[1])
            continue
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected '<u> <v>'")
        pairs.append((int(fields[0]), int(fields[1])))
    if n is None:
        raise ValueError("missing 'n <count>' header line")
    return from_relations(n, pairs)


def dual(p: Poset) -> Poset:
    """The opposite order on the same elements."""
    return Poset(p.n, p.down, p.labels)


def induced(p: Poset, subset: Iterable[int]) -> tuple[Poset, tuple[int, ...]]:
    """Restrict the order to ``subset``.

    Returns the induced poset together with the map from new indices back to
    the original ones (ascending original order).
    """
    chosen = sorted(set(subset))
    for x in chosen:
        if not 0 <= x < p.n:
            raise IndexError(f"element {x} out of range")
    back = {orig: new for new, orig in enumerate(chosen)}
    rows = []
    for orig in chosen:
        row = 0
        for other in iter_bits(p.up[orig]):
            if other in back:
                row |= 1 << back[other]
        rows.append(row)
    labels = tuple(p.labels[i] for i in chosen) if p.labels is not None else None
    return Poset(len(chosen), tuple(rows), labels), tuple(chosen)


REGION_KINDS = ("up", "down", "interval", "inc")


@dataclass(frozen=True)
class Region:
    """A distinguished subset of a poset: ↑A, ↓A, [a,b] or Inc_A."""

    members: frozenset[int]
    kind: str

    def __post_init__(self):
        if self.kind not in REGION_KINDS:
            raise ValueError(f"unknown region kind {self.kind!r}")


def region(p: Poset, kind: str, arg) -> Region:
    """Compute one of the four region kinds.

    ``up``/``down``/``inc`` take an iterable of elements A; ``interval``
    takes a pair ``(a, b)`` with a <= b.  Up and down regions include A;
    Inc_A excludes it (nothing is incomparable to itself).  Inc of the empty
    set is the whole poset, the vacuous-truth reading; flagged here because
    callers sometimes expect the empty set instead.
    """
    if kind == "interval":
        a, b = arg
        for x in (a, b):
            if not 0 <= x < p.n:
                raise IndexError(f"element {x} out of range")
        if not p.leq(a, b):
            raise PreconditionError(f"interval requires {a} <= {b}")
        mask = (p.up[a] | (1 << a)) & (p.down[b] | (1 << b))
        return Region(frozenset(iter_bits(mask)), kind)
    elements = list(arg)
    for x in elements:
        if not 0 <= x < p.n:
            raise IndexError(f"element {x} out of range")
    if kind == "up":
        mask = 0
        for x in elements:
            mask |= p.up[x] | (1 << x)
    elif kind == "down":
        mask = 0
        for x in elements:
            mask |= p.down[x] | (1 << x)
    elif kind == "inc":
        mask = p.full_mask
        for x in elements:
            mask &= p.inc_mask(x)
    else:
        raise ValueError(f"unknown region kind {kind!r}")
    return Region(frozenset(iter_bits(mask)), kind)


def _is_downset(p: Poset, mask: int) -> bool:
    for x in iter_bits(mask):
        if p.down[x] & ~mask:
            return False
    return True


def is_pure(p: Poset, exhaustive: bool = False) -> bool:
    """Whether every proper initial segment is strictly bounded above.

    The fast route checks only the maximal proper initial segments, i.e. the
    complements of the minimal nonempty up-sets, which in a finite poset are
    exactly P minus one maximal element.  Strict boundedness is antitone in
    the segment, so this suffices.  ``exhaustive=True`` enumerates every
    proper downward-closed subset instead (cross-check oracle, n <= 20).
    """
    if p.n == 0:
        raise EmptyPoset("purity is undefined on the empty poset")
    if exhaustive:
        if p.n > 20:
            raise ValueError("exhaustive purity check limited to n <= 20")
        for mask in range(p.full_mask):  # all proper subsets
            if not _is_downset(p, mask):
                continue
            outside = p.full_mask & ~mask
            if not any(p.down[x] & mask == mask for x in iter_bits(outside)):
                return False
        return True
    return all(p.down[m] | (1 << m) == p.full_mask
               for m in iter_bits(p.maximal_mask))
