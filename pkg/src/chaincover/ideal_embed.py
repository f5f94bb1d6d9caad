"""Constructive embedding of a half-grid from a nested chain of ideals.

Given ideals J_0 ⊂ J_1 ⊂ ... ⊂ J_{m-1} (downward closed, up-directed, strict
nesting, nonempty layers), the recursion places the grid point (a, b) inside
the layer J_a minus everything earlier, walking positions in the order that
sorts by second coordinate first.  At each position the candidate must sit
above the images of the grid points below it, and must not sit below the
image of any grid-incomparable point placed earlier.  The reverse comparison
(a candidate dominating the image of a later-layer point) cannot happen at
all: the candidate's layer is contained in an ideal the later layer has
already escaped, and ideals are downward closed.  That impossibility is kept
as a debug assertion rather than a constraint.

Unbounded chains make the infinite recursion total; finite instances can
genuinely run out of candidates, so the operation is honestly partial and a
failure reports the blocking position with its accumulated constraints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import InternalInconsistency, Poset, iter_bits, mask_of
from .generators import grid_upper
from .patterns import BudgetExhausted, Embedding, linear_extension, validate_embedding


class InvalidChain(ValueError):
    """The ideal chain violates its invariants; see the validation report."""


@dataclass(frozen=True)
class IdealChain:
    poset: Poset
    ideals: tuple[frozenset[int], ...]

    @property
    def layers(self) -> tuple[frozenset[int], ...]:
        """J̌_a: what the a-th ideal adds over the union of the earlier ones."""
        out = []
        seen: frozenset[int] = frozenset()
        for ideal in self.ideals:
            out.append(ideal - seen)
            seen = seen | ideal
        return tuple(out)


@dataclass(frozen=True)
class ChainViolation:
    kind: str
    index: int
    witness: tuple

    def __str__(self) -> str:
        return f"ideal {self.index}: {self.kind} (witness {self.witness})"


@dataclass(frozen=True)
class IdealChainReport:
    ok: bool
    violations: tuple[ChainViolation, ...]


def validate_ideal_chain(c: IdealChain) -> IdealChainReport:
    """Check closure, directedness, strict nesting, nonempty layers, and the
    presence of a cofinal chain (in a finite ideal: a greatest element).

    Report style: every violation is listed with a witness, nothing raises.
    """
    p = c.poset
    violations = []
    for a, ideal in enumerate(c.ideals):
        for x in ideal:
            if not 0 <= x < p.n:
                violations.append(ChainViolation("element out of range", a, (x,)))
                return IdealChainReport(False, tuple(violations))
        mask = mask_of(ideal)
        for x in ideal:
            stray = p.down[x] & ~mask
            if stray:
                y = (stray & -stray).bit_length() - 1
                violations.append(ChainViolation(
                    "not downward closed", a, (y, x)))
                break
        members = sorted(ideal)
        directed = True
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                shared = (p.up[x] | (1 << x)) & (p.up[y] | (1 << y)) & mask
                if not shared:
                    violations.append(ChainViolation(
                        "not up-directed", a, (x, y)))
                    directed = False
                    break
            if not directed:
                break
        if not any(mask & ~(p.down[g] | (1 << g)) == 0 for g in members):
            violations.append(ChainViolation(
                "no cofinal chain (no greatest element)", a, ()))
    for a in range(len(c.ideals) - 1):
        if not c.ideals[a] < c.ideals[a + 1]:
            violations.append(ChainViolation(
                "nesting not strict", a + 1, tuple(sorted(c.ideals[a] - c.ideals[a + 1]))[:1]))
    for a, layer in enumerate(c.layers):
        if not layer:
            violations.append(ChainViolation("empty layer", a, ()))
    return IdealChainReport(not violations, tuple(violations))


@dataclass(frozen=True)
class EmbedFailure:
    """First grid position whose candidate set emptied, with its constraints."""

    position: tuple[int, int]
    constraints: tuple[tuple[str, tuple[int, int], int], ...]


def embed_from_ideal_chain(c: IdealChain, budget: int = 10 ** 6
                           ) -> Embedding | EmbedFailure:
    """Build an induced copy of grid_upper(m) with f(a, b) in layer a.

    Candidates are tried minimal-first in a fixed linear extension of the
    poset; dead ends backtrack chronologically under ``budget`` nodes.
    """
    report = validate_ideal_chain(c)
    if not report.ok:
        raise InvalidChain("; ".join(str(v) for v in report.violations))
    m = len(c.ideals)
    if m < 2:
        raise InvalidChain("need at least two ideals to form a grid")
    p = c.poset
    grid = grid_upper(m)
    positions = sorted(((a, b) for a in range(m) for b in range(a + 1, m)),
                       key=lambda ab: (ab[1], ab[0]))
    layer_masks = [mask_of(layer) for layer in c.layers]
    rank = {x: i for i, x in enumerate(linear_extension(p))}
    by_rank = [sorted(iter_bits(mask), key=rank.__getitem__)
               for mask in layer_masks]
    assignment: dict[tuple[int, int], int] = {}
    nodes = 0
    empty_events: list[tuple[tuple[int, int], tuple]] = []

    def constraints_at(pos: tuple[int, int]):
        a, b = pos
        below = []
        not_below = []
        for (a2, b2), img in assignment.items():
            if a2 <= a and b2 <= b:
                below.append(((a2, b2), img))
            else:  # a2 > a and b2 < b: grid-incomparable
                not_below.append(((a2, b2), img))
        return below, not_below

    def rec(idx: int) -> bool:
        nonlocal nodes
        if idx == len(positions):
            return True
        pos = positions[idx]
        a, _ = pos
        below, not_below = constraints_at(pos)
        mask = layer_masks[a]
        for _, img in below:
            mask &= p.up[img]
        for _, img in not_below:
            mask &= ~(p.down[img] | (1 << img))
        for used in assignment.values():
            mask &= ~(1 << used)
        if not mask:
            empty_events.append((
                pos,
                tuple(("above", gp, img) for gp, img in below)
                + tuple(("not_below", gp, img) for gp, img in not_below)))
            return False
        for x in by_rank[a]:
            if not mask >> x & 1:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted(f"ideal-chain embedding passed {budget} nodes")
            for _, img in not_below:
                # downward closure of the ideals makes this direction impossible
                assert not p.lt(img, x)
            assignment[pos] = x
            if rec(idx + 1):
                return True
            del assignment[pos]
        return False

    if not rec(0):
        pos, constraints = min(empty_events, key=lambda e: (e[0][1], e[0][0]))
        return EmbedFailure(pos, constraints)
    mapping = tuple(assignment[(a, b)]
                    for a in range(m) for b in range(a + 1, m))
    e = Embedding(grid, p, mapping)
    if not validate_embedding(e):
        raise InternalInconsistency("recursion produced a non-embedding")
    for i, (a, b) in enumerate((a, b) for a in range(m) for b in range(a + 1, m)):
        if mapping[i] not in c.layers[a]:
            raise InternalInconsistency("image escaped its layer")
    return e
