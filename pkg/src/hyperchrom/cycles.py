"""Delta-cycle detection, broken delta-cycles, and NB(H) enumeration.

A delta-cycle is a minimal nonempty edge set F in which every edge is covered
by the vertices of the remaining edges: ``e <= V(F \\ {e})`` for every e in F.
No set with fewer than 3 edges can qualify (a 2-edge set would need one edge
inside the other, which the hypergraph invariants forbid).

Fixing an edge labelling eta, each delta-cycle C yields one broken
delta-cycle: C minus its eta-minimal edge.  NB(H) is the family of edge
subsets containing no broken delta-cycle; it is downward closed, which the
depth-first enumeration exploits: extending only broken-free subsets visits
exactly NB(H) and never leaves it.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import budget
from .errors import InputError
from .hypercore import EdgeSubset, Hypergraph

__all__ = [
    "DeltaCycleCatalog",
    "is_delta_cycle",
    "enumerate_delta_cycles",
    "broken_delta_cycles",
    "nb_subsets",
    "normalize_eta",
]


def normalize_eta(H: Hypergraph, eta: Sequence[int] | None) -> tuple[int, ...]:
    """The edge labelling as a tuple: position i (0-based) -> label of edge i+1.

    None means the identity labelling (1, 2, ..., m).
    """
    if eta is None:
        return tuple(range(1, H.m + 1))
    eta = tuple(int(x) for x in eta)
    if sorted(eta) != list(range(1, H.m + 1)):
        raise InputError(f"eta must be a permutation of 1..{H.m}, got {list(eta)}")
    return eta


def _condition_a(vmasks: Sequence[int], members: Sequence[int]) -> bool:
    # e <= V(F \ {e}) for every member edge e, via prefix/suffix vertex unions
    s = len(members)
    if s < 3:
        return False
    prefix = [0] * (s + 1)
    for i, j in enumerate(members):
        prefix[i + 1] = prefix[i] | vmasks[j]
    suffix = [0] * (s + 1)
    for i in range(s - 1, -1, -1):
        suffix[i] = suffix[i + 1] | vmasks[members[i]]
    for i, j in enumerate(members):
        others = prefix[i] | suffix[i + 1]
        if vmasks[j] & ~others:
            return False
    return True


def is_delta_cycle(H: Hypergraph, F: EdgeSubset) -> bool:
    """True iff F satisfies the covering condition and no proper subset does."""
    members = [lab - 1 for lab in F.labels]
    vmasks = H.edge_vertex_masks()
    if not _condition_a(vmasks, members):
        return False
    for s in range(3, len(members)):
        for sub in combinations(members, s):
            if _condition_a(vmasks, sub):
                return False
    return True


class DeltaCycleCatalog:
    """All delta-cycles of a hypergraph up to a given edge-count limit.

    Stores the cycles in deterministic order (by size, then by bitmask) and
    derives, per edge labelling, both the one-broken-set-per-cycle list and
    the deduplicated broken family used by the NB enumeration.
    """

    __slots__ = ("H", "max_edges", "cycles", "_broken_cache")

    def __init__(self, H: Hypergraph, max_edges: int, cycle_masks: Iterable[int]):
        self.H = H
        self.max_edges = max_edges
        masks = sorted(set(cycle_masks), key=lambda mk: (bin(mk).count("1"), mk))
        self.cycles = tuple(EdgeSubset.from_mask(H.m, mk) for mk in masks)
        self._broken_cache: dict = {}

    def __len__(self) -> int:
        return len(self.cycles)

    def broken_per_cycle(self, eta: Sequence[int] | None = None) -> list[EdgeSubset]:
        """One broken set per delta-cycle (duplicates possible), cycle order."""
        return [pair[1] for pair in self._broken(eta)[0]]

    def broken_family(self, eta: Sequence[int] | None = None) -> tuple[EdgeSubset, ...]:
        """Deduplicated broken delta-cycles, sorted by size then bitmask."""
        return self._broken(eta)[1]

    def _broken(self, eta: Sequence[int] | None):
        eta = normalize_eta(self.H, eta)
        if eta not in self._broken_cache:
            per_cycle = []
            for cyc in self.cycles:
                drop = min(cyc.labels, key=lambda lab: eta[lab - 1])
                broken = EdgeSubset.from_mask(self.H.m, cyc.mask & ~(1 << (drop - 1)))
                per_cycle.append((cyc, broken))
            family = sorted(
                {br.mask for _, br in per_cycle},
                key=lambda mk: (bin(mk).count("1"), mk),
            )
            dedup = tuple(EdgeSubset.from_mask(self.H.m, mk) for mk in family)
            self._broken_cache[eta] = (per_cycle, dedup)
        return self._broken_cache[eta]


def enumerate_delta_cycles(
    H: Hypergraph, max_edges: int | None = None
) -> DeltaCycleCatalog:
    """Find every delta-cycle with at most max_edges edges (default: all).

    Bottom-up by subset size: a candidate containing an already-found smaller
    delta-cycle is skipped, so the covering condition alone settles the rest
    (minimality holds by construction).  Results are cached on the hypergraph.
    """
    m = H.m
    budget.check_cap("nb_edges", m, "delta-cycle enumeration")
    limit = m if max_edges is None else min(max_edges, m)
    key = ("catalog", limit)
    if key in H._cache:
        return H._cache[key]
    vmasks = H.edge_vertex_masks()
    found: list[int] = []
    for s in range(3, limit + 1):
        for combo in combinations(range(m), s):
            mask = 0
            for j in combo:
                mask |= 1 << j
            if any(cm & mask == cm for cm in found):
                continue
            if _condition_a(vmasks, combo):
                found.append(mask)
    catalog = DeltaCycleCatalog(H, limit, found)
    H._cache[key] = catalog
    return catalog


def broken_delta_cycles(
    catalog: DeltaCycleCatalog, eta: Sequence[int] | None = None
) -> list[EdgeSubset]:
    """Deduplicated broken delta-cycles of the catalog under eta."""
    return list(catalog.broken_family(eta))


def broken_by_max_edge(broken_masks: Iterable[int], m: int) -> list[list[int]]:
    """Group broken-set masks by their highest edge index (0-based).

    The NB depth-first walk adds edges in increasing index order, so a subset
    can only complete a broken set whose maximum edge is the one just added;
    grouping makes that the only test per step.
    """
    groups: list[list[int]] = [[] for _ in range(m)]
    for mask in broken_masks:
        groups[mask.bit_length() - 1].append(mask)
    return groups


def nb_subsets(
    H: Hypergraph,
    eta: Sequence[int] | None = None,
    must_contain: int | None = None,
    size: int | None = None,
    catalog: DeltaCycleCatalog | None = None,
) -> Iterator[EdgeSubset]:
    """Stream the members of NB(H) under eta, in depth-first order.

    Optional filters restrict the stream to subsets containing the edge with
    label ``must_contain`` and/or to subsets of exactly ``size`` edges.
    Because broken-freeness is hereditary, the walk only ever extends
    broken-free subsets; pruning is exact, not heuristic.
    """
    m = H.m
    if must_contain is not None and not 1 <= must_contain <= m:
        raise InputError(f"must_contain label {must_contain} outside 1..{m}")
    if catalog is None:
        catalog = enumerate_delta_cycles(H)
    elif catalog.H is not H:
        raise InputError("catalog was built for a different hypergraph")
    broken = [b.mask for b in catalog.broken_family(eta)]
    groups = broken_by_max_edge(broken, m)
    want_bit = 0 if must_contain is None else 1 << (must_contain - 1)

    def emit_ok(mask: int, count: int) -> bool:
        if want_bit and not mask & want_bit:
            return False
        if size is not None and count != size:
            return False
        return True

    def walk(mask: int, count: int, next_edge: int) -> Iterator[EdgeSubset]:
        if emit_ok(mask, count):
            yield EdgeSubset.from_mask(m, mask)
        if size is not None and count >= size:
            return
        for j in range(next_edge, m):
            # once the walk has passed the required edge, no descendant has it
            if want_bit and not mask & want_bit and (1 << (must_contain - 1)) < (1 << j):
                return
            new_mask = mask | (1 << j)
            blocked = False
            for bmask in groups[j]:
                if bmask & ~new_mask == 0:
                    blocked = True
                    break
            if not blocked:
                yield from walk(new_mask, count + 1, j + 1)

    return walk(0, 0, 0)
