"""Sums of Hoffman graphs.

A Hoffman graph H is the *sum* of subgraphs H^1, ..., H^n when

  (i)   the vertex sets of the parts cover V(H);
  (ii)  the slim vertex sets of the parts are pairwise disjoint;
  (iii) every fat neighbour of a slim vertex of a part lies in that part;
  (iv)  slim vertices in different parts have at most one common fat
        neighbour, and exactly one iff they are adjacent.

Parts overlap only in fat vertices.  Because of (iii) a part is always
the closure of its slim cell (the slim vertices together with all their
fat neighbours), so a decomposition is stored as a partition of the slim
vertices; all four conditions reduce to bitmask intersections on the
host.

``build_sum`` goes the constructive way: given component graphs and an
identification of fat vertices across them, the cross-component slim
adjacency is *derived* from rule (iv) — two slim vertices in different
components become adjacent exactly when they share one glued fat vertex,
and sharing two or more is an error.

``decompose`` searches for all ways to split a host into parts whose
isomorphism classes lie in a given set, by backtracking on the lowest
uncovered slim vertex.  Over the class set {H2, H3, H5} a host has at
most one decomposition; that uniqueness is a verified property of the
test suite, not an assumption of the search.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .core import (
    HoffmanGraph,
    HoffmanGraphError,
    IndexOutOfRange,
    _iter_bits,
    _mask_of,
    canonical_form,
)


class SharedFatConflict(HoffmanGraphError):
    """Two slim vertices in different parts share two or more fat
    vertices."""


@dataclass(frozen=True)
class SumDecomposition:
    """A host graph with the vertex subsets of its summands.

    Parts are stored sorted by their least slim vertex, so decompositions
    compare as sets of parts.
    """

    host: HoffmanGraph
    parts: tuple[frozenset[int], ...]

    @staticmethod
    def normalized(host, parts):
        ordered = sorted(
            (frozenset(p) for p in parts),
            key=lambda p: min(
                (v for v in p if v < host.slim_count), default=host.n
            ),
        )
        return SumDecomposition(host, tuple(ordered))

    def part_graphs(self):
        return [self.host.induced_on(sorted(p))[0] for p in self.parts]

    def slim_cells(self):
        s = self.host.slim_count
        return [frozenset(v for v in p if v < s) for p in self.parts]

    def to_json(self):
        doc = {
            "host": {
                "slim_count": self.host.slim_count,
                "fat_count": self.host.fat_count,
                "edges": sorted(self.host.edges()),
            },
            "parts": [sorted(p) for p in self.parts],
        }
        return json.dumps(doc, sort_keys=True)

    @staticmethod
    def from_json(text):
        doc = json.loads(text)
        host = HoffmanGraph.build(
            doc["host"]["slim_count"],
            doc["host"]["fat_count"],
            [tuple(e) for e in doc["host"]["edges"]],
        )
        return SumDecomposition(host, tuple(frozenset(p) for p in doc["parts"]))


def validate_sum(host, parts):
    """Check conditions (i)-(iv); returns (ok, first_violated_or_None).

    ``parts`` is an iterable of vertex subsets of the host.
    """
    parts = [frozenset(p) for p in parts]
    n = host.n
    for p in parts:
        for v in p:
            if not 0 <= v < n:
                raise IndexOutOfRange(f"part vertex {v} outside host")
    covered = set().union(*parts) if parts else set()
    if covered != set(range(n)):
        return False, "i"
    slim = host.slim_count
    slim_sets = [frozenset(v for v in p if v < slim) for p in parts]
    seen = set()
    for s in slim_sets:
        if s & seen:
            return False, "ii"
        seen |= s
    part_masks = [_mask_of(p) for p in parts]
    for p, mask in zip(parts, part_masks):
        for v in p:
            if v < slim and host.fat_neighbors(v) & ~mask:
                return False, "iii"
    for a, b in itertools.combinations(range(len(parts)), 2):
        for x in slim_sets[a]:
            fx = host.fat_neighbors(x)
            for y in slim_sets[b]:
                common = (fx & host.fat_neighbors(y)).bit_count()
                if common > 1:
                    return False, "iv"
                if (common == 1) != host.adjacent(x, y):
                    return False, "iv"
    return True, None


def build_sum(components, fat_glue=()):
    """Assemble the sum of ``components`` with fat vertices identified.

    ``fat_glue`` is an iterable of groups; each group is a collection of
    ``(component_index, fat_vertex)`` pairs that become a single fat
    vertex of the host.  Ungrouped fat vertices stay private to their
    component.  Cross-component slim adjacency is derived from rule (iv).

    Raises SharedFatConflict when two slim vertices of different
    components would share two fat vertices.
    """
    components = list(components)
    groups = [list(g) for g in fat_glue]
    used = set()
    for g in groups:
        if len(g) < 2:
            raise HoffmanGraphError("a glue group needs at least two fat vertices")
        for ci, fv in g:
            if not 0 <= ci < len(components):
                raise IndexOutOfRange(f"no component {ci}")
            comp = components[ci]
            if not comp.slim_count <= fv < comp.n:
                raise IndexOutOfRange(f"{fv} is not a fat vertex of component {ci}")
            if (ci, fv) in used:
                raise HoffmanGraphError(f"fat vertex ({ci},{fv}) glued twice")
            used.add((ci, fv))

    slim_of = {}
    next_slim = 0
    for ci, comp in enumerate(components):
        for v in range(comp.slim_count):
            slim_of[(ci, v)] = next_slim
            next_slim += 1
    fat_of = {}
    next_fat = next_slim
    for gi, g in enumerate(groups):
        for key in g:
            fat_of[key] = next_fat
        next_fat += 1
    for ci, comp in enumerate(components):
        for fv in range(comp.slim_count, comp.n):
            if (ci, fv) not in fat_of:
                fat_of[(ci, fv)] = next_fat
                next_fat += 1

    n = next_fat
    adj = [0] * n
    parts = [set() for _ in components]
    for ci, comp in enumerate(components):
        for v in range(comp.n):
            hv = slim_of[(ci, v)] if v < comp.slim_count else fat_of[(ci, v)]
            parts[ci].add(hv)
            for u in _iter_bits(comp.adj[v]):
                hu = slim_of[(ci, u)] if u < comp.slim_count else fat_of[(ci, u)]
                adj[hv] |= 1 << hu
                adj[hu] |= 1 << hv
    fat_lo = next_slim
    for (ci_a, xa) in list(slim_of):
        x = slim_of[(ci_a, xa)]
        fx = adj[x] >> fat_lo
        for (ci_b, yb) in list(slim_of):
            if ci_b <= ci_a:
                continue
            y = slim_of[(ci_b, yb)]
            common = (fx & (adj[y] >> fat_lo)).bit_count()
            if common > 1:
                raise SharedFatConflict(
                    f"slim vertices {x} and {y} share {common} fat vertices"
                )
            if common == 1:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
    host = HoffmanGraph(next_slim, n - next_slim, adj)
    return host, SumDecomposition.normalized(host, [frozenset(p) for p in parts])


def _cells_respect_iv(host, cells):
    """Condition (iv) across slim cells of a candidate decomposition."""
    for a, b in itertools.combinations(cells, 2):
        for x in a:
            fx = host.fat_neighbors(x)
            for y in b:
                common = (fx & host.fat_neighbors(y)).bit_count()
                if common > 1:
                    return False
                if (common == 1) != host.adjacent(x, y):
                    return False
    return True


def decompose(host, allowed_classes):
    """All decompositions of ``host`` into parts with isomorphism class in
    ``allowed_classes`` (a set of canonical forms), up to part order.

    Every part is the closure of its slim cell, so the search partitions
    the slim vertex set; a part's class is checked by canonical form.
    An empty result means the host is not decomposable over the classes.
    """
    allowed = {bytes(c) for c in allowed_classes}
    if not allowed:
        raise HoffmanGraphError("allowed_classes must be nonempty")
    sizes = sorted({c[0] for c in allowed})
    if host.slim_count == 0:
        if host.fat_count == 0:
            return [SumDecomposition(host, ())]
        return []
    slim = host.slim_count
    results = []

    def rec(uncovered, cells):
        if not uncovered:
            if _cells_respect_iv(host, cells):
                parts = [
                    frozenset(host.closure_vertices(c)) for c in cells
                ]
                results.append(SumDecomposition.normalized(host, parts))
            return
        v = min(uncovered)
        rest = sorted(uncovered - {v})
        for size in sizes:
            if size == 0 or size - 1 > len(rest):
                continue
            for extra in itertools.combinations(rest, size - 1):
                cell = (v,) + extra
                part = host.induced_slim_closure(cell)
                if canonical_form(part) not in allowed:
                    continue
                cells.append(cell)
                rec(uncovered - set(cell), cells)
                cells.pop()

    rec(frozenset(range(slim)), [])
    uniq = {}
    for d in results:
        uniq.setdefault(d.parts, d)
    return sorted(
        uniq.values(), key=lambda d: tuple(sorted(tuple(sorted(p)) for p in d.parts))
    )
