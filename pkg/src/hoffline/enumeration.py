"""Graph streams: isomorph-free generation, graph6 I/O, constrained fat
graphs, and sum composition.

``connected_slim_graphs(n)`` yields exactly one representative per
isomorphism class of connected n-vertex graphs, generated by canonical
augmentation: an (n-1)-vertex parent is extended by one vertex for every
attachment subset, and the child survives only when the added vertex lies
in the automorphism orbit of a canonical deletion target (the non-cut
vertex latest in the canonical labelling).  Children of one parent are
deduplicated by canonical form, which together with the orbit rule makes
every class appear exactly once.  ``all_slim_graphs`` is the variant
without the connectivity requirement.

The graph6 reader/writer is bit-exact to the published format (short
form, up to 62 vertices): upper-triangle column-major bits in 6-bit
chunks offset by 63, zero padding required.

``fat_hoffman_graphs`` enumerates fat Hoffman graphs under the structural
constraint bundles used by the composition lemmas, and ``enumerate_sums``
composes a fixed fat graph F with every sum K of parts from
{H1, H2, H3, H5} meeting size/component bounds, gluing the fat vertices
of F onto fat vertices of K in all valid ways.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    EMPTY_GRAPH,
    HoffmanGraph,
    HoffmanGraphError,
    IndexOutOfRange,
    _iter_bits,
    canonical_data,
    canonical_form,
)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


class Graph6Error(HoffmanGraphError):
    pass


class MalformedHeader(Graph6Error):
    pass


class TruncatedPayload(Graph6Error):
    pass


class NonCanonicalPadding(Graph6Error):
    pass


_G6_OPTIONAL_HEADER = ">>graph6<<"


def parse_graph6(line) -> HoffmanGraph:
    """Parse one graph6 line (slim graph, short form, n <= 62)."""
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    line = line.strip()
    if line.startswith(_G6_OPTIONAL_HEADER):
        line = line[len(_G6_OPTIONAL_HEADER):]
    if not line:
        raise MalformedHeader("empty graph6 line")
    first = ord(line[0])
    if first == 126:
        raise MalformedHeader("long-form graph6 (n > 62) not supported")
    if not 63 <= first <= 125:
        raise MalformedHeader(f"bad graph6 header byte {line[0]!r}")
    n = first - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = line[1:]
    if len(payload) < need:
        raise TruncatedPayload(f"need {need} payload chars, found {len(payload)}")
    if len(payload) > need:
        raise NonCanonicalPadding("trailing bytes after graph6 payload")
    bits = 0
    for ch in payload:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise MalformedHeader(f"payload byte {ch!r} outside graph6 range")
        bits = (bits << 6) | val
    pad = need * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise NonCanonicalPadding("non-zero padding bits")
    bits >>= pad
    adj = [0] * n
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if (bits >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return HoffmanGraph(n, 0, adj, _checked=True)


def write_graph6(g: HoffmanGraph) -> str:
    """Encode a slim graph (n <= 62) as a graph6 line."""
    if g.fat_count:
        raise Graph6Error("graph6 encodes slim graphs only")
    n = g.slim_count
    if n > 62:
        raise Graph6Error("short-form graph6 is limited to 62 vertices")
    bits = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    nbits += pad
    out = [chr(n + 63)]
    for shift in range(nbits - 6, -1, -6):
        out.append(chr(((bits >> shift) & 63) + 63))
    return "".join(out)


def read_graph6_lines(stream):
    """Yield graphs from an iterable of graph6 lines, skipping blanks."""
    for line in stream:
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        if line.strip():
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# Isomorph-free generation
# ---------------------------------------------------------------------------


def _orbit_id(orbits, n):
    oid = [0] * n
    for i, orb in enumerate(orbits):
        for v in orb:
            oid[v] = i
    return oid


def _extend(parent, nbhd_mask):
    """Parent plus one new vertex adjacent to ``nbhd_mask``."""
    n = parent.slim_count
    adj = list(parent.adj) + [nbhd_mask]
    for u in _iter_bits(nbhd_mask):
        adj[u] |= 1 << n
    return HoffmanGraph(n + 1, 0, adj, _checked=True)


def _noncut_mask(g):
    """Bitmask of vertices whose removal keeps the graph connected."""
    full = g.slim_mask
    out = 0
    for v in range(g.slim_count):
        if g._connected_within(full & ~(1 << v)):
            out |= 1 << v
    return out


def connected_slim_graphs(n):
    """One representative per isomorphism class of connected n-vertex
    graphs, in a deterministic order.  1 <= n <= 10."""
    if not 1 <= n <= 10:
        raise IndexOutOfRange("generation supports 1 <= n <= 10")
    if n == 1:
        yield HoffmanGraph(1, 0, (0,), _checked=True)
        return
    new = n - 1
    for parent in connected_slim_graphs(n - 1):
        emitted = set()
        for nbhd in range(1, 1 << new):
            child = _extend(parent, nbhd)
            form, lab, orbits = canonical_data(child)
            if form in emitted:
                continue
            noncut = _noncut_mask(child)
            pos = {v: i for i, v in enumerate(lab)}
            target = max(
                (v for v in range(n) if (noncut >> v) & 1), key=pos.__getitem__
            )
            oid = _orbit_id(orbits, n)
            if oid[new] == oid[target]:
                emitted.add(form)
                yield child


def all_slim_graphs(n):
    """One representative per isomorphism class of all n-vertex graphs."""
    if not 1 <= n <= 10:
        raise IndexOutOfRange("generation supports 1 <= n <= 10")
    if n == 1:
        yield HoffmanGraph(1, 0, (0,), _checked=True)
        return
    new = n - 1
    for parent in all_slim_graphs(n - 1):
        emitted = set()
        for nbhd in range(1 << new):
            child = _extend(parent, nbhd)
            form, lab, orbits = canonical_data(child)
            if form in emitted:
                continue
            target = lab[-1]
            oid = _orbit_id(orbits, n)
            if oid[new] == oid[target]:
                emitted.add(form)
                yield child


# ---------------------------------------------------------------------------
# Constrained fat Hoffman graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FatConstraints:
    """Structural constraints for ``fat_hoffman_graphs``.

    The three predicate bundles mirror the hypothesis lists of the
    computer-checked composition lemmas:

    ``nonadjacent_slim_pair``
        exactly two slim vertices and they are non-adjacent;
    ``pivot_structure``
        some slim vertex s has two fat neighbours, some slim vertex is
        non-adjacent to s while all other slim vertices are adjacent to
        s, and the closure of the slim set minus s is a copy of H3 or H5;
    ``overlapping_cover_pair``
        two different slim subsets V1, V2 cover the slim set, each with
        closure a copy of H3 or H5, such that every vertex of Vs-V2 is
        adjacent to every vertex of Vs-V1 except possibly one pair.
    """

    slim_min: int
    slim_max: int
    fat_min: int = 1
    fat_max: int | None = None
    max_fat_degree: int | None = None
    exact_fat_degree: int | None = None
    connected: bool = True
    non_line: bool = False
    nonadjacent_slim_pair: bool = False
    pivot_structure: bool = False
    overlapping_cover_pair: bool = False


def _closure_class_is_h3_or_h5(g, slim_subset):
    from .families import classify_part

    sub = g.induced_slim_closure(slim_subset)
    return classify_part(sub) in ("H3", "H5")


def _pivot_ok(g):
    s_count = g.slim_count
    for s in range(s_count):
        if g.fat_neighbors(s).bit_count() != 2:
            continue
        others = [t for t in range(s_count) if t != s]
        non = [t for t in others if not g.adjacent(s, t)]
        if len(non) != 1:
            continue
        if not _closure_class_is_h3_or_h5(g, others):
            continue
        return True
    return False


def _overlapping_cover_ok(g):
    s_count = g.slim_count
    verts = list(range(s_count))
    subsets = []
    for r in range(2, s_count + 1):
        subsets.extend(itertools.combinations(verts, r))
    good = [set(c) for c in subsets if _closure_class_is_h3_or_h5(g, c)]
    for v1, v2 in itertools.permutations(good, 2):
        if v1 == v2 or v1 | v2 != set(verts):
            continue
        # the two difference sets are disjoint; all cross pairs must be
        # adjacent except exactly one genuinely non-adjacent pair
        left = sorted(set(verts) - v2)
        right = sorted(set(verts) - v1)
        missing = [
            (x, y)
            for x in left
            for y in right
            if not g.adjacent(x, y)
        ]
        if len(missing) == 1:
            return True
    return False


def fat_hoffman_graphs(c: FatConstraints):
    """One representative per isomorphism class satisfying ``c``.

    Enumerates slim base graphs up to isomorphism, then all multisets of
    fat attachment neighbourhoods, deduplicating by canonical form.
    """
    from .recognition import is_h_line

    if c.slim_max > 8:
        raise IndexOutOfRange("fat graph enumeration capped at 8 slim vertices")
    seen = set()
    for s in range(max(c.slim_min, 1), c.slim_max + 1):
        fat_hi = c.fat_max if c.fat_max is not None else 2 * s
        for base in all_slim_graphs(s):
            if c.nonadjacent_slim_pair and (s != 2 or base.edge_count() != 0):
                continue
            nonempty = [m for m in range(1, 1 << s)]
            for fcount in range(max(c.fat_min, 0), fat_hi + 1):
                for combo in itertools.combinations_with_replacement(nonempty, fcount):
                    fdeg = [0] * s
                    ok = True
                    for m in combo:
                        for v in _iter_bits(m):
                            fdeg[v] += 1
                    if c.max_fat_degree is not None and any(
                        d > c.max_fat_degree for d in fdeg
                    ):
                        ok = False
                    if ok and c.exact_fat_degree is not None and any(
                        d != c.exact_fat_degree for d in fdeg
                    ):
                        ok = False
                    if not ok:
                        continue
                    adj = list(base.adj) + [0] * fcount
                    for i, m in enumerate(combo):
                        fv = s + i
                        adj[fv] = m
                        for v in _iter_bits(m):
                            adj[v] |= 1 << fv
                    g = HoffmanGraph(s, fcount, adj, _checked=True)
                    if c.connected and not g.is_connected():
                        continue
                    if c.pivot_structure and not _pivot_ok(g):
                        continue
                    if c.overlapping_cover_pair and not _overlapping_cover_ok(g):
                        continue
                    if c.non_line and is_h_line(g) is not None:
                        continue
                    form = canonical_form(g)
                    if form in seen:
                        continue
                    seen.add(form)
                    yield g


# ---------------------------------------------------------------------------
# Sums K of parts from {H1, H2, H3, H5} and compositions F (+) K
# ---------------------------------------------------------------------------
#
# A sum K is described by a partition of its slim vertices into part cells
# (singletons carry one fat slot as H1 or two as H2; non-adjacent pairs
# and one-edge triples carry a single hub slot) plus a partition of the
# fat slots into the actual fat vertices.  Every fat vertex of a part is
# adjacent to all slim vertices of that part, so cross-part slim adjacency
# is forced: two slim vertices in different parts are adjacent exactly
# when their parts share a fat vertex, and sharing two is never allowed.


_CELL_KINDS = {"H1": 1, "H2": 2, "H3": 1, "H5": 1}


def _cell_partitions(k, classes):
    """Yield typed slim-cell partitions of range(k).

    Each item: list of (cell_tuple, class_name, internal_edges) where
    internal_edges is a tuple of slim edges inside the cell (only H5
    cells have one).
    """
    singles = [cl for cl in ("H1", "H2") if cl in classes]

    def rec(remaining, acc):
        if not remaining:
            yield list(acc)
            return
        v = remaining[0]
        rest = remaining[1:]
        for cl in singles:
            acc.append(((v,), cl, ()))
            yield from rec(rest, acc)
            acc.pop()
        if "H3" in classes:
            for i, u in enumerate(rest):
                acc.append(((v, u), "H3", ()))
                yield from rec(rest[:i] + rest[i + 1:], acc)
                acc.pop()
        if "H5" in classes:
            for i, u in enumerate(rest):
                for j in range(i + 1, len(rest)):
                    w = rest[j]
                    cell = (v, u, w)
                    others = rest[:i] + rest[i + 1: j] + rest[j + 1:]
                    for edge in ((u, w), (v, u), (v, w)):
                        acc.append((cell, "H5", (edge,)))
                        yield from rec(others, acc)
                        acc.pop()
        return

    yield from rec(list(range(k)), [])


def _slot_partitions(slot_parts):
    """Partition fat slots into blocks: at most one slot per part per
    block, and two parts never share more than one block."""
    nslots = len(slot_parts)
    nparts = max(slot_parts) + 1 if nslots else 0

    def rec(i, blocks, block_parts, pair_used):
        if i == nslots:
            yield [tuple(b) for b in blocks]
            return
        p = slot_parts[i]
        for bi in range(len(blocks)):
            bp = block_parts[bi]
            if p in bp:
                continue
            pairs = [(min(p, q), max(p, q)) for q in bp]
            if any(pr in pair_used for pr in pairs):
                continue
            blocks[bi].append(i)
            bp.add(p)
            pair_used.update(pairs)
            yield from rec(i + 1, blocks, block_parts, pair_used)
            pair_used.difference_update(pairs)
            bp.remove(p)
            blocks[bi].pop()
        blocks.append([i])
        block_parts.append({p})
        yield from rec(i + 1, blocks, block_parts, pair_used)
        block_parts.pop()
        blocks.pop()

    yield from rec(0, [], [], set())


def _assemble_sum(k, cells, blocks, slot_parts):
    """Build the Hoffman graph of a typed cell partition plus slot blocks.

    Returns (graph, parts) with parts the vertex sets of the summands.
    """
    nf = len(blocks)
    adj = [0] * (k + nf)
    part_masks = []
    for cell, cls, edges in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        part_masks.append(m)
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    part_fats = [[] for _ in part_masks]
    for bi, block in enumerate(blocks):
        fv = k + bi
        members = {slot_parts[s] for s in block}
        nbhd = 0
        for p in members:
            nbhd |= part_masks[p]
            part_fats[p].append(fv)
        adj[fv] = nbhd
        for v in _iter_bits(nbhd):
            adj[v] |= 1 << fv
        mem = sorted(members)
        for a in range(len(mem)):
            for b in range(a + 1, len(mem)):
                for u in _iter_bits(part_masks[mem[a]]):
                    adj[u] |= part_masks[mem[b]]
                for u in _iter_bits(part_masks[mem[b]]):
                    adj[u] |= part_masks[mem[a]]
    g = HoffmanGraph(k, nf, adj, _checked=True)
    parts = []
    for p, (cell, cls, _e) in enumerate(cells):
        parts.append(frozenset(list(cell) + part_fats[p]))
    return g, parts


def sum_graphs(slim_count, classes=("H1", "H2", "H3", "H5"), component_count=None):
    """All sums K with parts from ``classes`` and ``slim_count`` slim
    vertices, one per isomorphism class; optionally filter by the number
    of connected components of K.

    Yields (graph, parts).
    """
    if slim_count > 6:
        raise IndexOutOfRange("sum enumeration capped at 6 slim vertices")
    if slim_count == 0:
        if component_count in (None, 0):
            yield EMPTY_GRAPH, []
        return
    seen = set()
    for cells in _cell_partitions(slim_count, frozenset(classes)):
        slot_parts = []
        for p, (cell, cls, _e) in enumerate(cells):
            slot_parts.extend([p] * _CELL_KINDS[cls])
        for blocks in _slot_partitions(slot_parts):
            g, parts = _assemble_sum(slim_count, cells, blocks, slot_parts)
            if component_count is not None:
                if len(g.connected_components()) != component_count:
                    continue
            form = canonical_form(g)
            if form in seen:
                continue
            seen.add(form)
            yield g, parts


class SharedFatConflict(HoffmanGraphError):
    """Two slim vertices in different summands would share two fat
    vertices."""


def _compose(f_graph, k_graph, fat_map):
    """Glue F onto K: ``fat_map[i]`` is the K-fat vertex identified with
    F-fat i (indexed from F's first fat).  Vertices of the result: F slim,
    K slim, K fats.  Raises SharedFatConflict when rule (iv) fails."""
    fs, ks = f_graph.slim_count, k_graph.slim_count
    kn = k_graph.n
    n = fs + kn
    adj = [0] * n

    def kv(v):
        return fs + v

    for v in range(fs):
        row = f_graph.adj[v]
        adj[v] |= row & f_graph.slim_mask
        for fi in _iter_bits(row & f_graph.fat_mask):
            g = kv(fat_map[fi - fs])
            adj[v] |= 1 << g
            adj[g] |= 1 << v
    for v in range(kn):
        for u in _iter_bits(k_graph.adj[v]):
            adj[kv(v)] |= 1 << kv(u)
    for x in range(fs):
        xf = adj[x] >> fs
        for y in range(ks):
            shared = (xf & k_graph.adj[y]) >> ks
            cnt = shared.bit_count()
            if cnt > 1:
                raise SharedFatConflict(f"slim pair shares {cnt} fat vertices")
            if cnt == 1:
                adj[x] |= 1 << kv(y)
                adj[kv(y)] |= 1 << x
    return HoffmanGraph(fs + ks, kn - ks, adj, _checked=True)


def enumerate_sums(
    f_graph,
    slim_count_k,
    classes=("H1", "H2", "H3", "H5"),
    component_count_k=None,
    require_fat_cover=True,
    connected_only=True,
):
    """Isomorphism classes of G = F (+) K.

    K ranges over sums of parts from ``classes`` with ``slim_count_k``
    slim vertices and, when given, ``component_count_k`` connected
    components; every fat vertex of F is identified with a fat vertex of
    K (the fat set of F embeds into that of K) in all ways compatible
    with the sum conditions.  Gluings that would make a slim pair share
    two fat vertices are skipped, not raised.
    """
    if slim_count_k > 6:
        raise IndexOutOfRange("sum enumeration capped at 6 slim vertices")
    nf = f_graph.fat_count
    if not require_fat_cover and nf:
        raise HoffmanGraphError("fat vertices of F must map into K")
    seen = set()
    for k_graph, _parts in sum_graphs(slim_count_k, classes, component_count_k):
        kfats = range(k_graph.slim_count, k_graph.n)
        if nf == 0:
            candidates = [()]
        else:
            candidates = itertools.permutations(kfats, nf)
        local = set()
        for fat_map in candidates:
            try:
                g = _compose(f_graph, k_graph, fat_map)
            except SharedFatConflict:
                continue
            if g.adj in local:
                continue
            local.add(g.adj)
            if connected_only and not g.is_connected():
                continue
            form = canonical_form(g)
            if form in seen:
                continue
            seen.add(form)
            yield g
