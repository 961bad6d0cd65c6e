"""Two-colored graph model: slim and fat vertices.

A Hoffman graph is a finite simple graph whose vertices carry one of two
labels, *slim* or *fat*, such that

  (1) every fat vertex has at least one slim neighbour, and
  (2) fat vertices are pairwise non-adjacent.

A graph with no fat vertices at all (an ordinary graph) is called *slim*.
Vertices are indexed with slim vertices first (0 .. slim_count-1) and fat
vertices after them; every file format and canonical form in this package
uses that convention so that slim-restriction masks are contiguous.

Adjacency is stored as one Python int bitmask per vertex, which makes
neighbourhood intersections, induced-subgraph extraction and the search
routines built on top of this module cheap.  Graphs are immutable after
construction and all operations here are pure functions, so instances can
be shared freely across threads or worker processes.

Besides the data model this module provides:

  * closure/deletion operators: ``induced_slim_closure`` takes the subgraph
    induced on a set of slim vertices together with all their fat
    neighbours, and ``delete_slim`` removes slim vertices (dropping fat
    vertices that lose their last slim neighbour);
  * a canonical form (colour refinement with individualization and
    automorphism pruning) deciding colour-preserving isomorphism;
  * an induced-subgraph embedding search (``find_embedding``);
  * connectivity helpers and the non-adjacent deletable pair routine
    (a connected graph that is neither complete nor a cycle always has a
    non-adjacent pair whose removal keeps it connected);
  * a plain text interchange format and a DOT exporter.
"""

from __future__ import annotations

import itertools


class HoffmanGraphError(Exception):
    """Base class for errors raised by this package."""


class FatFatEdge(HoffmanGraphError):
    """Two fat vertices are adjacent."""


class IsolatedFat(HoffmanGraphError):
    """A fat vertex has no slim neighbour."""


class IndexOutOfRange(HoffmanGraphError):
    """A vertex index is outside the graph."""


class NotConnected(HoffmanGraphError):
    """A connected graph was required."""


def _iter_bits(mask):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class HoffmanGraph:
    """Immutable two-colored graph; see the module docstring.

    ``adj`` is a tuple of ints, ``adj[v]`` having bit ``u`` set iff ``u``
    and ``v`` are adjacent.
    """

    __slots__ = ("slim_count", "fat_count", "adj", "_canon", "_hash")

    def __init__(self, slim_count, fat_count, adj, _checked=False):
        self.slim_count = slim_count
        self.fat_count = fat_count
        self.adj = tuple(adj)
        self._canon = None
        self._hash = None
        if not _checked:
            self._validate()

    # -- construction -------------------------------------------------

    def _validate(self):
        n = self.slim_count + self.fat_count
        if len(self.adj) != n:
            raise IndexOutOfRange("adjacency length does not match vertex count")
        full = (1 << n) - 1
        slim_mask = (1 << self.slim_count) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise IndexOutOfRange("adjacency references vertex outside range")
            if (row >> v) & 1:
                raise HoffmanGraphError("self-loops are not allowed")
            for u in _iter_bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise HoffmanGraphError("adjacency is not symmetric")
        for f in range(self.slim_count, n):
            row = self.adj[f]
            if row & ~slim_mask:
                raise FatFatEdge("fat vertices must be pairwise non-adjacent")
            if not row & slim_mask:
                raise IsolatedFat("every fat vertex needs a slim neighbour")

    @classmethod
    def build(cls, slim_count, fat_count, edges):
        """Build a graph from an edge list, enforcing both label conditions."""
        if slim_count < 0 or fat_count < 0:
            raise IndexOutOfRange("vertex counts must be non-negative")
        n = slim_count + fat_count
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise HoffmanGraphError("self-loops are not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(slim_count, fat_count, adj)

    @classmethod
    def slim(cls, n, edges):
        """Build a slim graph (no fat vertices) on ``n`` vertices."""
        return cls.build(n, 0, edges)

    # -- basic accessors ----------------------------------------------

    @property
    def n(self):
        return self.slim_count + self.fat_count

    @property
    def slim_mask(self):
        return (1 << self.slim_count) - 1

    @property
    def fat_mask(self):
        return ((1 << self.n) - 1) ^ self.slim_mask

    def is_slim_vertex(self, v):
        return v < self.slim_count

    def is_slim_graph(self):
        return self.fat_count == 0

    def degree(self, v):
        return self.adj[v].bit_count()

    def slim_neighbors(self, v):
        return self.adj[v] & self.slim_mask

    def fat_neighbors(self, v):
        return self.adj[v] & self.fat_mask

    def adjacent(self, u, v):
        return (self.adj[u] >> v) & 1 == 1

    def edges(self):
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            for u in _iter_bits(row):
                yield (v, v + 1 + u)

    def edge_count(self):
        return sum(r.bit_count() for r in self.adj) // 2

    def __eq__(self, other):
        return (
            isinstance(other, HoffmanGraph)
            and self.slim_count == other.slim_count
            and self.fat_count == other.fat_count
            and self.adj == other.adj
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.slim_count, self.fat_count, self.adj))
        return self._hash

    def __repr__(self):
        return f"HoffmanGraph(s={self.slim_count}, f={self.fat_count}, m={self.edge_count()})"

    # -- induced subgraphs --------------------------------------------

    def _check_slim_set(self, vertices):
        s = set(vertices)
        for v in s:
            if not (0 <= v < self.slim_count):
                raise IndexOutOfRange(f"{v} is not a slim vertex")
        return s

    def closure_vertices(self, slim_set):
        """The given slim vertices together with all their fat neighbours."""
        s = self._check_slim_set(slim_set)
        fats = 0
        for v in s:
            fats |= self.fat_neighbors(v)
        return sorted(s) + [f for f in _iter_bits(fats)]

    def induced_on(self, vertices):
        """Induced subgraph on ``vertices`` (reindexed, slim-first order).

        The vertex list must keep every fat vertex attached to a slim one,
        otherwise construction fails; callers pick closures to ensure that.
        Returns the subgraph together with the list mapping new indices to
        old vertices.
        """
        verts = sorted(set(vertices), key=lambda v: (v >= self.slim_count, v))
        for v in verts:
            if not (0 <= v < self.n):
                raise IndexOutOfRange(f"vertex {v} outside graph")
        pos = {v: i for i, v in enumerate(verts)}
        slim = sum(1 for v in verts if v < self.slim_count)
        adj = [0] * len(verts)
        for i, v in enumerate(verts):
            for u in _iter_bits(self.adj[v]):
                j = pos.get(u)
                if j is not None:
                    adj[i] |= 1 << j
        return HoffmanGraph(slim, len(verts) - slim, adj), verts

    def induced_slim_closure(self, slim_set):
        """Subgraph induced on a slim set plus all fat neighbours of it."""
        g, _ = self.induced_on(self.closure_vertices(slim_set))
        return g

    def delete_slim(self, slim_set):
        """Remove slim vertices; fat vertices left without slim support drop."""
        s = self._check_slim_set(slim_set)
        keep = [v for v in range(self.slim_count) if v not in s]
        return self.induced_slim_closure(keep)

    def slim_subgraph(self):
        """The slim graph induced on the slim vertices."""
        adj = [self.adj[v] & self.slim_mask for v in range(self.slim_count)]
        return HoffmanGraph(self.slim_count, 0, adj, _checked=True)

    # -- connectivity ---------------------------------------------------

    def connected_components(self):
        """Partition of the vertices into components (sorted vertex lists)."""
        seen = 0
        out = []
        for v in range(self.n):
            if (seen >> v) & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in _iter_bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(list(_iter_bits(comp)))
        return out

    def is_connected(self):
        if self.n == 0:
            return True
        return len(self.connected_components()) == 1

    def _connected_within(self, mask):
        """Is the induced subgraph on the bitmask ``mask`` connected?"""
        if mask == 0:
            return True
        start = mask & -mask
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for u in _iter_bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & mask & ~comp
            comp |= frontier
        return comp == mask

    def is_complete_slim(self):
        """Is this a slim complete graph?"""
        if self.fat_count:
            return False
        full = self.slim_mask
        return all(self.adj[v] == full ^ (1 << v) for v in range(self.slim_count))

    def is_cycle_slim(self):
        """Is this a slim cycle (n >= 3, connected, 2-regular)?"""
        if self.fat_count or self.slim_count < 3:
            return False
        if any(self.adj[v].bit_count() != 2 for v in range(self.slim_count)):
            return False
        return self.is_connected()

    def find_deletable_nonadjacent_pair(self):
        """A non-adjacent pair whose removal keeps the graph connected.

        Defined for connected slim graphs.  Complete graphs and cycles have
        no such pair and yield ``None``; every other connected graph has
        one.  Returns the lexicographically first pair found.
        """
        if self.fat_count:
            raise HoffmanGraphError("defined for slim graphs only")
        if not self.is_connected():
            raise NotConnected("input graph must be connected")
        if self.is_complete_slim() or self.is_cycle_slim():
            return None
        full = self.slim_mask
        for x in range(self.slim_count):
            non = full & ~self.adj[x] & ~(1 << x)
            for y in _iter_bits(non):
                if y <= x:
                    continue
                rest = full & ~(1 << x) & ~(1 << y)
                if self._connected_within(rest):
                    return (x, y)
        return None

    # -- text formats ----------------------------------------------------

    def to_text(self):
        """Serialize: header ``s=<slim> f=<fat>`` then one ``u v`` per line."""
        lines = [f"s={self.slim_count} f={self.fat_count}"]
        for u, v in self.edges():
            lines.append(f"{u} {v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        """Parse the plain text format; ``#`` comments and blanks ignored."""
        lines = [
            ln.strip()
            for ln in text.splitlines()
            if ln.strip() and not ln.strip().startswith("#")
        ]
        if not lines:
            raise HoffmanGraphError("empty graph text")
        head = lines[0].split()
        try:
            slim = int(head[0].removeprefix("s="))
            fat = int(head[1].removeprefix("f="))
        except (ValueError, IndexError):
            raise HoffmanGraphError(f"bad header line {lines[0]!r}") from None
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise HoffmanGraphError(f"bad edge line {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
        return cls.build(slim, fat, edges)

    def to_dot(self, name="H"):
        """GraphViz DOT text; slim vertices small filled dots, fat large."""
        out = [f"graph {name} {{"]
        for v in range(self.slim_count):
            out.append(f'  {v} [shape=circle, style=filled, fillcolor=black, width=0.12, label=""];')
        for v in range(self.slim_count, self.n):
            out.append(f'  {v} [shape=circle, width=0.35, label=""];')
        for u, v in self.edges():
            out.append(f"  {u} -- {v};")
        out.append("}")
        return "\n".join(out) + "\n"


EMPTY_GRAPH = HoffmanGraph(0, 0, ())


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------
#
# Iterated colour refinement starting from the slim/fat partition, with
# backtracking over the refined partition (individualization) and pruning
# by the automorphisms discovered along the way.  The canonical form is the
# minimal adjacency byte string over all leaves of the search tree; two
# graphs get the same form exactly when a colour-preserving isomorphism
# exists.  Graph sizes in this package stay below ~25 vertices, so no
# external canonical labelling tool is needed.


def _refine(adj, cells):
    """Equitable refinement of an ordered partition.

    Cells split by their neighbour counts into every current cell; split
    parts are ordered by count vector, which is label-invariant, so two
    isomorphic graphs refine to corresponding partitions.
    """
    cells = [c[:] for c in cells]
    changed = True
    while changed:
        changed = False
        masks = [_mask_of(c) for c in cells]
        new_cells = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups = {}
            for v in c:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(c)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        cells = new_cells
    return cells


def _adjacency_key(adj, lab):
    """Upper-triangle adjacency bits under the labelling, packed to bytes."""
    n = len(lab)
    bits = 0
    k = 0
    for i in range(n):
        row = adj[lab[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | ((row >> lab[j]) & 1)
            k += 1
    return bits.to_bytes((k + 7) // 8 or 1, "big")


class _CanonSearch:
    __slots__ = ("adj", "first", "best", "autos")

    def __init__(self, adj):
        self.adj = adj
        self.first = None
        self.best = None
        self.autos = []

    def _record_auto(self, lab1, lab2):
        n = len(lab1)
        perm = [0] * n
        for i in range(n):
            perm[lab1[i]] = lab2[i]
        if any(perm[i] != i for i in range(n)):
            self.autos.append(perm)

    def _leaf(self, cells):
        lab = [c[0] for c in cells]
        key = _adjacency_key(self.adj, lab)
        if self.first is None:
            self.first = (key, lab)
            self.best = (key, lab)
            return
        if key == self.first[0]:
            self._record_auto(self.first[1], lab)
        if key < self.best[0]:
            self.best = (key, lab)
        elif key == self.best[0] and self.best is not self.first:
            self._record_auto(self.best[1], lab)

    def run(self, cells, fixed):
        cells = _refine(self.adj, cells)
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target < 0:
            self._leaf(cells)
            return
        cell = cells[target]
        rest_template = cells[:target]
        tail = cells[target + 1:]
        tried = []
        for v in cell:
            pruned = False
            for a in self.autos:
                if all(a[x] == x for x in fixed):
                    for u in tried:
                        if a[u] == v:
                            pruned = True
                            break
                if pruned:
                    break
            if pruned:
                continue
            tried.append(v)
            sub = rest_template + [[v], [u for u in cell if u != v]] + tail
            fixed.append(v)
            self.run(sub, fixed)
            fixed.pop()


def canonical_data(g):
    """Canonical labelling: (form bytes, labelling, automorphism orbits).

    The labelling maps canonical positions to original vertices.  Orbits
    are over the full vertex set under the discovered automorphism group.
    """
    n = g.n
    header = bytes([g.slim_count, g.fat_count])
    if n == 0:
        return header, [], []
    cells = []
    if g.slim_count:
        cells.append(list(range(g.slim_count)))
    if g.fat_count:
        cells.append(list(range(g.slim_count, n)))
    search = _CanonSearch(g.adj)
    search.run(cells, [])
    key, lab = search.best
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in search.autos:
        for v in range(n):
            ra, rb = find(v), find(a[v])
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    orbits = sorted(groups.values())
    return header + key, lab, orbits


def canonical_form(g):
    """Byte string equal for two graphs iff they are colour-preserving
    isomorphic (slim maps to slim, fat to fat)."""
    if g._canon is None:
        g._canon = canonical_data(g)[0]
    return g._canon


def automorphism_orbits(g):
    """Vertex orbits of the automorphism group (colour preserving)."""
    return canonical_data(g)[2]


def isomorphic(g, h):
    return canonical_form(g) == canonical_form(h)


def relabeled(g, perm):
    """Copy of ``g`` with vertex ``v`` renamed to ``perm[v]``.

    ``perm`` must map slim vertices to slim indices and fat to fat.
    """
    n = g.n
    adj = [0] * n
    for v in range(n):
        for u in _iter_bits(g.adj[v]):
            adj[perm[v]] |= 1 << perm[u]
    return HoffmanGraph(g.slim_count, g.fat_count, adj)


# ---------------------------------------------------------------------------
# Induced embedding search
# ---------------------------------------------------------------------------


def find_embedding(pattern, host):
    """An injective colour-preserving induced embedding, or ``None``.

    Both adjacency and non-adjacency are preserved (induced subgraph
    semantics).  Uses degree/colour pruning and bitset domain filtering.
    Returns a tuple ``m`` with ``m[v]`` the host vertex of pattern
    vertex ``v``.
    """
    pn = pattern.n
    if pn == 0:
        return ()
    if pattern.slim_count > host.slim_count or pattern.fat_count > host.fat_count:
        return None
    host_slim = host.slim_mask
    host_fat = host.fat_mask
    domains = []
    for v in range(pn):
        color_mask = host_slim if v < pattern.slim_count else host_fat
        deg = pattern.degree(v)
        dom = 0
        for w in _iter_bits(color_mask):
            if host.adj[w].bit_count() >= deg:
                dom |= 1 << w
        if not dom:
            return None
        domains.append(dom)
    order = sorted(range(pn), key=lambda v: (-pattern.degree(v), v))
    padj = pattern.adj
    hadj = host.adj
    full = (1 << host.n) - 1
    mapping = [-1] * pn

    def rec(i, doms):
        if i == pn:
            return True
        v = order[i]
        cand = doms[v]
        later = order[i + 1:]
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            mapping[v] = w
            ok = True
            new = list(doms)
            for u in later:
                if (padj[v] >> u) & 1:
                    d = new[u] & hadj[w]
                else:
                    d = new[u] & ~hadj[w] & full & ~low
                if not d:
                    ok = False
                    break
                new[u] = d
            if ok and rec(i + 1, new):
                return True
            mapping[v] = -1
        return False

    if rec(0, domains):
        return tuple(mapping)
    return None


def has_induced_subgraph(pattern, host):
    return find_embedding(pattern, host) is not None


# ---------------------------------------------------------------------------
# Small constructors used across the package and its tests
# ---------------------------------------------------------------------------


def slim_complete(n):
    return HoffmanGraph.slim(n, itertools.combinations(range(n), 2))


def slim_cycle(n):
    return HoffmanGraph.slim(n, [(i, (i + 1) % n) for i in range(n)])


def slim_path(n):
    return HoffmanGraph.slim(n, [(i, i + 1) for i in range(n - 1)])
