"""Vertex/graph/digraph data model plus Hamming and box-product generators.

Vertices of generated graphs are coordinate tuples over [q_1] x ... x [q_n]
(1-based), stored in lexicographic order and addressed by dense indices.
Adjacency lives in one bitmask per vertex, so edge queries and neighborhood
set algebra are O(1) word operations.  Everything here is immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass


class DomainError(ValueError):
    """An argument lies outside the operation's domain."""


class ResourceLimitError(RuntimeError):
    """An input exceeds a configured size limit."""


@dataclass(frozen=True)
class Limits:
    """Size guards for the generators and the brute-force oracles."""

    max_vertices: int = 100_000          # graph generators
    max_clique_vertices: int = 64        # maximal-clique enumeration
    max_cover_vertices: int = 16         # theta_E / theta_V searches
    max_competition_vertices: int = 9    # competition-number search


DEFAULT_LIMITS = Limits()


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Vertex:
    """A point of [q_1] x ... x [q_n]; coordinates are 1-based."""

    coords: tuple[int, ...]
    dims: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) == 0 or len(self.coords) != len(self.dims):
            raise DomainError(
                f"coords {self.coords} do not fit dims {self.dims}")
        for c, q in zip(self.coords, self.dims):
            if not 1 <= c <= q:
                raise DomainError(
                    f"coordinate {c} outside [1, {q}] in {self.coords}")

    def drop_axis(self, axis: int) -> tuple[int, ...]:
        """Coordinates with the 1-based ``axis`` removed (the paper's
        projection of a vertex off one axis)."""
        if not 1 <= axis <= len(self.coords):
            raise DomainError(f"axis {axis} not in [1, {len(self.coords)}]")
        return self.coords[:axis - 1] + self.coords[axis:]

    def label(self) -> str:
        return ",".join(str(c) for c in self.coords)


def hamming_distance(x: Vertex, y: Vertex) -> int:
    """Number of coordinates where ``x`` and ``y`` differ."""
    if x.dims != y.dims:
        raise DomainError(f"dims mismatch: {x.dims} vs {y.dims}")
    return sum(1 for a, b in zip(x.coords, y.coords) if a != b)


def lex_compare(x: Vertex, y: Vertex) -> int:
    """Lexicographic comparison; returns -1, 0, or 1.

    This is the total order used for every acyclic ordering built by the
    construction routines.
    """
    if x.dims != y.dims:
        raise DomainError(f"dims mismatch: {x.dims} vs {y.dims}")
    if x.coords < y.coords:
        return -1
    if x.coords > y.coords:
        return 1
    return 0


def coords_to_index(dims: tuple[int, ...], coords: tuple[int, ...]) -> int:
    """Dense index of ``coords`` in the lexicographic vertex order."""
    idx = 0
    for c, q in zip(coords, dims):
        idx = idx * q + (c - 1)
    return idx


class Graph:
    """Finite simple undirected graph over an ordered vertex list.

    ``vertices`` may hold :class:`Vertex` objects (product graphs) or opaque
    hashable labels; ``dims`` is set for generated product graphs and None
    otherwise.  Edges are index pairs (i, j) with i < j.
    """

    __slots__ = ("vertices", "edges", "dims", "_adj", "_index", "_hash")

    def __init__(self, vertices, edges, dims=None):
        self.vertices = tuple(vertices)
        n = len(self.vertices)
        self.dims = tuple(dims) if dims is not None else None
        adj = [0] * n
        normalized = set()
        for i, j in edges:
            if i == j:
                raise DomainError(f"loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise DomainError(f"edge ({i},{j}) outside 0..{n - 1}")
            a, b = (i, j) if i < j else (j, i)
            normalized.add((a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        self.edges = frozenset(normalized)
        self._adj = tuple(adj)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != n:
            raise DomainError("duplicate vertex labels")
        self._hash = None

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self._adj[i] >> j & 1)

    def adjacency_mask(self, i: int) -> int:
        return self._adj[i]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(iter_bits(self._adj[i]))

    def degree(self, i: int) -> int:
        return self._adj[i].bit_count()

    def index_of(self, vertex) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise DomainError(f"{vertex!r} is not a vertex of this graph")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertices == other.vertices
                and self.edges == other.edges
                and self.dims == other.dims)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vertices, self.edges, self.dims))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.num_vertices}, m={self.num_edges}, dims={self.dims})"


class Digraph:
    """Digraph over real vertices plus trailing isolated prey labels.

    Indices 0..num_real-1 address the real vertices; num_real..n-1 address
    the isolated extras z_1..z_k.  The extras are pure prey: an out-arc from
    one of them is rejected.
    """

    __slots__ = ("real_vertices", "iso_labels", "arcs", "_out", "_in", "_hash")

    def __init__(self, real_vertices, iso_labels, arcs):
        self.real_vertices = tuple(real_vertices)
        self.iso_labels = tuple(iso_labels)
        r = len(self.real_vertices)
        n = r + len(self.iso_labels)
        out = [[] for _ in range(n)]
        into = [[] for _ in range(n)]
        normalized = set()
        for u, v in arcs:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"arc ({u},{v}) outside 0..{n - 1}")
            if u >= r:
                raise DomainError(
                    f"isolated prey vertex {self.iso_labels[u - r]} cannot have out-arcs")
            normalized.add((u, v))
        self.arcs = frozenset(normalized)
        for u, v in self.arcs:
            out[u].append(v)
            into[v].append(u)
        self._out = tuple(tuple(sorted(s)) for s in out)
        self._in = tuple(tuple(sorted(s)) for s in into)
        self._hash = None

    @property
    def num_real(self) -> int:
        return len(self.real_vertices)

    @property
    def num_iso(self) -> int:
        return len(self.iso_labels)

    @property
    def num_vertices(self) -> int:
        return self.num_real + self.num_iso

    def label(self, i: int):
        if i < self.num_real:
            return self.real_vertices[i]
        return self.iso_labels[i - self.num_real]

    def out_neighbors(self, i: int) -> tuple[int, ...]:
        return self._out[i]

    def in_neighbors(self, i: int) -> tuple[int, ...]:
        return self._in[i]

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.real_vertices == other.real_vertices
                and self.iso_labels == other.iso_labels
                and self.arcs == other.arcs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.real_vertices, self.iso_labels, self.arcs))
        return self._hash

    def __repr__(self):
        return (f"Digraph(real={self.num_real}, iso={self.num_iso}, "
                f"arcs={len(self.arcs)})")


@dataclass(frozen=True)
class AcyclicOrdering:
    """Vertex sequence in the prey-first convention: every arc points from a
    later vertex to an earlier one."""

    order: tuple[int, ...]

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def is_valid_for(self, digraph: Digraph) -> bool:
        if sorted(self.order) != list(range(digraph.num_vertices)):
            return False
        pos = self.positions()
        return all(pos[u] > pos[v] for u, v in digraph.arcs)


@dataclass(frozen=True)
class Cycle:
    """A directed cycle v_0 -> v_1 -> ... -> v_0 (the closing arc is implied)."""

    vertices: tuple[int, ...]


def topological_check(digraph: Digraph) -> AcyclicOrdering | Cycle:
    """Return a prey-first acyclic ordering, or a directed cycle witness.

    A vertex becomes eligible once all its out-neighbors (preys) are placed;
    among eligible vertices the smallest index goes first, so the result is
    deterministic.
    """
    n = digraph.num_vertices
    remaining_out = [len(digraph.out_neighbors(v)) for v in range(n)]
    ready = [v for v in range(n) if remaining_out[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for u in digraph.in_neighbors(v):
            remaining_out[u] -= 1
            if remaining_out[u] == 0:
                heapq.heappush(ready, u)
    if len(order) == n:
        return AcyclicOrdering(tuple(order))
    return Cycle(_find_cycle(digraph, set(range(n)) - set(order)))


def _find_cycle(digraph: Digraph, stuck: set[int]) -> tuple[int, ...]:
    # every vertex in `stuck` has an out-arc into `stuck`, so walking
    # out-arcs must revisit a vertex
    start = min(stuck)
    path, seen = [], {}
    v = start
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        v = min(u for u in digraph.out_neighbors(v) if u in stuck)
    cycle = path[seen[v]:]
    shift = cycle.index(min(cycle))
    return tuple(cycle[shift:] + cycle[:shift])


def _product_graph(dims: tuple[int, ...], limits: Limits) -> Graph:
    total = math.prod(dims)
    if total > limits.max_vertices:
        raise ResourceLimitError(
            f"product graph on {total} vertices exceeds the "
            f"max_vertices limit of {limits.max_vertices}")
    ranges = [range(1, q + 1) for q in dims]
    vertices = [Vertex(c, dims) for c in itertools.product(*ranges)]
    # strides of the mixed-radix index; bumping coordinate j by d moves the
    # index by d * stride[j]
    strides = [0] * len(dims)
    acc = 1
    for j in range(len(dims) - 1, -1, -1):
        strides[j] = acc
        acc *= dims[j]
    edges = []
    for i, v in enumerate(vertices):
        for j, q in enumerate(dims):
            c = v.coords[j]
            edges.extend((i, i + (c2 - c) * strides[j]) for c2 in range(c + 1, q + 1))
    return Graph(vertices, edges, dims=dims)


def hamming_graph(n: int, q: int, limits: Limits = DEFAULT_LIMITS) -> Graph:
    """The graph on [q]^n with edges between tuples at Hamming distance 1."""
    if n < 1 or q < 1:
        raise DomainError(f"hamming_graph needs n >= 1 and q >= 1, got ({n}, {q})")
    return _product_graph((q,) * n, limits)


def box_graph(dims, limits: Limits = DEFAULT_LIMITS) -> Graph:
    """Cartesian product of complete graphs K_{q_1} [] ... [] K_{q_n}.

    Tuples are adjacent iff they differ in exactly one coordinate.  Every
    factor must have size at least 2.
    """
    dims = tuple(dims)
    if not dims or any(q < 2 for q in dims):
        raise DomainError(f"box factors must all have size >= 2, got {dims}")
    return _product_graph(dims, limits)
