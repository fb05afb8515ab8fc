"""Finite simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

from fatcolor import kernels

HOM_SEARCH_LIMIT = 10


class GraphError(ValueError):
    pass


class SearchSizeError(ValueError):
    """An exhaustive search was asked to run beyond its size guard."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Build
    instances through :meth:`from_edges` or the named constructors; the
    initialiser validates symmetry, the absence of loops and id ranges.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adjacency) != n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows for {n} vertices")
        for v, row in enumerate(self.adjacency):
            prev = -1
            for u in row:
                if not 0 <= u < n:
                    raise GraphError(f"neighbour id {u} of vertex {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if u <= prev:
                    raise GraphError(f"neighbours of {v} not strictly increasing")
                prev = u
        sets = self._neighbor_sets
        for v, row in enumerate(self.adjacency):
            for u in row:
                if v not in sets[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from 0-based edge pairs. Repeated edges are merged; loops rejected."""
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(tuple(sorted(r)) for r in rows))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(tuple(u for u in range(n) if u != v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(() for _ in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least three vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def disjoint_union(cls, *parts: "Graph") -> "Graph":
        rows: list[tuple[int, ...]] = []
        shift = 0
        for g in parts:
            rows.extend(tuple(u + shift for u in row) for row in g.adjacency)
            shift += g.vertex_count
        return cls(shift, tuple(rows))

    @property
    def order(self) -> int:
        return self.vertex_count

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if v > u:
                    yield (u, v)

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.adjacency)

    @cached_property
    def csr(self) -> tuple[list[int], list[int]]:
        offsets = [0]
        nbrs: list[int] = []
        for row in self.adjacency:
            nbrs.extend(row)
            offsets.append(len(nbrs))
        return offsets, nbrs

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v} out of range 0..{self.vertex_count - 1}")


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def count_neighbors_in(g: Graph, v: int, s: Iterable[int]) -> int:
    """Number of neighbours of ``v`` lying in ``s``."""
    nb = g.neighbors(v)
    members = set(s)
    for u in members:
        g._check_vertex(u)
    return sum(1 for u in nb if u in members)


def is_regular(g: Graph) -> Optional[int]:
    """The common degree if every vertex has it, else None."""
    degrees = {len(r) for r in g.adjacency}
    return degrees.pop() if len(degrees) == 1 else None


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph on ``s`` with vertices relabelled by their sorted order."""
    verts = sorted(set(s))
    if not verts:
        raise GraphError("induced subgraph of an empty vertex set")
    for v in verts:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(verts)}
    rows = tuple(
        tuple(index[u] for u in g.adjacency[v] if u in index) for v in verts
    )
    return Graph(len(verts), rows)


def maximum_clique(g: Graph) -> list[int]:
    """A maximum clique as a sorted vertex list (exact branch and bound)."""
    offsets, nbrs = g.csr
    return kernels.max_clique(g.vertex_count, offsets, nbrs)


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


def homomorphism_exists(
    g: Graph, h: Graph, *, limit: int = HOM_SEARCH_LIMIT
) -> Optional[tuple[int, ...]]:
    """Lexicographically least homomorphism ``g -> h`` or None.

    Plain backtracking over images in vertex order, so both graphs must have
    at most ``limit`` vertices. For larger graphs compare clique numbers with
    :func:`hom_equivalence_certificate` instead.
    """
    if g.vertex_count > limit or h.vertex_count > limit:
        raise SearchSizeError(
            f"homomorphism search is limited to {limit} vertices per graph "
            f"(got {g.vertex_count} and {h.vertex_count}); "
            "use hom_equivalence_certificate for a clique-number certificate"
        )
    n, m = g.vertex_count, h.vertex_count
    hsets = h._neighbor_sets
    earlier = [[u for u in g.adjacency[v] if u < v] for v in range(n)]
    image = [0] * n

    def place(v: int) -> bool:
        if v == n:
            return True
        for x in range(m):
            if all(image[u] in hsets[x] for u in earlier[v]):
                image[v] = x
                if place(v + 1):
                    return True
        return False

    return tuple(image) if place(0) else None


@dataclass(frozen=True)
class EquivalenceCertificate:
    """Outcome of the clique-number test for homomorphic equivalence.

    Only ``"not-equivalent"`` and ``"inconclusive"`` are ever produced: equal
    clique numbers are necessary for equivalence but not sufficient.
    """

    status: str
    omega_g: int
    omega_h: int

    @property
    def not_equivalent(self) -> bool:
        return self.status == "not-equivalent"


def certificate_from_omegas(omega_g: int, omega_h: int) -> EquivalenceCertificate:
    status = "not-equivalent" if omega_g != omega_h else "inconclusive"
    return EquivalenceCertificate(status, omega_g, omega_h)


def hom_equivalence_certificate(g: Graph, h: Graph) -> EquivalenceCertificate:
    return certificate_from_omegas(clique_number(g), clique_number(h))
