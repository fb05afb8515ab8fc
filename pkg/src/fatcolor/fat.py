"""FAT colorings: exact verification, parameters and the FAT chromatic number.

A coloring with nonempty classes ``V_1..V_k`` is FAT when there are
``alpha, beta`` in ``[0, 1]`` such that every vertex ``v`` has exactly
``alpha * deg(v)`` neighbours in each class not containing it and
``beta * deg(v)`` neighbours in its own class.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from fatcolor import kernels
from fatcolor.graph import Graph, SearchSizeError

DEFAULT_MAX_ORDER = 12
MAX_ORDER_ENV = "FATCOLOR_MAX_ORDER"

DETERMINED = "determined"
UNCONSTRAINED = "unconstrained"


class PartitionError(ValueError):
    pass


class InvalidColoringError(ValueError):
    """Parameters were requested for a coloring that is not FAT."""

    def __init__(self, verdict: "FatVerdict") -> None:
        w = verdict.witness
        super().__init__(
            f"not a FAT coloring: vertex {w.vertex} has {w.observed} neighbours in class "
            f"{w.class_index}, {w.required} required"
        )
        self.verdict = verdict


@dataclass(frozen=True)
class Partition:
    """Surjective assignment of vertices to classes ``1..k``.

    ``class_of[v]`` is the 1-based class of vertex ``v``.
    """

    class_of: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise PartitionError("a partition needs at least one class")
        seen = set()
        for v, c in enumerate(self.class_of):
            if not 1 <= c <= self.k:
                raise PartitionError(f"vertex {v} has class {c} outside 1..{self.k}")
            seen.add(c)
        if len(seen) != self.k:
            missing = sorted(set(range(1, self.k + 1)) - seen)
            raise PartitionError(f"empty classes: {missing}")

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        """From 0-based labels ``0..k-1`` (e.g. a restricted growth string)."""
        k = max(labels) + 1 if len(labels) else 0
        return cls(tuple(c + 1 for c in labels), k)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> "Partition":
        class_of = [0] * n
        count = 0
        for i, block in enumerate(blocks, start=1):
            count = i
            for v in block:
                if not 0 <= v < n:
                    raise PartitionError(f"vertex {v} out of range for {n} vertices")
                if class_of[v]:
                    raise PartitionError(f"vertex {v} appears in two blocks")
                class_of[v] = i
        if 0 in class_of:
            raise PartitionError(f"vertex {class_of.index(0)} is not covered")
        return cls(tuple(class_of), count)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.class_of):
            out[c - 1].append(v)
        return tuple(tuple(b) for b in out)

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def labels(self) -> list[int]:
        return [c - 1 for c in self.class_of]


@dataclass(frozen=True)
class FatParameters:
    """The ``(alpha, beta)`` pair of a FAT coloring.

    ``kind == "unconstrained"`` means no positive-degree vertex pins the
    values down; ``alpha``/``beta`` are then None. For ``k == 1`` on a graph
    with edges, alpha never enters a defining equation; it is reported as 0
    and ``alpha_canonical`` is set.
    """

    kind: str
    k: int
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    alpha_canonical: bool = False

    @property
    def determined(self) -> bool:
        return self.kind == DETERMINED


@dataclass(frozen=True)
class FatWitness:
    vertex: int
    class_index: int
    observed: int
    required: Fraction


@dataclass(frozen=True)
class FatVerdict:
    status: str
    params: Optional[FatParameters] = None
    witness: Optional[FatWitness] = None

    @property
    def valid(self) -> bool:
        return self.status == "valid"


def _check_pairing(g: Graph, p: Partition) -> None:
    if p.n != g.vertex_count:
        raise PartitionError(
            f"partition covers {p.n} vertices but the graph has {g.vertex_count}"
        )


def verify_fat(g: Graph, p: Partition) -> FatVerdict:
    """Decide exactly whether ``p`` is a FAT coloring of ``g``.

    Each positive-degree vertex ``v`` and class ``V_i`` give the ratio
    ``e(v, V_i) / deg(v)``; every ratio for ``v`` outside ``V_i`` must equal
    one common alpha and every ratio for ``v`` inside must equal one common
    beta. Isolated vertices impose nothing. On failure the witness is the
    first (vertex, class) pair in lexicographic order that contradicts the
    value fixed by an earlier pair.
    """
    _check_pairing(g, p)
    k = p.k
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    any_positive = False
    for v, row in enumerate(g.adjacency):
        d = len(row)
        if d == 0:
            continue
        any_positive = True
        counts = [0] * (k + 1)
        for u in row:
            counts[p.class_of[u]] += 1
        own = p.class_of[v]
        for i in range(1, k + 1):
            ratio = Fraction(counts[i], d)
            if i == own:
                if beta is None:
                    beta = ratio
                elif ratio != beta:
                    return FatVerdict("invalid", witness=FatWitness(v, i, counts[i], beta * d))
            else:
                if alpha is None:
                    alpha = ratio
                elif ratio != alpha:
                    return FatVerdict("invalid", witness=FatWitness(v, i, counts[i], alpha * d))

    if not any_positive:
        return FatVerdict("valid", FatParameters(UNCONSTRAINED, k))
    if k == 1:
        # Own class holds every neighbour, so beta is 1 here.
        return FatVerdict("valid", FatParameters(DETERMINED, 1, Fraction(0), beta, alpha_canonical=True))
    params = FatParameters(DETERMINED, k, alpha, beta)
    assert beta + (k - 1) * alpha == 1, "degree-sum identity violated"
    return FatVerdict("valid", params)


def derive_parameters(g: Graph, p: Partition) -> FatParameters:
    verdict = verify_fat(g, p)
    if not verdict.valid:
        raise InvalidColoringError(verdict)
    params = verdict.params
    if params.determined and params.beta + (params.k - 1) * params.alpha != 1:
        raise AssertionError("beta + (k-1) alpha != 1 for a valid coloring")
    return params


def enumerate_partitions(n: int, k: int) -> Iterator[Partition]:
    """All partitions of ``0..n-1`` into exactly ``k`` blocks.

    Yielded in lexicographic order of their restricted growth strings.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if k > n:
        raise ValueError(f"cannot split {n} elements into {k} nonempty blocks")
    labels = [0] * n

    def rec(pos: int, used: int) -> Iterator[Partition]:
        if pos == n:
            if used == k:
                yield Partition(tuple(c + 1 for c in labels), k)
            return
        if k - used > n - pos:
            return
        for lab in range(min(used, k - 1) + 1):
            labels[pos] = lab
            yield from rec(pos + 1, used + (lab == used))

    yield from rec(1, 1)


def default_max_order() -> int:
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{MAX_ORDER_ENV} must be positive")
    return value


def _guard(g: Graph, max_order: Optional[int]) -> None:
    limit = default_max_order() if max_order is None else max_order
    if g.vertex_count > limit:
        raise SearchSizeError(
            f"exhaustive FAT search limited to {limit} vertices (graph has {g.vertex_count}); "
            f"raise the limit with max_order or {MAX_ORDER_ENV}"
        )


def fat_k_coloring_exists(
    g: Graph, k: int, *, max_order: Optional[int] = None
) -> Optional[tuple[Partition, FatParameters]]:
    """First FAT k-coloring in enumeration order, with its parameters."""
    _guard(g, max_order)
    if not 1 <= k <= g.vertex_count:
        raise ValueError(f"k must lie in 1..{g.vertex_count}, got {k}")
    offsets, nbrs = g.csr
    labels = kernels.first_fat_partition(g.vertex_count, offsets, nbrs, k)
    if labels is None:
        return None
    p = Partition.from_labels(labels)
    return p, derive_parameters(g, p)


class FatChromatic(NamedTuple):
    k: int
    partition: Partition
    params: FatParameters


def fat_chromatic_number(
    g: Graph, *, max_order: Optional[int] = None, direction: str = "descending"
) -> FatChromatic:
    """Largest k admitting a FAT k-coloring, with a witness.

    ``direction="ascending"`` scans every k and keeps the largest success;
    it exists to cross-check the default downward scan.
    """
    _guard(g, max_order)
    n = g.vertex_count
    if direction == "descending":
        for k in range(n, 0, -1):
            hit = fat_k_coloring_exists(g, k, max_order=n)
            if hit is not None:
                return FatChromatic(k, *hit)
        raise AssertionError("the one-class coloring is always FAT")
    if direction == "ascending":
        best: Optional[FatChromatic] = None
        for k in range(1, n + 1):
            hit = fat_k_coloring_exists(g, k, max_order=n)
            if hit is not None:
                best = FatChromatic(k, *hit)
        assert best is not None
        return best
    raise ValueError(f"direction must be 'descending' or 'ascending', not {direction!r}")
