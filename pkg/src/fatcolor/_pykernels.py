"""Pure-Python hot kernels.

Same call signatures as the compiled ``_ckernels`` module; used when the
extension is not built or when ``FATCOLOR_PURE_PYTHON=1``. Graphs arrive in
CSR form: ``offsets`` has ``n + 1`` entries and ``nbrs[offsets[v]:offsets[v+1]]``
lists the neighbours of ``v``. Partition labels are 0-based.
"""

from __future__ import annotations

from typing import Optional, Sequence


def _neighbor_lists(n: int, offsets: Sequence[int], nbrs: Sequence[int]) -> list[list[int]]:
    return [list(nbrs[offsets[v]:offsets[v + 1]]) for v in range(n)]


def _fat_ok(adj: list[list[int]], labels: Sequence[int], k: int) -> bool:
    # Cross-multiplied ratio comparison; (num, den) pairs with den = deg(v).
    a_num = a_den = b_num = b_den = 0
    for v, row in enumerate(adj):
        d = len(row)
        if d == 0:
            continue
        counts = [0] * k
        for u in row:
            counts[labels[u]] += 1
        own = labels[v]
        for i in range(k):
            c = counts[i]
            if i == own:
                if b_den == 0:
                    b_num, b_den = c, d
                elif c * b_den != b_num * d:
                    return False
            else:
                if a_den == 0:
                    a_num, a_den = c, d
                elif c * a_den != a_num * d:
                    return False
    return True


def partition_is_fat(
    n: int, offsets: Sequence[int], nbrs: Sequence[int], labels: Sequence[int], k: int
) -> bool:
    """Return True when ``labels`` (k classes, 0-based) is a FAT coloring."""
    return _fat_ok(_neighbor_lists(n, offsets, nbrs), labels, k)


def first_fat_partition(
    n: int, offsets: Sequence[int], nbrs: Sequence[int], k: int
) -> Optional[list[int]]:
    """Lexicographically least restricted growth string with exactly ``k``
    blocks that is a FAT coloring, or None."""
    if k < 1 or k > n:
        return None
    adj = _neighbor_lists(n, offsets, nbrs)
    labels = [0] * n

    def rec(pos: int, used: int) -> bool:
        if pos == n:
            return used == k and _fat_ok(adj, labels, k)
        # Enough positions must remain to open the missing blocks.
        if k - used > n - pos:
            return False
        top = used if used < k else k - 1
        for lab in range(top + 1):
            labels[pos] = lab
            if rec(pos + 1, used + 1 if lab == used else used):
                return True
        return False

    labels[0] = 0
    if rec(1, 1):
        return labels
    return None


def max_clique(n: int, offsets: Sequence[int], nbrs: Sequence[int]) -> list[int]:
    """A maximum clique (sorted vertex ids) via branch and bound.

    Candidates are bounded by a greedy sequential colouring: a set coloured
    with c colours cannot hold a clique larger than c.
    """
    if n == 0:
        return []
    deg = [offsets[v + 1] - offsets[v] for v in range(n)]
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(order)}
    masks = [0] * n
    for v in range(n):
        m = 0
        for u in nbrs[offsets[v]:offsets[v + 1]]:
            m |= 1 << pos[u]
        masks[pos[v]] = m

    best: list[int] = [order[0]]
    best_len = 1
    clique: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best, best_len
        colored: list[tuple[int, int]] = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            q = uncolored
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~(masks[v] | low)
                uncolored &= ~low
                colored.append((v, color))
        for v, c in reversed(colored):
            if len(clique) + c <= best_len:
                return
            clique.append(v)
            sub = cand & masks[v]
            if sub:
                expand(sub)
            elif len(clique) > best_len:
                best_len = len(clique)
                best = [order[w] for w in clique]
            clique.pop()
            cand &= ~(1 << v)

    expand((1 << n) - 1)
    return sorted(best)
