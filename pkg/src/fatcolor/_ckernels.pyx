# cython: language_level=3
"""Compiled hot kernels; see ``_pykernels`` for the reference semantics."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef int* _int_array(seq, Py_ssize_t size) except NULL:
    cdef int* out = <int*>malloc((size if size > 0 else 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(size):
        out[i] = seq[i]
    return out


cdef bint _fat_ok(int n, const int* off, const int* nb, const int* labels,
                  int k, int* counts) noexcept nogil:
    cdef long long a_num = 0, a_den = 0, b_num = 0, b_den = 0
    cdef long long c, d
    cdef int v, j, i, own
    for v in range(n):
        d = off[v + 1] - off[v]
        if d == 0:
            continue
        for i in range(k):
            counts[i] = 0
        for j in range(off[v], off[v + 1]):
            counts[labels[nb[j]]] += 1
        own = labels[v]
        for i in range(k):
            c = counts[i]
            if i == own:
                if b_den == 0:
                    b_num = c
                    b_den = d
                elif c * b_den != b_num * d:
                    return False
            else:
                if a_den == 0:
                    a_num = c
                    a_den = d
                elif c * a_den != a_num * d:
                    return False
    return True


def partition_is_fat(int n, offsets, nbrs, labels, int k):
    cdef int* off = _int_array(offsets, n + 1)
    cdef int* nb = NULL
    cdef int* lab = NULL
    cdef int* counts = NULL
    cdef bint ok
    try:
        nb = _int_array(nbrs, off[n])
        lab = _int_array(labels, n)
        counts = _int_array([0] * k, k)
        ok = _fat_ok(n, off, nb, lab, k, counts)
    finally:
        free(off)
        free(nb)
        free(lab)
        free(counts)
    return bool(ok)


cdef void _fill(int* labels, int* used, int start, int n, int k, int have) noexcept nogil:
    # Lexicographically least completion of labels[start:] opening the
    # k - have missing blocks as late as possible.
    cdef int r = k - have
    cdef int j
    cdef int u = have
    for j in range(start, n):
        if j >= n - r:
            labels[j] = have + (j - (n - r))
            u += 1
        else:
            labels[j] = 0
        used[j] = u


def first_fat_partition(int n, offsets, nbrs, int k):
    if k < 1 or k > n:
        return None
    cdef int* off = _int_array(offsets, n + 1)
    cdef int* nb = NULL
    cdef int* labels = NULL
    cdef int* used = NULL
    cdef int* counts = NULL
    cdef int i, nv, lim, nu, prev
    cdef bint found, advanced
    result = None
    try:
        nb = _int_array(nbrs, off[n])
        labels = _int_array([0] * n, n)
        used = _int_array([0] * n, n)
        counts = _int_array([0] * k, k)
        with nogil:
            labels[0] = 0
            used[0] = 1
            _fill(labels, used, 1, n, k, 1)
            found = False
            while True:
                if _fat_ok(n, off, nb, labels, k, counts):
                    found = True
                    break
                advanced = False
                i = n - 1
                while i >= 1 and not advanced:
                    prev = used[i - 1]
                    lim = prev if prev < k else k - 1
                    nv = labels[i] + 1
                    while nv <= lim:
                        nu = prev + 1 if nv == prev else prev
                        if k - nu <= n - 1 - i:
                            labels[i] = nv
                            used[i] = nu
                            _fill(labels, used, i + 1, n, k, nu)
                            advanced = True
                            break
                        nv += 1
                    i -= 1
                if not advanced:
                    break
        if found:
            result = [labels[i] for i in range(n)]
    finally:
        free(off)
        free(nb)
        free(labels)
        free(used)
        free(counts)
    return result


cdef struct _Clique:
    int n
    int W
    uint64_t* adj
    uint64_t* cand
    uint64_t* unc
    uint64_t* q
    int* cv
    int* cc
    int* cur
    int clen
    int* best
    int blen


cdef inline bint _nonempty(const uint64_t* s, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if s[w]:
            return True
    return False


cdef inline int _lowest(const uint64_t* s, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if s[w]:
            return w * 64 + __builtin_ctzll(s[w])
    return -1


cdef void _expand(_Clique* st, int depth) noexcept nogil:
    cdef int W = st.W
    cdef int n = st.n
    cdef uint64_t* cand = st.cand + depth * W
    cdef uint64_t* nxt = st.cand + (depth + 1) * W
    cdef uint64_t* row
    cdef int* cv = st.cv + depth * n
    cdef int* cc = st.cc + depth * n
    cdef int cnt = 0
    cdef int color = 0
    cdef int v, w, c, idx
    cdef uint64_t bit

    memcpy(st.unc, cand, W * sizeof(uint64_t))
    while _nonempty(st.unc, W):
        color += 1
        memcpy(st.q, st.unc, W * sizeof(uint64_t))
        while True:
            v = _lowest(st.q, W)
            if v < 0:
                break
            row = st.adj + v * W
            for w in range(W):
                st.q[w] &= ~row[w]
            bit = (<uint64_t>1) << (v & 63)
            st.q[v >> 6] &= ~bit
            st.unc[v >> 6] &= ~bit
            cv[cnt] = v
            cc[cnt] = color
            cnt += 1

    idx = cnt - 1
    while idx >= 0:
        v = cv[idx]
        c = cc[idx]
        if st.clen + c <= st.blen:
            return
        st.cur[st.clen] = v
        st.clen += 1
        row = st.adj + v * W
        for w in range(W):
            nxt[w] = cand[w] & row[w]
        if _nonempty(nxt, W):
            _expand(st, depth + 1)
        elif st.clen > st.blen:
            st.blen = st.clen
            memcpy(st.best, st.cur, st.clen * sizeof(int))
        st.clen -= 1
        cand[v >> 6] &= ~((<uint64_t>1) << (v & 63))
        idx -= 1


def max_clique(int n, offsets, nbrs):
    cdef _Clique st
    cdef int W = (n + 63) // 64
    cdef int v, j, pv, pu
    if n == 0:
        return []
    deg = [offsets[x + 1] - offsets[x] for x in range(n)]
    order = sorted(range(n), key=lambda x: (-deg[x], x))
    pos = [0] * n
    for j in range(n):
        pos[order[j]] = j

    st.n = n
    st.W = W
    st.adj = <uint64_t*>calloc(n * W, sizeof(uint64_t))
    st.cand = <uint64_t*>calloc((n + 2) * W, sizeof(uint64_t))
    st.unc = <uint64_t*>calloc(W, sizeof(uint64_t))
    st.q = <uint64_t*>calloc(W, sizeof(uint64_t))
    st.cv = <int*>calloc((n + 1) * n, sizeof(int))
    st.cc = <int*>calloc((n + 1) * n, sizeof(int))
    st.cur = <int*>calloc(n + 1, sizeof(int))
    st.best = <int*>calloc(n + 1, sizeof(int))
    try:
        if (st.adj == NULL or st.cand == NULL or st.unc == NULL or st.q == NULL
                or st.cv == NULL or st.cc == NULL or st.cur == NULL or st.best == NULL):
            raise MemoryError()
        for v in range(n):
            pv = pos[v]
            for j in range(offsets[v], offsets[v + 1]):
                pu = pos[nbrs[j]]
                st.adj[pv * W + (pu >> 6)] |= (<uint64_t>1) << (pu & 63)
        for v in range(n):
            st.cand[v >> 6] |= (<uint64_t>1) << (v & 63)
        st.clen = 0
        st.blen = 1
        st.best[0] = 0
        with nogil:
            _expand(&st, 0)
        result = sorted(order[st.best[j]] for j in range(st.blen))
    finally:
        free(st.adj)
        free(st.cand)
        free(st.unc)
        free(st.q)
        free(st.cv)
        free(st.cc)
        free(st.cur)
        free(st.best)
    return result
