# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py`` for graphs with at most 64 vertices."""

ctypedef unsigned long long mask_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef inline int _lowbit_index(mask_t x) nogil:
    return __builtin_ctzll(x)


cdef bint _connected(mask_t* adj, mask_t alive) nogil:
    cdef mask_t seen, frontier, low, new
    if alive == 0:
        return True
    seen = alive & (~alive + 1)
    frontier = seen
    while frontier:
        low = frontier & (~frontier + 1)
        frontier ^= low
        new = adj[_lowbit_index(low)] & alive & ~seen
        seen |= new
        frontier |= new
    return seen == alive


cdef bint _k_connected(mask_t* adj, int n, int k) nogil:
    cdef mask_t full = (<mask_t>1 << n) - 1 if n < 64 else <mask_t>0xFFFFFFFFFFFFFFFF
    cdef int a, b
    if not _connected(adj, full):
        return False
    if k >= 2:
        for a in range(n):
            if not _connected(adj, full & ~(<mask_t>1 << a)):
                return False
    if k >= 3:
        for a in range(n):
            for b in range(a + 1, n):
                if not _connected(adj, full & ~(<mask_t>1 << a) & ~(<mask_t>1 << b)):
                    return False
    return True


def connected(adj, alive):
    cdef mask_t buf[64]
    cdef int i, n = len(adj)
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    for i in range(n):
        buf[i] = adj[i]
    return _connected(buf, alive)


def is_k_connected(adj, int n, int k):
    cdef mask_t buf[64]
    cdef int i
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    if k > 3:
        # subset enumeration beyond pairs is left to the Python kernel
        from fanforge._kernels_py import is_k_connected as slow
        return slow(adj, n, k)
    for i in range(n):
        buf[i] = adj[i]
    return _k_connected(buf, n, k)


def forest_rank(int n, us, vs):
    cdef int parent[256]
    cdef int i, a, b, r = 0, m = len(us)
    if n > 256:
        raise ValueError("compiled kernel supports at most 256 vertices")
    for i in range(n):
        parent[i] = i
    for i in range(m):
        a = us[i]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        b = vs[i]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            parent[a] = b
            r += 1
    return r
