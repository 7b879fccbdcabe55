# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Twin of ``strsearch._pykernel`` with the same surface and identical counter
semantics; only the data layout differs. The suffix tree stores node fields
in flat C arrays and keeps children as sibling chains sorted by first edge
byte, so construction and queries run without touching Python objects.
"""

from cpython.bytes cimport PyBytes_AS_STRING
from libc.stdlib cimport free, malloc

ctypedef long long i64

NAME = "c"


# ---------------------------------------------------------------------------
# classical matchers
# ---------------------------------------------------------------------------

def naive_search(bytes text, bytes pat, counters=None):
    cdef Py_ssize_t n = len(text), m = len(pat)
    cdef const unsigned char* t = <const unsigned char*>PyBytes_AS_STRING(text)
    cdef const unsigned char* p = <const unsigned char*>PyBytes_AS_STRING(pat)
    cdef list out = []
    cdef Py_ssize_t i, j
    cdef i64 comps = 0, aligns = 0
    trace = counters.alignment_trace if counters is not None else None
    cdef bint tracing = trace is not None
    for i in range(n - m + 1):
        aligns += 1
        if tracing:
            trace.append(i)
        j = 0
        while j < m:
            comps += 1
            if t[i + j] != p[j]:
                break
            j += 1
        if j == m:
            out.append(i)
    if counters is not None:
        counters.comparisons += comps
        counters.alignments += aligns
    return out


cdef void _fill_lps(const unsigned char* p, Py_ssize_t m, i64* lps) noexcept:
    cdef Py_ssize_t length = 0, i = 1
    lps[0] = 0
    while i < m:
        if p[i] == p[length]:
            length += 1
            lps[i] = length
            i += 1
        elif length != 0:
            length = lps[length - 1]
        else:
            lps[i] = 0
            i += 1


def lps_table(bytes pat):
    cdef Py_ssize_t m = len(pat)
    cdef const unsigned char* p = <const unsigned char*>PyBytes_AS_STRING(pat)
    cdef i64* lps = <i64*>malloc(m * sizeof(i64))
    if lps == NULL:
        raise MemoryError()
    try:
        _fill_lps(p, m, lps)
        return [lps[i] for i in range(m)]
    finally:
        free(lps)


def kmp_search(bytes text, bytes pat, counters=None):
    cdef Py_ssize_t n = len(text), m = len(pat)
    cdef list out = []
    if n < m:
        return out
    cdef const unsigned char* t = <const unsigned char*>PyBytes_AS_STRING(text)
    cdef const unsigned char* p = <const unsigned char*>PyBytes_AS_STRING(pat)
    cdef i64* lps = <i64*>malloc(m * sizeof(i64))
    if lps == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j = 0
    cdef i64 comps = 0
    cdef unsigned char c
    try:
        _fill_lps(p, m, lps)
        for i in range(n):
            c = t[i]
            while True:
                comps += 1
                if c == p[j]:
                    j += 1
                    break
                if j == 0:
                    break
                j = lps[j - 1]
            if j == m:
                out.append(i - m + 1)
                j = lps[j - 1]
    finally:
        free(lps)
    if counters is not None:
        counters.comparisons += comps
        counters.cursor_regressions += 0
    return out


def poly_hash(bytes data, i64 base, i64 mod):
    cdef Py_ssize_t n = len(data)
    cdef const unsigned char* d = <const unsigned char*>PyBytes_AS_STRING(data)
    cdef i64 h = 0
    cdef Py_ssize_t i
    for i in range(n):
        h = (h * base + d[i]) % mod
    return h


def rk_search(bytes text, bytes pat, i64 base, i64 mod, counters=None):
    cdef Py_ssize_t n = len(text), m = len(pat)
    cdef list out = []
    if n < m:
        return out
    cdef const unsigned char* t = <const unsigned char*>PyBytes_AS_STRING(text)
    cdef const unsigned char* p = <const unsigned char*>PyBytes_AS_STRING(pat)
    cdef i64 target = 0, h = 0, lead = 1
    cdef Py_ssize_t i, j
    cdef i64 hits = 0, comps = 0
    for i in range(m):
        target = (target * base + p[i]) % mod
        h = (h * base + t[i]) % mod
    for i in range(m - 1):
        lead = (lead * base) % mod
    track = counters.window_hashes if counters is not None else None
    i = 0
    while True:
        if track is not None:
            track.append(h)
        if h == target:
            hits += 1
            j = 0
            while j < m:
                comps += 1
                if t[i + j] != p[j]:
                    break
                j += 1
            if j == m:
                out.append(i)
        if i == n - m:
            break
        h = ((h - t[i] * lead) % mod + mod) % mod
        h = (h * base + t[i + m]) % mod
        i += 1
    if counters is not None:
        counters.hash_hits += hits
        counters.comparisons += comps
    return out


cdef void _fill_bad_char(const unsigned char* p, Py_ssize_t m, i64* table) noexcept:
    cdef Py_ssize_t i
    for i in range(256):
        table[i] = -1
    for i in range(m):
        table[p[i]] = i


cdef void _fill_good_suffix(const unsigned char* p, Py_ssize_t m, i64* gs, i64* scratch) noexcept:
    # scratch must hold 2*m entries: suffix lengths, then shifts by position
    cdef i64* suff = scratch
    cdef i64* by_pos = scratch + m
    cdef Py_ssize_t i, j, g, f
    suff[m - 1] = m
    g = m - 1
    f = m - 1
    for i in range(m - 2, -1, -1):
        if i > g and suff[i + m - 1 - f] < i - g:
            suff[i] = suff[i + m - 1 - f]
        else:
            if i < g:
                g = i
            f = i
            while g >= 0 and p[g] == p[g + m - 1 - f]:
                g -= 1
            suff[i] = f - g
    for i in range(m):
        by_pos[i] = m
    j = 0
    for i in range(m - 1, -1, -1):
        if suff[i] == i + 1:
            while j < m - 1 - i:
                if by_pos[j] == m:
                    by_pos[j] = m - 1 - i
                j += 1
    for i in range(m - 1):
        by_pos[m - 1 - suff[i]] = m - 1 - i
    for i in range(m):
        gs[i] = by_pos[m - 1 - i]
    # full-match shift: the pattern period
    _fill_lps(p, m, scratch)
    gs[m] = m - scratch[m - 1]


def bm_bad_char(bytes pat):
    cdef Py_ssize_t m = len(pat)
    cdef const unsigned char* p = <const unsigned char*>PyBytes_AS_STRING(pat)
    cdef i64 table[256]
    _fill_bad_char(p, m, table)
    return [table[i] for i in range(256)]


def bm_good_suffix(bytes pat):
    cdef Py_ssize_t m = len(pat)
    cdef const unsigned char* p = <const unsigned char*>PyBytes_AS_STRING(pat)
    cdef i64* buf = <i64*>malloc((3 * m + 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    try:
        _fill_good_suffix(p, m, buf + 2 * m, buf)
        return [buf[2 * m + i] for i in range(m + 1)]
    finally:
        free(buf)


def bm_search(bytes text, bytes pat, counters=None):
    cdef Py_ssize_t n = len(text), m = len(pat)
    cdef list out = []
    if n < m:
        return out
    cdef const unsigned char* t = <const unsigned char*>PyBytes_AS_STRING(text)
    cdef const unsigned char* p = <const unsigned char*>PyBytes_AS_STRING(pat)
    cdef i64 bad[256]
    cdef i64* buf = <i64*>malloc((3 * m + 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef i64* gs = buf + 2 * m
    cdef Py_ssize_t s = 0, j
    cdef i64 comps = 0, aligns = 0, shift, bc
    trace = counters.alignment_trace if counters is not None else None
    cdef bint tracing = trace is not None
    try:
        _fill_bad_char(p, m, bad)
        _fill_good_suffix(p, m, gs, buf)
        while s <= n - m:
            aligns += 1
            if tracing:
                trace.append(s)
            j = m - 1
            while j >= 0:
                comps += 1
                if t[s + j] != p[j]:
                    break
                j -= 1
            if j < 0:
                out.append(s)
                s += gs[m]
            else:
                shift = gs[m - 1 - j]
                bc = j - bad[t[s + j]]
                if bc > shift:
                    shift = bc
                if shift < 1:
                    shift = 1
                s += shift
    finally:
        free(buf)
    if counters is not None:
        counters.comparisons += comps
        counters.alignments += aligns
    return out


# ---------------------------------------------------------------------------
# suffix tree kernel
# ---------------------------------------------------------------------------

cdef class TreeKernel:
    """Flat-array suffix tree; node 0 is the root, children are sibling
    chains in ascending first-byte order, leaf edges carry end = -1 until
    finalize() freezes them."""

    cdef bytes data
    cdef const unsigned char* d
    cdef Py_ssize_t n_total
    cdef i64* es
    cdef i64* ee
    cdef i64* sl
    cdef i64* child0
    cdef i64* sib
    cdef i64* sfx
    cdef i64* lc
    cdef i64* depth
    cdef readonly Py_ssize_t n_nodes
    cdef readonly Py_ssize_t n_leaves
    cdef readonly i64 max_depth
    cdef readonly i64 build_steps
    cdef readonly bint built
    cdef readonly bint finalized

    def __cinit__(self, bytes data):
        self.data = data
        self.d = <const unsigned char*>PyBytes_AS_STRING(data)
        self.n_total = len(data)
        cdef Py_ssize_t cap = 2 * self.n_total + 4
        self.es = <i64*>malloc(cap * sizeof(i64))
        self.ee = <i64*>malloc(cap * sizeof(i64))
        self.sl = <i64*>malloc(cap * sizeof(i64))
        self.child0 = <i64*>malloc(cap * sizeof(i64))
        self.sib = <i64*>malloc(cap * sizeof(i64))
        self.sfx = <i64*>malloc(cap * sizeof(i64))
        self.lc = <i64*>malloc(cap * sizeof(i64))
        self.depth = <i64*>malloc(cap * sizeof(i64))
        if (self.es == NULL or self.ee == NULL or self.sl == NULL or
                self.child0 == NULL or self.sib == NULL or self.sfx == NULL or
                self.lc == NULL or self.depth == NULL):
            raise MemoryError()
        # root
        self.es[0] = 0
        self.ee[0] = 0
        self.sl[0] = 0
        self.child0[0] = -1
        self.sib[0] = -1
        self.n_nodes = 1
        self.n_leaves = 0
        self.max_depth = 0
        self.build_steps = 0
        self.built = False
        self.finalized = False

    def __dealloc__(self):
        free(self.es)
        free(self.ee)
        free(self.sl)
        free(self.child0)
        free(self.sib)
        free(self.sfx)
        free(self.lc)
        free(self.depth)

    # -- children as sorted sibling chains -----------------------------------

    cdef inline i64 _get_child(self, i64 v, unsigned char b) noexcept:
        cdef i64 w = self.child0[v]
        cdef unsigned char cb
        while w != -1:
            cb = self.d[self.es[w]]
            if cb == b:
                return w
            if cb > b:
                return -1
            w = self.sib[w]
        return -1

    cdef inline void _insert_child(self, i64 v, i64 w) noexcept:
        cdef unsigned char b = self.d[self.es[w]]
        cdef i64 cur = self.child0[v]
        cdef i64 prev = -1
        while cur != -1 and self.d[self.es[cur]] < b:
            prev = cur
            cur = self.sib[cur]
        self.sib[w] = cur
        if prev == -1:
            self.child0[v] = w
        else:
            self.sib[prev] = w

    cdef inline void _swap_child(self, i64 v, i64 old, i64 new_node) noexcept:
        cdef i64 cur = self.child0[v]
        cdef i64 prev = -1
        while cur != old:
            prev = cur
            cur = self.sib[cur]
        self.sib[new_node] = self.sib[old]
        if prev == -1:
            self.child0[v] = new_node
        else:
            self.sib[prev] = new_node

    cdef inline i64 _new_node(self, i64 start, i64 end) noexcept:
        cdef i64 v = self.n_nodes
        self.es[v] = start
        self.ee[v] = end
        self.sl[v] = 0
        self.child0[v] = -1
        self.sib[v] = -1
        self.n_nodes = v + 1
        return v

    # -- construction ---------------------------------------------------------

    def build(self, bint allow_implicit=False):
        if self.built:
            raise RuntimeError("kernel already built")
        self.built = True
        cdef const unsigned char* d = self.d
        cdef i64* es = self.es
        cdef i64* ee = self.ee
        cdef i64* sl = self.sl
        cdef Py_ssize_t n_total = self.n_total
        cdef Py_ssize_t pos
        cdef i64 active_node = 0, active_edge = 0, active_len = 0
        cdef i64 remainder = 0, last_internal = -1
        cdef i64 steps = 0
        cdef i64 nxt, split, leaf, end, edge_len
        cdef unsigned char c_pos, first

        for pos in range(n_total):
            c_pos = d[pos]
            remainder += 1
            last_internal = -1
            while remainder > 0:
                steps += 1
                if active_len == 0:
                    active_edge = pos
                first = d[active_edge]
                nxt = self._get_child(active_node, first)
                if nxt == -1:
                    leaf = self._new_node(pos, -1)
                    self._insert_child(active_node, leaf)
                    if last_internal >= 0:
                        sl[last_internal] = active_node
                        last_internal = -1
                else:
                    end = ee[nxt]
                    edge_len = (end if end != -1 else pos + 1) - es[nxt]
                    if active_len >= edge_len:
                        active_node = nxt
                        active_edge += edge_len
                        active_len -= edge_len
                        continue
                    if d[es[nxt] + active_len] == c_pos:
                        if last_internal >= 0 and active_node != 0:
                            sl[last_internal] = active_node
                        active_len += 1
                        break
                    split = self._new_node(es[nxt], es[nxt] + active_len)
                    self._swap_child(active_node, nxt, split)
                    es[nxt] += active_len
                    self._insert_child(split, nxt)
                    leaf = self._new_node(pos, -1)
                    self._insert_child(split, leaf)
                    if last_internal >= 0:
                        sl[last_internal] = split
                    last_internal = split
                remainder -= 1
                if active_node == 0 and active_len > 0:
                    active_len -= 1
                    active_edge = pos - remainder + 1
                elif active_node != 0:
                    active_node = sl[active_node]

        self.build_steps = steps
        if remainder != 0 and not allow_implicit:
            raise RuntimeError("construction left pending suffixes; text lacks a unique terminator")

    def finalize(self):
        if self.finalized:
            raise RuntimeError("kernel already finalized")
        self.finalized = True
        cdef Py_ssize_t n_nodes = self.n_nodes
        cdef Py_ssize_t n_total = self.n_total
        cdef i64* es = self.es
        cdef i64* ee = self.ee
        cdef i64* sfx = self.sfx
        cdef i64* lc = self.lc
        cdef i64* depth = self.depth
        cdef i64* parent = <i64*>malloc(n_nodes * sizeof(i64))
        cdef i64* order = <i64*>malloc(n_nodes * sizeof(i64))
        cdef i64* stack = <i64*>malloc(n_nodes * sizeof(i64))
        if parent == NULL or order == NULL or stack == NULL:
            free(parent)
            free(order)
            free(stack)
            raise MemoryError()
        cdef Py_ssize_t top = 0, n_order = 0
        cdef i64 v, w, p_, leaves = 0, maxd = 0, d_
        cdef Py_ssize_t i
        try:
            for i in range(n_nodes):
                lc[i] = 0
                sfx[i] = -1
            parent[0] = -1
            depth[0] = 0
            stack[0] = 0
            top = 1
            while top > 0:
                top -= 1
                v = stack[top]
                order[n_order] = v
                n_order += 1
                if self.ee[v] == -1:
                    ee[v] = n_total
                p_ = parent[v]
                if p_ >= 0:
                    depth[v] = depth[p_] + ee[v] - es[v]
                w = self.child0[v]
                while w != -1:
                    parent[w] = v
                    stack[top] = w
                    top += 1
                    w = self.sib[w]
            for i in range(n_order - 1, -1, -1):
                v = order[i]
                d_ = depth[v]
                if d_ > maxd:
                    maxd = d_
                if self.child0[v] == -1:
                    lc[v] = 1
                    sfx[v] = n_total - d_
                    leaves += 1
                p_ = parent[v]
                if p_ >= 0:
                    lc[p_] += lc[v]
        finally:
            free(parent)
            free(order)
            free(stack)
        self.n_leaves = leaves
        self.max_depth = maxd

    # -- queries ---------------------------------------------------------------

    def descend(self, bytes pat):
        cdef Py_ssize_t m = len(pat)
        cdef const unsigned char* p = <const unsigned char*>PyBytes_AS_STRING(pat)
        cdef const unsigned char* d = self.d
        cdef i64* es = self.es
        cdef i64* ee = self.ee
        cdef i64 v = 0, w
        cdef Py_ssize_t i = 0
        cdef i64 comps = 0, start, end, k
        while True:
            if self.child0[v] == -1:
                return (-1, -1, comps)
            comps += 1
            w = self._get_child(v, p[i])
            if w == -1:
                return (-1, -1, comps)
            i += 1
            start = es[w]
            end = ee[w]
            k = start + 1
            while k < end and i < m:
                comps += 1
                if d[k] != p[i]:
                    return (-1, -1, comps)
                k += 1
                i += 1
            if i == m:
                return (w, k - start, comps)
            v = w

    def count(self, bytes pat):
        node, _off, _comps = self.descend(pat)
        if node < 0:
            return 0
        return self.lc[node]

    def collect(self, bytes pat):
        node, _off, _comps = self.descend(pat)
        cdef list out = []
        if node < 0:
            return out
        cdef i64 limit = self.n_total - 1 - len(pat)
        # subtree has at most 2*leaf_count - 1 nodes (internal nodes branch)
        cdef i64* stack = <i64*>malloc((2 * self.lc[node] + 2) * sizeof(i64))
        if stack == NULL:
            raise MemoryError()
        cdef Py_ssize_t top = 0
        cdef i64 v, w, p_
        try:
            stack[0] = node
            top = 1
            while top > 0:
                top -= 1
                v = stack[top]
                w = self.child0[v]
                if w == -1:
                    p_ = self.sfx[v]
                    if p_ > limit:
                        raise AssertionError("leaf below the pattern locus maps past the body")
                    out.append(p_)
                else:
                    while w != -1:
                        stack[top] = w
                        top += 1
                        w = self.sib[w]
        finally:
            free(stack)
        out.sort()
        return out

    # -- introspection -----------------------------------------------------------

    def is_leaf(self, v):
        return self.child0[v] == -1

    def children_of(self, v):
        cdef list out = []
        cdef i64 w = self.child0[v]
        while w != -1:
            out.append((self.d[self.es[w]], w))
            w = self.sib[w]
        return out

    def edge_span(self, v):
        return (self.es[v], self.ee[v])

    def suffix_link_of(self, v):
        return self.sl[v]

    def suffix_index_of(self, v):
        return self.sfx[v]

    def leaf_count_of(self, v):
        return self.lc[v]

    def path_depth_of(self, v):
        return self.depth[v]
