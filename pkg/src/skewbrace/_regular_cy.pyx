# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled enumeration kernel.

Same algorithm as _regular_py (branch on the least unresolved element,
incremental closure with rollback, right-coset candidate filter, coset-block
lookahead); automorphism composition goes through an open-addressing hash
table over permutation contents instead of a Python dict.
"""

import numpy as np

cdef enum:
    MAXN = 64


cdef inline unsigned long _perm_hash(const short* p, int n) nogil:
    cdef unsigned long h = 1469598103934665603UL
    cdef int i
    for i in range(n):
        h = (h ^ <unsigned long> p[i]) * 1099511628211UL
    return h


cdef class _Kernel:
    cdef const short[:, ::1] tab
    cdef const short[:, ::1] P
    cdef int n, m
    cdef int[::1] fidx
    cdef int[::1] members
    cdef int nmembers
    cdef long[::1] ht
    cdef unsigned long mask
    cdef int[::1] root_cands
    cdef list results

    def __init__(self, tab, perms, int identity_aut, root_cands):
        self.tab = tab
        self.P = perms
        self.n = tab.shape[0]
        self.m = perms.shape[0]
        self.fidx = np.full(self.n, -1, dtype=np.intc)
        self.members = np.zeros(self.n, dtype=np.intc)
        self.fidx[0] = identity_aut
        self.members[0] = 0
        self.nmembers = 1
        self.root_cands = root_cands
        self.results = []
        cdef long size = 1
        while size < 4 * self.m:
            size <<= 1
        self.mask = size - 1
        self.ht = np.full(size, -1, dtype=np.int64)
        cdef int i
        for i in range(self.m):
            self._insert(i)

    cdef void _insert(self, int i):
        cdef unsigned long slot = _perm_hash(&self.P[i, 0], self.n) & self.mask
        while self.ht[slot] >= 0:
            slot = (slot + 1) & self.mask
        self.ht[slot] = i

    cdef int _lookup(self, const short* p):
        cdef unsigned long slot = _perm_hash(p, self.n) & self.mask
        cdef long cand
        cdef int x
        cdef bint same
        while True:
            cand = self.ht[slot]
            same = True
            for x in range(self.n):
                if self.P[cand, x] != p[x]:
                    same = False
                    break
            if same:
                return <int> cand
            slot = (slot + 1) & self.mask

    cdef int _comp(self, int i, int j):
        cdef short tmp[MAXN]
        cdef const short* pi = &self.P[i, 0]
        cdef const short* pj = &self.P[j, 0]
        cdef int x
        for x in range(self.n):
            tmp[x] = pi[pj[x]]
        return self._lookup(tmp)

    cdef inline int _add(self, int gi, int e):
        """1 if consistent (possibly newly added), 0 on conflict."""
        if self.fidx[e] >= 0:
            return self.fidx[e] == gi
        self.fidx[e] = gi
        self.members[self.nmembers] = e
        self.nmembers += 1
        return 1

    cdef void _rollback(self, int len0):
        cdef int i
        for i in range(len0, self.nmembers):
            self.fidx[self.members[i]] = -1
        self.nmembers = len0

    cdef bint _close_with(self, int g, int b):
        """Add (g, b) and close under products; rolls back on conflict."""
        cdef int len0 = self.nmembers
        cdef int i, j, nm, x, y, fx, fy
        self._add(g, b)
        i = len0
        while i < self.nmembers:
            x = self.members[i]
            fx = self.fidx[x]
            nm = self.nmembers
            for j in range(nm):
                y = self.members[j]
                fy = self.fidx[y]
                if not self._add(self._comp(fx, fy), self.tab[x, self.P[fx, y]]):
                    self._rollback(len0)
                    return False
                if not self._add(self._comp(fy, fx), self.tab[y, self.P[fy, x]]):
                    self._rollback(len0)
                    return False
            i += 1
        return True

    cdef bint _blocks_viable(self):
        cdef short block[MAXN]
        cdef int b, i, a, c, nb
        for b in range(1, self.n):
            if self.fidx[b] >= 0:
                continue
            nb = 0
            for i in range(self.nmembers):
                a = self.members[i]
                c = self.tab[a, self.P[self.fidx[a], b]]
                if self.fidx[c] >= 0:
                    return False
                for j in range(nb):
                    if block[j] == c:
                        return False
                block[nb] = c
                nb += 1
        return True

    cdef void _dfs(self, bint at_root):
        cdef int b, e, g, gi, i, a, len0
        cdef bint viable
        if self.nmembers == self.n:
            out = np.empty(self.n, dtype=np.int16)
            for e in range(self.n):
                out[e] = self.fidx[e]
            self.results.append(out)
            return
        if not self._blocks_viable():
            return
        b = -1
        for e in range(1, self.n):
            if self.fidx[e] < 0:
                b = e
                break
        cdef int ncand = self.root_cands.shape[0] if at_root else self.m
        for gi in range(ncand):
            g = self.root_cands[gi] if at_root else gi
            viable = True
            for i in range(1, self.nmembers):
                a = self.members[i]
                if self.fidx[self.tab[b, self.P[g, a]]] >= 0:
                    viable = False
                    break
            if not viable:
                continue
            len0 = self.nmembers
            if not self._close_with(g, b):
                continue
            self._dfs(False)
            self._rollback(len0)

    def run(self):
        self._dfs(True)
        return self.results


def enumerate_assignments(table, aut_perms, identity_aut, root_candidates=None):
    tab = np.ascontiguousarray(table, dtype=np.int16)
    perms = np.ascontiguousarray(aut_perms, dtype=np.int16)
    n = tab.shape[0]
    if n == 1:
        return [np.array([identity_aut], dtype=np.int16)]
    if n > MAXN:
        raise ValueError(f"kernel supports orders up to {MAXN}, got {n}")
    if root_candidates is None:
        cands = np.arange(perms.shape[0], dtype=np.intc)
    else:
        cands = np.ascontiguousarray(root_candidates, dtype=np.intc)
    return _Kernel(tab, perms, int(identity_aut), cands).run()
