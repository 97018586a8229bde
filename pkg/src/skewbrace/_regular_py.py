"""Pure-Python enumeration kernel.

Searches for all maps f from group elements to automorphism indices such that
the graph {(f[a], a)} is a (necessarily regular) subgroup of the holomorph.
The compiled kernel in _regular_cy implements the same algorithm; both must
produce identical result sets.

The search assigns f at one unresolved element at a time and closes the
partial subgroup after each assignment. Two pruning rules keep the tree
small:

* candidate filter: a new pair (g, b) is viable only if no right-coset
  product (g, b)(f[a], a) lands on an element whose f is already fixed;
* coset lookahead: after every closure, each unresolved element b must see a
  full-size block {a f_a(b) : a resolved} disjoint from the resolved set,
  since that block is the projection of the coset that will contain b.
"""

from __future__ import annotations

import numpy as np


def enumerate_assignments(
    table: np.ndarray,
    aut_perms: np.ndarray,
    identity_aut: int,
    root_candidates=None,
) -> list[np.ndarray]:
    table = np.asarray(table)
    n = table.shape[0]
    perms = np.ascontiguousarray(aut_perms, dtype=np.int16)
    m = perms.shape[0]
    index_of = {perms[i].tobytes(): i for i in range(m)}
    tab = [tuple(int(v) for v in row) for row in table]
    P = [tuple(int(v) for v in perms[i]) for i in range(m)]

    comp_cache: dict[tuple[int, int], int] = {}

    def comp(i: int, j: int) -> int:
        key = (i, j)
        hit = comp_cache.get(key)
        if hit is None:
            pi, pj = P[i], P[j]
            hit = index_of[
                np.array([pi[pj[x]] for x in range(n)], dtype=np.int16).tobytes()
            ]
            comp_cache[key] = hit
        return hit

    fidx = [-1] * n
    fidx[0] = identity_aut
    members = [0]
    results: list[np.ndarray] = []

    def close_with(g: int, b: int):
        """Add (g, b) and close under products; None on conflict."""
        added: list[int] = []

        def add(gi: int, e: int) -> bool:
            if fidx[e] >= 0:
                return fidx[e] == gi
            fidx[e] = gi
            members.append(e)
            added.append(e)
            return True

        add(g, b)
        i = len(members) - 1
        ok = True
        while ok and i < len(members):
            x = members[i]
            fx = fidx[x]
            px = P[fx]
            for y in list(members):
                fy = fidx[y]
                if not add(comp(fx, fy), tab[x][px[y]]):
                    ok = False
                    break
                if not add(comp(fy, fx), tab[y][P[fy][x]]):
                    ok = False
                    break
            i += 1
        if ok:
            return added
        for e in added:
            fidx[e] = -1
        del members[len(members) - len(added):]
        return None

    def blocks_viable() -> bool:
        for b in range(1, n):
            if fidx[b] >= 0:
                continue
            block = set()
            for a in members:
                c = tab[a][P[fidx[a]][b]]
                if fidx[c] >= 0 or c in block:
                    return False
                block.add(c)
        return True

    def dfs(cands):
        if len(members) == n:
            results.append(np.array(fidx, dtype=np.int16))
            return
        if not blocks_viable():
            return
        b = min(e for e in range(1, n) if fidx[e] < 0)
        for g in cands:
            pg = P[g]
            if any(fidx[tab[b][pg[a]]] >= 0 for a in members if a):
                continue
            added = close_with(g, b)
            if added is None:
                continue
            dfs(range(m))
            for e in added:
                fidx[e] = -1
            del members[len(members) - len(added):]

    if n == 1:
        return [np.array([identity_aut], dtype=np.int16)]
    dfs(range(m) if root_candidates is None else root_candidates)
    return results
