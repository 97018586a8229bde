"""Finite groups as dense multiplication tables.

Elements are the indices 0..n-1 with the identity normalized to index 0.
All tables are numpy int arrays; every constructor runs the full exhaustive
validation, which is affordable at the orders this package targets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    HolomorphTooLarge,
    NoIdentity,
    NoInverse,
    NotAHomomorphism,
    NotAssociative,
    NotClosed,
)

_TABLE_DTYPE = np.int16


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A validated group on indices 0..n-1, given by its Cayley table."""

    order: int
    table: np.ndarray
    identity: int
    inverse: np.ndarray
    label: str | None = None

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def elements(self) -> range:
        return range(self.order)

    def conjugate(self, a: int, b: int) -> int:
        """b^-1 a b."""
        return int(self.table[self.table[self.inverse[b], a], b])

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def element_orders(self) -> np.ndarray:
        return np.array([self.element_order(a) for a in self.elements()])

    def order_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_orders().tolist()))

    def opposite(self) -> "FiniteGroup":
        lbl = None if self.label is None else f"{self.label}^op"
        return make_group(self.table.T.copy(), label=lbl)

    def relabel(self, perm: np.ndarray) -> "FiniteGroup":
        """Transport the table along a bijection with perm[identity] = identity."""
        perm = np.asarray(perm)
        inv_perm = np.empty_like(perm)
        inv_perm[perm] = np.arange(self.order)
        new = perm[self.table[np.ix_(inv_perm, inv_perm)]]
        return make_group(new, label=self.label)

    def __repr__(self):
        lbl = f" {self.label!r}" if self.label else ""
        return f"<FiniteGroup{lbl} order={self.order}>"


def _validate_table(table: np.ndarray) -> tuple[int, np.ndarray]:
    """Full group-axiom check; returns (identity, inverse array)."""
    n = table.shape[0]
    if table.ndim != 2 or table.shape != (n, n):
        raise ValueError("table must be square")
    bad = (table < 0) | (table >= n)
    if bad.any():
        a, b = map(int, np.argwhere(bad)[0])
        raise NotClosed(a, b, int(table[a, b]))

    idx = np.arange(n)
    identity = None
    for e in range(n):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            identity = e
            break
    if identity is None:
        raise NoIdentity()

    # associativity, chunked over the first index to bound memory at n^2 per row
    for a in range(n):
        left = table[table[a], :]          # (n, n): (a b) c
        right = table[a][table]            # (n, n): a (b c)
        if not np.array_equal(left, right):
            b, c = map(int, np.argwhere(left != right)[0])
            raise NotAssociative(a, b, c)

    inverse = np.empty(n, dtype=table.dtype)
    for a in range(n):
        hits = np.flatnonzero(table[a] == identity)
        if hits.size != 1 or table[hits[0], a] != identity:
            raise NoInverse(a)
        inverse[a] = hits[0]

    # Latin-square property is implied by the axioms; assert as a sanity check.
    for a in range(n):
        assert np.array_equal(np.sort(table[a]), idx)
        assert np.array_equal(np.sort(table[:, a]), idx)
    return identity, inverse


def make_group(table, label: str | None = None) -> FiniteGroup:
    """Validate a Cayley table and wrap it, normalizing the identity to 0."""
    table = np.ascontiguousarray(np.asarray(table, dtype=_TABLE_DTYPE))
    identity, inverse = _validate_table(table)
    if identity != 0:
        perm = np.arange(table.shape[0])
        perm[0], perm[identity] = identity, 0
        table = np.ascontiguousarray(
            perm[table[np.ix_(perm, perm)]]  # a transposition is its own inverse
        )
        identity, inverse = _validate_table(table)
    g = FiniteGroup(
        order=int(table.shape[0]),
        table=table,
        identity=identity,
        inverse=inverse,
        label=label,
    )
    g.table.setflags(write=False)
    g.inverse.setflags(write=False)
    return g


def trivial_group() -> FiniteGroup:
    return make_group([[0]], label="1")


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    idx = np.arange(n)
    return make_group((idx[:, None] + idx[None, :]) % n, label=f"C{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    ng, nh = g.order, h.order
    a, b = np.divmod(np.arange(ng * nh), nh)
    table = np.asarray(g.table)[np.ix_(a, a)] * nh + np.asarray(h.table)[np.ix_(b, b)]
    lbl = f"{g.label}x{h.label}" if g.label and h.label else None
    return make_group(table, label=lbl)


def generalized_quaternion(order: int) -> FiniteGroup:
    """The dicyclic group of the given order 4m, m >= 2.

    Presented by a, b with a^m = b^2, a^(2m) = 1 and b^-1 a b = a^-1.
    Elements are a^i b^j with 0 <= i < 2m, j in {0, 1}, indexed as i + 2m*j.
    """
    if order % 4 != 0 or order < 8:
        raise ValueError("order must be 4m with m >= 2")
    m = order // 4
    tm = 2 * m
    table = np.empty((order, order), dtype=_TABLE_DTYPE)
    for i in range(tm):
        for k in range(tm):
            for l in range(2):
                # a^i * a^k b^l
                table[i, k + tm * l] = (i + k) % tm + tm * l
                # a^i b * a^k b^l = a^(i-k) b^(l+1), with b^2 = a^m
                if l == 0:
                    table[i + tm, k] = (i - k) % tm + tm
                else:
                    table[i + tm, k + tm] = (i - k + m) % tm
    return make_group(table, label=f"Q{order}")


def subgroup_closure(g: FiniteGroup, gens) -> list[int]:
    """Smallest subgroup containing gens, as a sorted element list."""
    seen = {g.identity}
    for x in gens:
        seen.add(int(x))
    table = g.table
    queue = list(seen)
    while queue:
        x = queue.pop()
        for y in list(seen):
            for z in (int(table[x, y]), int(table[y, x])):
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
    assert g.order % len(seen) == 0  # Lagrange
    return sorted(seen)


def minimal_generating_set(g: FiniteGroup) -> list[int]:
    """Greedy generating set; no member lies in the closure of its predecessors."""
    gens: list[int] = []
    closure = {g.identity}
    orders = g.element_orders()
    while len(closure) < g.order:
        best = max(
            (a for a in g.elements() if a not in closure),
            key=lambda a: (orders[a], -a),
        )
        gens.append(best)
        closure = set(subgroup_closure(g, gens))
    return gens


def is_abelian(g: FiniteGroup) -> bool:
    return bool(np.array_equal(g.table, g.table.T))


def center(g: FiniteGroup) -> list[int]:
    commutes = np.asarray(g.table) == np.asarray(g.table).T
    members = [a for a in g.elements() if commutes[a].all()]
    assert members == subgroup_closure(g, members)
    return members


def is_solvable_table(table: np.ndarray) -> bool:
    """Solvability of the group given by a raw Cayley table (identity 0)."""
    table = np.asarray(table)
    n = table.shape[0]
    inverse = [int(np.flatnonzero(table[a] == 0)[0]) for a in range(n)]
    current = list(range(n))
    while len(current) > 1:
        comms = {0}
        for a in current:
            for b in current:
                comms.add(int(table[table[inverse[a], inverse[b]], table[a, b]]))
        queue = list(comms)
        while queue:
            x = queue.pop()
            for y in list(comms):
                for z in (int(table[x, y]), int(table[y, x])):
                    if z not in comms:
                        comms.add(z)
                        queue.append(z)
        if len(comms) == len(current):
            return False
        current = sorted(comms)
    return True


# ---------------------------------------------------------------------------
# maps between groups


@dataclass(frozen=True, eq=False)
class GroupMap:
    source: FiniteGroup
    target: FiniteGroup
    image: np.ndarray

    def __post_init__(self):
        img = np.asarray(self.image)
        t1, t2 = np.asarray(self.source.table), np.asarray(self.target.table)
        if img[self.source.identity] != self.target.identity:
            raise NotAHomomorphism("identity not mapped to identity")
        if not np.array_equal(img[t1], t2[np.ix_(img, img)]):
            raise NotAHomomorphism("image does not respect multiplication")

    def __call__(self, a: int) -> int:
        return int(self.image[a])

    def is_bijective(self) -> bool:
        return (
            self.source.order == self.target.order
            and len(set(self.image.tolist())) == self.source.order
        )


@dataclass(frozen=True, eq=False)
class Automorphism(GroupMap):
    index: int = -1

    def __post_init__(self):
        super().__post_init__()
        if not self.is_bijective():
            raise NotAHomomorphism("automorphism image is not a permutation")


class AutGroup:
    """The full automorphism list of a group.

    The composition Cayley table is materialized lazily: it is quadratic in
    the number of automorphisms and only needed for small automorphism groups.
    """

    def __init__(self, base: FiniteGroup, perms: np.ndarray):
        self.base = base
        self.perms = np.ascontiguousarray(perms, dtype=_TABLE_DTYPE)
        m, n = self.perms.shape
        self.index_of = {self.perms[i].tobytes(): i for i in range(m)}
        self.identity_index = self.index_of[
            np.ascontiguousarray(np.arange(n, dtype=_TABLE_DTYPE)).tobytes()
        ]
        inv_perms = np.empty_like(self.perms)
        rng = np.arange(n)
        for i in range(m):
            inv_perms[i][self.perms[i]] = rng
        self.inverse_perms = inv_perms
        self.inverse_indices = np.array(
            [self.index_of[inv_perms[i].tobytes()] for i in range(m)], dtype=np.int32
        )
        self.auts = [
            Automorphism(source=base, target=base, image=self.perms[i], index=i)
            for i in range(m)
        ]
        self._group: FiniteGroup | None = None

    @property
    def size(self) -> int:
        return self.perms.shape[0]

    def lookup(self, perm: np.ndarray) -> int:
        return self.index_of[np.ascontiguousarray(perm, dtype=_TABLE_DTYPE).tobytes()]

    def compose(self, i: int, j: int) -> int:
        """Index of aut_i after aut_j (apply j first)."""
        return self.lookup(self.perms[i][self.perms[j]])

    def composition_group(self, limit: int = 2048) -> FiniteGroup:
        """Cayley table of composition over the list order."""
        if self._group is None:
            m = self.size
            if m > limit:
                raise HolomorphTooLarge(m, limit)
            comp = np.empty((m, m), dtype=np.int32)
            for i in range(m):
                comp[i] = [
                    self.index_of[self.perms[i][self.perms[j]].tobytes()]
                    for j in range(m)
                ]
            lbl = f"Aut({self.base.label})" if self.base.label else None
            self._group = make_group(comp, label=lbl)
            assert self._group.identity == self.identity_index
        return self._group

    @property
    def group(self) -> FiniteGroup:
        return self.composition_group()


# ---------------------------------------------------------------------------
# morphism search
#
# All homomorphism-style searches go through one vectorized engine: candidate
# images for a generating set are combined in bulk, extended to full maps via
# a spanning word DAG, and verified against every table pair with numpy.

_CHUNK_ELEMENTS = 20_000_000


def spanning_words(table: np.ndarray, gens: list[int]):
    """BFS order and derivation of every element as (previous, generator).

    Returns (order, how) where how[e] is None for the identity and for
    generators, else a pair (p, g) with e = table[p][g].
    """
    n = table.shape[0]
    how: list = [None] * n
    seen = [False] * n
    order = [0]
    seen[0] = True
    for g in gens:
        if not seen[g]:
            seen[g] = True
            order.append(g)
    i = 0
    while i < len(order):
        p = order[i]
        i += 1
        for g in gens:
            e = int(table[p, g])
            if not seen[e]:
                seen[e] = True
                how[e] = (p, g)
                order.append(e)
    assert len(order) == n, "gens do not generate the group"
    return order, how


def _element_orders_of_table(t: np.ndarray) -> np.ndarray:
    n = t.shape[0]
    orders = np.empty(n, dtype=np.int64)
    for a in range(n):
        k, x = 1, a
        while x != 0:
            x = int(t[x, a])
            k += 1
        orders[a] = k
    return orders


def _profiles(tables: list[np.ndarray]) -> np.ndarray:
    """Per-element invariant vector used to filter candidate images."""
    rows = [_element_orders_of_table(t) for t in tables]
    t0 = tables[0]
    rows.append((t0 == t0.T).sum(axis=1))  # centralizer size
    return np.stack(rows, axis=1)


def find_table_morphisms(
    src_tables: list[np.ndarray],
    dst_tables: list[np.ndarray],
    *,
    bijective: bool = True,
    find_all: bool = False,
    hom_candidates: bool = False,
):
    """Maps m with m[S_i[a,b]] = D_i[m[a], m[b]] for every table pair.

    Generators are taken from the first source table; candidate images are
    filtered by element-order profiles (exact match when bijective,
    divisibility when hom_candidates is set). Returns a list of image arrays;
    with find_all=False at most one map is returned.
    """
    src_tables = [np.asarray(t) for t in src_tables]
    dst_tables = [np.asarray(t) for t in dst_tables]
    n = src_tables[0].shape[0]
    nd = dst_tables[0].shape[0]
    if bijective and n != nd:
        return []

    src_prof = _profiles(src_tables)
    dst_prof = _profiles(dst_tables)
    if bijective:
        a = sorted(map(tuple, src_prof.tolist()))
        b = sorted(map(tuple, dst_prof.tolist()))
        if a != b:
            return []

    src_group = make_group(src_tables[0])
    gens = minimal_generating_set(src_group)
    if not gens:  # trivial source group
        return [np.zeros(1, dtype=_TABLE_DTYPE)]
    order, how = spanning_words(src_tables[0], gens)

    cand_lists = []
    for g in gens:
        if bijective:
            mask = (dst_prof == src_prof[g]).all(axis=1)
        elif hom_candidates:
            # order of the image must divide the order of the generator
            mask = src_prof[g, 0] % dst_prof[:, 0] == 0
        else:
            mask = np.ones(nd, dtype=bool)
        cands = np.flatnonzero(mask)
        if cands.size == 0:
            return []
        cand_lists.append(cands)

    found: list[np.ndarray] = []
    chunk = max(1, _CHUNK_ELEMENTS // (n * n))
    d0 = dst_tables[0]
    src_flat = [st.reshape(-1).astype(np.int64) for st in src_tables]

    combo_iter = itertools.product(*[c.tolist() for c in cand_lists])
    while True:
        block = list(itertools.islice(combo_iter, chunk))
        if not block:
            break
        combos = np.asarray(block, dtype=np.int64)
        k = combos.shape[0]
        img = np.zeros((k, n), dtype=np.int64)
        for j, g in enumerate(gens):
            img[:, g] = combos[:, j]
        for e in order:
            if how[e] is None:  # identity or a generator, already set
                continue
            p, g = how[e]
            img[:, e] = d0[img[:, p], img[:, g]]
        ok = np.ones(k, dtype=bool)
        if bijective:
            ok &= (np.sort(img, axis=1) == np.arange(n)).all(axis=1)
        for sf, dt in zip(src_flat, dst_tables):
            lhs = np.take(img, sf, axis=1)
            rhs = dt[img[:, :, None], img[:, None, :]].reshape(k, -1)
            ok &= (lhs == rhs).all(axis=1)
            if not ok.any():
                break
        for i in np.flatnonzero(ok):
            found.append(img[i].astype(_TABLE_DTYPE))
            if not find_all:
                return found
    return found


def is_isomorphic(g: FiniteGroup, h: FiniteGroup):
    """A witnessing isomorphism as a GroupMap, or None."""
    if g.order != h.order:
        return None
    maps = find_table_morphisms([g.table], [h.table], bijective=True, find_all=False)
    if not maps:
        return None
    return GroupMap(source=g, target=h, image=maps[0])


def automorphism_group(g: FiniteGroup) -> AutGroup:
    """All automorphisms of g, in a stable lexicographic order."""
    images = find_table_morphisms([g.table], [g.table], bijective=True, find_all=True)
    perms = np.stack([np.asarray(m) for m in images]).astype(_TABLE_DTYPE)
    key = np.lexsort(perms.T[::-1])
    return AutGroup(g, perms[key])


def all_homomorphisms(src: FiniteGroup, dst: FiniteGroup) -> list[np.ndarray]:
    """Every homomorphism src -> dst, as image arrays."""
    return find_table_morphisms(
        [src.table], [dst.table], bijective=False, find_all=True, hom_candidates=True
    )


def semidirect_product(
    a: FiniteGroup, b: FiniteGroup, alpha: GroupMap, aut_b: AutGroup
) -> FiniteGroup:
    """A acting on B through alpha: A -> Aut(B).

    Elements are pairs (x, y) indexed x*|B| + y with product
    (x, y)(x', y') = (x x', y * alpha_x(y')).
    """
    if alpha.source.order != a.order:
        raise NotAHomomorphism("alpha must be defined on the acting group")
    if alpha.target is not aut_b.composition_group():
        raise NotAHomomorphism("alpha must land in the automorphism group of B")
    na, nb = a.order, b.order
    x, y = np.divmod(np.arange(na * nb), nb)
    act = aut_b.perms[np.asarray(alpha.image, dtype=np.int64)]  # (na, nb)
    ty = np.asarray(b.table)[y[:, None], act[x][:, y]]
    table = np.asarray(a.table)[np.ix_(x, x)] * nb + ty
    return make_group(table)
