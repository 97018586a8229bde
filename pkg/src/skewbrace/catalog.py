"""Catalog of all groups of order 1..30 up to isomorphism.

The catalog ships as text files of Cayley tables (one file per order) and is
fully validated at load: group axioms, pairwise non-isomorphism and the known
count per order. The same groups can be regenerated programmatically from
cyclic, direct-product, semidirect-product and dicyclic constructions; for
n <= 8 an independent rebuild from regular permutation subgroups of the
symmetric group is available as a cross-check.
"""

from __future__ import annotations

import itertools
import os
from importlib import resources

import numpy as np

from .errors import OrderOutOfCatalog
from .groups import (
    FiniteGroup,
    GroupMap,
    all_homomorphisms,
    automorphism_group,
    center,
    cyclic,
    direct_product,
    generalized_quaternion,
    is_abelian,
    is_isomorphic,
    make_group,
    semidirect_product,
)

CATALOG_RANGE = (1, 30)

# number of groups of order n up to isomorphism, n = 1..30
KNOWN_GROUP_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
    11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5,
    21: 2, 22: 2, 23: 1, 24: 15, 25: 2, 26: 2, 27: 5, 28: 4, 29: 1, 30: 4,
}

ENV_CATALOG_DIR = "BRACE_CATALOG_DIR"

_cache: dict = {}


# ---------------------------------------------------------------------------
# file format


def format_catalog_text(n: int, groups: list[FiniteGroup]) -> str:
    blocks = []
    for i, g in enumerate(groups, start=1):
        lines = [f"group {n}.{i} order {n}"]
        for row in np.asarray(g.table):
            lines.append(" ".join(str(int(v)) for v in row))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def parse_catalog_text(text: str) -> list[tuple[str, np.ndarray]]:
    """Returns (identifier, raw table) pairs; tables are not yet validated."""
    out = []
    for block in text.strip().split("\n\n"):
        lines = [ln for ln in block.strip().splitlines() if ln.strip()]
        head = lines[0].split()
        if len(head) != 4 or head[0] != "group" or head[2] != "order":
            raise ValueError(f"bad catalog header: {lines[0]!r}")
        ident, n = head[1], int(head[3])
        if len(lines) != n + 1:
            raise ValueError(f"group {ident}: expected {n} table rows")
        table = np.array([[int(v) for v in ln.split()] for ln in lines[1:]])
        out.append((ident, table))
    return out


def _catalog_path(n: int):
    override = os.environ.get(ENV_CATALOG_DIR)
    fname = f"order_{n:02d}.txt"
    if override:
        return os.path.join(override, fname)
    return resources.files("skewbrace").joinpath("data", "catalog", fname)


def catalog_groups(n: int) -> list[FiniteGroup]:
    """All groups of order n up to isomorphism, in stable catalog order."""
    lo, hi = CATALOG_RANGE
    if not lo <= n <= hi:
        raise OrderOutOfCatalog(n, lo, hi)
    key = (os.environ.get(ENV_CATALOG_DIR), n)
    if key in _cache:
        return _cache[key]
    path = _catalog_path(n)
    try:
        text = path.read_text() if hasattr(path, "read_text") else open(path).read()
    except FileNotFoundError:
        raise OrderOutOfCatalog(n, lo, hi)
    groups = []
    for ident, table in parse_catalog_text(text):
        if int(table[0, 0]) != 0:
            raise ValueError(f"group {ident}: identity must be index 0")
        groups.append(make_group(table, label=ident))
    if len(groups) != KNOWN_GROUP_COUNTS[n]:
        raise ValueError(
            f"catalog order {n}: {len(groups)} groups, expected {KNOWN_GROUP_COUNTS[n]}"
        )
    for i, g in enumerate(groups):
        if g.order != n:
            raise ValueError(f"catalog order {n}: wrong order in entry {i + 1}")
        for h in groups[:i]:
            if is_isomorphic(g, h) is not None:
                raise ValueError(
                    f"catalog order {n}: entries {h.label} and {g.label} isomorphic"
                )
    _cache[key] = groups
    return groups


def catalog_id(g: FiniteGroup) -> str:
    """Catalog identifier "n.i" of the isomorphism class of g."""
    profile = g.order_profile()
    for cand in catalog_groups(g.order):
        if cand.order_profile() == profile and is_isomorphic(g, cand) is not None:
            return cand.label
    raise ValueError(f"group of order {g.order} not found in catalog")


def group_by_id(ident: str) -> FiniteGroup:
    n = int(ident.split(".")[0])
    for g in catalog_groups(n):
        if g.label == ident:
            return g
    raise ValueError(f"unknown catalog id {ident}")


# ---------------------------------------------------------------------------
# programmatic construction


def abelian_groups(n: int) -> list[FiniteGroup]:
    """All abelian groups of order n, as products of cyclic prime-power factors."""

    def partitions(k: int):
        if k == 0:
            yield ()
            return
        for first in range(k, 0, -1):
            for rest in partitions(k - first):
                if not rest or rest[0] <= first:
                    yield (first,) + rest

    factors = {}
    m, p = n, 2
    while m > 1:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    per_prime = [[(p, part) for part in partitions(e)] for p, e in sorted(factors.items())]
    out = []
    for combo in itertools.product(*per_prime):
        g = None
        for p, part in combo:
            for e in part:
                c = cyclic(p**e)
                g = c if g is None else direct_product(g, c)
        out.append(g if g is not None else cyclic(1))
    return out


def _semidirect_pool(na: int, nb: int):
    """All semidirect products A x| B with |A| = na acting on |B| = nb."""
    out = []
    for b in generate_groups(nb):
        aut_b = automorphism_group(b)
        target = aut_b.composition_group()
        for a in generate_groups(na):
            for img in all_homomorphisms(a, target):
                if (np.asarray(img) == aut_b.identity_index).all():
                    continue  # trivial action duplicates the direct product
                alpha = GroupMap(source=a, target=target, image=img)
                out.append(semidirect_product(a, b, alpha, aut_b))
    return out


_generated: dict[int, list[FiniteGroup]] = {}


def generate_groups(n: int) -> list[FiniteGroup]:
    """Build all groups of order n from scratch, up to isomorphism.

    Every group of order <= 30 is cyclic, dicyclic, or a (semi)direct product
    of strictly smaller groups; the count assertion at the end backs this up.
    """
    if n in _generated:
        return _generated[n]
    pool: list[FiniteGroup] = [cyclic(n)]
    if n % 4 == 0 and n >= 8:
        pool.append(generalized_quaternion(n))
    for d in range(2, n):
        if n % d or d * d > n:
            continue
        for a in generate_groups(d):
            for b in generate_groups(n // d):
                pool.append(direct_product(a, b))
    for d in range(2, n):
        if n % d:
            continue
        pool.extend(_semidirect_pool(d, n // d))

    reps: list[FiniteGroup] = []
    by_profile: dict = {}
    for g in pool:
        profile = g.order_profile()
        bucket = by_profile.setdefault(profile, [])
        if any(is_isomorphic(g, h) is not None for h in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    assert len(reps) == KNOWN_GROUP_COUNTS.get(n, len(reps)), (
        f"order {n}: generated {len(reps)} groups"
    )
    reps.sort(key=lambda g: (not is_abelian(g), g.order_profile(), -len(center(g))))
    out = [
        make_group(g.table, label=f"{n}.{i}") for i, g in enumerate(reps, start=1)
    ]
    _generated[n] = out
    return out


# ---------------------------------------------------------------------------
# independent oracle for n <= 8: regular permutation subgroups


def regular_permutation_subgroups(n: int) -> list[np.ndarray]:
    """Cayley tables of all regular subgroups of the symmetric group on n points.

    A regular subgroup is recovered as a table directly: labelling each member
    by its image of point 0, the table row of label a is the permutation
    itself. Each subgroup is found exactly once because the member with a
    given image of 0 is unique and the branch point is chosen canonically.
    """
    if n == 1:
        return [np.zeros((1, 1), dtype=np.int64)]
    ident = tuple(range(n))
    derangements = [
        p for p in itertools.permutations(range(n)) if all(p[i] != i for i in range(n))
    ]
    by_first: dict[int, np.ndarray] = {}
    for t in range(1, n):
        by_first[t] = np.array([p for p in derangements if p[0] == t], dtype=np.int64)

    results: list[np.ndarray] = []
    members: dict[int, tuple] = {0: ident}

    def try_close(p: tuple) -> list[int] | None:
        """Extend members with p and close; returns added labels or None."""
        added: list[int] = []

        def add(q: tuple) -> bool:
            lbl = q[0]
            cur = members.get(lbl)
            if cur is not None:
                return cur == q
            if any(q[i] == i for i in range(n)):
                return False
            members[lbl] = q
            added.append(lbl)
            return True

        if not add(p):
            return None
        i = 0
        while i < len(added):
            q = members[added[i]]
            i += 1
            for r in list(members.values()):
                qr = tuple(q[r[j]] for j in range(n))
                rq = tuple(r[q[j]] for j in range(n))
                if not (add(qr) and add(rq)):
                    for lbl in added:
                        del members[lbl]
                    return None
        return added

    def dfs():
        if len(members) == n:
            table = np.array([members[a] for a in range(n)], dtype=np.int64)
            results.append(table)
            return
        t = min(a for a in range(n) if a not in members)
        cands = by_first[t]
        # vectorized prefilter: products with each current member must stay
        # consistent with the partial subgroup
        ok = np.ones(len(cands), dtype=bool)
        arange = np.arange(n)
        for lbl, q in members.items():
            if lbl == 0:
                continue
            qa = np.array(q)
            left = qa[cands]            # q o p
            right = cands[:, qa]        # p o q
            for comp in (left, right):
                labels = comp[:, 0]
                fpf = (comp != arange).all(axis=1)
                known = np.array(
                    [
                        members[l] == tuple(row)
                        if (l := int(labels[j])) in members
                        else bool(fpf[j])
                        for j, row in enumerate(map(tuple, comp))
                    ]
                )
                ok &= known
            cands = cands[ok]
            ok = np.ones(len(cands), dtype=bool)
        for p in map(tuple, cands):
            added = try_close(p)
            if added is None:
                continue
            dfs()
            for lbl in added:
                del members[lbl]

    dfs()
    return results


def groups_via_symmetric_group(n: int) -> list[FiniteGroup]:
    """Isomorphism-class representatives rebuilt from the permutation oracle."""
    reps: list[FiniteGroup] = []
    for table in regular_permutation_subgroups(n):
        g = make_group(table)
        if all(is_isomorphic(g, h) is None for h in reps):
            reps.append(g)
    return reps


def write_catalog_files(directory: str, orders=None) -> None:
    orders = orders or range(CATALOG_RANGE[0], CATALOG_RANGE[1] + 1)
    os.makedirs(directory, exist_ok=True)
    for n in orders:
        groups = generate_groups(n)
        with open(os.path.join(directory, f"order_{n:02d}.txt"), "w") as fh:
            fh.write(format_catalog_text(n, groups))
