"""Regular subgroups of the holomorph.

A regular subgroup of Hol(A) = Aut(A) x| A that projects bijectively onto A
is the graph of a map f: A -> Aut(A); such maps are enumerated by the search
kernel, deduplicated under conjugation by Aut(A), and drive the skew brace
counts: conjugacy classes of these subgroups correspond exactly to the
isomorphism classes of skew braces with the given additive group.
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernel as _kernel
from .errors import HolomorphTooLarge, InvalidAssignment
from .groups import _TABLE_DTYPE, AutGroup, FiniteGroup, automorphism_group, make_group

ENV_THREADS = "BRACE_THREADS"


def thread_count(threads: int | None = None) -> int:
    if threads is None:
        threads = int(os.environ.get(ENV_THREADS, "1"))
    if threads < 1:
        raise ValueError("thread count must be >= 1")
    return threads


# ---------------------------------------------------------------------------
# the holomorph as an explicit group


@dataclass(frozen=True, eq=False)
class Holomorph:
    """Materialized semidirect product Aut(A) x| A with product
    (f, a)(g, b) = (f g, a f(b)); element (f, a) has index f * |A| + a."""

    base: FiniteGroup
    aut: AutGroup
    group: FiniteGroup

    def encode(self, aut_index: int, a: int) -> int:
        return aut_index * self.base.order + a

    def decode(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.base.order)


def holomorph(
    base: FiniteGroup, aut: AutGroup | None = None, limit: int = 2000
) -> Holomorph:
    """Build the holomorph with a full Cayley table (small groups only)."""
    aut = aut or automorphism_group(base)
    n, m = base.order, aut.size
    if n * m > limit:
        raise HolomorphTooLarge(n * m, limit)
    comp = aut.composition_group(limit=limit).table
    f, a = np.divmod(np.arange(n * m), n)
    g, b = f, a
    # (f, a)(g, b): aut part comp[f, g], group part a * f(b)
    fg = comp[f[:, None], g[None, :]]
    ab = base.table[a[:, None], aut.perms[f[:, None], b[None, :]]]
    table = fg * n + ab
    lbl = f"Hol({base.label})" if base.label else None
    return Holomorph(base=base, aut=aut, group=make_group(table, label=lbl))


def is_regular(pairs, n: int) -> bool:
    """True if the holomorph elements (aut, a) form a transversal of A."""
    seen = {a for _, a in pairs}
    return len(pairs) == n and len(seen) == n


# ---------------------------------------------------------------------------
# lambda assignments (graph-like regular subgroups)


@dataclass(frozen=True, eq=False)
class LambdaAssignment:
    """A map f: A -> Aut(A) whose graph {(f[a], a)} is a subgroup of Hol(A)."""

    group: FiniteGroup
    aut: AutGroup
    f: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "f", np.ascontiguousarray(self.f, dtype=_TABLE_DTYPE)
        )
        if self.f.shape != (self.group.order,):
            raise InvalidAssignment("assignment length differs from group order")

    def perm_matrix(self) -> np.ndarray:
        """Row a is the permutation f[a] acting on the group elements."""
        return self.aut.perms[self.f]

    def circle_table(self) -> np.ndarray:
        """The product a o b = a f_a(b) of the graph subgroup, projected to A."""
        return np.ascontiguousarray(
            self.group.table[np.arange(self.group.order)[:, None], self.perm_matrix()]
        )

    def validate(self) -> None:
        if int(self.f[self.group.identity]) != self.aut.identity_index:
            raise InvalidAssignment("identity must map to the identity automorphism")
        pf = self.perm_matrix()
        circ = self.circle_table()
        # graph closure: f[a] f[b] must equal f[a o b] for all a, b
        if not np.array_equal(pf[:, pf], pf[circ]):
            raise InvalidAssignment("graph is not closed under composition")
        try:
            make_group(circ)
        except Exception as exc:  # pragma: no cover - closure implies this
            raise InvalidAssignment(f"projected product is not a group: {exc}")

    def key(self) -> bytes:
        return self.f.tobytes()


def _assignment_sort_key(f: np.ndarray):
    return tuple(int(v) for v in f)


# ---------------------------------------------------------------------------
# enumeration

_worker_state: dict = {}


def _run_kernel(args):
    table_bytes, perms_bytes, n, m, identity_aut, slice_, kernel_name = args
    table = np.frombuffer(table_bytes, dtype=_TABLE_DTYPE).reshape(n, n)
    perms = np.frombuffer(perms_bytes, dtype=_TABLE_DTYPE).reshape(m, n)
    mod = _kernel.get_kernel(kernel_name)
    cands = None if slice_ is None else list(slice_)
    return [
        np.asarray(f, dtype=_TABLE_DTYPE)
        for f in mod.enumerate_assignments(table, perms, identity_aut, cands)
    ]


def enumerate_regular_subgroups(
    base: FiniteGroup,
    aut: AutGroup | None = None,
    threads: int | None = None,
    kernel: str | None = None,
) -> list[LambdaAssignment]:
    """All graph-like regular subgroups of Hol(A), in a stable order.

    The search tree is split at the root across worker processes; the union
    of the slices is independent of the split, so results are deterministic
    for any thread count.
    """
    aut = aut or automorphism_group(base)
    n, m = base.order, aut.size
    table = np.ascontiguousarray(base.table, dtype=_TABLE_DTYPE)
    args = (table.tobytes(), aut.perms.tobytes(), n, m, aut.identity_index)
    threads = thread_count(threads)
    if threads == 1 or n == 1:
        raw = _run_kernel(args + (None, kernel))
    else:
        slices = [s for s in np.array_split(np.arange(m), threads) if len(s)]
        jobs = [args + (s, kernel) for s in slices]
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            raw = [f for chunk in pool.map(_run_kernel, jobs) for f in chunk]
    raw.sort(key=_assignment_sort_key)
    return [LambdaAssignment(group=base, aut=aut, f=f) for f in raw]


# ---------------------------------------------------------------------------
# deduplication under Aut(A)-conjugation


def conjugate_assignment(assignment: LambdaAssignment, phi_index: int) -> LambdaAssignment:
    """Image of the graph subgroup under conjugation by automorphism phi.

    The conjugated subgroup is again graph-like, with
    g[phi(a)] = phi f[a] phi^{-1}.
    """
    aut = assignment.aut
    p = aut.perms[phi_index]
    pinv = aut.inverse_perms[phi_index]
    conj = p[assignment.perm_matrix()[:, pinv]]
    g = np.empty_like(assignment.f)
    for a in range(assignment.group.order):
        g[p[a]] = aut.lookup(conj[a])
    return LambdaAssignment(group=assignment.group, aut=aut, f=g)


def _digest(buf: bytes) -> bytes:
    return hashlib.sha256(buf).digest()[:16]


def dedup_up_to_aut(
    assignments: list[LambdaAssignment],
) -> tuple[list[LambdaAssignment], list[int]]:
    """Orbit representatives under Aut(A)-conjugation, plus orbit sizes.

    Each orbit is expanded in full (vectorized over elements, looped over
    automorphisms) and represented by its lexicographically least member.
    Orbits are encoded as permutation matrices so no automorphism index
    lookups are needed until the single representative is decoded.
    """
    if not assignments:
        return [], []
    aut = assignments[0].aut
    group = assignments[0].group
    n, m = group.order, aut.size
    perms = aut.perms
    inv_perms = aut.inverse_perms
    seen: set[bytes] = set()
    reps: list[LambdaAssignment] = []
    sizes: list[int] = []
    for asg in assignments:
        pf = perms[asg.f]
        if _digest(pf.tobytes()) in seen:
            continue
        orbit: set[bytes] = set()
        best: bytes | None = None
        best_mat: np.ndarray | None = None
        for i in range(m):
            p, pinv = perms[i], inv_perms[i]
            conj = p[pf[:, pinv]]
            mat = np.empty_like(conj)
            mat[p] = conj  # row phi(a) holds the conjugated automorphism at phi(a)
            buf = mat.tobytes()
            key = _digest(buf)
            if key not in orbit:
                orbit.add(key)
                if best is None or buf < best:
                    best, best_mat = buf, mat
        seen |= orbit
        sizes.append(len(orbit))
        g = np.array([aut.lookup(row) for row in best_mat], dtype=_TABLE_DTYPE)
        reps.append(LambdaAssignment(group=group, aut=aut, f=g))
    total = sum(sizes)
    if total != len(assignments):
        raise InvalidAssignment(
            f"orbit sizes sum to {total}, expected {len(assignments)}"
        )
    order = sorted(range(len(reps)), key=lambda i: _assignment_sort_key(reps[i].f))
    return [reps[i] for i in order], [sizes[i] for i in order]


# ---------------------------------------------------------------------------
# counting


def brace_classes(
    base: FiniteGroup,
    aut: AutGroup | None = None,
    classical: bool = False,
    threads: int | None = None,
    kernel: str | None = None,
) -> list[LambdaAssignment]:
    """Representatives of the skew brace classes with additive group `base`.

    With classical=True the additive group must be abelian; non-abelian
    groups simply contribute no classes.
    """
    from .groups import is_abelian

    if classical and not is_abelian(base):
        return []
    aut = aut or automorphism_group(base)
    found = enumerate_regular_subgroups(base, aut, threads=threads, kernel=kernel)
    reps, _ = dedup_up_to_aut(found)
    return reps


def count_braces_of_order(
    n: int,
    classical: bool = False,
    threads: int | None = None,
    kernel: str | None = None,
) -> int:
    """Total number of skew brace classes of order n (all additive groups)."""
    from .catalog import catalog_groups

    return sum(
        len(brace_classes(g, classical=classical, threads=threads, kernel=kernel))
        for g in catalog_groups(n)
    )
