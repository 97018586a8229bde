"""Skew braces: two compatible group structures on one element set.

A skew brace carries a "dot" group (A, .) and a "circle" group (A, o) on the
same indices, sharing the identity, with a o (b c) = (a o b) a^-1 (a o c)
for all triples. Classical braces are the special case of an abelian dot
group; two-sided classical braces correspond to radical rings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    NotABrace,
    NotAnIdeal,
    NotClassical,
    NotTwoSided,
    NotUniqueFactorization,
)
from .groups import (
    _TABLE_DTYPE,
    AutGroup,
    FiniteGroup,
    GroupMap,
    automorphism_group,
    center,
    direct_product,
    find_table_morphisms,
    is_abelian,
    make_group,
    semidirect_product,
    subgroup_closure,
)


def brace_violation(dot: FiniteGroup, circle: FiniteGroup):
    """First (lexicographic) triple violating compatibility, or None."""
    d, c = np.asarray(dot.table), np.asarray(circle.table)
    inv = np.asarray(dot.inverse)
    lhs = c[:, d]  # [a, b, x] = a o (b x)
    rhs = d[d[c, inv[:, None]][:, :, None], c[:, None, :]]
    bad = lhs != rhs
    if not bad.any():
        return None
    return tuple(int(v) for v in np.argwhere(bad)[0])


@dataclass(frozen=True, eq=False)
class SkewBrace:
    dot: FiniteGroup
    circle: FiniteGroup
    label: str | None = None

    @property
    def order(self) -> int:
        return self.dot.order

    def lambda_matrix(self) -> np.ndarray:
        """Row a is the permutation b -> a^-1 (a o b)."""
        d, c = np.asarray(self.dot.table), np.asarray(self.circle.table)
        return np.ascontiguousarray(d[np.asarray(self.dot.inverse)[:, None], c])

    def lambda_inverse_matrix(self) -> np.ndarray:
        lam = self.lambda_matrix()
        out = np.empty_like(lam)
        rng = np.arange(self.order)
        for a in rng:
            out[a][lam[a]] = rng
        return out

    def lambda_automorphism(self, a: int, aut: AutGroup | None = None):
        """The map b -> a^-1 (a o b) as a checked automorphism of the dot group."""
        aut = aut or automorphism_group(self.dot)
        return aut.auts[aut.lookup(self.lambda_matrix()[a])]

    def is_classical(self) -> bool:
        return is_abelian(self.dot)

    def is_trivial(self) -> bool:
        return np.array_equal(self.dot.table, self.circle.table)

    def key(self) -> bytes:
        return (
            np.ascontiguousarray(self.dot.table).tobytes()
            + np.ascontiguousarray(self.circle.table).tobytes()
        )

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"SkewBrace(order={self.order}{tag})"


def make_brace(dot_table, circle_table, label: str | None = None) -> SkewBrace:
    dot = make_group(dot_table)
    circle = make_group(circle_table)
    if dot.identity != circle.identity:
        raise NotABrace(dot.identity, circle.identity, -1)
    witness = brace_violation(dot, circle)
    if witness is not None:
        raise NotABrace(*witness)
    return SkewBrace(dot=dot, circle=circle, label=label)


# ---------------------------------------------------------------------------
# constructors


def from_assignment(assignment) -> SkewBrace:
    """Brace whose circle group is the graph subgroup encoded by the assignment."""
    assignment.validate()
    g = assignment.group
    return make_brace(g.table, assignment.circle_table(), label=g.label)


def trivial_brace(g: FiniteGroup) -> SkewBrace:
    return make_brace(g.table, g.table, label=g.label)


def opposite_trivial_brace(g: FiniteGroup) -> SkewBrace:
    return make_brace(g.table, g.opposite().table, label=g.label)


def semidirect_brace_ds(
    a: FiniteGroup, b: FiniteGroup, alpha: GroupMap, aut_b: AutGroup
) -> SkewBrace:
    """Dot is the direct product of A and B, circle the semidirect product
    with A acting on B through alpha."""
    dot = direct_product(a, b)
    circle = semidirect_product(a, b, alpha, aut_b)
    return make_brace(dot.table, circle.table)


def semidirect_brace_sd(
    a: FiniteGroup, b: FiniteGroup, alpha: GroupMap, aut_b: AutGroup
) -> SkewBrace:
    """Dot is the semidirect product, circle the direct product; needs A abelian."""
    if not is_abelian(a):
        raise NotClassical("the acting factor must be abelian for this form")
    dot = semidirect_product(a, b, alpha, aut_b)
    circle = direct_product(a, b)
    return make_brace(dot.table, circle.table)


def factorization_brace(g: FiniteGroup, p: list[int], m: list[int]) -> SkewBrace:
    """Brace from a unique factorization g = p m with p in P, m in M:
    a o b = a_plus b a_minus."""
    pset, mset = set(p), set(m)
    if subgroup_closure(g, list(pset)) != sorted(pset):
        raise NotUniqueFactorization("first factor is not a subgroup")
    if subgroup_closure(g, list(mset)) != sorted(mset):
        raise NotUniqueFactorization("second factor is not a subgroup")
    plus = np.full(g.order, -1, dtype=np.int64)
    minus = np.full(g.order, -1, dtype=np.int64)
    for x in pset:
        for y in mset:
            e = g.mul(x, y)
            if plus[e] >= 0:
                raise NotUniqueFactorization(f"element {e} factors twice")
            plus[e], minus[e] = x, y
    if (plus < 0).any():
        raise NotUniqueFactorization("factors do not cover the group")
    t = np.asarray(g.table)
    circle = t[t[plus[:, None], np.arange(g.order)[None, :]], minus[:, None]]
    return make_brace(g.table, circle, label=g.label)


# ---------------------------------------------------------------------------
# isomorphism


def is_brace_isomorphic(b1: SkewBrace, b2: SkewBrace):
    """A bijection preserving both tables as a GroupMap, or None."""
    if b1.order != b2.order:
        return None
    maps = find_table_morphisms(
        [b1.dot.table, b1.circle.table],
        [b2.dot.table, b2.circle.table],
        bijective=True,
        find_all=False,
    )
    if not maps:
        return None
    return GroupMap(source=b1.dot, target=b2.dot, image=maps[0])


# ---------------------------------------------------------------------------
# socle, ideals, quotients


def socle(b: SkewBrace) -> list[int]:
    """Elements a with a o x = a x and x (x o a) = (x o a) x for every x."""
    d, c = np.asarray(b.dot.table), np.asarray(b.circle.table)
    cond1 = (c == d).all(axis=1)  # row a: a o x = a x for all x
    cond2 = (d[np.arange(b.order)[:, None], c] == d[c, np.arange(b.order)[:, None]]).all(
        axis=0
    )  # column a: x (x o a) = (x o a) x for all x
    return [int(a) for a in np.flatnonzero(cond1 & cond2)]


def is_ideal(b: SkewBrace, subset) -> bool:
    """Circle-normal subgroup, invariant under every lambda map, with equal
    left and right dot cosets."""
    sub = sorted(set(int(x) for x in subset))
    if b.dot.identity not in sub:
        return False
    if subgroup_closure(b.circle, sub) != sub:
        return False
    inset = np.zeros(b.order, dtype=bool)
    inset[sub] = True
    d, c = np.asarray(b.dot.table), np.asarray(b.circle.table)
    idx = np.array(sub)
    circ_inv = np.asarray(b.circle.inverse)
    for a in range(b.order):
        conj = c[c[a, idx], circ_inv[a]]  # a o i o a-bar
        if not inset[conj].all():
            return False
    if not inset[b.lambda_matrix()[:, idx]].all():
        return False
    left = np.sort(d[:, idx], axis=1)  # row a: the set a I
    right = np.sort(d[idx, :].T, axis=1)  # row a: the set I a
    return bool((left == right).all())


def quotient_brace(b: SkewBrace, subset) -> tuple[SkewBrace, np.ndarray]:
    """Quotient by an ideal; returns the quotient and the projection map.

    Dot and circle cosets of an ideal coincide, so one coset labelling
    serves both tables. Cosets are labelled by their least element.
    """
    if not is_ideal(b, subset):
        raise NotAnIdeal(f"subset {sorted(set(subset))} is not an ideal")
    idx = np.array(sorted(set(int(x) for x in subset)))
    d, c = np.asarray(b.dot.table), np.asarray(b.circle.table)
    coset_min = d[:, idx].min(axis=1)
    reps = np.unique(coset_min)
    proj = np.searchsorted(reps, coset_min)
    if not np.array_equal(c[:, idx].min(axis=1), coset_min):
        raise NotAnIdeal("dot and circle cosets disagree")
    qd = proj[d[np.ix_(reps, reps)]]
    qc = proj[c[np.ix_(reps, reps)]]
    return make_brace(qd, qc, label=b.label), proj


# ---------------------------------------------------------------------------
# two-sided braces and radical rings


def is_two_sided(b: SkewBrace) -> bool:
    """Definitional check (a + b) o c + c = (a o c) + (b o c), with the dot
    table as + and the circle table as the ring-style product."""
    if not b.is_classical():
        raise NotClassical("two-sidedness is defined for abelian dot groups")
    d, c = np.asarray(b.dot.table), np.asarray(b.circle.table)
    lhs = d[c[d, :], np.arange(b.order)[None, None, :]]  # [a, b, x]: (a+b) o x + x
    rhs = d[c[:, None, :], c[None, :, :]]  # [a, b, x]: (a o x) + (b o x)
    return bool((lhs == rhs).all())


def gateva_ivanova_condition(b: SkewBrace) -> bool:
    """An alternative printed criterion for two-sidedness, taken verbatim:
    b c lam^-1_{a b c}(c) = c lam^-1_{a c}(lam_a(b) c) for all a, b, c.

    Advisory only; the definitional check is authoritative and any
    disagreement between the two is surfaced by the callers that care.
    """
    if not b.is_classical():
        raise NotClassical("two-sidedness is defined for abelian dot groups")
    n = b.order
    d = np.asarray(b.dot.table)
    lam = b.lambda_matrix()
    lam_inv = b.lambda_inverse_matrix()
    a_, b_, c_ = np.ix_(np.arange(n), np.arange(n), np.arange(n))
    abc = d[d[a_, b_], c_]
    lhs = d[d[b_, c_], lam_inv[abc, c_]]
    ac = d[a_, 0 * b_ + c_]
    inner = d[lam[a_, b_], c_]
    rhs = d[0 * a_ + c_, lam_inv[ac, inner]]
    return bool((lhs == rhs).all())


@dataclass(frozen=True, eq=False)
class RadicalRing:
    """(R, +, *) associative, both distributive laws, and every element
    quasi-regular: for each x some y has x + y + x*y = 0."""

    add: FiniteGroup
    star: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.add.order

    def __post_init__(self):
        object.__setattr__(
            self, "star", np.ascontiguousarray(self.star, dtype=_TABLE_DTYPE)
        )
        if not is_abelian(self.add):
            raise NotClassical("the additive group of a ring is abelian")
        d, s = np.asarray(self.add.table), np.asarray(self.star)
        n = self.order
        a_, b_, c_ = np.ix_(np.arange(n), np.arange(n), np.arange(n))
        if not (s[s[a_, b_], c_] == s[a_, s[b_, c_]]).all():
            raise NotTwoSided("star is not associative")
        if not (s[a_, d[b_, c_]] == d[s[a_, b_], s[a_, c_]]).all():
            raise NotTwoSided("left distributivity fails")
        if not (s[d[a_, b_], c_] == d[s[a_, c_], s[b_, c_]]).all():
            raise NotTwoSided("right distributivity fails")
        # quasi-regularity: the circle operation must be a latin square
        circ = self.circle_table()
        for row in circ:
            if len(set(int(v) for v in row)) != n:
                raise NotTwoSided("an element is not quasi-regular")

    def circle_table(self) -> np.ndarray:
        """a o b = a*b + a + b."""
        d, s = np.asarray(self.add.table), np.asarray(self.star)
        return np.ascontiguousarray(d[d[s, np.arange(self.order)[:, None]],
                                      np.arange(self.order)[None, :]])


def to_radical_ring(b: SkewBrace) -> RadicalRing:
    """a*b = a o b - a - b (additive notation for the dot group)."""
    if not is_two_sided(b):
        raise NotTwoSided("only two-sided classical braces give radical rings")
    d, c = np.asarray(b.dot.table), np.asarray(b.circle.table)
    inv = np.asarray(b.dot.inverse)
    n = b.order
    star = d[d[c, inv[:, None]], inv[None, :]]
    ring = RadicalRing(add=b.dot, star=star)
    if not np.array_equal(ring.circle_table(), c):
        raise NotTwoSided("circle operation not recovered from the star table")
    return ring


def from_radical_ring(r: RadicalRing) -> SkewBrace:
    return make_brace(r.add.table, r.circle_table())
