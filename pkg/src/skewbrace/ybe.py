"""Set-theoretic solutions of the Yang-Baxter equation.

A solution is stored as two m x m tables: r(x, y) = (u[x, y], v[x, y]).
Every skew brace yields a non-degenerate solution
r(a, b) = (lam_a(b), lam^-1_{lam_a(b)}((a o b)^-1 a (a o b))); the second
component also equals the circle-inverse of lam_a(b) circled with a o b,
and both forms are computed and compared at construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotClosedSubset, SkewbraceError
from .groups import _TABLE_DTYPE, FiniteGroup
from .brace import SkewBrace, trivial_brace


@dataclass(frozen=True, eq=False)
class SetSolution:
    """r(x, y) = (u[x, y], v[x, y]); sigma_x = row x of u, tau_y = column y of v."""

    u: np.ndarray = field(repr=False)
    v: np.ndarray = field(repr=False)

    def __post_init__(self):
        u = np.ascontiguousarray(self.u, dtype=_TABLE_DTYPE)
        v = np.ascontiguousarray(self.v, dtype=_TABLE_DTYPE)
        if u.shape != v.shape or u.ndim != 2 or u.shape[0] != u.shape[1]:
            raise ValueError("solution tables must be square and congruent")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        m = self.size
        pairs = set(zip(u.reshape(-1).tolist(), v.reshape(-1).tolist()))
        if len(pairs) != m * m:
            raise ValueError("r is not a bijection of the pair set")

    @property
    def size(self) -> int:
        return self.u.shape[0]

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return int(self.u[x, y]), int(self.v[x, y])

    def key(self) -> bytes:
        return self.u.tobytes() + self.v.tobytes()


def check_yang_baxter(solution: SetSolution):
    """None if the braid relation holds, else the lexicographically first
    failing triple (x, y, z)."""
    u, v = solution.u, solution.v
    m = solution.size
    x, y, z = np.ix_(np.arange(m), np.arange(m), np.arange(m))

    def r12(a, b, c):
        return u[a, b], v[a, b], c

    def r23(a, b, c):
        return a, u[b, c], v[b, c]

    lhs = r12(*r23(*r12(x + 0 * y + 0 * z, y, z)))
    rhs = r23(*r12(*r23(x + 0 * y + 0 * z, y, z)))
    bad = np.zeros((m, m, m), dtype=bool)
    for left, right in zip(lhs, rhs):
        bad |= np.broadcast_to(left, bad.shape) != np.broadcast_to(right, bad.shape)
    if not bad.any():
        return None
    return tuple(int(t) for t in np.argwhere(bad)[0])


def is_involutive(solution: SetSolution) -> bool:
    u, v = solution.u, solution.v
    m = solution.size
    x, y = np.ix_(np.arange(m), np.arange(m))
    return bool(
        (u[u, v] == x).all() and (v[u, v] == y).all()
    )


def is_nondegenerate(solution: SetSolution) -> bool:
    m = solution.size
    rng = np.arange(m)
    sigma_ok = (np.sort(solution.u, axis=1) == rng[None, :]).all()
    tau_ok = (np.sort(solution.v, axis=0) == rng[:, None]).all()
    return bool(sigma_ok and tau_ok)


def check_braiding_operator(solution: SetSolution, circle: FiniteGroup) -> bool:
    """The four compatibility conditions between r and a group product:
    (1) r(a o b, c) = (id x m) r12 r23 (a, b, c);
    (2) r(a, b o c) = (m x id) r23 r12 (a, b, c);
    (3) r(a, 1) = (1, a) and r(1, a) = (a, 1);
    (4) m r(a, b) = a o b."""
    u, v = solution.u, solution.v
    m = solution.size
    if circle.order != m:
        return False
    c_tab = np.asarray(circle.table)
    e = circle.identity
    rng = np.arange(m)
    if not ((u[:, e] == e).all() and (v[:, e] == rng).all()):
        return False
    if not ((u[e, :] == rng).all() and (v[e, :] == e).all()):
        return False
    if not (c_tab[u, v] == c_tab).all():
        return False
    x, y, z = np.ix_(rng, rng, rng)
    # (1): apply r to (b, c), then to positions 1-2, then multiply 2-3
    b1, c1 = u[y, z] + 0 * x, v[y, z] + 0 * x
    a2, b2 = u[x + 0 * b1, b1], v[x + 0 * b1, b1]
    lhs1 = (a2, c_tab[b2, c1])
    ab = c_tab[x + 0 * y, y] + 0 * z
    rhs1 = (u[ab, z], v[ab, z])
    if not all((p == q).all() for p, q in zip(lhs1, rhs1)):
        return False
    # (2): apply r to (a, b), then to positions 2-3, then multiply 1-2
    a1, b1 = u[x, y] + 0 * z, v[x, y] + 0 * z
    b2, c2 = u[b1, z + 0 * b1], v[b1, z + 0 * b1]
    lhs2 = (c_tab[a1, b2], c2)
    bc = c_tab[y + 0 * x, z] + 0 * x
    rhs2 = (u[x + 0 * bc, bc], v[x + 0 * bc, bc])
    return all((p == q).all() for p, q in zip(lhs2, rhs2))


# ---------------------------------------------------------------------------
# constructions


def from_brace(brace: SkewBrace) -> SetSolution:
    """The solution attached to a skew brace; the two published forms of the
    second component are both evaluated and must agree."""
    n = brace.order
    d, c = np.asarray(brace.dot.table), np.asarray(brace.circle.table)
    dinv = np.asarray(brace.dot.inverse)
    cinv = np.asarray(brace.circle.inverse)
    lam = brace.lambda_matrix()
    lam_inv = brace.lambda_inverse_matrix()
    u = lam
    circ = c  # a o b
    conj = d[d[dinv[circ], np.arange(n)[:, None]], circ]  # (a o b)^-1 a (a o b)
    v = lam_inv[u, conj]
    v_alt = c[cinv[u], circ]
    if not np.array_equal(v, v_alt):
        bad = np.argwhere(v != v_alt)[0]
        raise SkewbraceError(
            f"second-component formulas disagree at pair {tuple(int(t) for t in bad)}"
        )
    solution = SetSolution(u=u, v=v)
    if not (c[u, v] == c).all():
        raise SkewbraceError("solution does not recompose the circle product")
    return solution


def venkov_solution(g: FiniteGroup) -> SetSolution:
    """s(a, b) = (b, b^-1 a b)."""
    n = g.order
    t = np.asarray(g.table)
    inv = np.asarray(g.inverse)
    a, b = np.ix_(np.arange(n), np.arange(n))
    u = np.broadcast_to(np.arange(n)[None, :], (n, n)).copy()
    v = t[t[inv[b] + 0 * a, a], b]
    return SetSolution(u=u, v=v)


def flip_solution(n: int) -> SetSolution:
    u = np.broadcast_to(np.arange(n)[None, :], (n, n)).copy()
    v = np.broadcast_to(np.arange(n)[:, None], (n, n)).copy()
    return SetSolution(u=u, v=v)


def tau_conjugated(solution: SetSolution) -> SetSolution:
    """The solution tau r tau, with tau the flip of the two factors."""
    return SetSolution(u=solution.v.T, v=solution.u.T)


def restrict_solution(brace: SkewBrace, subset) -> SetSolution:
    """The brace solution restricted to an invariant subset.

    The subset must satisfy b lam_a(x) b^-1 in X for all x in X and all
    a, b; the restriction is then re-verified as a solution in its own
    right."""
    xs = sorted(set(int(t) for t in subset))
    inset = {x: i for i, x in enumerate(xs)}
    lam = brace.lambda_matrix()
    d = np.asarray(brace.dot.table)
    dinv = np.asarray(brace.dot.inverse)
    for x in xs:
        for a in range(brace.order):
            lx = int(lam[a, x])
            for b in range(brace.order):
                y = int(d[d[b, lx], dinv[b]])
                if y not in inset:
                    raise NotClosedSubset(x, a, b)
    full = from_brace(brace)
    k = len(xs)
    u = np.empty((k, k), dtype=_TABLE_DTYPE)
    v = np.empty((k, k), dtype=_TABLE_DTYPE)
    for i, x in enumerate(xs):
        for j, y in enumerate(xs):
            a, b = full.apply(x, y)
            u[i, j], v[i, j] = inset[a], inset[b]
    restricted = SetSolution(u=u, v=v)
    if check_yang_baxter(restricted) is not None or not is_nondegenerate(restricted):
        raise SkewbraceError("restriction failed to remain a solution")
    return restricted


# ---------------------------------------------------------------------------
# the tuple rewriting maps


def guitar_map(brace: SkewBrace, n: int, tup) -> tuple[int, ...]:
    """(a1, ..., an) -> (a1, lam_{a1}(a2), lam_{a1 o a2}(a3), ...)."""
    tup = tuple(int(t) for t in tup)
    if len(tup) != n or n < 1:
        raise ValueError(f"expected a tuple of length {n}")
    lam = brace.lambda_matrix()
    c = np.asarray(brace.circle.table)
    out = [tup[0]]
    acc = tup[0]
    for a in tup[1:]:
        out.append(int(lam[acc, a]))
        acc = int(c[acc, a])
    return tuple(out)


def guitar_map_inverse(brace: SkewBrace, n: int, tup) -> tuple[int, ...]:
    """Inverse rewriting; position k applies lam^-1 at the dot product of the
    first k - 1 output entries."""
    tup = tuple(int(t) for t in tup)
    if len(tup) != n or n < 1:
        raise ValueError(f"expected a tuple of length {n}")
    lam_inv = brace.lambda_inverse_matrix()
    d = np.asarray(brace.dot.table)
    out = [tup[0]]
    acc = tup[0]
    for a in tup[1:]:
        out.append(int(lam_inv[acc, a]))
        acc = int(d[acc, a])
    return tuple(out)


def _apply_at(solution: SetSolution, tup: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Apply r to positions i, i + 1 (zero-based i)."""
    a, b = solution.apply(tup[i], tup[i + 1])
    return tup[:i] + (a, b) + tup[i + 2:]


GUITAR_SAMPLE_CAP = 1_000_000
GUITAR_SAMPLE_SEED = 20240817
GUITAR_SAMPLE_COUNT = 200_000


def check_guitar_equivalence(brace: SkewBrace, n: int):
    """None if T r_{i,i+1} = s_{i,i+1} T on n-tuples for every i, with r the
    brace solution and s the conjugation solution of the dot group; else the
    first failing (i, tuple) found.

    Exhaustive when |A|^n is within the sample cap, otherwise a fixed-seed
    uniform sample."""
    r = from_brace(brace)
    s = venkov_solution(brace.dot)
    m = brace.order
    total = m**n
    if total <= GUITAR_SAMPLE_CAP:
        tuples = np.indices((m,) * n).reshape(n, -1).T
    else:
        rng = np.random.default_rng(GUITAR_SAMPLE_SEED)
        tuples = rng.integers(0, m, size=(GUITAR_SAMPLE_COUNT, n))
    for row in tuples:
        tup = tuple(int(t) for t in row)
        image = guitar_map(brace, n, tup)
        for i in range(n - 1):
            lhs = guitar_map(brace, n, _apply_at(r, tup, i))
            rhs = _apply_at(s, image, i)
            if lhs != rhs:
                return (i + 1, tup)
    return None


# ---------------------------------------------------------------------------
# relabeling equivalence (extension utility)


def find_solution_isomorphism(s1: SetSolution, s2: SetSolution):
    """A bijection p with p x p conjugating s1 into s2, via backtracking."""
    m = s1.size
    if s2.size != m:
        return None
    u1, v1, u2, v2 = s1.u, s1.v, s2.u, s2.v
    perm = [-1] * m
    used = [False] * m

    def consistent() -> bool:
        for x in range(m):
            if perm[x] < 0:
                continue
            for y in range(m):
                if perm[y] < 0:
                    continue
                a, b = int(u1[x, y]), int(v1[x, y])
                pa, pb = int(u2[perm[x], perm[y]]), int(v2[perm[x], perm[y]])
                if perm[a] >= 0 and perm[a] != pa:
                    return False
                if perm[a] < 0 and used[pa]:
                    return False
                if perm[b] >= 0 and perm[b] != pb:
                    return False
                if perm[b] < 0 and used[pb]:
                    return False
        return True

    def dfs(x: int):
        if x == m:
            return list(perm)
        for img in range(m):
            if used[img]:
                continue
            perm[x] = img
            used[img] = True
            if consistent():
                hit = dfs(x + 1)
                if hit is not None:
                    return hit
            perm[x] = -1
            used[img] = False
        return None

    hit = dfs(0)
    return None if hit is None else np.array(hit, dtype=_TABLE_DTYPE)


# ---------------------------------------------------------------------------
# text format


def format_solution_text(solution: SetSolution) -> str:
    m = solution.size
    lines = [f"solution {m}"]
    for x in range(m):
        for y in range(m):
            lines.append(f"{x} {y} {int(solution.u[x, y])} {int(solution.v[x, y])}")
    return "\n".join(lines) + "\n"


def parse_solution_text(text: str) -> SetSolution:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if len(head) != 2 or head[0] != "solution":
        raise ValueError(f"bad solution header: {lines[0]!r}")
    m = int(head[1])
    if len(lines) != m * m + 1:
        raise ValueError(f"expected {m * m} entries, got {len(lines) - 1}")
    u = np.full((m, m), -1, dtype=np.int64)
    v = np.full((m, m), -1, dtype=np.int64)
    for ln in lines[1:]:
        x, y, a, b = (int(t) for t in ln.split())
        u[x, y], v[x, y] = a, b
    if (u < 0).any():
        raise ValueError("missing entries in solution file")
    return SetSolution(u=u, v=v)
