"""End-to-end acceptance checks, one per shipped guarantee.

Each test prints a single PASS/FAIL line (visible under ``pytest -v -s`` and
in captured output) and then asserts, so the suite doubles as a report.
"""

import numpy as np
import pytest

from skewbrace.brace import (
    brace_violation,
    from_assignment,
    is_brace_isomorphic,
    is_ideal,
    quotient_brace,
    socle,
)
from skewbrace.catalog import catalog_groups
from skewbrace.conjectures import quaternion_brace_count
from skewbrace.counts import EXPECTED_B, EXPECTED_C, EXPECTED_T, count_of_order
from skewbrace.db import build_records, read_db, write_db
from skewbrace.groups import automorphism_group, center, is_abelian
from skewbrace.holomorph import brace_classes, dedup_up_to_aut, enumerate_regular_subgroups
from skewbrace.ybe import (
    check_braiding_operator,
    check_guitar_equivalence,
    check_yang_baxter,
    from_brace,
    is_involutive,
    is_nondegenerate,
)


def report(capsys, name: str, ok: bool, detail: str = "") -> None:
    tail = f" ({detail})" if detail else ""
    with capsys.disabled():
        print(f"\nACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}{tail}")
    assert ok, f"{name} failed{tail}"


def test_criterion_1_skew_counts_to_15(capsys):
    bad = [
        n for n in range(1, 16) if count_of_order(n, "c") != EXPECTED_C[n]
    ]
    report(capsys, "skew counts n<=15", not bad, detail=f"mismatches {bad}" if bad else "")


def test_criterion_2_skew_counts_17_to_30(capsys):
    orders = [n for n in range(17, 31) if n != 24]
    bad = [n for n in orders if count_of_order(n, "c") != EXPECTED_C[n]]
    report(
        capsys,
        "skew counts 17..30 (without 24)",
        not bad,
        detail=f"mismatches {bad}" if bad else "",
    )


@pytest.mark.stretch
def test_criterion_2_stretch_skew_16(capsys):
    ok = count_of_order(16, "c", stretch=True) == 1605
    report(capsys, "skew count n=16 (stretch)", ok)


@pytest.mark.stretch
def test_criterion_2_stretch_skew_24(capsys):
    ok = count_of_order(24, "c", stretch=True) == 855
    report(capsys, "skew count n=24 (stretch)", ok)


def test_criterion_3_classical_counts_to_30(capsys):
    orders = [n for n in range(1, 31) if n != 16]
    bad = [n for n in orders if count_of_order(n, "b") != EXPECTED_B[n]]
    report(
        capsys,
        "classical counts n<=30 (without 16)",
        not bad,
        detail=f"mismatches {bad}" if bad else "",
    )


@pytest.mark.stretch
def test_criterion_3_stretch_classical_16(capsys):
    ok = count_of_order(16, "b", stretch=True) == 357
    report(capsys, "classical count n=16 (stretch)", ok)


def test_criterion_4_two_sided_counts_to_15(capsys):
    bad = [n for n in range(1, 16) if count_of_order(n, "t") != EXPECTED_T[n]]
    report(capsys, "two-sided counts n<=15", not bad, detail=f"mismatches {bad}" if bad else "")


def test_criterion_5_conjecture_spot_checks(capsys):
    checks = {
        "b(20)": (count_of_order(20, "b"), 11),
        "b(28)": (count_of_order(28, "b"), 9),
        "q(12)": (quaternion_brace_count(12), 2),
        "q(20)": (quaternion_brace_count(20), 2),
        "q(24)": (quaternion_brace_count(24), 6),
    }
    bad = [k for k, (got, want) in checks.items() if got != want]
    report(capsys, "conjecture spot checks", not bad, detail=f"mismatches {bad}" if bad else "")


def _property_failures(braces) -> list[str]:
    failures = []
    for i, b in enumerate(braces):
        d, c = np.asarray(b.dot.table), np.asarray(b.circle.table)
        inv = np.asarray(b.dot.inverse)
        n = b.order
        rng = np.arange(n)
        lam = b.lambda_matrix()
        tag = f"brace {i} (order {n})"

        # compatibility over all triples and its two equivalent phrasings
        if brace_violation(b.dot, b.circle) is not None:
            failures.append(f"{tag}: compatibility axiom")
        if not np.array_equal(lam[:, lam], lam[c]):
            failures.append(f"{tag}: lambda is not multiplicative over circle")
        if not (lam[:, d] == d[lam[:, :, None], lam[:, None, :]]).all():
            failures.append(f"{tag}: lambda_a is not a dot endomorphism")

        # the two mixed-inverse identities
        a_, b_, x_ = np.ix_(rng, rng, rng)
        lhs = c[a_, d[inv[b_], x_]]
        rhs = d[d[a_ + 0 * b_, inv[c[a_, b_]]], c[a_ + 0 * x_, x_]]
        if not (lhs == rhs).all():
            failures.append(f"{tag}: identity a o (b^-1 x)")
        lhs = c[a_, d[b_, inv[x_]]]
        rhs = d[d[c[a_, b_], inv[c[a_ + 0 * x_, x_]]], a_ + 0 * b_ + 0 * x_]
        if not (lhs == rhs).all():
            failures.append(f"{tag}: identity a o (b x^-1)")

        # lambda rows are honest automorphisms, and the identity map is a
        # bijective crossed homomorphism for them: g o h = g lam_g(h)
        aut = automorphism_group(b.dot)
        if any(row.tobytes() not in aut.index_of for row in lam):
            failures.append(f"{tag}: lambda row is not an automorphism")
        if not np.array_equal(c, d[rng[:, None], lam]):
            failures.append(f"{tag}: crossed-homomorphism identity")

        soc = socle(b)
        if not is_ideal(b, soc):
            failures.append(f"{tag}: socle is not an ideal")
        if not set(soc) <= set(center(b.dot)):
            failures.append(f"{tag}: socle is not central")
        try:
            quotient_brace(b, soc)
        except Exception as exc:
            failures.append(f"{tag}: quotient by socle ({exc})")

        s = from_brace(b)
        if check_yang_baxter(s) is not None:
            failures.append(f"{tag}: braid relation")
        if not is_nondegenerate(s):
            failures.append(f"{tag}: degenerate solution")
        if not check_braiding_operator(s, b.circle):
            failures.append(f"{tag}: braiding-operator axioms")
        if is_involutive(s) != is_abelian(b.dot):
            failures.append(f"{tag}: involutive <=> abelian dot")

        if n <= 6 and check_guitar_equivalence(b, 3) is not None:
            failures.append(f"{tag}: tuple rewriting, length 3")
        if n <= 4 and check_guitar_equivalence(b, 4) is not None:
            failures.append(f"{tag}: tuple rewriting, length 4")
    return failures


def test_criterion_6_property_suite(capsys, braces_upto_8):
    failures = _property_failures(braces_upto_8)
    report(
        capsys,
        "property suite on all braces n<=8",
        not failures,
        detail="; ".join(failures[:3]),
    )


def test_criterion_7_dual_oracle_class_counts(capsys):
    bad = []
    for n in range(1, 9):
        for g in catalog_groups(n):
            raw = enumerate_regular_subgroups(g)
            reps, _ = dedup_up_to_aut(raw)
            braces = [from_assignment(x) for x in raw]
            classes = []
            for brace in braces:
                if not any(is_brace_isomorphic(brace, rep) for rep in classes):
                    classes.append(brace)
            if len(classes) != len(reps):
                bad.append((g.label, len(reps), len(classes)))
    report(
        capsys,
        "conjugacy classes == pairwise isomorphism classes (n<=8)",
        not bad,
        detail=f"mismatches {bad}" if bad else "",
    )


def test_criterion_8_determinism(capsys):
    problems = []

    # thread count must not change results
    for n in (8, 12):
        one = sum(len(brace_classes(g, threads=1)) for g in catalog_groups(n))
        four = sum(len(brace_classes(g, threads=4)) for g in catalog_groups(n))
        if one != four:
            problems.append(f"thread counts disagree at order {n}: {one} vs {four}")

    # counts must survive random identity-fixing relabelings
    rng = np.random.default_rng(20260824)
    for g in catalog_groups(6) + catalog_groups(8)[4:]:
        perm = np.concatenate(([0], rng.permutation(np.arange(1, g.order))))
        h = g.relabel(perm)
        if len(brace_classes(g)) != len(brace_classes(h)):
            problems.append(f"relabeling changed the count for {g.label}")

    # database files must be byte-identical across independent builds
    import tempfile, os

    with tempfile.TemporaryDirectory() as tmp:
        p1, p2 = os.path.join(tmp, "a.db"), os.path.join(tmp, "b.db")
        write_db(build_records(6, threads=1), p1)
        write_db(build_records(6, threads=4), p2)
        with open(p1, "rb") as f1, open(p2, "rb") as f2:
            if f1.read() != f2.read():
                problems.append("database bytes differ between builds")
        if len(read_db(p1)) != 6:
            problems.append("unexpected record count in rebuilt database")

    report(capsys, "determinism", not problems, detail="; ".join(problems))
