import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewbrace.brace import (
    RadicalRing,
    brace_violation,
    factorization_brace,
    from_assignment,
    from_radical_ring,
    gateva_ivanova_condition,
    is_brace_isomorphic,
    is_ideal,
    is_two_sided,
    make_brace,
    opposite_trivial_brace,
    quotient_brace,
    semidirect_brace_ds,
    semidirect_brace_sd,
    socle,
    to_radical_ring,
    trivial_brace,
)
from skewbrace.catalog import group_by_id
from skewbrace.counts import count_of_order
from skewbrace.errors import (
    NotABrace,
    NotAnIdeal,
    NotClassical,
    NotTwoSided,
    NotUniqueFactorization,
)
from skewbrace.groups import (
    GroupMap,
    automorphism_group,
    center,
    cyclic,
    generalized_quaternion,
    is_abelian,
    is_isomorphic,
)


def z2_on_z3_action():
    """Z2 acting on Z3 by inversion, packaged for the semidirect builders."""
    z2, z3 = cyclic(2), cyclic(3)
    aut = automorphism_group(z3)
    inv = aut.lookup(np.array([0, 2, 1]))
    alpha = GroupMap(
        source=z2,
        target=aut.composition_group(),
        image=np.array([aut.identity_index, inv]),
    )
    return z2, z3, alpha, aut


class TestValidation:
    def test_incompatible_tables_rejected_with_witness(self):
        # cyclic group of order 4 relabelled through a non-automorphism
        sigma = np.array([0, 1, 3, 2])
        z4 = cyclic(4)
        circle = sigma[np.asarray(z4.table)[np.ix_(sigma, sigma)]]
        witness = brace_violation(z4, z4.relabel(sigma))
        assert witness is not None
        with pytest.raises(NotABrace) as exc:
            make_brace(z4.table, circle)
        a, b, c = exc.value.witness
        d, ct = np.asarray(z4.table), circle
        assert ct[a, d[b, c]] != d[d[ct[a, b], z4.inverse[a]], ct[a, c]]

    def test_compatible_tables_have_no_witness(self):
        g = group_by_id("8.5")
        assert brace_violation(g, g) is None

    def test_trivial_and_opposite(self):
        q8 = generalized_quaternion(8)
        assert trivial_brace(q8).is_trivial()
        op = opposite_trivial_brace(q8)
        assert not op.is_trivial()
        assert not op.is_classical()


class TestLambdaMaps:
    def test_lambda_of_trivial_brace_is_identity(self):
        b = trivial_brace(group_by_id("6.2"))
        assert np.array_equal(b.lambda_matrix(), np.tile(np.arange(6), (6, 1)))

    def test_lambda_of_opposite_trivial_is_conjugation(self):
        g = group_by_id("6.2")
        b = opposite_trivial_brace(g)
        t, inv = np.asarray(g.table), np.asarray(g.inverse)
        lam = b.lambda_matrix()
        for a in range(6):
            for x in range(6):
                assert lam[a, x] == t[t[inv[a], x], a]

    def test_lambda_inverse_really_inverts(self, braces_upto_8):
        for b in braces_upto_8:
            lam, lam_inv = b.lambda_matrix(), b.lambda_inverse_matrix()
            rng = np.arange(b.order)
            assert (lam[rng[:, None], lam_inv] == rng[None, :]).all()

    def test_lambda_automorphism_checked(self):
        b = opposite_trivial_brace(group_by_id("6.2"))
        phi = b.lambda_automorphism(1)
        assert phi is not None


class TestIsomorphism:
    def test_trivial_vs_opposite_iso_iff_abelian(self):
        z6 = cyclic(6)
        assert is_brace_isomorphic(trivial_brace(z6), opposite_trivial_brace(z6))
        for ident in ("6.2", "8.4"):
            g = group_by_id(ident)
            assert is_brace_isomorphic(trivial_brace(g), opposite_trivial_brace(g)) is None

    def test_different_orders(self):
        assert is_brace_isomorphic(trivial_brace(cyclic(2)), trivial_brace(cyclic(3))) is None

    @settings(max_examples=20, deadline=None)
    @given(st.permutations(list(range(1, 6))))
    def test_relabel_invariance(self, tail):
        g = group_by_id("6.2")
        b = opposite_trivial_brace(g)
        perm = np.array([0] + list(tail))
        relabelled = make_brace(
            g.relabel(perm).table, g.opposite().relabel(perm).table
        )
        hit = is_brace_isomorphic(b, relabelled)
        assert hit is not None


class TestSemidirectAndFactorization:
    def test_ds_form_dot_direct_circle_semidirect(self):
        z2, z3, alpha, aut = z2_on_z3_action()
        b = semidirect_brace_ds(z2, z3, alpha, aut)
        assert is_isomorphic(b.dot, group_by_id("6.1")) is not None
        assert is_isomorphic(b.circle, group_by_id("6.2")) is not None
        assert b.is_classical()

    def test_sd_form_dot_semidirect_circle_direct(self):
        z2, z3, alpha, aut = z2_on_z3_action()
        b = semidirect_brace_sd(z2, z3, alpha, aut)
        assert is_isomorphic(b.dot, group_by_id("6.2")) is not None
        assert is_isomorphic(b.circle, group_by_id("6.1")) is not None
        assert not b.is_classical()

    def test_sd_rejects_nonabelian_actor(self):
        s3 = group_by_id("6.2")
        z1 = cyclic(1)
        aut = automorphism_group(z1)
        alpha = GroupMap(
            source=s3,
            target=aut.composition_group(),
            image=np.zeros(6, dtype=int),
        )
        with pytest.raises(NotClassical):
            semidirect_brace_sd(s3, z1, alpha, aut)

    def test_factorization_of_symmetric_group(self):
        g = group_by_id("6.2")
        orders = g.element_orders()
        p = [0] + [int(x) for x in np.flatnonzero(orders == 3)]
        m = [0, int(np.flatnonzero(orders == 2)[0])]
        b = factorization_brace(g, p, m)
        assert is_abelian(b.circle)
        assert is_isomorphic(b.circle, cyclic(6)) is not None

    def test_factorization_degenerate_cases(self):
        g = group_by_id("6.2")
        whole = list(range(6))
        assert factorization_brace(g, whole, [0]).is_trivial()
        b = factorization_brace(g, [0], whole)
        assert np.array_equal(b.circle.table, g.opposite().table)

    def test_factorization_errors(self):
        g = group_by_id("6.2")
        whole = list(range(6))
        with pytest.raises(NotUniqueFactorization):
            factorization_brace(g, whole, whole)  # elements factor twice
        with pytest.raises(NotUniqueFactorization):
            factorization_brace(g, [0, 1], whole)  # unless [0,1] not subgroup
        orders = g.element_orders()
        p = [0] + [int(x) for x in np.flatnonzero(orders == 3)]
        with pytest.raises(NotUniqueFactorization):
            factorization_brace(g, p, [0])  # does not cover the group


class TestSocleIdealsQuotients:
    def test_socle_of_trivial_brace_is_center(self):
        for ident in ("6.2", "8.4", "8.5"):
            g = group_by_id(ident)
            assert socle(trivial_brace(g)) == center(g)

    def test_socle_of_trivial_abelian_brace_is_everything(self):
        z6 = cyclic(6)
        assert socle(trivial_brace(z6)) == list(range(6))

    def test_socle_is_ideal_and_central(self, braces_upto_8):
        for b in braces_upto_8:
            s = socle(b)
            assert is_ideal(b, s)
            zd = center(b.dot)
            assert set(s) <= set(zd)

    def test_non_ideal_subsets(self):
        b = trivial_brace(group_by_id("6.2"))
        assert not is_ideal(b, [1, 2])  # no identity
        orders = b.dot.element_orders()
        refl = [0, int(np.flatnonzero(orders == 2)[0])]
        assert not is_ideal(b, refl)  # order-2 subgroup is not normal

    def test_quotient_by_subgroup_of_cyclic(self):
        b = trivial_brace(cyclic(4))
        q, proj = quotient_brace(b, [0, 2])
        assert q.order == 2
        assert sorted(np.unique(proj).tolist()) == [0, 1]

    def test_quotient_rejects_non_ideal(self):
        b = trivial_brace(group_by_id("6.2"))
        orders = b.dot.element_orders()
        refl = [0, int(np.flatnonzero(orders == 2)[0])]
        with pytest.raises(NotAnIdeal):
            quotient_brace(b, refl)

    def test_quotient_by_socle_is_brace(self, braces_upto_8):
        for b in braces_upto_8:
            q, proj = quotient_brace(b, socle(b))
            assert q.order * len(socle(b)) == b.order
            # projection respects both products
            d, c = np.asarray(b.dot.table), np.asarray(b.circle.table)
            qd, qc = np.asarray(q.dot.table), np.asarray(q.circle.table)
            assert (proj[d] == qd[proj[:, None], proj[None, :]]).all()
            assert (proj[c] == qc[proj[:, None], proj[None, :]]).all()


class TestTwoSided:
    @pytest.mark.parametrize(
        "n,expected", [(1, 1), (2, 1), (3, 1), (4, 4), (5, 1), (6, 1), (7, 1), (8, 22)]
    )
    def test_two_sided_counts(self, n, expected):
        assert count_of_order(n, "t") == expected

    def test_two_sided_needs_abelian_dot(self):
        with pytest.raises(NotClassical):
            is_two_sided(trivial_brace(group_by_id("6.2")))

    def test_printed_criterion_disagrees_on_nine_classes(self, braces_upto_8):
        classical = [b for b in braces_upto_8 if b.is_classical()]
        assert len(classical) == 38
        disagreements = sum(
            1 for b in classical if gateva_ivanova_condition(b) != is_two_sided(b)
        )
        assert disagreements == 9


class TestRadicalRings:
    def test_zero_ring_gives_trivial_brace(self):
        r = RadicalRing(add=cyclic(2), star=np.zeros((2, 2), dtype=int))
        assert from_radical_ring(r).is_trivial()

    def test_roundtrip_on_two_sided_braces(self, braces_upto_8):
        seen = 0
        for b in braces_upto_8:
            if not b.is_classical() or not is_two_sided(b):
                continue
            seen += 1
            r = to_radical_ring(b)
            back = from_radical_ring(r)
            assert np.array_equal(back.dot.table, b.dot.table)
            assert np.array_equal(back.circle.table, b.circle.table)
        assert seen > 10

    def test_ring_validation_rejects_bad_star(self):
        with pytest.raises(NotClassical):
            RadicalRing(add=group_by_id("6.2"), star=np.zeros((6, 6), dtype=int))
        bad = np.array([[0, 1], [0, 0]])  # not associative/distributive
        with pytest.raises(NotTwoSided):
            RadicalRing(add=cyclic(2), star=bad)

    def test_one_sided_brace_has_no_ring(self, braces_upto_8):
        one_sided = next(
            b for b in braces_upto_8 if b.is_classical() and not is_two_sided(b)
        )
        with pytest.raises(NotTwoSided):
            to_radical_ring(one_sided)
