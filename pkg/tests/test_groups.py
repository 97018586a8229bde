import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewbrace.errors import (
    NoInverse,
    NotAHomomorphism,
    NotAssociative,
    NotClosed,
    HolomorphTooLarge,
)
from skewbrace.groups import (
    AutGroup,
    GroupMap,
    all_homomorphisms,
    automorphism_group,
    center,
    cyclic,
    direct_product,
    generalized_quaternion,
    is_abelian,
    is_isomorphic,
    is_solvable_table,
    make_group,
    minimal_generating_set,
    semidirect_product,
    subgroup_closure,
    trivial_group,
)


def klein_four():
    return make_group([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])


def symmetric_3():
    z3, z2 = cyclic(3), cyclic(2)
    aut = automorphism_group(z3)
    inv = aut.lookup(np.array([0, 2, 1]))
    alpha = GroupMap(
        source=z2,
        target=aut.composition_group(),
        image=np.array([aut.identity_index, inv]),
    )
    return semidirect_product(z2, z3, alpha, aut)


class TestValidation:
    def test_out_of_range_entry(self):
        with pytest.raises(NotClosed) as exc:
            make_group([[0, 1], [1, 7]])
        assert exc.value.witness == (1, 1)

    def test_nonassociative_table(self):
        # a nonassociative loop of order 5 (has identity, Latin square)
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 3, 4, 0, 1],
            [3, 4, 1, 2, 0],
            [4, 2, 0, 1, 3],
        ]
        with pytest.raises((NotAssociative, NoInverse)) as exc:
            make_group(table)
        if isinstance(exc.value, NotAssociative):
            a, b, c = exc.value.witness
            t = np.array(table)
            assert t[t[a, b], c] != t[a, t[b, c]]

    def test_no_inverse(self):
        # monoid with absorbing element
        with pytest.raises((NoInverse, NotAssociative)):
            make_group([[0, 1], [1, 1]])

    def test_identity_normalized_to_zero(self):
        # cyclic group of order 3 written with identity at index 2
        g = make_group([[1, 2, 0], [2, 0, 1], [0, 1, 2]])
        assert g.identity == 0
        assert g.element_order(1) == 3

    def test_trivial_group(self):
        assert trivial_group().order == 1


class TestConstructors:
    def test_cyclic_orders(self):
        g = cyclic(6)
        assert sorted(g.element_orders().tolist()) == [1, 2, 3, 3, 6, 6]

    def test_direct_product(self):
        g = direct_product(cyclic(2), cyclic(3))
        assert is_isomorphic(g, cyclic(6)) is not None

    def test_generalized_quaternion(self):
        q8 = generalized_quaternion(8)
        # one element of order 2, six of order 4
        assert sorted(q8.element_orders().tolist()) == [1, 2, 4, 4, 4, 4, 4, 4]
        assert len(center(q8)) == 2
        q12 = generalized_quaternion(12)
        assert not is_abelian(q12)
        assert q12.order == 12

    def test_semidirect_is_symmetric_group(self):
        s3 = symmetric_3()
        assert not is_abelian(s3)
        assert sorted(s3.element_orders().tolist()) == [1, 2, 2, 2, 3, 3]

    def test_opposite_of_nonabelian(self):
        s3 = symmetric_3()
        op = s3.opposite()
        assert not np.array_equal(op.table, s3.table)
        assert is_isomorphic(s3, op) is not None  # via inversion


class TestSubgroups:
    def test_closure_of_generator(self):
        g = cyclic(12)
        assert subgroup_closure(g, [4]) == [0, 4, 8]

    def test_minimal_generating_set(self):
        assert len(minimal_generating_set(cyclic(8))) == 1
        assert len(minimal_generating_set(klein_four())) == 2
        assert len(minimal_generating_set(symmetric_3())) == 2

    def test_center_and_solvability(self):
        s3 = symmetric_3()
        assert center(s3) == [0]
        assert is_solvable_table(np.asarray(s3.table))
        assert is_solvable_table(np.asarray(generalized_quaternion(16).table))


class TestMorphisms:
    def test_isomorphic_relabel(self):
        g = cyclic(8)
        perm = np.array([0, 3, 5, 1, 7, 2, 6, 4])
        assert is_isomorphic(g, g.relabel(perm)) is not None

    def test_non_isomorphic_same_order(self):
        assert is_isomorphic(cyclic(4), klein_four()) is None

    def test_automorphism_counts(self):
        assert automorphism_group(cyclic(10)).size == 4
        assert automorphism_group(klein_four()).size == 6
        assert automorphism_group(generalized_quaternion(8)).size == 24
        z2cube = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2))
        assert automorphism_group(z2cube).size == 168

    def test_homomorphism_validation(self):
        with pytest.raises(NotAHomomorphism):
            GroupMap(source=cyclic(2), target=cyclic(3), image=np.array([0, 1]))

    def test_all_homomorphisms_count(self):
        # maps Z6 -> Z3 are determined by the image of a generator
        assert len(all_homomorphisms(cyclic(6), cyclic(3))) == 3
        # maps S3 -> Z3 are trivial (abelianization is Z2)
        assert len(all_homomorphisms(symmetric_3(), cyclic(3))) == 1

    def test_aut_group_structure(self):
        aut = automorphism_group(cyclic(5))
        comp = aut.composition_group()
        assert is_isomorphic(comp, cyclic(4)) is not None
        i = aut.lookup(aut.perms[1])
        assert aut.compose(i, aut.inverse_indices[i]) == aut.identity_index

    def test_composition_group_limit(self):
        aut = automorphism_group(klein_four())
        with pytest.raises(HolomorphTooLarge):
            aut.composition_group(limit=2)


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(1, 8))))
def test_relabel_preserves_structure(tail):
    g = cyclic(8)
    perm = np.array([0] + list(tail))
    h = g.relabel(perm)
    assert h.identity == 0
    assert sorted(h.element_orders().tolist()) == sorted(g.element_orders().tolist())
    assert is_isomorphic(g, h) is not None


@settings(max_examples=15, deadline=None)
@given(st.permutations(list(range(1, 6))))
def test_relabel_automorphism_count_invariant(tail):
    s3 = symmetric_3()
    h = s3.relabel(np.array([0] + list(tail)))
    assert automorphism_group(h).size == 6
