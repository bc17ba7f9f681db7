import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cdlab import (
    BadParameter,
    GroupValidationError,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    NotNormal,
    OrderLimitExceeded,
    ParseError,
    PermGenSet,
    UnknownFamily,
    all_subgroups,
    direct_product,
    exponent,
    from_cayley_table,
    from_permutation_generators,
    named,
    quotient,
)
from cdlab.subgroups import center, closure, cyclic_subgroup
from conftest import group


def test_trivial_table():
    G = from_cayley_table([[0]])
    assert G.order == 1
    assert G.elem_order.tolist() == [1]


def test_klein_four_xor():
    G = from_cayley_table([[a ^ b for b in range(4)] for a in range(4)])
    assert G.elem_order.tolist() == [1, 2, 2, 2]
    assert G.is_abelian


def test_idempotent_non_identity_rejected():
    with pytest.raises((NoInverse, NotAssociative)):
        from_cayley_table([[0, 1], [1, 1]])


def test_validation_errors_are_value_errors():
    assert issubclass(NotClosed, GroupValidationError)
    assert issubclass(GroupValidationError, ValueError)


def test_out_of_range_entry():
    with pytest.raises(NotClosed):
        from_cayley_table([[0, 1], [1, 2]])


def test_missing_identity():
    with pytest.raises(NoIdentity):
        from_cayley_table([[1, 0], [0, 1]])


def test_non_associative_latin_square():
    # loop of order 5 with identity 0 that is not a group
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative):
        from_cayley_table(t)


def test_large_non_associative_found_by_generators():
    # perturb two entries of C_300 while keeping a Latin square
    n = 300
    t = np.add.outer(np.arange(n), np.arange(n)) % n
    t[[5, 5], [7, 8]] = t[[5, 5], [8, 7]]
    t[[6, 6], [7, 8]] = t[[6, 6], [8, 7]]
    with pytest.raises(GroupValidationError):
        from_cayley_table(t)


def test_table_is_read_only():
    G = group("symmetric:3")
    with pytest.raises(ValueError):
        G.table[0, 0] = 1


def test_single_transposition():
    G = from_permutation_generators(PermGenSet(2, ((1, 0),)))
    assert G.order == 2


def test_s3_from_generators():
    G = from_permutation_generators(PermGenSet(3, ((1, 0, 2), (1, 2, 0))))
    assert G.order == 6
    assert not G.is_abelian


def test_perm_order_limit():
    gens = PermGenSet(6, ((1, 0, 2, 3, 4, 5), (1, 2, 3, 4, 5, 0)))
    with pytest.raises(OrderLimitExceeded):
        from_permutation_generators(gens, max_order=100)


def test_bad_permutation():
    with pytest.raises(BadParameter):
        PermGenSet(3, ((0, 0, 1),))


def test_sl2_5_matches_matrix_enumeration():
    assert len(oracles.sl2_matrices(5)) == 120
    G = group("corpus:sl2_5")
    assert G.order == 120
    assert center(G).order == 2


def test_product_of_coprime_cyclics_is_cyclic():
    G = direct_product(group("cyclic:2"), group("cyclic:3"))
    assert G.order == 6 and G.is_abelian
    assert 6 in G.elem_order.tolist()


def test_product_with_trivial():
    S3 = group("symmetric:3")
    G = direct_product(S3, group("cyclic:1"))
    assert np.array_equal(G.table, S3.table)


def test_a5_squared():
    G = group("product(alternating:5,alternating:5)")
    assert G.order == 3600
    from cdlab.subgroups import fitting_subgroup

    assert fitting_subgroup(G).is_trivial()


def test_product_order_limit():
    with pytest.raises(OrderLimitExceeded):
        direct_product(group("symmetric:5"), group("symmetric:5"), max_order=512)


def test_quotient_by_trivial():
    G = group("dihedral:4")
    Q, coset_of = quotient(G, closure(G, []))
    assert np.array_equal(Q.table, G.table)
    assert coset_of.tolist() == list(range(8))


def test_q8_mod_center_is_klein():
    G = group("dicyclic:2")
    Q, _ = quotient(G, center(G))
    assert Q.order == 4 and Q.is_abelian
    assert sorted(Q.elem_order.tolist()) == [1, 2, 2, 2]


def test_s3_mod_c3():
    G = group("symmetric:3")
    C3 = next(H for H in all_subgroups(G) if H.order == 3)
    Q, _ = quotient(G, C3)
    assert Q.order == 2


def test_quotient_requires_normal():
    G = group("symmetric:3")
    t = next(g for g in range(6) if G.elem_order[g] == 2)
    with pytest.raises(NotNormal):
        quotient(G, cyclic_subgroup(G, t))


def test_heisenberg_3():
    G = group("heisenberg:3")
    assert G.order == 27
    assert exponent(G) == 3
    assert center(G).order == 3


def test_dihedral_4_has_c4():
    assert 4 in group("dihedral:4").elem_order.tolist()


def test_q8_single_involution():
    orders = oracles.element_orders(group("dicyclic:2").table)
    assert orders.count(2) == 1
    assert group("dicyclic:2").elem_order.tolist() == orders


@pytest.mark.parametrize("spec,expected", [("cyclic:1", 1), ("heisenberg:3", 3), ("dicyclic:2", 4)])
def test_exponent(spec, expected):
    assert exponent(group(spec)) == expected


@pytest.mark.parametrize(
    "spec,order",
    [
        ("cyclic:12", 12),
        ("dihedral:5", 10),
        ("dicyclic:3", 12),
        ("symmetric:4", 24),
        ("alternating:5", 60),
        ("elementary_abelian:3:2", 9),
        ("extraspecial_exp_p2:5", 125),
        ("wreath_cyclic:3", 81),
        ("class2_cocycle:2", 64),
        ("product(symmetric:3,cyclic:2)", 12),
    ],
)
def test_family_orders(spec, order):
    assert group(spec).order == order


def test_families_are_groups_by_oracle_orders():
    # element orders agree with a plain power loop
    for spec in ("dicyclic:3", "extraspecial_exp_p2:3", "wreath_cyclic:3", "class2_cocycle:2"):
        G = group(spec)
        assert G.elem_order.tolist() == oracles.element_orders(G.table)


def test_extraspecial_exp_p2_exponent():
    assert exponent(group("extraspecial_exp_p2:3")) == 9


def test_named_labels():
    assert named("product( dihedral:4 , cyclic:2 )").label == "product(dihedral:4,cyclic:2)"


@pytest.mark.parametrize(
    "text,exc",
    [
        ("", ParseError),
        ("nosuch:3", UnknownFamily),
        ("cyclic", BadParameter),
        ("cyclic:x", BadParameter),
        ("cyclic:0", BadParameter),
        ("dicyclic:1", BadParameter),
        ("elementary_abelian:4:2", BadParameter),
        ("product(cyclic:2)", ParseError),
        ("corpus:nope", BadParameter),
    ],
)
def test_bad_specs(text, exc):
    with pytest.raises(exc):
        named(text)


def test_named_respects_cap():
    with pytest.raises(OrderLimitExceeded):
        named("symmetric:6", max_order=512)


def test_cayley_table_roundtrip_via_validation():
    G = group("alternating:4")
    H = from_cayley_table(G.table)
    assert np.array_equal(G.table, H.table)


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(3)), st.integers(min_value=3, max_value=6))
def test_generator_order_does_not_change_group_order(perm_of_three, n):
    transposition = tuple([1, 0] + list(range(2, n)))
    cycle = tuple(list(range(1, n)) + [0])
    extra = tuple(list(range(n - 1, -1, -1)))
    gens = [transposition, cycle, extra]
    shuffled = tuple(gens[i] for i in perm_of_three)
    G = from_permutation_generators(PermGenSet(n, shuffled), max_order=720)
    assert G.order == len(list(itertools.permutations(range(n))))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["symmetric:3", "dihedral:5", "dicyclic:3", "alternating:4", "heisenberg:3"]), st.data())
def test_group_axioms_hold(spec, data):
    G = group(spec)
    a, b, c = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == 0 == G.mul(G.inv(a), a)
    assert G.commutator(a, b) == oracles.commutator(G.table, a, b)
