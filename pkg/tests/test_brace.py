from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewbrace import errors
from skewbrace.brace import (
    almost_trivial_brace,
    check_invariants,
    gamma,
    gamma_kernel,
    ideals,
    is_ideal,
    is_left_ideal,
    is_sub_brace,
    left_ideals,
    opposite,
    quotient_brace,
    restrict,
    sub_braces,
    trivial_brace,
    two_of_three,
    validate_brace,
)
from skewbrace.groups import (
    compose,
    cyclic_group,
    identity_perm,
    inner_automorphism,
    is_isomorphic,
    normal_subgroups,
    subgroups,
)


def axiom_holds_by_hand(add, mul):
    n = len(add)
    for x, y, z in product(range(n), repeat=3):
        zi = next(v for v in range(n) if add[z][v] == 0)
        if mul[add[x][y]][z] != add[add[mul[x][z]][zi]][mul[y][z]]:
            return False
    return True


# -- validation -------------------------------------------------------------

def test_trivial_z6_is_valid(Z6):
    B = validate_brace(Z6.table, Z6.table)
    assert B.order == 6


def test_reversed_s3_is_valid(S3):
    B = validate_brace(S3.table, S3.table.T)
    assert B == almost_trivial_brace(S3)


def test_z4_with_xor_table():
    z4 = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    xor = [[i ^ j for j in range(4)] for i in range(4)]
    expected = axiom_holds_by_hand(z4, xor)
    if expected:
        validate_brace(z4, xor)
    else:
        with pytest.raises(errors.AxiomViolation) as exc:
            validate_brace(z4, xor)
        x, y, z = exc.value.witness
        assert xor[z4[x][y]][z] != z4[z4[xor[x][z]][(-z) % 4]][xor[y][z]]


def test_axiom_violation_reports_triple(S3):
    # S3 table as add with Z6 as mul breaks the axiom
    Z6 = cyclic_group(6)
    with pytest.raises(errors.AxiomViolation) as exc:
        validate_brace(S3.table, Z6.table)
    x, y, z = exc.value.witness
    a, m = S3.rows, Z6.rows
    assert m[a[x][y]][z] != a[a[m[x][z]][S3.inv[z]]][m[y][z]]


def test_bad_mul_table_wrapped():
    z3 = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    with pytest.raises(errors.MulNotGroup):
        validate_brace(z3, [[0, 2, 1], [1, 0, 2], [2, 1, 0]])
    with pytest.raises(errors.AddNotGroup):
        validate_brace([[0, 0], [0, 0]], [[0, 1], [1, 0]])


def test_size_mismatch():
    with pytest.raises(errors.ValidationError):
        validate_brace(cyclic_group(2).table, cyclic_group(3).table)


def test_corpus_braces_pass_hand_axiom(small_corpus):
    for _, _, B in small_corpus:
        assert axiom_holds_by_hand(B.add.rows, B.mul.rows)


# -- trivial and almost trivial --------------------------------------------

def test_trivial_z3_gamma_identity(Z3):
    B = trivial_brace(Z3)
    assert all(gamma(B, z) == identity_perm(3) for z in range(3))
    assert gamma_kernel(B) == (0, 1, 2)


def test_almost_trivial_s3_gamma_is_inverse_conjugation(S3):
    B = almost_trivial_brace(S3)
    for z in range(6):
        assert gamma(B, z) == inner_automorphism(S3, S3.inv[z])
    assert gamma_kernel(B) == (0,)


def test_almost_trivial_abelian_is_trivial(Z6):
    assert almost_trivial_brace(Z6) == trivial_brace(Z6)


# -- invariants -------------------------------------------------------------

def test_invariants_hold_on_small_corpus(small_corpus):
    for _, _, B in small_corpus:
        assert check_invariants(B) == []
        assert gamma(B, 0) == identity_perm(B.order)


def test_circ_via_gamma(small_corpus):
    for _, _, B in small_corpus[::7]:
        for x in range(B.order):
            for y in range(B.order):
                assert B.circ(x, y) == B.plus(B.gamma(y)[x], y)


# -- sub-braces, ideals -----------------------------------------------------

def test_sub_brace_z6(Z6):
    assert is_sub_brace(trivial_brace(Z6), (0, 3))


def test_order_two_sub_brace_of_almost_trivial_s3(S3):
    B = almost_trivial_brace(S3)
    for S in subgroups(S3):
        if len(S) == 2:
            assert is_sub_brace(B, S)
            t = two_of_three(B, S)
            assert t.add_sub and t.mul_sub and t.gamma_inv


def test_two_of_three_on_small_corpus(small_corpus):
    for _, _, B in small_corpus:
        if B.order > 6:
            continue
        n = B.order
        for mask in range(1, 1 << n, 2):
            A = tuple(i for i in range(n) if mask >> i & 1)
            t = two_of_three(B, A)
            if t.add_sub + t.mul_sub + t.gamma_inv >= 2:
                assert t.add_sub and t.mul_sub and t.gamma_inv
                assert is_sub_brace(B, A)


def test_trivial_brace_ideals_are_normal_subgroups(S3, Z6):
    for G in (S3, Z6):
        B = trivial_brace(G)
        assert ideals(B) == normal_subgroups(G)
    assert is_ideal(trivial_brace(Z6), (0, 2, 4))


def test_trivial_z6_sub_braces():
    Z6 = cyclic_group(6)
    B = trivial_brace(Z6)
    assert sub_braces(B) == subgroups(Z6)
    assert ideals(B) == subgroups(Z6)


def test_trivial_s3_ideals(S3):
    B = trivial_brace(S3)
    A3 = next(S for S in subgroups(S3) if len(S) == 3)
    assert ideals(B) == tuple(sorted([(0,), A3, tuple(range(6))]))
    T = next(S for S in subgroups(S3) if len(S) == 2)
    assert not is_ideal(B, T)


def test_ideal_inclusions(small_corpus):
    for _, _, B in small_corpus:
        subs = set(sub_braces(B))
        lefts = set(left_ideals(B))
        for I in ideals(B):
            assert I in subs and I in lefts
        for L in lefts:
            assert is_left_ideal(B, L)
            # left ideals are sub-skew braces
            assert L in subs


# -- opposite ---------------------------------------------------------------

def test_opposite_of_trivial_is_almost_trivial(S3, Z6):
    for G in (S3, Z6):
        assert opposite(trivial_brace(G)) == almost_trivial_brace(G)


def test_opposite_involution_and_families(small_corpus):
    for _, _, B in small_corpus:
        Bbar = opposite(B)
        assert opposite(Bbar) == B
        assert sub_braces(Bbar) == sub_braces(B)
        assert ideals(Bbar) == ideals(B)


def test_opposite_gamma_formula(small_corpus):
    for _, _, B in small_corpus:
        Bbar = opposite(B)
        for y in range(B.order):
            yi = B.add.inv[y]
            assert Bbar.gamma(y) == compose(B.gamma(yi), inner_automorphism(B.add, yi))


def test_additive_inverse_is_isomorphism_to_opposite(small_corpus):
    for _, _, B in small_corpus:
        Bbar = opposite(B)
        inv = B.add.inv
        for x in range(B.order):
            for y in range(B.order):
                assert inv[B.circ(x, y)] == Bbar.circ(inv[x], inv[y])


# -- quotients and restriction ----------------------------------------------

def test_quotient_trivial_z6():
    B = trivial_brace(cyclic_group(6))
    Q = quotient_brace(B, (0, 3)).brace
    assert Q == trivial_brace(cyclic_group(3))


def test_quotient_by_whole_and_by_zero(small_corpus):
    for _, _, B in small_corpus[::5]:
        assert quotient_brace(B, range(B.order)).brace.order == 1
        QB = quotient_brace(B, (0,))
        perm = QB.projection
        assert QB.brace.order == B.order
        for x in range(B.order):
            for y in range(B.order):
                assert perm[B.plus(x, y)] == QB.brace.plus(perm[x], perm[y])
                assert perm[B.circ(x, y)] == QB.brace.circ(perm[x], perm[y])


def test_quotient_requires_ideal(S3):
    B = trivial_brace(S3)
    T = next(S for S in subgroups(S3) if len(S) == 2)
    with pytest.raises(errors.NotAnIdeal):
        quotient_brace(B, T)


def test_quotient_projection_is_brace_morphism(small_corpus):
    for _, _, B in small_corpus:
        for I in ideals(B):
            QB = quotient_brace(B, I)
            p = QB.projection
            assert tuple(x for x in range(B.order) if p[x] == 0) == I
            for x in range(B.order):
                for y in range(B.order):
                    assert p[B.circ(x, y)] == QB.brace.circ(p[x], p[y])
            assert QB.preimage((0,)) == I


def test_restrict(small_corpus):
    for _, _, B in small_corpus[::3]:
        for A in sub_braces(B):
            sub = restrict(B, A)
            assert sub.embedding == A
            e = sub.embedding
            for i in range(len(A)):
                for j in range(len(A)):
                    assert e[sub.brace.circ(i, j)] == B.circ(e[i], e[j])


def test_restrict_rejects_non_sub_brace(Z6):
    with pytest.raises(errors.NotASubgroup):
        restrict(trivial_brace(Z6), (0, 1))


# -- properties under relabelling -------------------------------------------

@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_relabelling_preserves_brace(data, small_corpus):
    _, _, B = data.draw(st.sampled_from(small_corpus))
    n = B.order
    rest = data.draw(st.permutations(range(1, n)))
    p = np.array([0] + list(rest))         # old -> new
    pinv = np.argsort(p)
    add = p[B.add.table[np.ix_(pinv, pinv)]]
    mul = p[B.mul.table[np.ix_(pinv, pinv)]]
    C = validate_brace(add, mul)
    assert is_isomorphic(C.add, B.add) and is_isomorphic(C.mul, B.mul)
    assert len(sub_braces(C)) == len(sub_braces(B))
    assert len(ideals(C)) == len(ideals(B))
    assert len(gamma_kernel(C)) == len(gamma_kernel(B))
