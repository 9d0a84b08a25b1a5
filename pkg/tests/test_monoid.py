from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from actkit.act import regular_act
from actkit.congruence import all_congruences, meet
from actkit.errors import (
    IndexOutOfRange,
    NotAssociative,
    NotIdentity,
    NotInverse,
    ParamTooLarge,
    UnknownBuilder,
)
from actkit.monoid import (
    BUILDERS,
    idempotents,
    is_embedding,
    is_group,
    is_inverse_monoid,
    make_monoid,
    min_group_congruence,
    monoid_isomorphism,
    opposite,
    standard_monoid,
    symmetric_inverse_order,
)

SMALL_BUILDS = [
    ("trivial",), ("cyclic_group", 1), ("cyclic_group", 4), ("semilattice_chain", 3),
    ("max_chain", 3), ("rectangular_band_1", 2, 2), ("right_zero_1", 3),
    ("symmetric_inverse", 1), ("symmetric_inverse", 2), ("symmetric_inverse", 3),
    ("full_transformation", 1), ("full_transformation", 2), ("full_transformation", 3),
]


def axioms_hold(M):
    t, e = M.table, M.identity
    return (all(t[e][s] == s == t[s][e] for s in M.elements)
            and all(t[t[a][b]][c] == t[a][t[b][c]]
                    for a, b, c in product(M.elements, repeat=3)))


@pytest.mark.parametrize("build", SMALL_BUILDS, ids=lambda s: "-".join(map(str, s)))
def test_builders_satisfy_monoid_axioms(build):
    M = standard_monoid(*build)
    assert axioms_hold(M)
    assert make_monoid(M.table, M.identity) == M


def test_make_monoid_examples():
    assert make_monoid([[0]], 0).size == 1
    assert is_group(make_monoid([[0, 1], [1, 0]], 0))
    with pytest.raises(NotIdentity) as exc:
        make_monoid([[0, 1], [1, 0]], 1)
    assert exc.value.witness is not None


def test_make_monoid_rejects_bad_tables():
    with pytest.raises(IndexOutOfRange):
        make_monoid([[0, 2], [1, 0]], 0)
    with pytest.raises(IndexOutOfRange):
        make_monoid([[0, 1], [1, 0]], 5)
    # identity 0, but 1*1 = 2, 2*1 = 1, 1*2 = 0 breaks associativity
    bad = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]
    with pytest.raises(NotAssociative) as exc:
        make_monoid(bad, 0)
    a, b, c = exc.value.witness
    assert bad[bad[a][b]][c] != bad[a][bad[b][c]]


def test_builder_orders():
    for n in range(0, 5):
        partial_injections = sum(1 for imgs in product(range(n + 1), repeat=n)
                                 if len({x for x in imgs if x != n}) == sum(x != n for x in imgs))
        assert symmetric_inverse_order(n) == partial_injections
        if n >= 1:
            assert standard_monoid("symmetric_inverse", n).size == partial_injections
    assert standard_monoid("symmetric_inverse", 2).size == 7
    for n in range(1, 4):
        assert standard_monoid("full_transformation", n).size == n ** n
    assert standard_monoid("rectangular_band_1", 2, 3).size == 7
    assert standard_monoid("right_zero_1", 2).size == 3


def test_builder_errors():
    with pytest.raises(UnknownBuilder):
        standard_monoid("free_group", 2)
    with pytest.raises(UnknownBuilder):
        standard_monoid("cyclic_group")
    with pytest.raises(ParamTooLarge):
        standard_monoid("full_transformation", 5)
    with pytest.raises(ParamTooLarge):
        standard_monoid("symmetric_inverse", 9)
    assert set(BUILDERS) == {"trivial", "cyclic_group", "semilattice_chain", "max_chain",
                             "rectangular_band_1", "right_zero_1", "symmetric_inverse",
                             "full_transformation"}


def test_semilattice_chain_two(chain2):
    # elements: 0 is the identity 1, 1 is e
    assert chain2.table == ((0, 1), (1, 1))
    assert idempotents(chain2) == (0, 1)


def test_idempotents():
    assert idempotents(standard_monoid("trivial")) == (0,)
    assert idempotents(standard_monoid("cyclic_group", 2)) == (0,)
    T2 = standard_monoid("full_transformation", 2)
    assert idempotents(T2) == tuple(e for e in T2.elements if T2.table[e][e] == e)
    assert len(idempotents(T2)) == 3


def test_inverse_monoid_examples(z2, si2):
    assert is_inverse_monoid(si2)
    assert is_inverse_monoid(z2)
    v = is_inverse_monoid(standard_monoid("full_transformation", 2))
    assert not v
    T2 = standard_monoid("full_transformation", 2)
    x = v.witness
    count = sum(1 for y in T2.elements
                if T2.table[T2.table[x][y]][x] == x and T2.table[T2.table[y][x]][y] == y)
    assert count != 1


def _group_quotient_congruences(M):
    """Congruences tau of the regular act whose quotient carries the
    induced multiplication as a group."""
    out = []
    for tau in all_congruences(regular_act(M)):
        cm = tau.class_map
        k = tau.num_classes
        well_defined = all(cm[M.table[a][b]] == cm[M.table[c][d]]
                           for a, b, c, d in product(M.elements, repeat=4)
                           if cm[a] == cm[c] and cm[b] == cm[d])
        if not well_defined:
            continue
        mul = {(cm[a], cm[b]): cm[M.table[a][b]] for a in M.elements for b in M.elements}
        one = cm[M.identity]
        if all(any(mul[(x, y)] == one for y in range(k)) for x in range(k)):
            out.append(tau)
    return out


@pytest.mark.parametrize("build", [("trivial",), ("cyclic_group", 2), ("cyclic_group", 3),
                                  ("semilattice_chain", 2), ("semilattice_chain", 3),
                                  ("symmetric_inverse", 2)])
def test_min_group_congruence_is_least_group_congruence(build):
    M = standard_monoid(*build)
    sigma = min_group_congruence(M)
    candidates = _group_quotient_congruences(M)
    assert sigma in candidates
    least = candidates[0]
    for tau in candidates[1:]:
        least = meet(least, tau)
    assert sigma == least


def test_min_group_congruence_examples(z2, chain2, si2):
    assert min_group_congruence(z2).is_identity()
    assert min_group_congruence(chain2).is_universal()
    # the empty partial map is a zero, so every pair is related through it
    sigma = min_group_congruence(si2)
    assert sigma.is_universal()
    with pytest.raises(NotInverse):
        min_group_congruence(standard_monoid("full_transformation", 2))


def test_opposite():
    T2 = standard_monoid("full_transformation", 2)
    assert opposite(T2).table != T2.table
    assert opposite(opposite(T2)) == T2
    Z3 = standard_monoid("cyclic_group", 3)
    assert opposite(Z3).table == Z3.table


def test_monoid_isomorphism_and_embedding(chain2):
    a = standard_monoid("semilattice_chain", 3)
    b = standard_monoid("max_chain", 3)
    assert monoid_isomorphism(a, b) is not None
    assert monoid_isomorphism(a, standard_monoid("cyclic_group", 3)) is None
    Z2 = standard_monoid("cyclic_group", 2)
    T2 = standard_monoid("full_transformation", 2)
    # the swap (1, 0) generates a copy of Z2 inside T2
    swap = T2.elements[[i for i in T2.elements if T2.table[i][i] == T2.identity
                        and i != T2.identity][0]]
    assert is_embedding(Z2, T2, (T2.identity, swap))
    assert not is_embedding(Z2, T2, (T2.identity, T2.identity))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL_BUILDS), st.data())
def test_random_products_associate(build, data):
    M = standard_monoid(*build)
    a, b, c = (data.draw(st.integers(0, M.size - 1)) for _ in range(3))
    assert M.mul(M.mul(a, b), c) == M.mul(a, M.mul(b, c))
    assert M.product(a, b, c) == M.mul(a, M.mul(b, c))


def test_generators_generate():
    for build in SMALL_BUILDS:
        M = standard_monoid(*build)
        gens, words = M.generators
        assert len(words) == M.size
        for x, word in enumerate(words):
            if word:
                assert M.product(*(gens[i] for i in word)) == x
            else:
                assert x == M.identity
