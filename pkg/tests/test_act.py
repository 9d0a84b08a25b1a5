import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from actkit.act import (
    ActMap,
    coproduct,
    copair,
    decompose_indecomposable,
    identity_map,
    induced_act,
    is_cyclic,
    is_indecomposable,
    left_regular_act,
    make_act,
    make_map,
    principal_right_ideal,
    pullback,
    quotient_by_class_map,
    rees_quotient,
    regular_act,
    relabel,
    subact,
    tensor,
    terminal_map,
    theta_act,
)
from actkit.errors import (
    AssociativityAxiomFails,
    IdentityAxiomFails,
    IndexOutOfRange,
    MixedMonoids,
    NotAnEmbedding,
    NotASubact,
    NotEquivariant,
)
from actkit.homs import find_iso, homs, verify_pullback
from actkit.monoid import opposite, standard_monoid
from actkit.unionfind import UnionFind

from oracles import brute_iso


def test_make_act_examples(z2):
    S = regular_act(z2)
    assert make_act(z2, z2.table) == S
    assert make_act(z2, [[0, 0]]) == theta_act(z2)
    with pytest.raises(IdentityAxiomFails) as exc:
        make_act(z2, [[1, 0], [0, 1]])
    assert exc.value.witness == 0
    with pytest.raises(IndexOutOfRange):
        make_act(z2, [[0, 2]])
    with pytest.raises(IndexOutOfRange):
        make_act(z2, [])


def test_make_act_associativity_witness(chain2):
    # a*e = b but b*e = a: (a*e)*e != a*(e*e)
    with pytest.raises(AssociativityAxiomFails) as exc:
        make_act(chain2, [[0, 1], [1, 0]])
    a, s, t = exc.value.witness
    assert (a, s, t) == (0, 1, 1)


def test_make_map_validation(z2):
    S, T = regular_act(z2), theta_act(z2)
    assert make_map(S, T, [0, 0]).is_surjective()
    with pytest.raises(NotEquivariant):
        make_map(S, make_act(z2, [[0, 0], [1, 1]]), [0, 1])
    with pytest.raises(MixedMonoids):
        make_map(S, theta_act(standard_monoid("cyclic_group", 3)), [0, 0])


def test_theta_is_terminal(corpus):
    for M in corpus.monoids:
        T = theta_act(M)
        for A in corpus.acts[M.name]:
            assert len(homs(A, T)) == 1
            assert terminal_map(A).values == (0,) * A.size
            assert len(homs(T, A)) == len(A.fixed_points)


def test_coproduct_examples(z2):
    S = regular_act(z2)
    C, inj = coproduct([S, S])
    assert C.size == 4
    assert len(decompose_indecomposable(C).components) == 2
    assert all(i.is_injective() for i in inj)
    assert set(inj[0].image).isdisjoint(inj[1].image)
    C1, _ = coproduct([S])
    assert C1 == S
    with pytest.raises(MixedMonoids):
        coproduct([S, theta_act(standard_monoid("trivial"))])


def test_decomposition_examples(z2):
    T = theta_act(z2)
    assert decompose_indecomposable(T).components == ([0],) or \
        [list(c) for c in decompose_indecomposable(T).components] == [[0]]
    C, _ = coproduct([T, T])
    assert len(decompose_indecomposable(C).components) == 2
    assert is_indecomposable(regular_act(z2))


def test_decomposition_of_coproduct_concatenates(corpus):
    rng = random.Random(7)
    for M in corpus.monoids:
        acts = corpus.acts[M.name]
        for _ in range(10):
            parts = [rng.choice(acts) for _ in range(rng.randint(1, 3))]
            C, inj = coproduct(parts)
            expected = []
            for A, i in zip(parts, inj):
                for comp in decompose_indecomposable(A).components:
                    expected.append(sorted(i.values[a] for a in comp))
            got = [list(c) for c in decompose_indecomposable(C).components]
            assert sorted(got) == sorted(expected)


def test_components_are_closed_and_indecomposable(corpus):
    for M in corpus.monoids:
        for A in corpus.acts[M.name]:
            comps = decompose_indecomposable(A).components
            assert sorted(x for c in comps for x in c) == list(A.elements)
            for c in comps:
                B, _ = subact(A, c)
                assert is_indecomposable(B)


def test_epis_preserve_indecomposability(index):
    for M in index.corpus.monoids:
        for f in index.epis(M):
            if is_indecomposable(f.domain):
                assert is_indecomposable(f.codomain)


def test_rees_quotient_examples(z2, corpus):
    two = make_act(z2, [[0, 0], [1, 1]])
    Q, nat = rees_quotient(two, [0])
    assert Q.size == 2 and nat.is_injective()
    for M in corpus.monoids:
        for Y in corpus.acts[M.name]:
            Q, _ = rees_quotient(Y, Y.elements)
            assert Q == theta_act(M)
            for p in Y.fixed_points:
                Q, nat = rees_quotient(Y, [p])
                assert Q.size == Y.size and nat.is_injective()
    with pytest.raises(NotASubact):
        rees_quotient(regular_act(z2), [0])


def test_pullback_examples(z2, chain2):
    S = regular_act(z2)
    idm = identity_map(S)
    pb = pullback(idm, idm)
    assert pb.act.size == S.size and find_iso(pb.act, S) is not None
    # pullback of two maps to a two-point set counts pairs fiber by fiber
    two = make_act(z2, [[0, 0], [1, 1]])
    C, inj = coproduct([S, two])
    f = copair(C, inj, [ActMap(S, two, (0, 0)), identity_map(two)])
    pb = pullback(f, f)
    fibers = [sum(1 for v in f.values if v == d) for d in two.elements]
    assert pb.act.size == sum(k * k for k in fibers)
    # maps with disjoint images have no pullback
    a = ActMap(theta_act(z2), two, (0,))
    b = ActMap(theta_act(z2), two, (1,))
    assert pullback(a, b) is None
    assert not verify_pullback(None, a, a, [theta_act(z2)])


def test_pullback_universal_property(corpus):
    rng = random.Random(3)
    for M in corpus.monoids[:6]:
        acts = corpus.acts[M.name]
        probes = [A for A in acts if A.size <= 2]
        for _ in range(8):
            D = rng.choice(acts)
            into = [f for A in acts for f in homs(A, D)]
            f, g = rng.choice(into), rng.choice(into)
            pb = pullback(f, g)
            assert verify_pullback(pb, f, g, probes)


def test_tensor_unit_laws(corpus):
    for M in corpus.monoids:
        S, L = regular_act(M), left_regular_act(M)
        for A in corpus.acts[M.name]:
            t = tensor(A, L)
            assert t.count == A.size
            # (a, s) is identified with (a*s, 1)
            for a in A.elements:
                for s in M.elements:
                    assert t.class_of[a][s] == t.class_of[A.action[a][s]][M.identity]
        for B in corpus.acts[opposite(M).name] if opposite(M).name in corpus.acts else []:
            assert tensor(S, B).count == B.size


def test_tensor_with_theta_counts_components(corpus):
    for M in corpus.monoids:
        Mop = opposite(M)
        from actkit.corpus import enumerate_acts
        for B in enumerate_acts(Mop, 3):
            t = tensor(theta_act(M), B)
            assert t.count == len(decompose_indecomposable(B).components)
            assert tensor(regular_act(M), B).count == B.size


def _brute_tensor_count(A, B):
    S = A.monoid
    uf = UnionFind(A.size * B.size)
    for a in A.elements:
        for s in S.elements:
            for b in B.elements:
                uf.union(A.action[a][s] * B.size + b, a * B.size + B.action[b][s])
    return len({uf.find(i) for i in range(A.size * B.size)})


def test_tensor_against_union_find(corpus):
    from actkit.corpus import enumerate_acts
    M = standard_monoid("full_transformation", 2)
    lefts = enumerate_acts(opposite(M), 3)
    for A in [a for m in corpus.monoids if m == M for a in corpus.acts[m.name]]:
        for B in lefts:
            assert tensor(A, B).count == _brute_tensor_count(A, B)
    with pytest.raises(MixedMonoids):
        tensor(regular_act(M), regular_act(M))


def test_principal_right_ideal(chain2):
    P, inc = principal_right_ideal(chain2, 1)
    assert P.size == 1 and inc.values == (1,)
    assert find_iso(P, theta_act(chain2)) is not None


def test_quotient_by_class_map_orders_by_least_member(z2):
    two = make_act(z2, [[0, 0], [1, 1]])
    C, _ = coproduct([two, two])
    Q, nat = quotient_by_class_map(C, (0, 1, 1, 0))
    assert Q.size == 2 and nat.values == (0, 1, 1, 0)


def test_is_cyclic(z2):
    assert is_cyclic(regular_act(z2))
    assert not is_cyclic(make_act(z2, [[0, 0], [1, 1]]))


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_relabel_gives_isomorphic_copy(corpus, data):
    M = corpus.monoids[data.draw(st.integers(0, len(corpus.monoids) - 1))]
    acts = corpus.acts[M.name]
    A = acts[data.draw(st.integers(0, len(acts) - 1))]
    perm = data.draw(st.permutations(list(A.elements)))
    B, h = relabel(A, perm)
    assert brute_iso(A, B)
    iso = find_iso(A, B)
    assert iso is not None and iso.is_injective()


def test_induced_act_examples(corpus):
    M = standard_monoid("cyclic_group", 2)
    T = standard_monoid("full_transformation", 2)
    swap = [i for i in T.elements if T.table[i][i] == T.identity and i != T.identity][0]
    embed = (T.identity, swap)
    S = regular_act(M)
    X, unit = induced_act(S, T, embed)
    assert find_iso(X, regular_act(T)) is not None
    Y, unit = induced_act(S, M, (0, 1))
    assert find_iso(Y, S) is not None
    # Theta (x) T is T modulo t ~ s*t for s in the image of S
    Th, _ = induced_act(theta_act(M), T, embed)
    uf = UnionFind(T.size)
    for t in T.elements:
        uf.union(t, T.table[swap][t])
    assert Th.size == len({uf.find(t) for t in T.elements})
    with pytest.raises(NotAnEmbedding):
        induced_act(S, T, (T.identity, T.identity))


def test_coproduct_hom_counts_multiply(corpus):
    for M in corpus.monoids:
        acts = [A for A in corpus.acts[M.name] if A.size <= 2]
        for X1, X2 in combinations(acts, 2):
            C, _ = coproduct([X1, X2])
            for A in corpus.acts[M.name]:
                assert len(homs(C, A)) == len(homs(X1, A)) * len(homs(X2, A))
