import pytest

from actkit.act import theta_act
from actkit.corpus import (
    DEFAULT_BUILDERS,
    MAX_CORPUS_ACT_SIZE,
    CorpusSpec,
    enumerate_acts,
    enumerate_monoids,
    generate_corpus,
)
from actkit.errors import CapExceeded
from actkit.monoid import monoid_isomorphism

from oracles import brute_iso


def test_monoid_counts():
    # monoids up to isomorphism: 1, 2 and 7 of orders 1, 2 and 3
    assert [len(enumerate_monoids(n)) for n in (1, 2, 3)] == [1, 2, 7]


def test_monoids_pairwise_non_isomorphic():
    ms = enumerate_monoids(3)
    for i, M in enumerate(ms):
        for N in ms[i + 1:]:
            assert monoid_isomorphism(M, N) is None


def test_one_point_act_only(corpus):
    for M in corpus.monoids:
        ones = [A for A in corpus.acts[M.name] if A.size == 1]
        assert ones == [theta_act(M)]


def test_z2_acts_of_size_two(z2):
    acts = [A for A in enumerate_acts(z2, 2) if A.size == 2]
    # the regular act and two fixed points
    assert len(acts) == 2


def test_acts_pairwise_non_isomorphic(corpus):
    for M in corpus.monoids[:6]:
        acts = [A for A in corpus.acts[M.name] if A.size <= 3]
        for i, A in enumerate(acts):
            for B in acts[i + 1:]:
                assert not brute_iso(A, B)


def test_default_corpus_shape(corpus):
    assert len(corpus.monoids) == 12
    assert sum(len(a) for a in corpus.acts.values()) == 183
    names = {M.name for M in corpus.monoids}
    for name, *params in DEFAULT_BUILDERS:
        assert f"{name}({','.join(map(str, params))})" in names


def test_order_two_corpus():
    c = generate_corpus(CorpusSpec(2, 2, ()))
    assert [M.size for M in c.monoids] == [1, 2, 2]
    assert len([M for M in c.monoids if M.size == 2]) == 2


def test_builders_replace_isomorphic_monoids():
    c = generate_corpus(CorpusSpec(2, 1, (("cyclic_group", 2),)))
    assert [M.name for M in c.monoids].count("cyclic_group(2)") == 1
    assert len(c.monoids) == 3


def test_caps(z2):
    with pytest.raises(CapExceeded):
        enumerate_acts(z2, MAX_CORPUS_ACT_SIZE + 1)
    with pytest.raises(CapExceeded):
        generate_corpus(CorpusSpec(9, 2, ()))
    with pytest.raises(CapExceeded):
        generate_corpus(CorpusSpec(2, 0, ()))


def test_describe(corpus):
    d = corpus.describe()
    assert d["max_act_size"] == 4
    assert d["monoids"][0] == {"name": "trivial", "order": 1, "acts": 4}
