"""Enumeration of small monoids and acts, up to isomorphism.

Monoids are enumerated as tables with identity 0 and deduplicated by a
canonical form (least relabelled table). Acts of size n over S are
monoid homomorphisms from S into the transformations of n points, found
by assigning transformations to a generating set of S, then deduplicated
by the least relabelled action table.
"""

from dataclasses import dataclass, field
from itertools import permutations, product

from .act import FiniteAct
from .errors import CapExceeded
from .monoid import FiniteMonoid, monoid_isomorphism, standard_monoid

MAX_CORPUS_MONOID_ORDER = 4
MAX_CORPUS_ACT_SIZE = 5

DEFAULT_BUILDERS = (
    ("semilattice_chain", 2),
    ("cyclic_group", 2),
    ("cyclic_group", 3),
    ("symmetric_inverse", 2),
    ("full_transformation", 2),
)


def _canonical_monoid(table):
    n = len(table)
    best = None
    for rest in permutations(range(1, n)):
        perm = (0,) + rest
        inv = [0] * n
        for a, b in enumerate(perm):
            inv[b] = a
        cand = tuple(tuple(perm[table[inv[x]][inv[y]]] for y in range(n)) for x in range(n))
        if best is None or cand < best:
            best = cand
    return best


def enumerate_monoids(order):
    """All monoids of exactly this order up to isomorphism, identity 0."""
    n = order
    free = [(i, j) for i in range(1, n) for j in range(1, n)]
    found = set()
    for vals in product(range(n), repeat=len(free)):
        t = [[0] * n for _ in range(n)]
        for i in range(n):
            t[0][i] = t[i][0] = i
        for (i, j), v in zip(free, vals):
            t[i][j] = v
        if all(t[t[a][b]][c] == t[a][t[b][c]]
               for a in range(1, n) for b in range(1, n) for c in range(1, n)):
            found.add(_canonical_monoid(t))
    if n == 1:
        return [FiniteMonoid(((0,),), 0, "trivial")]
    return [FiniteMonoid(tab, 0, f"order{n}_{k}") for k, tab in enumerate(sorted(found))]


def _canonical_action(action, n):
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for a, b in enumerate(perm):
            inv[b] = a
        cand = tuple(tuple(perm[c] for c in action[inv[b]]) for b in range(n))
        if best is None or cand < best:
            best = cand
    return best


def _acts_of_size(M, n):
    gens, words = M.generators
    table = M.table
    identity = tuple(range(n))
    transformations = list(product(range(n), repeat=n))
    found = set()
    for assign in product(transformations, repeat=len(gens)):
        imgs = []
        for w in words:
            f = identity
            for g in w:
                a = assign[g]
                f = tuple(a[x] for x in f)
            imgs.append(f)
        ok = True
        for s in M.elements:
            fs = imgs[s]
            for gi, g in enumerate(gens):
                a = assign[gi]
                if imgs[table[s][g]] != tuple(a[x] for x in fs):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        action = tuple(tuple(imgs[s][x] for s in M.elements) for x in range(n))
        found.add(_canonical_action(action, n))
    return [FiniteAct(M, a) for a in sorted(found)]


def enumerate_acts(M, max_size):
    """All acts of size 1..max_size over M up to isomorphism, ordered by
    size then canonical table."""
    if max_size > MAX_CORPUS_ACT_SIZE:
        raise CapExceeded(f"act enumeration capped at size {MAX_CORPUS_ACT_SIZE}")
    out = []
    for n in range(1, max_size + 1):
        out.extend(_acts_of_size(M, n))
    return out


@dataclass
class CorpusSpec:
    max_monoid_order: int = 3
    max_act_size: int = 4
    builders: tuple = DEFAULT_BUILDERS

    def validate(self):
        if not 1 <= self.max_monoid_order <= MAX_CORPUS_MONOID_ORDER:
            raise CapExceeded(f"max_monoid_order must be in 1..{MAX_CORPUS_MONOID_ORDER}")
        if not 1 <= self.max_act_size <= MAX_CORPUS_ACT_SIZE:
            raise CapExceeded(f"max_act_size must be in 1..{MAX_CORPUS_ACT_SIZE}")


@dataclass
class Corpus:
    spec: CorpusSpec
    monoids: list = field(default_factory=list)
    acts: dict = field(default_factory=dict)

    def describe(self):
        return {
            "max_monoid_order": self.spec.max_monoid_order,
            "max_act_size": self.spec.max_act_size,
            "builders": [f"{b}({','.join(map(str, p))})" for b, *p in self.spec.builders],
            "monoids": [{"name": M.name, "order": M.size, "acts": len(self.acts[M.name])}
                        for M in self.monoids],
        }


def corpus_monoids(spec):
    spec.validate()
    monoids = []
    for order in range(1, spec.max_monoid_order + 1):
        monoids.extend(enumerate_monoids(order))
    for name, *params in spec.builders:
        B = standard_monoid(name, *params)
        for i, M in enumerate(monoids):
            if monoid_isomorphism(B, M) is not None:
                monoids[i] = B
                break
        else:
            monoids.append(B)
    return monoids


def generate_corpus(spec=None):
    spec = spec or CorpusSpec()
    corpus = Corpus(spec, corpus_monoids(spec))
    for M in corpus.monoids:
        corpus.acts[M.name] = enumerate_acts(M, spec.max_act_size)
    return corpus
