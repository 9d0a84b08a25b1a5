"""Exhaustive search for equivariant maps.

An S-map out of X is determined by the images of a generating set of X,
so the search ranges over generator images (``|A|**g`` candidates rather
than ``|A|**|X|``) and then checks the relations the generators satisfy.
Results come out in lexicographic order of generator-image tuples.
"""

import os
from collections import Counter
from functools import lru_cache

from .act import ActMap, compose, decompose_indecomposable, identity_map
from .errors import MixedMonoids, SearchBudgetExceeded
from .verdict import Verdict

DEFAULT_BUDGET = 10**7


def search_budget():
    return int(os.environ.get("ACTKIT_BUDGET", DEFAULT_BUDGET))


def act_generators(X):
    """Minimal generating set: the least element of each maximal cyclic
    subact."""
    orbits = X.orbits
    gens = []
    for a in X.elements:
        oa = orbits[a]
        if any(oa < orbits[b] for b in X.elements):
            continue
        if any(orbits[b] == oa for b in gens):
            continue
        gens.append(a)
    return tuple(gens)


@lru_cache(maxsize=4096)
def _presentation(X):
    """For each element x a representation x = g_i * s, and the relations
    y_i * s == y_j * t that generator images must satisfy."""
    gens = act_generators(X)
    rep = [None] * X.size
    unary = [[] for _ in gens]
    binary = []
    for i, g in enumerate(gens):
        for s, x in enumerate(X.action[g]):
            if rep[x] is None:
                rep[x] = (i, s)
                continue
            j, t = rep[x]
            if j == i:
                unary[i].append((s, t))
            else:
                binary.append((i, s, j, t))
    # binary relations are checked once the later generator is assigned
    by_last = [[] for _ in gens]
    for i, s, j, t in binary:
        by_last[max(i, j)].append((i, s, j, t))
    return gens, tuple(rep), tuple(tuple(u) for u in unary), tuple(tuple(b) for b in by_last)


def _candidates(X, A, allowed):
    gens, rep, unary, _ = _presentation(X)
    cands = []
    for i, g in enumerate(gens):
        pool = A.elements if allowed is None else allowed(g)
        ok = [y for y in pool
              if all(A.action[y][s] == A.action[y][t] for s, t in unary[i])]
        cands.append(ok)
    return cands


def iter_homs(X, A, allowed=None, budget=None):
    """Yield every S-map X -> A in canonical order.

    ``allowed(g)`` optionally restricts the images tried for generator g.
    Raises SearchBudgetExceeded if the filtered candidate space is larger
    than the budget.
    """
    if X.monoid != A.monoid:
        raise MixedMonoids("homs between acts over different monoids")
    gens, rep, _, by_last = _presentation(X)
    cands = _candidates(X, A, allowed)
    space = 1
    for c in cands:
        space *= len(c)
    limit = search_budget() if budget is None else budget
    if space > limit:
        raise SearchBudgetExceeded(
            f"hom search space {space} exceeds budget {limit}", witness=space)
    act = A.action
    k = len(gens)
    images = [0] * k

    def rec(i):
        if i == k:
            yield ActMap(X, A, tuple(act[images[j]][s] for j, s in rep))
            return
        for y in cands[i]:
            images[i] = y
            if all(act[images[a]][s] == act[images[b]][t] for a, s, b, t in by_last[i]):
                yield from rec(i + 1)

    yield from rec(0)


def homs(X, A, allowed=None, budget=None):
    return list(iter_homs(X, A, allowed, budget))


def first_hom(X, A, allowed=None, predicate=None, budget=None):
    for f in iter_homs(X, A, allowed, budget):
        if predicate is None or predicate(f):
            return f
    return None


def homs_over(X, g, h):
    """Maps f: X -> dom(g) with g.f = h."""
    P = g.domain
    fibers = {}
    for c, a in enumerate(g.values):
        fibers.setdefault(a, []).append(c)
    return iter_homs(X, P, allowed=lambda x: fibers.get(h.values[x], []))


def factor_through(g, h):
    """Some f with g.f = h, or None."""
    return next(homs_over(h.domain, g, h), None)


# -- maps of special kinds ------------------------------------------------------

def section(f):
    """A map h with f.h = id, or None."""
    return factor_through(f, identity_map(f.codomain))


def retraction(f):
    """A map r with r.f = id, or None."""
    if not f.is_injective():
        return None
    X, Y = f.domain, f.codomain
    inv = {y: x for x, y in enumerate(f.values)}

    def allowed(y):
        return [inv[y]] if y in inv else X.elements

    for r in iter_homs(Y, X, allowed):
        if all(r.values[f.values[x]] == x for x in X.elements):
            return r
    return None


def map_properties(f):
    mono = f.is_injective()
    epi = f.is_surjective()
    return {
        "mono": mono,
        "epi": epi,
        "iso": mono and epi,
        "split_epi": epi and section(f) is not None,
        "split_mono": mono and retraction(f) is not None,
    }


def is_split_epi(f):
    return f.is_surjective() and section(f) is not None


def is_generator(G):
    """Whether some S-map G -> S is onto (equivalently hits 1)."""
    from .act import regular_act

    S = regular_act(G.monoid)
    one = G.monoid.identity
    return first_hom(G, S, predicate=lambda f: one in f.values) is not None


# -- isomorphism ----------------------------------------------------------------

def act_invariant(X):
    comps = decompose_indecomposable(X).components
    return (
        X.size,
        tuple(sorted(len(c) for c in comps)),
        len(X.fixed_points),
        tuple(sorted(Counter(len(o) for o in X.orbits).items())),
    )


def find_iso(X, Y):
    """The lexicographically least isomorphism X -> Y, or None."""
    if X.monoid != Y.monoid or act_invariant(X) != act_invariant(Y):
        return None
    # an isomorphism sends generators of maximal cyclic subacts to
    # generators of maximal cyclic subacts of the same size
    orbits = Y.orbits
    by_orbit = {}
    for y in Y.elements:
        if not any(orbits[y] < orbits[b] for b in Y.elements):
            by_orbit.setdefault(len(orbits[y]), []).append(y)
    return first_hom(
        X, Y,
        allowed=lambda g: by_orbit.get(len(X.orbits[g]), []),
        predicate=lambda f: f.is_injective(),
    )


def inverse_iso(f):
    vals = [0] * len(f.values)
    for a, b in enumerate(f.values):
        vals[b] = a
    return ActMap(f.codomain, f.domain, tuple(vals))


def endos_over(g):
    """All f: C -> C with g.f = g."""
    return list(homs_over(g.domain, g, g))


# -- pullback universal property -----------------------------------------------

def verify_pullback(pb, f, g, probes):
    """Check the pullback's universal property against cones from each
    probe act: every commuting pair (p, q) has exactly one mediator."""
    for Z in probes:
        for p in iter_homs(Z, f.domain):
            fp = compose(f, p)
            for q in iter_homs(Z, g.domain):
                if compose(g, q).values != fp.values:
                    continue
                if pb is None:
                    # an empty pullback admits no cone at all
                    return Verdict(False, (Z, p, q, 0))
                P, left, right = pb.act, pb.left, pb.right
                target = tuple(zip(p.values, q.values))
                count = sum(1 for m in iter_homs(Z, P)
                            if tuple(zip(compose(left, m).values,
                                         compose(right, m).values)) == target)
                if count != 1:
                    return Verdict(False, (Z, p, q, count))
    return Verdict(True)

