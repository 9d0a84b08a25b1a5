"""Brute-force reference implementations, written straight from the
definitions and sharing no search code with the package."""

from itertools import permutations, product


def all_maps_between(X, Y):
    """Every equivariant map X -> Y, by trying every function."""
    out = []
    m = X.monoid.size
    for vals in product(range(Y.size), repeat=X.size):
        if all(vals[X.action[a][s]] == Y.action[vals[a]][s]
               for a in range(X.size) for s in range(m)):
            out.append(vals)
    return out


def set_partitions(n):
    """All partitions of range(n) as canonical class maps."""
    def rec(i, labels, k):
        if i == n:
            yield tuple(labels)
            return
        for c in range(k + 1):
            labels.append(c)
            yield from rec(i + 1, labels, max(k, c + 1))
            labels.pop()
    yield from rec(0, [], 0)


def stable_partitions(A):
    m = A.monoid.size
    out = []
    for labels in set_partitions(A.size):
        if all(labels[A.action[a][s]] == labels[A.action[b][s]]
               for a in range(A.size) for b in range(A.size) if labels[a] == labels[b]
               for s in range(m)):
            out.append(labels)
    return out


def bell(n):
    return sum(1 for _ in set_partitions(n))


def brute_P(A):
    S = A.monoid
    m = S.size
    for a, b, u, v in product(A.elements, A.elements, range(m), range(m)):
        if A.action[a][u] != A.action[b][v]:
            continue
        if not any(A.action[z][s] == a and A.action[z][t] == b and S.table[s][u] == S.table[t][v]
                   for z in A.elements for s in range(m) for t in range(m)):
            return False
    return True


def brute_E(A):
    S = A.monoid
    m = S.size
    for a, u, v in product(A.elements, range(m), range(m)):
        if A.action[a][u] != A.action[a][v]:
            continue
        if not any(A.action[z][s] == a and S.table[s][u] == S.table[s][v]
                   for z in A.elements for s in range(m)):
            return False
    return True


def brute_iso(X, Y):
    if X.size != Y.size or X.monoid != Y.monoid:
        return False
    m = X.monoid.size
    for perm in permutations(range(Y.size)):
        if all(perm[X.action[a][s]] == Y.action[perm[a]][s]
               for a in range(X.size) for s in range(m)):
            return True
    return False


def brute_n_pure(g, n):
    """Every n-tuple of codomain elements (repeats allowed) lifts together
    with all relations y_j*s == y_k*t it satisfies."""
    X, Y = g.domain, g.codomain
    m = X.monoid.size
    fibers = [[x for x in X.elements if g.values[x] == y] for y in Y.elements]
    for ys in product(Y.elements, repeat=n):
        rels = [(j, k, s, t) for j in range(n) for k in range(n)
                for s in range(m) for t in range(m)
                if Y.action[ys[j]][s] == Y.action[ys[k]][t]]
        if not any(all(X.action[xs[j]][s] == X.action[xs[k]][t] for j, k, s, t in rels)
                   for xs in product(*(fibers[y] for y in ys))):
            return False
    return True
