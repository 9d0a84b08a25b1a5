"""Right congruences on finite acts.

A congruence is stored as its canonical class map: ``class_map[a]`` is
the number of a's class, classes numbered in order of least member. Two
congruences on the same act are equal iff their class maps are equal.
"""

from dataclasses import dataclass
from functools import cached_property

from .act import quotient_by_class_map
from .errors import NotAChain, PreconditionViolated, TooLarge
from .unionfind import UnionFind

MAX_ENUMERATION_SIZE = 9
# Bell(9): an act of at most 9 elements never has more congruences than this
MAX_CONGRUENCES = 21147


@dataclass(frozen=True, eq=False)
class Congruence:
    act: object
    class_map: tuple

    def __eq__(self, other):
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.class_map == other.class_map and self.act == other.act

    def __hash__(self):
        return hash(self.class_map)

    @property
    def num_classes(self):
        return max(self.class_map) + 1

    def related(self, a, b):
        return self.class_map[a] == self.class_map[b]

    @cached_property
    def classes(self):
        out = [[] for _ in range(self.num_classes)]
        for a, c in enumerate(self.class_map):
            out[c].append(a)
        return tuple(tuple(c) for c in out)

    def pairs(self):
        return [(a, b) for cls in self.classes for a in cls for b in cls]

    def is_identity(self):
        return self.num_classes == len(self.class_map)

    def is_universal(self):
        return self.num_classes == 1

    def __le__(self, other):
        """Containment as relations."""
        cm = other.class_map
        return all(cm[a] == cm[cls[0]] for cls in self.classes for a in cls)

    def __repr__(self):
        return f"Congruence({[list(c) for c in self.classes]})"


def canonical(class_map):
    labels = {}
    return tuple(labels.setdefault(c, len(labels)) for c in class_map)


def is_stable(A, class_map):
    m = A.monoid.size
    reps = {}
    for a, c in enumerate(class_map):
        r = reps.setdefault(c, a)
        if r != a:
            ra, rb = A.action[r], A.action[a]
            if any(class_map[ra[s]] != class_map[rb[s]] for s in range(m)):
                return False
    return True


def _close(A, uf, pending):
    action = A.action
    m = A.monoid.size
    while pending:
        a, b = pending.pop()
        if uf.union(a, b):
            ra, rb = action[a], action[b]
            for s in range(m):
                if ra[s] != rb[s]:
                    pending.append((ra[s], rb[s]))


def generated_congruence(A, pairs=()):
    """Least right congruence containing ``pairs``."""
    uf = UnionFind(A.size)
    _close(A, uf, list(pairs))
    return Congruence(A, uf.class_map())


def congruence_from_pairs(A, pairs, exact=False):
    """Generated congruence; with ``exact`` also check that the pairs
    already formed a congruence (raises PreconditionViolated otherwise)."""
    pairs = list(pairs)
    rho = generated_congruence(A, pairs)
    if exact:
        given = set(pairs)
        missing = [p for p in rho.pairs() if p not in given]
        if missing:
            raise PreconditionViolated("relation is not a congruence", witness=missing[0])
    return rho


def identity_congruence(A):
    return Congruence(A, tuple(A.elements))


def universal_congruence(A):
    return Congruence(A, (0,) * A.size)


def kernel(f):
    return Congruence(f.domain, canonical(f.values))


def join(rho, tau):
    """Equivalence join; stable because both arguments are."""
    uf = UnionFind(len(rho.class_map))
    for cm in (rho.class_map, tau.class_map):
        first = {}
        for a, c in enumerate(cm):
            uf.union(first.setdefault(c, a), a)
    return Congruence(rho.act, uf.class_map())


def meet(rho, tau):
    return Congruence(rho.act, canonical(zip(rho.class_map, tau.class_map)))


def _sort_key(rho):
    return (-rho.num_classes, rho.class_map)


def all_congruences(A, within=None):
    """Every right congruence on A (optionally only those contained in the
    congruence ``within``), in canonical order: finest first, ties by
    class map.

    Every congruence is a join of principal ones, so a breadth-first walk
    from the identity that joins principal congruences reaches all of them.
    """
    if within is None:
        if A.size > MAX_ENUMERATION_SIZE:
            raise TooLarge(f"all_congruences capped at {MAX_ENUMERATION_SIZE} elements",
                           witness=A.size)
        pair_source = [(a, b) for a in A.elements for b in range(a + 1, A.size)]
    else:
        pair_source = [(a, b) for cls in within.classes for i, a in enumerate(cls)
                       for b in cls[i + 1:]]
    principals = {}
    for a, b in pair_source:
        pi = generated_congruence(A, [(a, b)])
        if within is not None and not pi <= within:
            continue
        principals.setdefault(pi.class_map, pi)
    principals = list(principals.values())
    start = identity_congruence(A)
    seen = {start.class_map: start}
    frontier = [start]
    while frontier:
        nxt = []
        for rho in frontier:
            for pi in principals:
                if pi <= rho:
                    continue
                j = join(rho, pi)
                if j.class_map not in seen:
                    seen[j.class_map] = j
                    nxt.append(j)
                    if len(seen) > MAX_CONGRUENCES:
                        raise TooLarge("too many congruences to enumerate",
                                       witness=MAX_CONGRUENCES)
        frontier = nxt
    return sorted(seen.values(), key=_sort_key)


def union_of_chain(congs):
    """Union of an ascending chain; NotAChain names the first bad step."""
    congs = list(congs)
    if not congs:
        raise NotAChain("empty chain")
    for i in range(len(congs) - 1):
        if not congs[i] <= congs[i + 1]:
            raise NotAChain(f"step {i} is not a containment", witness=(i, i + 1))
    return congs[-1]


def quotient_act(A, rho):
    """A/rho with its natural surjection."""
    return quotient_by_class_map(A, rho.class_map)


def lift_congruence(theta, rho):
    """theta/rho = ker(rho_nat . theta_nat): the congruence on A induced by
    a congruence rho on A/theta."""
    return Congruence(theta.act, canonical(rho.class_map[c] for c in theta.class_map))


def natural_map(rho):
    return quotient_act(rho.act, rho)[1]


def is_class_pure_congruence(A, rho, cls):
    """Whether A/rho belongs to the class ``cls``."""
    from .flatness import in_class

    return bool(in_class(quotient_act(A, rho)[0], cls))
