"""Purity of epimorphisms.

An epimorphism g: X -> Y is n-pure if every n elements of Y, together
with every finite set of relations y_j*s == y_k*t among them, lift to
elements of X satisfying the same relations. It is pure if it is n-pure
for every n.

Two reductions make this decidable for finite acts:

* Maximal family. A lift satisfying *all* relations of a tuple satisfies
  every sub-family, so only the full family from ``satisfied_relations``
  is tried.
* Duplicate collapse. A tuple with repeated entries lifts iff its set of
  distinct entries lifts (reuse the same lift for repeats), and any lift
  of a set restricts to lifts of its subsets. So n-purity is decided by
  the subsets of Y of size min(n, |Y|), and purity is |Y|-purity.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .act import rees_quotient
from .congruence import natural_map
from .errors import NotEpi, NotMono
from .monoid import opposite
from .verdict import Verdict


@dataclass(frozen=True)
class RelationFamily:
    """Relations ``y[j]*s == y[k]*t`` among ``arity`` elements (0-based)."""

    arity: int
    relations: tuple


def satisfied_relations(A, elems):
    elems = tuple(elems)
    m = A.monoid.size
    rels = tuple(
        (j, k, s, t)
        for j in range(len(elems)) for k in range(len(elems))
        for s in range(m) for t in range(m)
        if A.action[elems[j]][s] == A.action[elems[k]][t]
    )
    return RelationFamily(len(elems), rels)


def _pair_constraints(A, elems):
    """For each (j, k) with j <= k, the (s, t) with y_j*s == y_k*t."""
    m = A.monoid.size
    out = {}
    for k in range(len(elems)):
        for j in range(k + 1):
            rj, rk = A.action[elems[j]], A.action[elems[k]]
            out[(j, k)] = [(s, t) for s in range(m) for t in range(m) if rj[s] == rk[t]]
    return out


def find_lift(g, elems):
    """Elements x_r with g(x_r) = elems[r] satisfying every relation the
    elems satisfy, or None. Backtracks position by position."""
    X, Y = g.domain, g.codomain
    elems = tuple(elems)
    fibers = {}
    for x, y in enumerate(g.values):
        fibers.setdefault(y, []).append(x)
    cons = _pair_constraints(Y, elems)
    n = len(elems)
    chosen = [0] * n
    act = X.action

    def rec(r):
        if r == n:
            return True
        for x in fibers.get(elems[r], ()):
            chosen[r] = x
            if all(act[chosen[j]][s] == act[x][t]
                   for j in range(r + 1) for s, t in cons[(j, r)]):
                if rec(r + 1):
                    return True
        return False

    return tuple(chosen) if rec(0) else None


def _require_epi(g):
    if not g.is_surjective():
        raise NotEpi("purity is defined for epimorphisms")


def is_n_pure(g, n):
    """Witness on failure: the least subset of the codomain that does not
    lift."""
    _require_epi(g)
    Y = g.codomain
    k = min(n, Y.size)
    for subset in combinations(Y.elements, k):
        if find_lift(g, subset) is None:
            return Verdict(False, subset)
    return Verdict(True)


def is_pure_epi(g):
    return is_n_pure(g, g.codomain.size)


def _pure_congruence_direct(A, rho):
    """Purity of rho phrased on A itself: every family of representatives
    x_1..x_n of distinct classes, with the relations x_j*s rho x_k*t, has
    rho-equivalent y_i satisfying y_j*s == y_k*t. Brute force over the
    class products."""
    cm = rho.class_map
    m = A.monoid.size
    reps = [cls[0] for cls in rho.classes]
    rels = [(j, k, s, t)
            for j in range(len(reps)) for k in range(len(reps))
            for s in range(m) for t in range(m)
            if cm[A.action[reps[j]][s]] == cm[A.action[reps[k]][t]]]
    for ys in product(*rho.classes):
        if all(A.action[ys[j]][s] == A.action[ys[k]][t] for j, k, s, t in rels):
            return True
    return False


def is_pure_congruence(A, rho):
    """Purity of A -> A/rho, cross-checked against the direct phrasing on
    A; a disagreement is an internal error."""
    verdict = is_pure_epi(natural_map(rho))
    direct = _pure_congruence_direct(A, rho)
    if bool(verdict) != direct:
        raise AssertionError(f"purity routes disagree on {rho}")
    return verdict


def rees_epi(f):
    """The natural map Y -> Y/im(f) for a monomorphism f: X -> Y."""
    if not f.is_injective():
        raise NotMono("Rees quotient by the image needs a monomorphism")
    return rees_quotient(f.codomain, f.image)[1]


def tensored_map(f, L):
    """The induced function dom(f) (x) L -> cod(f) (x) L on classes, as a
    tuple indexed by source class."""
    from .act import tensor

    src = tensor(f.domain, L)
    dst = tensor(f.codomain, L)
    out = [None] * src.count
    for a in f.domain.elements:
        for b in L.elements:
            out[src.class_of[a][b]] = dst.class_of[f.values[a]][b]
    return tuple(out)


def is_pure_mono_bounded(f, bound, left_acts=None):
    """Bounded certificate for purity of a monomorphism: tensoring with
    every left act of size <= bound (from the act corpus over the opposite
    monoid, unless ``left_acts`` is given) keeps f injective.

    This is not a decision procedure: the definition quantifies over all
    left acts. Witness on failure: (left act, two merged source classes).
    """
    if not f.is_injective():
        raise NotMono("pure monomorphism check needs a monomorphism")
    if left_acts is None:
        from .corpus import enumerate_acts

        left_acts = enumerate_acts(opposite(f.domain.monoid), bound)
    for L in left_acts:
        img = tensored_map(f, L)
        seen = {}
        for c, d in enumerate(img):
            if d in seen:
                return Verdict(False, (L, (seen[d], c)))
            seen[d] = c
    return Verdict(True)

