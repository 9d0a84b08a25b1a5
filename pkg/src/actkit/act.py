"""Finite right acts over finite monoids and equivariant maps between them.

An act of size n over S is an n x |S| table with ``action[a][s] = a*s``.
Acts are never empty. Left S-acts are right acts over ``opposite(S)``.
"""

from collections import namedtuple
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    AssociativityAxiomFails,
    IdentityAxiomFails,
    IndexOutOfRange,
    MixedMonoids,
    NotAnEmbedding,
    NotASubact,
    NotEquivariant,
)
from .monoid import is_embedding, opposite
from .unionfind import UnionFind


@dataclass(frozen=True, eq=False)
class FiniteAct:
    monoid: object
    action: tuple

    def __eq__(self, other):
        if not isinstance(other, FiniteAct):
            return NotImplemented
        return self.monoid == other.monoid and self.action == other.action

    def __hash__(self):
        return hash((self.monoid, self.action))

    @property
    def size(self):
        return len(self.action)

    def __len__(self):
        return len(self.action)

    @property
    def elements(self):
        return range(len(self.action))

    def act(self, a, s):
        return self.action[a][s]

    @cached_property
    def orbits(self):
        """``orbits[a]`` is the cyclic subact aS as a frozenset."""
        return tuple(frozenset(row) for row in self.action)

    @cached_property
    def fixed_points(self):
        return tuple(a for a, row in enumerate(self.action) if all(b == a for b in row))

    def __repr__(self):
        return f"FiniteAct(size={self.size}, monoid={self.monoid!r})"


@dataclass(frozen=True, eq=False)
class ActMap:
    domain: FiniteAct
    codomain: FiniteAct
    values: tuple

    def __call__(self, a):
        return self.values[a]

    def __eq__(self, other):
        if not isinstance(other, ActMap):
            return NotImplemented
        return (self.values == other.values and self.domain == other.domain
                and self.codomain == other.codomain)

    def __hash__(self):
        return hash(self.values)

    @property
    def image(self):
        return frozenset(self.values)

    def is_injective(self):
        return len(set(self.values)) == len(self.values)

    def is_surjective(self):
        return len(set(self.values)) == self.codomain.size

    def __repr__(self):
        return f"ActMap({self.domain.size}->{self.codomain.size}, {list(self.values)})"


Decomposition = namedtuple("Decomposition", "components")
Tensor = namedtuple("Tensor", "count class_of")
Pullback = namedtuple("Pullback", "act left right pairs")


# -- construction and validation ----------------------------------------------

def make_act(M, action):
    """Validate an action table; raises with the failing (a, s[, t])."""
    rows = tuple(tuple(int(x) for x in row) for row in action)
    n, m = len(rows), M.size
    if n == 0:
        raise IndexOutOfRange("acts must be non-empty")
    for a, row in enumerate(rows):
        if len(row) != m:
            raise IndexOutOfRange(f"row {a} has length {len(row)}, expected {m}", witness=a)
        for s, b in enumerate(row):
            if not 0 <= b < n:
                raise IndexOutOfRange(f"entry ({a},{s})={b} out of range", witness=(a, s))
    e = M.identity
    for a in range(n):
        if rows[a][e] != a:
            raise IdentityAxiomFails(f"a*1 != a for a={a}", witness=a)
    t = M.table
    for a in range(n):
        for s in range(m):
            b = rows[a][s]
            for u in range(m):
                if rows[b][u] != rows[a][t[s][u]]:
                    raise AssociativityAxiomFails(
                        f"(a*s)*t != a*(st) at {(a, s, u)}", witness=(a, s, u))
    return FiniteAct(M, rows)


def make_map(X, Y, values):
    """Validate an equivariant map; raises NotEquivariant with (a, s)."""
    if X.monoid != Y.monoid:
        raise MixedMonoids("maps must be between acts over the same monoid")
    vals = tuple(int(v) for v in values)
    if len(vals) != X.size:
        raise IndexOutOfRange(f"expected {X.size} values, got {len(vals)}")
    for a, v in enumerate(vals):
        if not 0 <= v < Y.size:
            raise IndexOutOfRange(f"value {v} at {a} out of range", witness=a)
    bad = equivariance_failure(X, Y, vals)
    if bad is not None:
        raise NotEquivariant(f"f(a*s) != f(a)*s at {bad}", witness=bad)
    return ActMap(X, Y, vals)


def equivariance_failure(X, Y, vals):
    for a in X.elements:
        ra, fa = X.action[a], Y.action[vals[a]]
        for s in range(X.monoid.size):
            if vals[ra[s]] != fa[s]:
                return (a, s)
    return None


def regular_act(M):
    """S as a right act over itself."""
    return FiniteAct(M, M.table)


def theta_act(M):
    """The one-element act; terminal in the category of acts."""
    return FiniteAct(M, ((0,) * M.size,))


def principal_right_ideal(M, e):
    """eS as a right act, elements in increasing index order, with the
    inclusion into the regular act."""
    elems = sorted(set(M.table[e]))
    return subact(regular_act(M), elems)


def identity_map(X):
    return ActMap(X, X, tuple(X.elements))


def constant_map(X, Y, y):
    return ActMap(X, Y, (y,) * X.size)


def terminal_map(X):
    return constant_map(X, theta_act(X.monoid), 0)


def compose(g, f):
    """g after f."""
    return ActMap(f.domain, g.codomain, tuple(g.values[v] for v in f.values))


def is_closed(A, elems):
    elems = set(elems)
    return all(b in elems for a in elems for b in A.action[a])


def closure(A, elems):
    """Least subact containing ``elems``."""
    out = set()
    for a in elems:
        out |= A.orbits[a]
    return out


def subact(A, elems):
    """Subact on ``elems`` (sorted) plus its inclusion map."""
    elems = sorted(set(elems))
    if not elems:
        raise NotASubact("subacts must be non-empty")
    if not is_closed(A, elems):
        raise NotASubact("subset is not closed under the action", witness=elems)
    index = {a: i for i, a in enumerate(elems)}
    action = tuple(tuple(index[b] for b in A.action[a]) for a in elems)
    B = FiniteAct(A.monoid, action)
    return B, ActMap(B, A, tuple(elems))


def restrict(f, elems):
    """f restricted to the subact ``elems`` of its domain."""
    B, inc = subact(f.domain, elems)
    return compose(f, inc)


def relabel(A, perm):
    """Isomorphic copy of A in which element a is renamed ``perm[a]``;
    returns the copy and the isomorphism A -> copy."""
    n = A.size
    inv = [0] * n
    for a, b in enumerate(perm):
        inv[b] = a
    action = tuple(tuple(perm[c] for c in A.action[inv[b]]) for b in range(n))
    B = FiniteAct(A.monoid, action)
    return B, ActMap(A, B, tuple(perm))


# -- coproducts and decomposition --------------------------------------------

def coproduct(acts):
    """Disjoint union laid out in input order, with the injections."""
    acts = list(acts)
    if not acts:
        raise IndexOutOfRange("coproduct of an empty family is not an act")
    M = acts[0].monoid
    if any(A.monoid != M for A in acts):
        raise MixedMonoids("coproduct of acts over different monoids")
    rows, offsets = [], []
    off = 0
    for A in acts:
        offsets.append(off)
        rows.extend(tuple(b + off for b in row) for row in A.action)
        off += A.size
    C = FiniteAct(M, tuple(rows))
    injections = [ActMap(A, C, tuple(range(o, o + A.size))) for A, o in zip(acts, offsets)]
    return C, injections


def copair(C, injections, maps):
    """The map out of a coproduct restricting to ``maps[i]`` on block i."""
    vals = [0] * C.size
    for inj, f in zip(injections, maps):
        for a, c in enumerate(inj.values):
            vals[c] = f.values[a]
    return ActMap(C, maps[0].codomain, tuple(vals))


def decompose_indecomposable(A):
    """Connected components of the graph a -- a*s, each sorted, ordered by
    least element."""
    uf = UnionFind(A.size)
    for a in A.elements:
        for b in A.action[a]:
            uf.union(a, b)
    comps = {}
    for a in A.elements:
        comps.setdefault(uf.find(a), []).append(a)
    return Decomposition(tuple(tuple(c) for c in sorted(comps.values())))


def is_indecomposable(A):
    return len(decompose_indecomposable(A).components) == 1


def is_cyclic(A):
    return any(len(orb) == A.size for orb in A.orbits)


# -- quotients ----------------------------------------------------------------

def quotient_by_class_map(A, class_map):
    """Quotient act for a (stable) canonical class map, with the natural
    surjection. Classes are already numbered by least member."""
    k = max(class_map) + 1
    reps = [None] * k
    for a, c in enumerate(class_map):
        if reps[c] is None:
            reps[c] = a
    action = tuple(tuple(class_map[b] for b in A.action[r]) for r in reps)
    Q = FiniteAct(A.monoid, action)
    return Q, ActMap(A, Q, tuple(class_map))


def rees_quotient(Y, B):
    """Y/B: collapse the subact B to a single point."""
    B = set(B)
    if not B or not is_closed(Y, B):
        raise NotASubact("Rees quotient needs a non-empty subact", witness=sorted(B))
    uf = UnionFind(Y.size)
    first = min(B)
    for b in B:
        uf.union(first, b)
    return quotient_by_class_map(Y, uf.class_map())


# -- pullbacks ----------------------------------------------------------------

def pullback(f, g):
    """Pullback of f: B -> D and g: C -> D.

    Elements are the pairs (b, c) with f(b) = g(c), ordered
    lexicographically, acted on componentwise. Returns None when no such
    pair exists, since acts are non-empty.
    """
    if f.codomain != g.codomain:
        raise MixedMonoids("pullback needs a common codomain")
    B, C = f.domain, g.domain
    pairs = [(b, c) for b in B.elements for c in C.elements if f.values[b] == g.values[c]]
    if not pairs:
        return None
    index = {p: i for i, p in enumerate(pairs)}
    m = B.monoid.size
    action = tuple(tuple(index[(B.action[b][s], C.action[c][s])] for s in range(m))
                   for b, c in pairs)
    P = FiniteAct(B.monoid, action)
    left = ActMap(P, B, tuple(b for b, _ in pairs))
    right = ActMap(P, C, tuple(c for _, c in pairs))
    return Pullback(P, left, right, tuple(pairs))


# -- tensor products ----------------------------------------------------------

def tensor(A, B):
    """A (x)_S B for a right S-act A and a left S-act B (a right act over
    opposite(S)).

    Returns ``Tensor(count, class_of)`` where ``class_of[a][b]`` is the
    class of the pair (a, b), classes numbered by least pair in
    lexicographic order.
    """
    S = A.monoid
    if B.monoid != opposite(S):
        raise MixedMonoids("tensor needs B over the opposite monoid of A's")
    nb = B.size
    uf = UnionFind(A.size * nb)
    for a in A.elements:
        for s in S.elements:
            left = A.action[a][s] * nb
            here = a * nb
            for b in B.elements:
                # (a*s, b) ~ (a, s*b); s*b is b acted on by s in the opposite monoid
                uf.union(left + b, here + B.action[b][s])
    cmap = uf.class_map()
    class_of = tuple(tuple(cmap[a * nb + b] for b in B.elements) for a in A.elements)
    return Tensor(max(cmap) + 1, class_of)


def left_regular_act(M):
    """S as a left act over itself, i.e. a right act over opposite(S)."""
    return regular_act(opposite(M))


def induced_act(X, T, embed):
    """X (x)_S T for an embedding S -> T, as a right T-act.

    Returns the act and the canonical map x -> [x (x) 1] as a list of
    element indices (it is an S-map, not a T-map).
    """
    S = X.monoid
    embed = tuple(embed)
    if not is_embedding(S, T, embed):
        raise NotAnEmbedding("embed must be an injective identity-preserving homomorphism")
    nt = T.size
    uf = UnionFind(X.size * nt)
    for x in X.elements:
        for s in S.elements:
            xs = X.action[x][s]
            es = embed[s]
            for t in T.elements:
                uf.union(xs * nt + t, x * nt + T.table[es][t])
    cmap = uf.class_map()
    k = max(cmap) + 1
    reps = [None] * k
    for i, c in enumerate(cmap):
        if reps[c] is None:
            reps[c] = i
    action = tuple(
        tuple(cmap[(r // nt) * nt + T.table[r % nt][u]] for u in T.elements) for r in reps)
    unit = tuple(cmap[x * nt + T.identity] for x in X.elements)
    return FiniteAct(T, action), unit
