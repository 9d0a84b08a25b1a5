"""Finite monoids given by multiplication tables.

Elements are the integers ``0..size-1``. ``table[s][t]`` is the product
``s*t``. Acts are right acts, so transformation-style builders compose
left to right: ``s*t`` means "apply s, then t".
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from math import comb, factorial

from .errors import (
    IndexOutOfRange,
    NotAssociative,
    NotIdentity,
    NotInverse,
    ParamTooLarge,
    UnknownBuilder,
)
from .verdict import Verdict

MAX_TRANSFORMATION_DEGREE = 4
MAX_SYMMETRIC_INVERSE_DEGREE = 4


@dataclass(frozen=True, eq=True)
class FiniteMonoid:
    table: tuple
    identity: int
    name: str = ""

    def __eq__(self, other):
        if not isinstance(other, FiniteMonoid):
            return NotImplemented
        return self.table == other.table and self.identity == other.identity

    def __hash__(self):
        return hash((self.table, self.identity))

    @property
    def size(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    @property
    def elements(self):
        return range(len(self.table))

    def mul(self, s, t):
        return self.table[s][t]

    def product(self, *elems):
        acc = self.identity
        for s in elems:
            acc = self.table[acc][s]
        return acc

    @cached_property
    def is_commutative(self):
        t = self.table
        n = len(t)
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    @cached_property
    def generators(self):
        """A small generating set, chosen greedily in index order.

        Returns ``(gens, words)`` where ``words[s]`` is a tuple of generator
        positions whose product (left to right) is ``s``.
        """
        n = self.size
        words = {self.identity: ()}
        gens = []
        while len(words) < n:
            best = None
            for g in range(n):
                if g in words:
                    continue
                reach = _closure(self, list(words), gens + [g])
                if best is None or len(reach) > best[1]:
                    best = (g, len(reach))
            gens.append(best[0])
            words = _words(self, gens)
        return tuple(gens), tuple(words[s] for s in range(n))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"FiniteMonoid(size={self.size}{label})"


def _closure(M, start, gens):
    seen = set(start)
    frontier = list(start)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = M.table[a][g]
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def _words(M, gens):
    words = {M.identity: ()}
    frontier = [M.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for i, g in enumerate(gens):
                b = M.table[a][g]
                if b not in words:
                    words[b] = words[a] + (i,)
                    nxt.append(b)
        frontier = nxt
    return words


def make_monoid(table, identity, name=""):
    """Validate a multiplication table and return a FiniteMonoid.

    Raises IndexOutOfRange, NotIdentity or NotAssociative; the latter two
    carry the offending element or triple as ``witness``.
    """
    rows = tuple(tuple(int(x) for x in row) for row in table)
    n = len(rows)
    if n == 0:
        raise IndexOutOfRange("monoid table must be non-empty")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise IndexOutOfRange(f"row {i} has length {len(row)}, expected {n}", witness=i)
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise IndexOutOfRange(f"entry ({i},{j})={x} out of range", witness=(i, j))
    if not 0 <= identity < n:
        raise IndexOutOfRange(f"identity {identity} out of range", witness=identity)
    for s in range(n):
        if rows[identity][s] != s or rows[s][identity] != s:
            raise NotIdentity(f"{identity} is not an identity: fails at {s}", witness=s)
    for a, b, c in product(range(n), repeat=3):
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise NotAssociative(f"(ab)c != a(bc) at {(a, b, c)}", witness=(a, b, c))
    return FiniteMonoid(rows, identity, name)


def opposite(M):
    """Same elements, multiplication reversed. Left acts over M are right
    acts over ``opposite(M)``."""
    n = M.size
    table = tuple(tuple(M.table[t][s] for t in range(n)) for s in range(n))
    name = f"op({M.name})" if M.name else ""
    return FiniteMonoid(table, M.identity, name)


# -- builders ---------------------------------------------------------------

def _from_elements(elems, mul, identity, name):
    index = {e: i for i, e in enumerate(elems)}
    table = tuple(tuple(index[mul(a, b)] for b in elems) for a in elems)
    return FiniteMonoid(table, index[identity], name)


def _adjoin_one(semigroup_elems, mul, name):
    one = ("1",)
    elems = [one] + list(semigroup_elems)

    def mul1(a, b):
        if a == one:
            return b
        if b == one:
            return a
        return mul(a, b)

    return _from_elements(elems, mul1, one, name)


def _trivial():
    return FiniteMonoid(((0,),), 0, "trivial")


def _cyclic_group(n):
    if n < 1:
        raise ParamTooLarge("cyclic_group needs n >= 1")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteMonoid(table, 0, f"cyclic_group({n})")


def _chain(n, name):
    if n < 1:
        raise ParamTooLarge(f"{name} needs n >= 1")
    table = tuple(tuple(max(i, j) for j in range(n)) for i in range(n))
    return FiniteMonoid(table, 0, f"{name}({n})")


def _rectangular_band_1(p, q):
    if p < 1 or q < 1:
        raise ParamTooLarge("rectangular_band_1 needs p, q >= 1")
    elems = [(i, j) for i in range(p) for j in range(q)]
    return _adjoin_one(elems, lambda a, b: (a[0], b[1]), f"rectangular_band_1({p},{q})")


def _right_zero_1(n):
    if n < 1:
        raise ParamTooLarge("right_zero_1 needs n >= 1")
    return _adjoin_one([(i,) for i in range(n)], lambda a, b: b, f"right_zero_1({n})")


def _symmetric_inverse(n):
    if not 0 <= n <= MAX_SYMMETRIC_INVERSE_DEGREE:
        raise ParamTooLarge(f"symmetric_inverse limited to n <= {MAX_SYMMETRIC_INVERSE_DEGREE}")
    # a partial injection is its image tuple, n standing for "undefined"
    elems = []
    for imgs in product(range(n + 1), repeat=n):
        defined = [x for x in imgs if x != n]
        if len(set(defined)) == len(defined):
            elems.append(imgs)
    elems.sort()

    def mul(a, b):
        return tuple(n if x == n else b[x] for x in a)

    return _from_elements(elems, mul, tuple(range(n)), f"symmetric_inverse({n})")


def _full_transformation(n):
    if not 1 <= n <= MAX_TRANSFORMATION_DEGREE:
        raise ParamTooLarge(
            f"full_transformation limited to 1 <= n <= {MAX_TRANSFORMATION_DEGREE}"
        )
    elems = list(product(range(n), repeat=n))

    def mul(a, b):
        return tuple(b[x] for x in a)

    return _from_elements(elems, mul, tuple(range(n)), f"full_transformation({n})")


BUILDERS = {
    "trivial": (0, _trivial),
    "cyclic_group": (1, _cyclic_group),
    "semilattice_chain": (1, lambda n: _chain(n, "semilattice_chain")),
    "max_chain": (1, lambda n: _chain(n, "max_chain")),
    "rectangular_band_1": (2, _rectangular_band_1),
    "right_zero_1": (1, _right_zero_1),
    "symmetric_inverse": (1, _symmetric_inverse),
    "full_transformation": (1, _full_transformation),
}


def standard_monoid(name, *params):
    """Build a named monoid.

    Canonical element orders:

    * ``cyclic_group(n)``: k is the k-th power of the generator; identity 0.
    * ``semilattice_chain(n)`` / ``max_chain(n)``: 0 > 1 > ... > n-1 with
      product ``max(i, j)``; identity 0. Both are the truncation of
      (N, max) and so share one table.
    * ``rectangular_band_1(p, q)``, ``right_zero_1(n)``: adjoined identity
      is 0, then semigroup elements in lexicographic order.
    * ``symmetric_inverse(n)``: image tuples (n = undefined) sorted
      lexicographically; identity is 0.
    * ``full_transformation(n)``: image tuples sorted lexicographically.
    """
    if name not in BUILDERS:
        raise UnknownBuilder(f"unknown builder {name!r}", witness=name)
    arity, build = BUILDERS[name]
    if len(params) != arity:
        raise UnknownBuilder(f"{name} takes {arity} parameter(s), got {len(params)}")
    return build(*(int(p) for p in params))


def symmetric_inverse_order(n):
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


# -- idempotents and inverses -------------------------------------------------

def idempotents(M):
    return tuple(e for e in M.elements if M.table[e][e] == e)


def inverses(M, x):
    t = M.table
    return [y for y in M.elements if t[t[x][y]][x] == x and t[t[y][x]][y] == y]


def is_inverse_monoid(M):
    """Every element has exactly one inverse; witness is an element with
    zero or several inverses."""
    for x in M.elements:
        if len(inverses(M, x)) != 1:
            return Verdict(False, x)
    return Verdict(True)


def is_group(M):
    return all(any(M.table[x][y] == M.identity for y in M.elements) for x in M.elements)


def min_group_congruence(M):
    """The minimum group congruence of an inverse monoid, as a right
    congruence on the regular act: s ~ t iff es = et for an idempotent e."""
    from .act import regular_act
    from .congruence import congruence_from_pairs

    if not is_inverse_monoid(M):
        raise NotInverse("minimum group congruence needs an inverse monoid")
    t = M.table
    E = idempotents(M)
    pairs = [(s, u) for s in M.elements for u in M.elements
             if any(t[e][s] == t[e][u] for e in E)]
    return congruence_from_pairs(regular_act(M), pairs, exact=True)


# -- isomorphism --------------------------------------------------------------

def monoid_isomorphism(M, N):
    """A bijection phi with phi(st) = phi(s)phi(t), or None."""
    if M.size != N.size:
        return None
    n = M.size
    mt, nt = M.table, N.table
    if len(idempotents(M)) != len(idempotents(N)):
        return None
    others = [x for x in M.elements if x != M.identity]
    targets = [y for y in N.elements if y != N.identity]
    for perm in permutations(targets):
        phi = [0] * n
        phi[M.identity] = N.identity
        for x, y in zip(others, perm):
            phi[x] = y
        if all(phi[mt[a][b]] == nt[phi[a]][phi[b]] for a in range(n) for b in range(n)):
            return tuple(phi)
    return None


def is_embedding(S, T, embed):
    n = S.size
    if len(embed) != n or len(set(embed)) != n:
        return False
    if embed[S.identity] != T.identity:
        return False
    return all(embed[S.table[a][b]] == T.table[embed[a]][embed[b]]
               for a in range(n) for b in range(n))
