"""Decision procedures for the act classes Pr, SF, CP, E and LC.

All checks are exhaustive brute force. A failing check reports the
tuple that refutes it:

* condition (P): whenever a*u == b*v there are z, s, t with a = z*s,
  b = z*t and s*u == t*v. Witness on failure: (a, b, u, v).
* condition (E): whenever a*u == a*v there are z, s with a = z*s and
  s*u == s*v. Witness: (a, u, v).
* strongly flat (SF) is (P) and (E); CP is (P) alone.
* locally cyclic (LC): any two elements lie in a common cyclic subact.
* projective (Pr): every component is isomorphic to e*S for an
  idempotent e.
"""

import enum
from dataclasses import dataclass

from .act import decompose_indecomposable, principal_right_ideal, subact
from .errors import NotMono, PreconditionViolated
from .homs import find_iso, iter_homs
from .monoid import idempotents
from .verdict import Verdict

class ClassId(enum.Enum):
    Pr = "Pr"
    SF = "SF"
    CP = "CP"
    E = "E"
    LC = "LC"

    @classmethod
    def parse(cls, tag):
        if isinstance(tag, cls):
            return tag
        return cls(str(tag))

    def __str__(self):
        return self.value


def _p_interpolants(A):
    """(a, b) -> set of (s, t) such that a = z*s, b = z*t for some z."""
    out = {}
    m = A.monoid.size
    for z in A.elements:
        row = A.action[z]
        for s in range(m):
            for t in range(m):
                out.setdefault((row[s], row[t]), set()).add((s, t))
    return out


def satisfies_P(A):
    S = A.monoid
    m, tab = S.size, S.table
    interp = _p_interpolants(A)
    for a in A.elements:
        ra = A.action[a]
        for b in A.elements:
            rb = A.action[b]
            good = None
            for u in range(m):
                for v in range(m):
                    if ra[u] != rb[v]:
                        continue
                    if good is None:
                        good = {(u2, v2) for s, t in interp.get((a, b), ())
                                for u2 in range(m) for v2 in range(m)
                                if tab[s][u2] == tab[t][v2]}
                    if (u, v) not in good:
                        return Verdict(False, (a, b, u, v))
    return Verdict(True)


def satisfies_E(A):
    S = A.monoid
    m, tab = S.size, S.table
    above = [set() for _ in A.elements]
    for z in A.elements:
        for s, a in enumerate(A.action[z]):
            above[a].add(s)
    for a in A.elements:
        ra = A.action[a]
        for u in range(m):
            for v in range(m):
                if ra[u] == ra[v] and not any(tab[s][u] == tab[s][v] for s in above[a]):
                    return Verdict(False, (a, u, v))
    return Verdict(True)


def p_witness(A, a, b, u, v):
    """Least (z, s, t) with a = z*s, b = z*t and s*u == t*v, or None."""
    tab = A.monoid.table
    m = A.monoid.size
    for z in A.elements:
        row = A.action[z]
        for s in range(m):
            if row[s] != a:
                continue
            for t in range(m):
                if row[t] == b and tab[s][u] == tab[t][v]:
                    return z, s, t
    return None


def is_locally_cyclic(A):
    covered = set()
    for z in A.elements:
        orb = sorted(A.orbits[z])
        covered.update((x, y) for x in orb for y in orb)
    for x in A.elements:
        for y in A.elements:
            if (x, y) not in covered:
                return Verdict(False, (x, y))
    return Verdict(True)


def principal_projectives(M):
    """The acts e*S for idempotent e, one per isomorphism type."""
    reps = []
    for e in idempotents(M):
        P, _ = principal_right_ideal(M, e)
        if not any(find_iso(P, Q) is not None for Q in reps):
            reps.append(P)
    return reps


def is_projective(A):
    reps = principal_projectives(A.monoid)
    for comp in decompose_indecomposable(A).components:
        C, _ = subact(A, comp)
        if not any(find_iso(C, P) is not None for P in reps):
            return Verdict(False, comp)
    return Verdict(True)


def in_class(A, cls):
    cls = ClassId.parse(cls)
    if cls is ClassId.CP:
        return satisfies_P(A)
    if cls is ClassId.E:
        return satisfies_E(A)
    if cls is ClassId.SF:
        p = satisfies_P(A)
        if not p:
            return Verdict(False, ("P", p.witness))
        e = satisfies_E(A)
        if not e:
            return Verdict(False, ("E", e.witness))
        return Verdict(True)
    if cls is ClassId.LC:
        return is_locally_cyclic(A)
    return is_projective(A)


def lifts_against(P, epis):
    """Bounded projectivity check: every g: P -> B lifts through every
    given epimorphism f: A -> B. Witness: (f, g)."""
    for f in epis:
        for g in iter_homs(P, f.codomain):
            fibers = {}
            for a, b in enumerate(f.values):
                fibers.setdefault(b, []).append(a)
            lift = next(iter_homs(P, f.domain, allowed=lambda x: fibers.get(g.values[x], [])),
                        None)
            if lift is None:
                return Verdict(False, (f, g))
    return Verdict(True)


# -- systems of condition-(P) equations --------------------------------------

@dataclass(frozen=True)
class PSystem:
    """Equations xs[i]*ss[i] == xs[i+1]*ts[i] for i < len(xs) - 1.

    ``ts[i]`` multiplies ``xs[i+1]``, so ``ts`` holds t_2..t_n.
    """

    act: object
    xs: tuple
    ss: tuple
    ts: tuple

    def holds(self):
        A = self.act
        return all(A.action[self.xs[i]][self.ss[i]] == A.action[self.xs[i + 1]][self.ts[i]]
                   for i in range(len(self.ss)))


def check_P_solution(sys, y, us):
    A, tab = sys.act, sys.act.monoid.table
    if len(us) != len(sys.xs):
        return False
    if any(A.action[y][u] != x for x, u in zip(sys.xs, us)):
        return False
    return all(tab[us[i]][sys.ss[i]] == tab[us[i + 1]][sys.ts[i]] for i in range(len(sys.ss)))


def solve_P_system(sys):
    """Find y and u_1..u_n with x_i = y*u_i and u_i*s_i == u_{i+1}*t_{i+1}.

    Works inductively: solve the first k equations, then merge the
    solution with a (P)-witness for the next equation by interpolating
    the two representations of x_{k+1}.
    """
    A = sys.act
    S = A.monoid
    tab = S.table
    n = len(sys.xs)
    if n == 0 or len(sys.ss) != n - 1 or len(sys.ts) != n - 1:
        raise PreconditionViolated("system shape is inconsistent")
    if not sys.holds():
        raise PreconditionViolated("the system's equations do not hold in the act")
    y, us = sys.xs[0], [S.identity]
    for i in range(n - 1):
        x, x_next = sys.xs[i], sys.xs[i + 1]
        w = p_witness(A, x, x_next, sys.ss[i], sys.ts[i])
        if w is None:
            raise PreconditionViolated("act fails condition (P)",
                                       witness=(x, x_next, sys.ss[i], sys.ts[i]))
        y2, u2, v2 = w
        # x = y*us[i] = y2*u2: interpolate y and y2
        w = p_witness(A, y, y2, us[i], u2)
        if w is None:
            raise PreconditionViolated("act fails condition (P)", witness=(y, y2, us[i], u2))
        z, p, q = w
        us = [tab[p][u] for u in us] + [tab[q][v2]]
        y = z
    return y, tuple(us)


# -- unitary monomorphisms -----------------------------------------------------

def _outside(f):
    if not f.is_injective():
        raise NotMono("unitary checks need a monomorphism")
    im = f.image
    return im, [y for y in f.codomain.elements if y not in im]


def is_P_unitary(f):
    """For y, y' outside im(f): y*s, y'*t in im(f) implies y*s == y'*t."""
    im, out = _outside(f)
    Y = f.codomain
    m = Y.monoid.size
    for y in out:
        for s in range(m):
            ys = Y.action[y][s]
            if ys not in im:
                continue
            for y2 in out:
                for t in range(m):
                    yt = Y.action[y2][t]
                    if yt in im and yt != ys:
                        return Verdict(False, (y, y2, s, t))
    return Verdict(True)


def is_E_unitary(f):
    """For y outside im(f): y*s, y*t in im(f) implies y*s == y*t."""
    im, out = _outside(f)
    Y = f.codomain
    m = Y.monoid.size
    for y in out:
        row = Y.action[y]
        inside = [s for s in range(m) if row[s] in im]
        for s in inside:
            for t in inside:
                if row[s] != row[t]:
                    return Verdict(False, (y, s, t))
    return Verdict(True)


def equalizes_pairs(X, same_element):
    """For all s, t: some x, x' in X with x*s == x'*t (or x == x' when
    ``same_element``). Witness: the failing (s, t)."""
    m = X.monoid.size
    for s in range(m):
        for t in range(m):
            if same_element:
                ok = any(X.action[x][s] == X.action[x][t] for x in X.elements)
            else:
                col_s = {X.action[x][s] for x in X.elements}
                ok = any(X.action[x][t] in col_s for x in X.elements)
            if not ok:
                return Verdict(False, (s, t))
    return Verdict(True)
