"""Direct systems over finite preorders and their colimits.

The colimit of (X_i, phi_ij) is the coproduct of the X_i modulo the
right congruence generated by x ~ phi_ij(x). When the index preorder is
directed that congruence has the explicit description
``x_i ~ x_j iff phi_ik(x_i) == phi_jk(x_j) for some k >= i, j``; both
constructions are built and compared whenever both apply.
"""

from dataclasses import dataclass, field

from .act import ActMap, compose, coproduct, identity_map, quotient_by_class_map
from .congruence import Congruence, generated_congruence, quotient_act
from .errors import InvalidSystem, NotDirected, SquaresDoNotCommute
from .homs import iter_homs
from .monoid import idempotents
from .purity import find_lift
from .unionfind import UnionFind
from .verdict import Verdict


@dataclass(frozen=True)
class DirectSystem:
    leq: tuple
    acts: tuple
    transitions: dict = field(hash=False)

    @property
    def indices(self):
        return range(len(self.acts))

    def phi(self, i, j):
        return self.transitions[(i, j)]

    def pairs(self):
        return [(i, j) for i in self.indices for j in self.indices if self.leq[i][j]]

    def upper_bounds(self, i, j):
        return [k for k in self.indices if self.leq[i][k] and self.leq[j][k]]

    def is_directed(self):
        return all(self.upper_bounds(i, j) for i in self.indices for j in self.indices)


@dataclass(frozen=True)
class Cocone:
    apex: object
    legs: tuple
    congruence: object = None
    injections: tuple = None


def make_system(leq, acts, transitions):
    """Validate and build a direct system. Identity transitions on the
    diagonal may be omitted."""
    n = len(acts)
    leq = tuple(tuple(bool(x) for x in row) for row in leq)
    if n == 0 or len(leq) != n or any(len(r) != n for r in leq):
        raise InvalidSystem("relation matrix must be square and match the acts")
    for i in range(n):
        if not leq[i][i]:
            raise InvalidSystem("preorder must be reflexive", witness=(i, i))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if leq[i][j] and leq[j][k] and not leq[i][k]:
                    raise InvalidSystem("preorder must be transitive", witness=(i, j, k))
    M = acts[0].monoid
    if any(A.monoid != M for A in acts):
        raise InvalidSystem("acts over different monoids")
    trans = dict(transitions)
    for i in range(n):
        trans.setdefault((i, i), identity_map(acts[i]))
    for (i, j), f in trans.items():
        if not leq[i][j]:
            raise InvalidSystem(f"transition given for unrelated pair {(i, j)}", witness=(i, j))
        if f.domain != acts[i] or f.codomain != acts[j]:
            raise InvalidSystem(f"transition {(i, j)} has the wrong ends", witness=(i, j))
    for i in range(n):
        for j in range(n):
            if leq[i][j] and (i, j) not in trans:
                raise InvalidSystem(f"missing transition {(i, j)}", witness=(i, j))
    for i in range(n):
        if trans[(i, i)].values != tuple(acts[i].elements):
            raise InvalidSystem(f"phi_{i},{i} is not the identity", witness=(i, i))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if leq[i][j] and leq[j][k]:
                    if compose(trans[(j, k)], trans[(i, j)]).values != trans[(i, k)].values:
                        raise InvalidSystem("transitions do not compose", witness=(i, j, k))
    return DirectSystem(leq, tuple(acts), trans)


def _cocone_from(D, C, injections, rho):
    apex, nat = quotient_act(C, rho)
    legs = tuple(compose(nat, inj) for inj in injections)
    return Cocone(apex, legs, rho, tuple(injections))


def colimit(D):
    C, inj = coproduct(D.acts)
    pairs = [(inj[i].values[x], inj[j].values[D.phi(i, j).values[x]])
             for i, j in D.pairs() for x in D.acts[i].elements]
    return _cocone_from(D, C, inj, generated_congruence(C, pairs))


def directed_colimit(D):
    """Colimit via the explicit directed description, cross-checked against
    the generated-congruence construction."""
    if not D.is_directed():
        for i in D.indices:
            for j in D.indices:
                if not D.upper_bounds(i, j):
                    raise NotDirected("no upper bound", witness=(i, j))
    C, inj = coproduct(D.acts)
    related = set()
    for i in D.indices:
        for j in D.indices:
            ks = D.upper_bounds(i, j)
            for x in D.acts[i].elements:
                for y in D.acts[j].elements:
                    if any(D.phi(i, k).values[x] == D.phi(j, k).values[y] for k in ks):
                        related.add((inj[i].values[x], inj[j].values[y]))
    uf = UnionFind(C.size)
    for a, b in related:
        uf.union(a, b)
    rho = Congruence(C, uf.class_map())
    if any(p not in related for p in rho.pairs()):
        raise AssertionError("directed description is not an equivalence")
    general = colimit(D)
    if general.congruence.class_map != rho.class_map:
        raise AssertionError("directed and generated colimit congruences differ")
    return _cocone_from(D, C, inj, rho)


def is_cocone(D, apex, legs):
    return all(compose(legs[j], D.phi(i, j)).values == legs[i].values for i, j in D.pairs())


def mediating_maps(cone, probe_apex, probe_legs):
    """All maps psi: apex -> probe_apex with psi.alpha_i = beta_i."""
    determined = {}
    for alpha, beta in zip(cone.legs, probe_legs):
        for x, c in enumerate(alpha.values):
            determined.setdefault(c, set()).add(beta.values[x])

    def allowed(c):
        vals = determined.get(c)
        if vals is None:
            return probe_apex.elements
        return sorted(vals) if len(vals) == 1 else []

    return [psi for psi in iter_homs(cone.apex, probe_apex, allowed)
            if all(compose(psi, a).values == b.values
                   for a, b in zip(cone.legs, probe_legs))]


def verify_universal_property(D, cone, probes):
    """Each probe is (apex, legs). Witness: index of the first probe with
    zero or several mediators, and the count."""
    for n, (apex, legs) in enumerate(probes):
        if not is_cocone(D, apex, legs):
            raise InvalidSystem(f"probe {n} is not a cocone", witness=n)
        count = len(mediating_maps(cone, apex, legs))
        if count != 1:
            return Verdict(False, (n, count))
    return Verdict(True)


def cocones_into(D, Y, limit=None):
    """Every cocone of D with apex Y, by extending leg choices along the
    index; optional cap on the number returned."""
    out = []
    legs = [None] * len(D.acts)

    def rec(i):
        if limit is not None and len(out) >= limit:
            return
        if i == len(D.acts):
            out.append(tuple(legs))
            return
        for f in iter_homs(D.acts[i], Y):
            legs[i] = f
            if all(compose(legs[b], D.phi(a, b)).values == legs[a].values
                   for a in range(i + 1) for b in range(i + 1) if D.leq[a][b]):
                rec(i + 1)
        legs[i] = None

    rec(0)
    return out


def colimit_of_maps(DX, DY, psis, cone_x=None, cone_y=None):
    """The map between colimit apexes induced by compatible psi_i: X_i -> Y_i."""
    if DX.leq != DY.leq:
        raise InvalidSystem("systems must share an index preorder")
    for i, j in DX.pairs():
        if compose(psis[j], DX.phi(i, j)).values != compose(DY.phi(i, j), psis[i]).values:
            raise SquaresDoNotCommute(f"square {(i, j)} does not commute", witness=(i, j))
    cx = cone_x or colimit(DX)
    cy = cone_y or colimit(DY)
    vals = [None] * cx.apex.size
    for i, (ax, ay, psi) in enumerate(zip(cx.legs, cy.legs, psis)):
        for x, c in enumerate(ax.values):
            v = ay.values[psi.values[x]]
            if vals[c] is None:
                vals[c] = v
            elif vals[c] != v:
                raise AssertionError("induced map is not well defined")
    return ActMap(cx.apex, cy.apex, tuple(vals))


def quotient_system(A, congs):
    """Acts A/rho_i with natural maps, indexed by inclusion of the rho_i."""
    n = len(congs)
    leq = [[congs[i] <= congs[j] for j in range(n)] for i in range(n)]
    acts = [quotient_act(A, r)[0] for r in congs]
    trans = {}
    for i in range(n):
        for j in range(n):
            if leq[i][j]:
                # class of a under rho_i goes to the class of a under rho_j
                vals = [None] * acts[i].size
                for a in A.elements:
                    vals[congs[i].class_map[a]] = congs[j].class_map[a]
                trans[(i, j)] = ActMap(acts[i], acts[j], tuple(vals))
    return make_system(leq, acts, trans)


def left_translation_kernel(M, e):
    """ker(lambda_e) on the regular act: s ~ t iff e*s == e*t."""
    from .act import regular_act
    from .congruence import canonical

    return Congruence(regular_act(M), canonical(M.table[e][s] for s in M.elements))


def inverse_monoid_system(M):
    """The system S/ker(lambda_f) -> S/ker(lambda_e), e <= f idempotent,
    for an inverse monoid; its colimit is S modulo the minimum group
    congruence."""
    from .act import regular_act

    congs = []
    for e in idempotents(M):
        k = left_translation_kernel(M, e)
        if k not in congs:
            congs.append(k)
    return quotient_system(regular_act(M), congs), congs


def lift_to_stage(D, cone, elems):
    """Some stage l and elements of X_l mapping onto ``elems`` under
    alpha_l and satisfying every relation among them; (l, xs) or None."""
    for l in D.indices:
        xs = find_lift(cone.legs[l], elems)
        if xs is not None:
            return l, xs
    return None


def quotient_colimit_apex(A, congs):
    """A modulo the union of a family of congruences (directed, so the
    union is itself a congruence)."""
    uf = UnionFind(A.size)
    for r in congs:
        for cls in r.classes:
            for a in cls[1:]:
                uf.union(cls[0], a)
    rho = Congruence(A, uf.class_map())
    if any(not any(r.related(a, b) for r in congs) for a, b in rho.pairs()):
        raise NotDirected("union of the congruences is not transitive")
    return quotient_by_class_map(A, rho.class_map)
