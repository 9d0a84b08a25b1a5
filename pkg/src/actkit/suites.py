"""Theorem suites run over the small corpus.

Each suite checks a handful of named properties exhaustively over the
corpus objects it concerns and returns a deterministic report. A failed
property carries the first counterexample found, encoded as JSON.
"""

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

from .act import (
    ActMap,
    FiniteAct,
    compose,
    copair,
    coproduct,
    identity_map,
    pullback,
    regular_act,
)
from .bicyclic import BicyclicElement, bicyclic_left_divisors, bicyclic_mul, divisor_bound
from .colimit import (
    colimit,
    colimit_of_maps,
    cocones_into,
    directed_colimit,
    inverse_monoid_system,
    lift_to_stage,
    make_system,
    quotient_colimit_apex,
    quotient_system,
    verify_universal_property,
)
from .congruence import Congruence, all_congruences, canonical, join, quotient_act
from .corpus import generate_corpus
from .cover import (
    MAX_EXHAUSTIVE_CARRIER,
    build_precover,
    find_cover,
    find_cover_exhaustive,
    is_cover,
    is_precover,
    is_projective_cover,
    iso_over,
    pure_congruences_in_kernel,
    subacts_by_size,
)
from .errors import CoverNotFound, TooLarge, UnknownSuite
from .flatness import (
    ClassId,
    PSystem,
    check_P_solution,
    equalizes_pairs,
    in_class,
    is_E_unitary,
    is_P_unitary,
    is_projective,
    solve_P_system,
)
from .homs import find_iso, homs, inverse_iso, is_split_epi
from .io import act_to_json
from .monoid import is_inverse_monoid, min_group_congruence
from .purity import is_n_pure, is_pure_congruence, is_pure_epi, rees_epi
from .verdict import Verdict

P_SYSTEM_SAMPLES = 1000
P_SYSTEM_SEED = 20240601
CLOSURE_SYSTEMS_PER_MONOID = 400
UNIVERSAL_PROBES_PER_SYSTEM = 4


@dataclass
class PropertyResult:
    name: str
    holds: bool = True
    checked: int = 0
    witness: object = None
    info: dict = field(default_factory=dict)

    def check(self, ok, witness_fn):
        """Record one instance; keep the first counterexample."""
        self.checked += 1
        if not ok and self.holds:
            self.holds = False
            self.witness = witness_fn()
        return ok

    def to_json(self):
        out = {"property": self.name, "verdict": "PASS" if self.holds else "FAIL",
               "checked": self.checked}
        if not self.holds:
            out["witness"] = self.witness
        if self.info:
            out["info"] = self.info
        return out


@dataclass
class Report:
    suite: str
    properties: list
    corpus: dict

    @property
    def passed(self):
        return all(p.holds for p in self.properties)

    def to_json(self):
        return {"kind": "report", "suite": self.suite,
                "verdict": "PASS" if self.passed else "FAIL",
                "properties": [p.to_json() for p in self.properties],
                "corpus": self.corpus}


# -- corpus indexing -----------------------------------------------------------

class CorpusIndex:
    """Acts, epis and monos of a corpus with stable labels for witnesses."""

    def __init__(self, corpus):
        self.corpus = corpus
        self.labels = {}
        for M in corpus.monoids:
            for i, A in enumerate(corpus.acts[M.name]):
                self.labels.setdefault(A, f"{M.name}#{i}")
        self._maps = {}

    def acts(self, M):
        return self.corpus.acts[M.name]

    def maps(self, M):
        if M.name not in self._maps:
            out = []
            for X in self.acts(M):
                for Y in self.acts(M):
                    out.extend(homs(X, Y))
            self._maps[M.name] = out
        return self._maps[M.name]

    def epis(self, M):
        return [f for f in self.maps(M) if f.is_surjective()]

    def monos(self, M):
        return [f for f in self.maps(M) if f.is_injective()]

    def act(self, A):
        return self.labels.get(A) or act_to_json(A)

    def map(self, f):
        return {"domain": self.act(f.domain), "codomain": self.act(f.codomain),
                "values": list(f.values)}


def to_plain(obj):
    """Make a witness JSON-friendly."""
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    if isinstance(obj, ClassId):
        return str(obj)
    if isinstance(obj, BicyclicElement):
        return [obj.p, obj.q]
    if isinstance(obj, Verdict):
        return {"holds": obj.holds, "witness": to_plain(obj.witness)}
    if isinstance(obj, ActMap):
        return {"values": list(obj.values)}
    if isinstance(obj, FiniteAct):
        return act_to_json(obj)
    if isinstance(obj, Congruence):
        return [list(c) for c in obj.classes]
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_plain(x) for x in obj]
    return str(obj)


@lru_cache(maxsize=None)
def _purity_levels(f):
    return (bool(is_n_pure(f, 1)), bool(is_n_pure(f, 2)), bool(is_pure_epi(f)))


# -- bicyclic monoid ----------------------------------------------------------

def suite_bicyclic(index, divisor_max=8, assoc_max=12):
    count = PropertyResult("left-divisor count <= s+1")
    largest = 0
    rng = range(divisor_max + 1)
    for m, n, s, t in product(rng, rng, rng, rng):
        target, st = BicyclicElement(m, n), BicyclicElement(s, t)
        sols = bicyclic_left_divisors(target, st, divisor_bound(target, st) + 1)
        largest = max(largest, len(sols))
        count.check(len(sols) <= s + 1,
                    lambda: {"target": [m, n], "right": [s, t], "divisors": to_plain(sols)})
    count.info["largest"] = largest

    assoc = PropertyResult("associativity")
    rng = range(assoc_max + 1)
    elems = [BicyclicElement(p, q) for p in rng for q in rng]
    table = {(a, b): bicyclic_mul(a, b) for a in elems for b in elems}
    for a in elems:
        for b in elems:
            ab = table[(a, b)]
            for c in elems:
                if bicyclic_mul(ab, c) != bicyclic_mul(a, table[(b, c)]):
                    assoc.check(False, lambda: to_plain([a, b, c]))
            assoc.checked += len(elems)
    return [count, assoc]


# -- purity ------------------------------------------------------------------

def suite_purity_chain(index):
    ladder = PropertyResult("pure => 2-pure => 1-pure")
    split = PropertyResult("split => pure")
    finite = PropertyResult("pure => split (finite codomain)")
    for M in index.corpus.monoids:
        for f in index.epis(M):
            p1, p2, pf = _purity_levels(f)
            sp = is_split_epi(f)
            ladder.check((not pf or p2) and (not p2 or p1),
                         lambda: {"map": index.map(f), "levels": [p1, p2, pf]})
            split.check(not sp or pf, lambda: index.map(f))
            finite.check(not pf or sp, lambda: index.map(f))
    return [ladder, split, finite]


def suite_pure_congruence(index):
    prop = PropertyResult("rho pure <=> S/rho strongly flat")
    for M in index.corpus.monoids:
        S = regular_act(M)
        for rho in all_congruences(S):
            pure = bool(is_pure_congruence(S, rho))
            sf = bool(in_class(quotient_act(S, rho)[0], ClassId.SF))
            prop.check(pure == sf, lambda: {"monoid": M.name, "congruence": to_plain(rho),
                                            "pure": pure, "strongly_flat": sf})
    return [prop]


def suite_sf_epi_agreement(index):
    prop = PropertyResult("SF domain: codomain SF = pure = 2-pure")
    for M in index.corpus.monoids:
        for f in index.epis(M):
            if not in_class(f.domain, ClassId.SF):
                continue
            _, p2, pf = _purity_levels(f)
            sf = bool(in_class(f.codomain, ClassId.SF))
            prop.check(sf == pf == p2, lambda: {"map": index.map(f), "codomain_sf": sf,
                                                "pure": pf, "two_pure": p2})
    return [prop]


def suite_flat_epis(index):
    e_prop = PropertyResult("E domain: codomain E <=> 1-pure")
    cp_prop = PropertyResult("CP domain, 2-pure => codomain CP")
    converse = PropertyResult("CP codomain without 2-purity occurs")
    converse.holds = False
    witnesses = []
    for M in index.corpus.monoids:
        for f in index.epis(M):
            p1, p2, _ = _purity_levels(f)
            if in_class(f.domain, ClassId.E):
                e = bool(in_class(f.codomain, ClassId.E))
                e_prop.check(e == p1, lambda: {"map": index.map(f), "codomain_e": e,
                                               "one_pure": p1})
            if in_class(f.domain, ClassId.CP):
                cp = bool(in_class(f.codomain, ClassId.CP))
                cp_prop.check(not p2 or cp, lambda: index.map(f))
                converse.checked += 1
                if cp and not p2:
                    converse.holds = True
                    witnesses.append(index.map(f))
    converse.info["witnesses"] = len(witnesses)
    if witnesses:
        converse.info["first"] = witnesses[0]
    else:
        converse.witness = "no CP-domain epi with CP codomain that is not 2-pure"
    return [e_prop, cp_prop, converse]


def suite_unitary(index):
    two = PropertyResult("Y->Y/X 2-pure => P-unitary, some xs = x't")
    one = PropertyResult("Y->Y/X 1-pure => E-unitary, some xs = xt")
    split = PropertyResult("Y->Y/X split => P-unitary, some xs = xt")
    for M in index.corpus.monoids:
        for f in index.monos(M):
            q = rees_epi(f)
            p1, p2, _ = _purity_levels(q)
            X = f.domain
            if p2:
                two.check(bool(is_P_unitary(f)) and bool(equalizes_pairs(X, False)),
                          lambda: index.map(f))
            if p1:
                one.check(bool(is_E_unitary(f)) and bool(equalizes_pairs(X, True)),
                          lambda: index.map(f))
            if is_split_epi(q):
                split.check(bool(is_P_unitary(f)) and bool(equalizes_pairs(X, True)),
                            lambda: index.map(f))
    return [two, one, split]


# -- direct systems -----------------------------------------------------------

def _chain(acts, maps):
    """Chain X_0 -> X_1 -> ... from consecutive maps."""
    n = len(acts)
    leq = [[i <= j for j in range(n)] for i in range(n)]
    trans = {}
    for i in range(n):
        f = None
        for j in range(i + 1, n):
            f = maps[j - 1] if f is None else compose(maps[j - 1], f)
            trans[(i, j)] = f
    return make_system(leq, acts, trans)


def corpus_systems(index, M, directed=True):
    """Direct systems on at most four indices over corpus acts of M, in a
    fixed order: single acts, chains of two along every corpus map, chains
    and diamonds of quotients, and pairs of indices identified by an
    automorphism. With ``directed=False``: discrete pairs and spans of
    quotients instead."""
    acts = index.acts(M)
    out = []
    if directed:
        for X in acts:
            out.append(("single", make_system([[True]], [X], {})))
        for f in index.maps(M):
            out.append(("chain2", _chain([f.domain, f.codomain], [f])))
    for X in acts:
        congs = all_congruences(X)
        for r1, r2 in combinations(congs, 2):
            if directed and r1 <= r2:
                out.append(("quotient-chain", quotient_system(X, [r1, r2])))
                for r3 in congs:
                    if r2 <= r3 and r3 != r2:
                        out.append(("quotient-chain", quotient_system(X, [r1, r2, r3])))
            elif not (r1 <= r2 or r2 <= r1):
                top = join(r1, r2)
                bottom = congs[0]
                if directed:
                    out.append(("diamond", quotient_system(X, [bottom, r1, r2, top])))
                else:
                    span = quotient_system(X, [bottom, r1, r2])
                    out.append(("span", span))
        if directed:
            for h in homs(X, X):
                if h.is_injective() and h.values != tuple(X.elements):
                    leq = [[True, True], [True, True]]
                    trans = {(0, 1): h, (1, 0): inverse_iso(h)}
                    out.append(("automorphism", make_system(leq, [X, X], trans)))
                    break
    if not directed:
        for X, Y in combinations(acts, 2):
            out.append(("discrete", make_system([[True, False], [False, True]], [X, Y], {})))
    return out


def suite_colimit(index):
    agree = PropertyResult("directed formula = generated congruence")
    universal = PropertyResult("colimit is universal among probe cocones")
    chain_union = PropertyResult("quotient chain colimit = X / union")
    inverse = PropertyResult("inverse monoid: colimit = S/sigma, pure, SF")
    lifting = PropertyResult("families in the apex lift to a stage")
    mono = PropertyResult("alpha_i mono <=> every phi_ik mono")
    epi = PropertyResult("colimit of epis is epi")
    general = PropertyResult("non-directed colimits: coproduct and pushout")
    for M in index.corpus.monoids:
        small = [Y for Y in index.acts(M) if Y.size <= 2]
        for kind, D in corpus_systems(index, M):
            try:
                cone = directed_colimit(D)
                ok = True
            except AssertionError as exc:
                ok, cone = False, None
                msg = str(exc)
            agree.check(ok, lambda: {"monoid": M.name, "kind": kind, "error": msg})
            if cone is None:
                continue
            if kind != "chain2":
                probes = [(cone.apex, cone.legs)]
                for Y in small:
                    probes.extend((Y, legs) for legs in
                                  cocones_into(D, Y, UNIVERSAL_PROBES_PER_SYSTEM))
                v = verify_universal_property(D, cone, probes)
                universal.check(bool(v), lambda: {"monoid": M.name, "kind": kind,
                                                  "probe": to_plain(v.witness)})
            if kind == "quotient-chain":
                X = D.acts[0]
                congs = _congruences_of_quotient_system(D)
                Q, _ = quotient_colimit_apex(X, congs)
                chain_union.check(find_iso(cone.apex, Q) is not None,
                                  lambda: {"monoid": M.name, "kind": kind})
            apex_elems = cone.apex.elements
            for k in range(1, min(cone.apex.size, 3) + 1):
                for fam in combinations(apex_elems, k):
                    lifting.check(lift_to_stage(D, cone, fam) is not None,
                                  lambda: {"monoid": M.name, "kind": kind, "family": fam})
            for i in D.indices:
                lhs = cone.legs[i].is_injective()
                rhs = all(D.phi(i, k).is_injective() for k in D.indices if D.leq[i][k])
                mono.check(lhs == rhs, lambda: {"monoid": M.name, "kind": kind, "index": i})
            if kind in ("quotient-chain", "diamond"):
                # natural maps from the constant system on X_0 are epis
                X = D.acts[0]
                const = make_system(D.leq, [X] * len(D.acts),
                                    {(i, j): identity_map(X) for i, j in D.pairs()})
                psi = colimit_of_maps(const, D, [D.phi(0, i) for i in D.indices],
                                      cone_y=cone)
                epi.check(psi.is_surjective(), lambda: {"monoid": M.name, "kind": kind})
        for kind, D in corpus_systems(index, M, directed=False):
            cone = colimit(D)
            if kind == "discrete":
                C, _ = coproduct(D.acts)
                ok = find_iso(cone.apex, C) is not None
            else:
                X = D.acts[0]
                congs = _congruences_of_quotient_system(D)
                ok = find_iso(cone.apex, quotient_act(X, join(congs[1], congs[2]))[0]) is not None
            general.check(ok, lambda: {"monoid": M.name, "kind": kind})
        if is_inverse_monoid(M):
            D, congs = inverse_monoid_system(M)
            cone = directed_colimit(D)
            S = regular_act(M)
            sigma = min_group_congruence(M)
            Q, nat = quotient_act(S, sigma)
            ok = (find_iso(cone.apex, Q) is not None and bool(is_pure_epi(nat))
                  and bool(in_class(Q, ClassId.SF)))
            inverse.check(ok, lambda: {"monoid": M.name})
    if "symmetric_inverse(2)" not in {M.name for M in index.corpus.monoids}:
        inverse.check(False, lambda: "corpus lacks symmetric_inverse(2)")
    return [agree, universal, chain_union, inverse, lifting, mono, epi, general]


def _congruences_of_quotient_system(D):
    """Recover the kernels of phi_{0,i} as congruences on D.acts[0];
    index 0 is least in every quotient system built here."""
    X = D.acts[0]
    out = []
    for i in D.indices:
        out.append(Congruence(X, canonical(D.phi(0, i).values)))
    return out


def _colimit_epi_systems(index, M, limit):
    """Pairs of chains X0 -> X1, Y0 -> Y1 with pure epis psi_i: X_i -> Y_i
    forming commuting squares; Y0 -> Y1 is forced by psi_0 being onto."""
    pure = {}
    for f in index.epis(M):
        if _purity_levels(f)[2]:
            pure.setdefault(f.domain, []).append(f)
    count = 0
    for phi in index.maps(M):
        for psi0 in pure.get(phi.domain, []):
            for psi1 in pure.get(phi.codomain, []):
                theta = [None] * psi0.codomain.size
                ok = True
                for x, y in enumerate(psi0.values):
                    v = psi1.values[phi.values[x]]
                    if theta[y] is None:
                        theta[y] = v
                    elif theta[y] != v:
                        ok = False
                        break
                if not ok:
                    continue
                theta = ActMap(psi0.codomain, psi1.codomain, tuple(theta))
                DX = _chain([phi.domain, phi.codomain], [phi])
                DY = _chain([theta.domain, theta.codomain], [theta])
                yield DX, DY, (psi0, psi1)
                count += 1
                if count >= limit:
                    return


def suite_closure(index):
    sf = PropertyResult("SF closed under directed colimits")
    cp = PropertyResult("CP closed under directed colimits")
    pure = PropertyResult("directed colimits of pure epis are pure")
    pb = PropertyResult("pullbacks of pure epis are pure")
    for M in index.corpus.monoids:
        for kind, D in corpus_systems(index, M):
            cone = directed_colimit(D)
            if all(in_class(X, ClassId.SF) for X in D.acts):
                sf.check(bool(in_class(cone.apex, ClassId.SF)),
                         lambda: {"monoid": M.name, "kind": kind})
            if all(in_class(X, ClassId.CP) for X in D.acts):
                cp.check(bool(in_class(cone.apex, ClassId.CP)),
                         lambda: {"monoid": M.name, "kind": kind})
        for DX, DY, psis in _colimit_epi_systems(index, M, CLOSURE_SYSTEMS_PER_MONOID):
            psi = colimit_of_maps(DX, DY, psis)
            pure.check(psi.is_surjective() and bool(is_pure_epi(psi)),
                       lambda: {"monoid": M.name, "maps": [index.map(p) for p in psis]})
        for g in index.epis(M):
            if not _purity_levels(g)[2]:
                continue
            for B in index.acts(M):
                for h in homs(B, g.codomain):
                    P = pullback(h, g)
                    ok = P is not None and P.left.is_surjective() and bool(is_pure_epi(P.left))
                    pb.check(ok, lambda: {"epi": index.map(g), "along": index.map(h)})
    return [sf, cp, pure, pb]


# -- covers -------------------------------------------------------------------

COVER_CLASSES = (ClassId.Pr, ClassId.SF, ClassId.CP)


def suite_cover(index):
    exists = PropertyResult("find_cover succeeds")
    verified = PropertyResult("found covers pass is_cover")
    unique = PropertyResult("covers of an act are isomorphic over it")
    proj = PropertyResult("is_cover(Pr) <=> projective cover")
    no_pure = PropertyResult("no class-pure congruence inside a cover's kernel")
    epi = PropertyResult("canonical precovers are onto")
    assembly = PropertyResult("precover of a coproduct = coproduct of precovers")
    chain = PropertyResult("cover -> precover chain has a precover colimit map")
    not_coessential = 0
    skipped_kernels = 0
    for M in index.corpus.monoids:
        for A in index.acts(M):
            for cls in COVER_CLASSES:
                where = {"act": index.act(A), "class": str(cls)}
                try:
                    r = find_cover(A, cls)
                except CoverNotFound as exc:
                    detail = to_plain(exc.witness)
                    exists.check(False, lambda: {**where, "detail": detail})
                    continue
                exists.check(True, None)
                cert = r.certificate
                epi.check(cert.map.is_surjective() and cert.revalidate(), lambda: where)
                verified.check(bool(is_cover(r.map, cls)), lambda: where)
                other = find_cover(A, cls, reverse=False)
                unique.check(iso_over(r.map, other.map) is not None, lambda: where)
                if cert.carrier.size <= MAX_EXHAUSTIVE_CARRIER:
                    ex = find_cover_exhaustive(A, cls)
                    unique.check(iso_over(r.map, ex.map) is not None, lambda: where)
                try:
                    bad = pure_congruences_in_kernel(r.map, cls)
                    no_pure.check(not bad, lambda: {**where, "congruence": to_plain(bad[0])})
                except TooLarge:
                    skipped_kernels += 1
                if cls is ClassId.Pr:
                    for g in (r.map, cert.map):
                        a, b = bool(is_cover(g, cls)), bool(is_projective_cover(g))
                        proj.check(a == b, lambda: {**where, "cover": a, "coessential": b})
                elif r.map.is_surjective():
                    P = r.map.domain
                    target = set(A.elements)
                    if any(len(B) < P.size and {r.map.values[x] for x in B} == target
                           for B in subacts_by_size(P)):
                        not_coessential += 1
                inc = ActMap(r.map.domain, cert.carrier, r.elements)
                D = _chain([r.map.domain, cert.carrier], [inc])
                cone = directed_colimit(D)
                psi = [None] * cone.apex.size
                for leg, g in zip(cone.legs, (r.map, cert.map)):
                    for x, c in enumerate(leg.values):
                        psi[c] = g.values[x]
                induced = ActMap(cone.apex, A, tuple(psi))
                chain.check(bool(is_precover(induced, cls)), lambda: where)
        for g in index.epis(M):
            if is_projective(g.domain):
                a, b = bool(is_cover(g, ClassId.Pr)), bool(is_projective_cover(g))
                proj.check(a == b, lambda: {"map": index.map(g), "cover": a, "coessential": b})
        acts = index.acts(M)
        for A1, A2 in combinations(acts, 2):
            if A1.size + A2.size > 4:
                continue
            C, inj = coproduct([A1, A2])
            for cls in COVER_CLASSES:
                whole = build_precover(C, cls).map
                parts = [build_precover(A, cls) for A in (A1, A2)]
                P, pinj = coproduct([p.carrier for p in parts])
                assembled = copair(P, pinj, [compose(i, p.map) for i, p in zip(inj, parts)])
                assembly.check(iso_over(whole, assembled) is not None,
                               lambda: {"acts": [index.act(A1), index.act(A2)],
                                        "class": str(cls)})
    no_pure.info["skipped_large_kernels"] = skipped_kernels
    exists.info["sf_cp_covers_not_coessential"] = not_coessential
    return [exists, verified, unique, proj, no_pure, epi, assembly, chain]


# -- condition (P) systems ------------------------------------------------------

def random_p_system(rng, A, n):
    """A system x_i*s_i == x_{i+1}*t_{i+1} that holds in A."""
    m = A.monoid.size
    xs = [rng.randrange(A.size)]
    ss, ts = [], []
    for _ in range(n - 1):
        s = rng.randrange(m)
        target = A.action[xs[-1]][s]
        choices = [(x, t) for x in A.elements for t in range(m) if A.action[x][t] == target]
        x, t = rng.choice(choices)
        xs.append(x)
        ss.append(s)
        ts.append(t)
    return PSystem(A, tuple(xs), tuple(ss), tuple(ts))


def suite_p_system(index, samples=P_SYSTEM_SAMPLES, seed=P_SYSTEM_SEED):
    prop = PropertyResult("P-system solutions re-validate")
    cp_acts = [A for M in index.corpus.monoids for A in index.acts(M)
               if in_class(A, ClassId.CP)]
    rng = random.Random(seed)
    for _ in range(samples):
        A = rng.choice(cp_acts)
        system = random_p_system(rng, A, rng.randint(1, 4))
        y, us = solve_P_system(system)
        prop.check(check_P_solution(system, y, us),
                   lambda: {"act": index.act(A), "xs": system.xs, "ss": system.ss,
                            "ts": system.ts, "y": y, "us": us})
    prop.info["cp_acts"] = len(cp_acts)
    return [prop]


SUITES = {
    "bicyclic": suite_bicyclic,
    "purity-chain": suite_purity_chain,
    "pure-congruence": suite_pure_congruence,
    "sf-epi-agreement": suite_sf_epi_agreement,
    "flat-epis": suite_flat_epis,
    "colimit": suite_colimit,
    "closure": suite_closure,
    "cover-existence": suite_cover,
    "p-system": suite_p_system,
    "unitary": suite_unitary,
}


def run_suite(name, corpus=None, index=None):
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}",
                           witness=name)
    if index is None:
        index = CorpusIndex(corpus or generate_corpus())
    props = SUITES[name](index)
    for p in props:
        p.witness = to_plain(p.witness)
        p.info = to_plain(p.info)
    return Report(name, props, index.corpus.describe())
