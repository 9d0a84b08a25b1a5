"""Precovers and covers for the classes Pr, SF and CP.

For a finite monoid every indecomposable act in SF or CP is locally
cyclic, hence cyclic, hence some S/rho; indecomposable projectives are
the e*S. The skeleton of a class is one representative of each of these
up to isomorphism. Since every member of the class is a coproduct of
indecomposable members and maps out of a coproduct factor through its
components, precover checks only need the skeleton.

The canonical precover of A is the coproduct of one copy of K for each
skeleton member K and each map h: K -> A, mapped to A by h on that copy.
A cover is carved out of it by repeatedly passing to a retract along an
endomorphism over A that is not an isomorphism; retracts stay in the
class and stay precovers, and the carrier shrinks each time.
"""

from dataclasses import dataclass
from functools import lru_cache

from .act import (
    ActMap,
    compose,
    coproduct,
    decompose_indecomposable,
    regular_act,
    restrict,
    subact,
)
from .congruence import all_congruences, kernel, quotient_act
from .errors import (
    CoverNotFound,
    DomainNotInClass,
    DomainNotProjective,
    NoSkeleton,
    NotEpi,
    PreconditionViolated,
    TooLarge,
)
from .flatness import ClassId, in_class, is_projective, principal_projectives
from .homs import factor_through, find_iso, homs, iter_homs
from .verdict import Verdict

SKELETON_CLASSES = (ClassId.Pr, ClassId.SF, ClassId.CP)
MAX_EXHAUSTIVE_CARRIER = 12


@dataclass(frozen=True)
class Skeleton:
    cls: ClassId
    members: tuple


@dataclass(frozen=True)
class PrecoverCertificate:
    """``blocks[i] = (member index, h, injection)``; each injection f
    satisfies map.f = h."""

    target: object
    carrier: object
    map: ActMap
    blocks: tuple

    def revalidate(self):
        return all(compose(self.map, inj).values == h.values for _, h, inj in self.blocks)


@dataclass(frozen=True)
class CoverResult:
    map: ActMap
    elements: tuple
    certificate: PrecoverCertificate
    stats: dict


@lru_cache(maxsize=256)
def _skeleton(M, cls):
    if cls is ClassId.Pr:
        return Skeleton(cls, tuple(principal_projectives(M)))
    S = regular_act(M)
    members = []
    for rho in all_congruences(S):
        Q, _ = quotient_act(S, rho)
        if not in_class(Q, cls):
            continue
        if any(find_iso(Q, K) is not None for K in members):
            continue
        members.append(Q)
    return Skeleton(cls, tuple(members))


def build_skeleton(M, cls):
    cls = ClassId.parse(cls)
    if cls not in SKELETON_CLASSES:
        raise NoSkeleton(f"no completeness argument for class {cls}", witness=str(cls))
    return _skeleton(M, cls)


def _resolve_skeleton(M, cls, skeleton):
    if skeleton is not None:
        return skeleton
    return build_skeleton(M, cls)


def build_precover(A, cls, skeleton=None):
    cls = ClassId.parse(cls)
    sk = _resolve_skeleton(A.monoid, cls, skeleton)
    pieces = []
    for idx, K in enumerate(sk.members):
        for h in iter_homs(K, A):
            pieces.append((idx, K, h))
    if not pieces:
        raise PreconditionViolated("no skeleton member maps to the act")
    C, injections = coproduct([K for _, K, _ in pieces])
    vals = [0] * C.size
    for (_, _, h), inj in zip(pieces, injections):
        for a, c in enumerate(inj.values):
            vals[c] = h.values[a]
    g = ActMap(C, A, tuple(vals))
    blocks = tuple((idx, h, inj) for (idx, _, h), inj in zip(pieces, injections))
    return PrecoverCertificate(A, C, g, blocks)


def is_precover(g, cls, skeleton=None):
    """Witness on failure: (skeleton member index, map that does not
    factor through g)."""
    cls = ClassId.parse(cls)
    if not in_class(g.domain, cls):
        raise DomainNotInClass(f"domain is not in {cls}")
    sk = _resolve_skeleton(g.domain.monoid, cls, skeleton)
    for idx, K in enumerate(sk.members):
        for h in iter_homs(K, g.codomain):
            if factor_through(g, h) is None:
                return Verdict(False, (idx, h))
    return Verdict(True)


def _component_map_over(g, src, dst, want_non_injective=False):
    """A map from the subact ``src`` of dom(g) into the subact ``dst``
    commuting with g, as a dict on src; optionally only non-injective."""
    P = g.domain
    C, inc = subact(P, src)
    dst = set(dst)
    fibers = {}
    for c in sorted(dst):
        fibers.setdefault(g.values[c], []).append(c)

    def allowed(x):
        return fibers.get(g.values[inc.values[x]], [])

    for f in iter_homs(C, P, allowed):
        if want_non_injective and f.is_injective():
            continue
        return {inc.values[x]: v for x, v in enumerate(f.values)}
    return None


def non_iso_endo_over(g, components=None):
    """Some endomorphism f of dom(g) with g.f = g that is not an
    isomorphism, or None.

    Maps out of a coproduct are independent on each component, so such an
    f exists iff some component maps over g into a different component
    (then identity elsewhere leaves that component out of the image), or
    some component has a non-bijective self-map over g.
    """
    P = g.domain
    comps = components or decompose_indecomposable(P).components
    for i, ci in enumerate(comps):
        for j, cj in enumerate(comps):
            if i == j:
                continue
            m = _component_map_over(g, ci, cj)
            if m is not None:
                return _extend(P, m)
    for ci in comps:
        m = _component_map_over(g, ci, ci, want_non_injective=True)
        if m is not None:
            return _extend(P, m)
    return None


def _extend(P, partial):
    return ActMap(P, P, tuple(partial.get(x, x) for x in P.elements))


def is_cover(g, cls, skeleton=None):
    """Precover whose endomorphisms over the target are all isomorphisms.
    Witness: ("precover", ...) or ("endo", f)."""
    pre = is_precover(g, cls, skeleton)
    if not pre:
        return Verdict(False, ("precover", pre.witness))
    f = non_iso_endo_over(g)
    if f is not None:
        return Verdict(False, ("endo", f))
    return Verdict(True)


def _idempotent_power(vals):
    f = vals
    while True:
        ff = {x: f[f[x]] for x in f}
        if ff == f:
            return f
        # f^(2k) eventually equals f^k on a finite set
        f = ff


def _reduce(cert, reverse):
    g = cert.map
    comps = [list(c) for c in decompose_indecomposable(cert.carrier).components]
    removed = shrunk = 0
    changed = True
    while changed:
        changed = False
        order = range(len(comps) - 1, -1, -1) if reverse else range(len(comps))
        for i in order:
            for j in range(len(comps)):
                if i != j and _component_map_over(g, comps[i], comps[j]) is not None:
                    del comps[i]
                    removed += 1
                    changed = True
                    break
            if changed:
                break
        if changed:
            continue
        for i, ci in enumerate(comps):
            m = _component_map_over(g, ci, ci, want_non_injective=True)
            if m is not None:
                e = _idempotent_power(m)
                comps[i] = sorted(set(e.values()))
                shrunk += 1
                changed = True
                break
    elems = tuple(sorted(x for c in comps for x in c))
    return elems, {"components_removed": removed, "components_shrunk": shrunk}


def find_cover(A, cls, skeleton=None, reverse=True):
    """Cover of A, carved out of the canonical precover.

    Repeatedly drops a component that maps over A into another one
    (identity elsewhere makes that a retraction onto the rest), or
    replaces a component by the image of an idempotent non-bijective
    self-map over A. Both steps pass to a retract, so the class and the
    precover property survive; when neither applies, every endomorphism
    over A is bijective. ``reverse`` picks which of two mutually
    mapping components is kept: the earlier one by default.
    """
    cls = ClassId.parse(cls)
    cert = build_precover(A, cls, skeleton)
    elems, stats = _reduce(cert, reverse)
    cover = restrict(cert.map, elems)
    verdict = is_cover(cover, cls, skeleton)
    if not verdict:
        raise CoverNotFound("reduced precover is not a cover", witness=verdict.witness)
    stats = {"precover_size": cert.carrier.size, "cover_size": len(elems), **stats}
    return CoverResult(cover, elems, cert, stats)


def subacts_by_size(P):
    """Every non-empty subact of P, ascending by size then lexicographic."""
    orbits = sorted({frozenset(o) for o in P.orbits}, key=lambda o: (len(o), sorted(o)))
    seen = set()
    frontier = set()
    for o in orbits:
        seen.add(o)
        frontier.add(o)
    while frontier:
        nxt = set()
        for B in frontier:
            for o in orbits:
                u = B | o
                if u not in seen:
                    seen.add(u)
                    nxt.add(u)
        frontier = nxt
    return sorted((tuple(sorted(B)) for B in seen), key=lambda b: (len(b), b))


def find_cover_exhaustive(A, cls, skeleton=None, max_carrier=MAX_EXHAUSTIVE_CARRIER):
    """Search subacts of the canonical precover by ascending size for the
    first one in the class that is still a precover, and confirm it is a
    cover. Only for small carriers."""
    cls = ClassId.parse(cls)
    cert = build_precover(A, cls, skeleton)
    if cert.carrier.size > max_carrier:
        raise TooLarge("precover carrier too large for exhaustive search",
                       witness=cert.carrier.size)
    for elems in subacts_by_size(cert.carrier):
        g = restrict(cert.map, elems)
        if not in_class(g.domain, cls):
            continue
        if is_precover(g, cls, skeleton) and is_cover(g, cls, skeleton):
            return CoverResult(g, elems, cert, {"precover_size": cert.carrier.size,
                                                "cover_size": len(elems)})
    raise CoverNotFound("no subact of the precover is a cover")


def _component_iso_over(g1, c1, g2, c2):
    """A bijection from component c1 of dom(g1) onto component c2 of
    dom(g2) commuting with the maps, as a dict, or None."""
    C, inc = subact(g1.domain, c1)
    fibers = {}
    for c in sorted(c2):
        fibers.setdefault(g2.values[c], []).append(c)
    if len(c1) != len(c2):
        return None
    for f in iter_homs(C, g2.domain, lambda x: fibers.get(g1.values[inc.values[x]], [])):
        if f.is_injective():
            return {inc.values[x]: v for x, v in enumerate(f.values)}
    return None


def iso_over(g1, g2):
    """An isomorphism h: dom(g1) -> dom(g2) with g2.h = g1, or None.

    Matches components: being isomorphic over the target is an
    equivalence on components, so a greedy matching succeeds whenever
    any matching does.
    """
    if g1.codomain != g2.codomain or g1.domain.size != g2.domain.size:
        return None
    comps1 = decompose_indecomposable(g1.domain).components
    comps2 = list(decompose_indecomposable(g2.domain).components)
    if len(comps1) != len(comps2):
        return None
    vals = [None] * g1.domain.size
    used = [False] * len(comps2)
    for c1 in comps1:
        for k, c2 in enumerate(comps2):
            if used[k]:
                continue
            m = _component_iso_over(g1, c1, g2, c2)
            if m is not None:
                used[k] = True
                for x, v in m.items():
                    vals[x] = v
                break
        else:
            return None
    return ActMap(g1.domain, g2.domain, tuple(vals))


def is_projective_cover(g):
    """Epimorphism from a projective with no proper subact mapping onto
    the target. Witness: a proper subact that still maps onto."""
    if not is_projective(g.domain):
        raise DomainNotProjective("domain is not projective")
    if not g.is_surjective():
        raise NotEpi("projective covers are epimorphisms")
    P = g.domain
    target = set(g.codomain.elements)
    for x in P.elements:
        # the largest subact avoiding x
        B = [y for y in P.elements if x not in P.orbits[y]]
        if B and {g.values[y] for y in B} == target:
            return Verdict(False, tuple(B))
    return Verdict(True)


def pure_congruences_in_kernel(g, cls):
    """Non-identity congruences rho inside ker(g) with dom(g)/rho in cls."""
    F = g.domain
    out = []
    for rho in all_congruences(F, within=kernel(g)):
        if rho.is_identity():
            continue
        if in_class(quotient_act(F, rho)[0], cls):
            out.append(rho)
    return out


def precover_homs_nonempty(A, cls):
    """Every act receives a map from some class member; for Pr, SF and CP
    the regular act does, since homs(S, A) is in bijection with A."""
    return len(homs(regular_act(A.monoid), A)) == A.size
