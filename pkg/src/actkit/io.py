"""JSON encoding of monoids, acts, maps, congruences and direct systems.

Nested objects may be given inline or as a path to another JSON file,
resolved relative to the file that refers to them.
"""

import json
import os

from .act import make_act, make_map
from .colimit import make_system
from .congruence import Congruence, canonical, is_stable
from .errors import ActkitError, PreconditionViolated
from .monoid import make_monoid


class InputError(ActkitError):
    """Malformed JSON input."""


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _resolve(obj, base):
    if isinstance(obj, str):
        path = obj if os.path.isabs(obj) else os.path.join(base, obj)
        return load_json(path), os.path.dirname(path)
    return obj, base


def _expect(obj, kind):
    if not isinstance(obj, dict) or obj.get("kind") != kind:
        raise InputError(f"expected a JSON object of kind {kind!r}")
    return obj


def monoid_to_json(M):
    out = {"kind": "monoid", "size": M.size, "identity": M.identity,
           "table": [list(r) for r in M.table]}
    if M.name:
        out["name"] = M.name
    return out


def monoid_from_json(obj, base="."):
    obj, _ = _resolve(obj, base)
    _expect(obj, "monoid")
    try:
        table, identity = obj["table"], obj["identity"]
    except KeyError as exc:
        raise InputError(f"monoid is missing {exc}") from exc
    if "size" in obj and obj["size"] != len(table):
        raise InputError("monoid size does not match its table")
    return make_monoid(table, identity, obj.get("name", ""))


def act_to_json(A):
    return {"kind": "act", "monoid": monoid_to_json(A.monoid), "size": A.size,
            "action": [list(r) for r in A.action]}


def act_from_json(obj, base="."):
    obj, base = _resolve(obj, base)
    _expect(obj, "act")
    try:
        M = monoid_from_json(obj["monoid"], base)
        action = obj["action"]
    except KeyError as exc:
        raise InputError(f"act is missing {exc}") from exc
    if "size" in obj and obj["size"] != len(action):
        raise InputError("act size does not match its action table")
    return make_act(M, action)


def map_to_json(f):
    return {"kind": "map", "domain": act_to_json(f.domain),
            "codomain": act_to_json(f.codomain), "values": list(f.values)}


def map_from_json(obj, base="."):
    obj, base = _resolve(obj, base)
    _expect(obj, "map")
    try:
        X = act_from_json(obj["domain"], base)
        Y = act_from_json(obj["codomain"], base)
        return make_map(X, Y, obj["values"])
    except KeyError as exc:
        raise InputError(f"map is missing {exc}") from exc


def congruence_to_json(rho):
    return {"kind": "congruence", "act": act_to_json(rho.act),
            "classes": [list(c) for c in rho.classes]}


def congruence_from_json(obj, base="."):
    obj, base = _resolve(obj, base)
    _expect(obj, "congruence")
    try:
        A = act_from_json(obj["act"], base)
        classes = obj["classes"]
    except KeyError as exc:
        raise InputError(f"congruence is missing {exc}") from exc
    label = [None] * A.size
    for n, cls in enumerate(classes):
        for a in cls:
            if not 0 <= a < A.size or label[a] is not None:
                raise InputError("classes must partition the act", witness=a)
            label[a] = n
    if None in label:
        raise InputError("classes must cover the act", witness=label.index(None))
    cm = canonical(label)
    if not is_stable(A, cm):
        raise PreconditionViolated("partition is not stable under the action")
    return Congruence(A, cm)


def system_to_json(D):
    return {"kind": "system", "indices": len(D.acts),
            "leq": [list(r) for r in D.leq],
            "acts": [act_to_json(A) for A in D.acts],
            "transitions": {f"{i},{j}": list(D.phi(i, j).values) for i, j in D.pairs()}}


def system_from_json(obj, base="."):
    """Transitions may be full map objects or bare value lists."""
    obj, base = _resolve(obj, base)
    _expect(obj, "system")
    if "acts" not in obj or "leq" not in obj:
        raise InputError("system needs 'acts' and 'leq'")
    acts = [act_from_json(a, base) for a in obj["acts"]]
    if obj.get("indices", len(acts)) != len(acts):
        raise InputError("indices does not match the number of acts")
    trans = {}
    for key, m in obj.get("transitions", {}).items():
        try:
            i, j = (int(p) for p in key.split(","))
        except ValueError as exc:
            raise InputError(f"bad transition key {key!r}") from exc
        if not (0 <= i < len(acts) and 0 <= j < len(acts)):
            raise InputError(f"transition key {key!r} out of range")
        values = m.get("values") if isinstance(m, dict) else m
        if values is None:
            raise InputError(f"transition {key!r} has no values")
        trans[(i, j)] = make_map(acts[i], acts[j], values)
    return make_system(obj["leq"], acts, trans)


def write_corpus(corpus, directory):
    """One file per monoid and act plus ``index.json``; returns the index."""
    os.makedirs(directory, exist_ok=True)
    entries = []
    for M in corpus.monoids:
        mdir = os.path.join(directory, M.name)
        os.makedirs(mdir, exist_ok=True)
        with open(os.path.join(mdir, "monoid.json"), "w") as fh:
            json.dump(monoid_to_json(M), fh, sort_keys=True)
        acts = []
        for i, A in enumerate(corpus.acts[M.name]):
            name = f"act{i}.json"
            obj = act_to_json(A)
            obj["monoid"] = "monoid.json"
            with open(os.path.join(mdir, name), "w") as fh:
                json.dump(obj, fh, sort_keys=True)
            acts.append(name)
        entries.append({"name": M.name, "monoid": f"{M.name}/monoid.json",
                        "acts": [f"{M.name}/{a}" for a in acts]})
    spec = corpus.spec
    index = {"kind": "corpus", "max_monoid_order": spec.max_monoid_order,
             "max_act_size": spec.max_act_size,
             "builders": [list(b) for b in spec.builders], "monoids": entries}
    with open(os.path.join(directory, "index.json"), "w") as fh:
        json.dump(index, fh, indent=1, sort_keys=True)
    return index


def read_corpus(directory):
    from .corpus import Corpus, CorpusSpec

    index = _expect(load_json(os.path.join(directory, "index.json")), "corpus")
    spec = CorpusSpec(index["max_monoid_order"], index["max_act_size"],
                      tuple(tuple(b) for b in index["builders"]))
    corpus = Corpus(spec)
    for entry in index["monoids"]:
        M = monoid_from_json(entry["monoid"], directory)
        corpus.monoids.append(M)
        corpus.acts[M.name] = [act_from_json(p, directory) for p in entry["acts"]]
    return corpus
