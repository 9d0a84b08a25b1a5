"""Command-line front end.

Every command prints JSON lines (pretty-printed with ``--human``). Exit
codes: 0 success, 1 a checked property fails (a witness is printed),
2 bad usage or input.
"""

import argparse
import json
import sys

from . import io
from .act import decompose_indecomposable, quotient_by_class_map, subact, tensor, theta_act
from .colimit import cocones_into, colimit, directed_colimit, verify_universal_property
from .congruence import generated_congruence
from .corpus import DEFAULT_BUILDERS, CorpusSpec, generate_corpus
from .cover import build_precover, find_cover, is_cover, is_precover
from .errors import ActkitError, CoverNotFound, UnknownSuite
from .flatness import ClassId, in_class
from .monoid import BUILDERS, standard_monoid
from .purity import is_n_pure, is_pure_epi
from .suites import SUITES, CorpusIndex, run_suite, to_plain


class Output:
    def __init__(self, human):
        self.human = human

    def emit(self, obj):
        if self.human:
            print(json.dumps(obj, indent=2, sort_keys=True))
        else:
            print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _int_param(text):
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"builder parameters are integers: {text!r}")


def _write_or_emit(out, obj, path):
    if path:
        with open(path, "w") as fh:
            json.dump(obj, fh, sort_keys=True)
        out.emit({"kind": "written", "path": path})
    else:
        out.emit(obj)


def _verdict(out, v, **extra):
    out.emit({"kind": "verdict", "holds": bool(v), "witness": to_plain(v.witness), **extra})
    return 0 if v else 1


# -- commands -----------------------------------------------------------------

def cmd_monoid_new(args, out):
    M = standard_monoid(args.builder, *args.params)
    _write_or_emit(out, io.monoid_to_json(M), args.output)
    return 0


def cmd_monoid_validate(args, out):
    M = io.monoid_from_json(args.file)
    out.emit({"kind": "valid", "object": "monoid", "size": M.size,
              "commutative": M.is_commutative})
    return 0


def cmd_act_validate(args, out):
    A = io.act_from_json(args.file)
    out.emit({"kind": "valid", "object": "act", "size": A.size,
              "components": len(decompose_indecomposable(A).components)})
    return 0


def cmd_act_decompose(args, out):
    A = io.act_from_json(args.file)
    comps = decompose_indecomposable(A).components
    out.emit({"kind": "decomposition", "components": [list(c) for c in comps],
              "acts": [io.act_to_json(subact(A, c)[0]) for c in comps]})
    return 0


def cmd_act_quotient(args, out):
    if args.congruence:
        rho = io.congruence_from_json(args.congruence)
        A = rho.act
    else:
        A = io.act_from_json(args.act)
        pairs = [tuple(int(x) for x in p.split(",")) for p in args.pair]
        rho = generated_congruence(A, pairs)
    Q, nat = quotient_by_class_map(A, rho.class_map)
    out.emit({"kind": "quotient", "classes": [list(c) for c in rho.classes],
              "act": io.act_to_json(Q), "map": list(nat.values)})
    return 0


def cmd_act_tensor(args, out):
    A = io.act_from_json(args.right)
    B = io.act_from_json(args.left)
    t = tensor(A, B)
    out.emit({"kind": "tensor", "size": t.count, "class_of": [list(r) for r in t.class_of]})
    return 0


def cmd_check(args, out):
    A = io.act_from_json(args.act)
    return _verdict(out, in_class(A, ClassId.parse(args.cls)), cls=args.cls)


def cmd_purity(args, out):
    f = io.map_from_json(args.map)
    if args.n is not None:
        return _verdict(out, is_n_pure(f, args.n), n=args.n)
    return _verdict(out, is_pure_epi(f), n="full")


def cmd_colimit(args, out):
    D = io.system_from_json(args.system)
    cone = directed_colimit(D) if D.is_directed() else colimit(D)
    result = {"kind": "colimit", "directed": D.is_directed(),
              "apex": io.act_to_json(cone.apex), "legs": [list(l.values) for l in cone.legs]}
    if not args.verify:
        out.emit(result)
        return 0
    probes = [(cone.apex, cone.legs)]
    for Y in (theta_act(cone.apex.monoid), cone.apex):
        probes.extend((Y, legs) for legs in cocones_into(D, Y, limit=8))
    v = verify_universal_property(D, cone, probes)
    result["universal"] = {"holds": bool(v), "probes": len(probes), "witness": to_plain(v.witness)}
    out.emit(result)
    return 0 if v else 1


def cmd_cover(args, out):
    A = io.act_from_json(args.act)
    cls = ClassId.parse(args.cls)
    if args.precover_only:
        cert = build_precover(A, cls)
        out.emit({"kind": "precover", "class": str(cls), "carrier": io.act_to_json(cert.carrier),
                  "map": list(cert.map.values), "precover": bool(is_precover(cert.map, cls)),
                  "certificate": [{"member": idx, "h": list(h.values), "f": list(inj.values)}
                                  for idx, h, inj in cert.blocks]})
        return 0
    r = find_cover(A, cls)
    out.emit({"kind": "cover", "class": str(cls), "carrier": io.act_to_json(r.map.domain),
              "map": list(r.map.values), "elements": list(r.elements),
              "cover": bool(is_cover(r.map, cls)), "stats": r.stats,
              "certificate": {"precover_carrier": io.act_to_json(r.certificate.carrier),
                              "precover_map": list(r.certificate.map.values)}})
    return 0


def _builders(specs):
    out = []
    for text in specs:
        name, _, params = text.partition(":")
        out.append((name, *(int(p) for p in params.split(",") if p)))
    return tuple(out)


def _corpus_spec(args):
    builders = _builders(args.builder) if args.builder else DEFAULT_BUILDERS
    return CorpusSpec(args.max_monoid_order, args.max_act_size, builders)


def cmd_corpus_generate(args, out):
    corpus = generate_corpus(_corpus_spec(args))
    if args.output:
        io.write_corpus(corpus, args.output)
    out.emit({"kind": "corpus", **corpus.describe()})
    return 0


def cmd_suite_run(args, out):
    if args.suite != "all" and args.suite not in SUITES:
        raise UnknownSuite(f"unknown suite {args.suite!r}; known: all, {', '.join(SUITES)}",
                           witness=args.suite)
    if args.corpus:
        corpus = io.read_corpus(args.corpus)
    else:
        corpus = generate_corpus(_corpus_spec(args))
    index = CorpusIndex(corpus)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    code = 0
    for name in names:
        report = run_suite(name, index=index)
        out.emit(report.to_json())
        if not report.passed:
            code = 1
    return code


# -- parser -------------------------------------------------------------------

def _corpus_options(p):
    p.add_argument("--max-monoid-order", type=int, default=3)
    p.add_argument("--max-act-size", type=int, default=4)
    p.add_argument("--builder", action="append", metavar="NAME:P1,P2",
                   help="standard monoid to include (repeatable); replaces the defaults")


def build_parser():
    parser = argparse.ArgumentParser(prog="actkit", description="Finite monoid acts toolkit")
    parser.add_argument("--human", action="store_true", help="pretty-print JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    monoid = sub.add_parser("monoid").add_subparsers(dest="action", required=True)
    p = monoid.add_parser("new", help=f"builders: {', '.join(BUILDERS)}")
    p.add_argument("builder")
    p.add_argument("params", nargs="*", type=_int_param)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_monoid_new)
    p = monoid.add_parser("validate")
    p.add_argument("file")
    p.set_defaults(func=cmd_monoid_validate)

    act = sub.add_parser("act").add_subparsers(dest="action", required=True)
    p = act.add_parser("validate")
    p.add_argument("file")
    p.set_defaults(func=cmd_act_validate)
    p = act.add_parser("decompose")
    p.add_argument("file")
    p.set_defaults(func=cmd_act_decompose)
    p = act.add_parser("quotient")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--congruence", help="congruence JSON file")
    group.add_argument("--act", help="act JSON file, used with --pair")
    p.add_argument("--pair", action="append", default=[], metavar="A,B",
                   help="generating pair (repeatable)")
    p.set_defaults(func=cmd_act_quotient)
    p = act.add_parser("tensor")
    p.add_argument("right", help="right act JSON")
    p.add_argument("left", help="left act JSON (a right act over the opposite monoid)")
    p.set_defaults(func=cmd_act_tensor)

    p = sub.add_parser("check")
    p.add_argument("--act", required=True)
    p.add_argument("--class", dest="cls", required=True, choices=[c.value for c in ClassId])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("purity")
    p.add_argument("--map", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=int)
    g.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_purity)

    p = sub.add_parser("colimit")
    p.add_argument("--system", required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_colimit)

    p = sub.add_parser("cover")
    p.add_argument("--act", required=True)
    p.add_argument("--class", dest="cls", required=True, choices=["Pr", "SF", "CP"])
    p.add_argument("--precover-only", action="store_true")
    p.set_defaults(func=cmd_cover)

    corpus = sub.add_parser("corpus").add_subparsers(dest="action", required=True)
    p = corpus.add_parser("generate")
    _corpus_options(p)
    p.add_argument("-o", "--output", help="directory to write the corpus files into")
    p.set_defaults(func=cmd_corpus_generate)

    suite = sub.add_parser("suite").add_subparsers(dest="action", required=True)
    p = suite.add_parser("run")
    p.add_argument("suite", help=f"one of: all, {', '.join(SUITES)}")
    p.add_argument("--corpus", help="directory written by 'corpus generate'")
    _corpus_options(p)
    p.set_defaults(func=cmd_suite_run)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.human)
    try:
        return args.func(args, out)
    except CoverNotFound as exc:
        out.emit({"kind": "failure", "error": type(exc).__name__, "message": str(exc),
                  "witness": to_plain(exc.witness)})
        return 1
    except ActkitError as exc:
        out.emit({"kind": "error", "error": type(exc).__name__, "message": str(exc),
                  "witness": to_plain(exc.witness)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
