"""Command-line front end.

Exit codes: 0 all checks pass, 1 check failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import composition, gropes, links, milnor, verify
from .errors import MgkError, ParseError
from .ring import format_ring_element
from .words import Word


def _emit(text, out=None):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _report_text(report):
    lines = []
    for case in report["cases"]:
        actual = case["actual"]
        if isinstance(actual, dict) and "failures" in actual:
            detail = "%d/%d failed" % (actual["failures"], actual["trials"])
            if actual.get("witness"):
                detail += " (witness: %s)" % actual["witness"]
        else:
            detail = str(actual)
        lines.append("[%s] %s: %s" % (case["status"].upper(), case["input"], detail))
    summary = report["summary"]
    lines.append("summary: %s (%d/%d passed)"
                 % (summary["status"], summary.get("passed",
                    summary["total"] - summary["failed"]), summary["total"]))
    return "\n".join(lines)


def _finish_report(report, args):
    text = (json.dumps(report, indent=2, sort_keys=True)
            if args.json else _report_text(report))
    _emit(text, getattr(args, "out", None))
    return 0 if report["summary"]["status"] == "pass" else 1


def _model(arg):
    """A model argument is a catalog name or a JSON file path."""
    try:
        return links.catalog(arg)
    except MgkError:
        if os.path.exists(arg):
            return links.load_link(arg)
        raise


def _alphabet_for(words, gens):
    if gens is not None:
        return milnor.default_alphabet(gens)
    top = 1
    for word in words:
        for g, _ in word.letters:
            if g.startswith("m") and g[1:].isdigit():
                top = max(top, int(g[1:]))
    return milnor.default_alphabet(top)


# -- subcommand handlers -------------------------------------------------------

def cmd_grope(args):
    if args.action == "class":
        print(gropes.grope_class(gropes.parse_tree(args.tree)))
        return 0
    if args.action == "boundary":
        tree = gropes.parse_tree(args.tree)
        names = [n.strip() for n in args.names.split(",")] if args.names else \
            ["m%d" % (i + 1) for i in range(len(gropes.leaf_paths(tree)))]
        print(gropes.boundary_expression(tree, names))
        return 0
    if args.action == "dot":
        tree = (gropes.parse_closed_tree(args.tree) if args.closed
                else gropes.parse_tree(args.tree))
        _emit(gropes.export_dot(tree), args.out)
        return 0
    if args.action == "duals":
        closed = gropes.parse_closed_tree(args.tree)
        k = gropes.grope_class(closed.body)
        tips = gropes.free_tips(closed)
        if args.tip:
            tips = [gropes.parse_tip_path(args.tip)]
        rows = []
        ok = True
        for tip in tips:
            dual = gropes.dual_tree(closed, tip)
            dc = gropes.dual_class(closed, tip)
            bound = dc >= k
            ok = ok and bound
            rows.append({"tip": gropes.format_tip_path(tip),
                         "dual": gropes.tree_text(dual.body),
                         "class": dc,
                         "bound": "%d >= %d %s" % (dc, k, "ok" if bound else "VIOLATED")})
        if args.json:
            payload = {"command": "grope duals", "input": args.tree,
                       "class": k, "rank": len(gropes.free_tips(closed)),
                       "duals": rows}
            _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
        else:
            lines = ["class %d, rank %d" % (k, len(gropes.free_tips(closed)))]
            lines += ["tip %-10s class %-3d %-12s %s"
                      % (r["tip"], r["class"], r["bound"], r["dual"]) for r in rows]
            _emit("\n".join(lines), args.out)
        return 0 if ok else 1
    raise AssertionError(args.action)


def cmd_milnor(args):
    words = [Word.parse(t) for t in args.words]
    alphabet = _alphabet_for(words, args.gens)

    def answer(result, code=0):
        if args.json:
            payload = {"command": "milnor %s" % args.action,
                       "input": args.words, "alphabet": list(alphabet),
                       "result": result}
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            print(result)
        return code

    if args.action == "expand":
        return answer(format_ring_element(milnor.magnus(words[0], alphabet)))
    if args.action == "nf":
        nf = milnor.normal_form(words[0], alphabet)
        if args.json:
            return answer({line.split(": ", 1)[0]: line.split(": ", 1)[1]
                           for line in nf.describe()})
        print("\n".join(nf.describe()))
        return 0
    if args.action == "equal":
        equal = milnor.words_equal(words[0], words[1], alphabet)
        answer("equal" if equal else "not equal")
        return 0 if equal else 1
    if args.action == "lcs-degree":
        deg = milnor.lcs_degree(words[0], alphabet)
        return answer("inf" if deg == float("inf") else deg)
    if args.action == "rinv":
        return answer(format_ring_element(milnor.r_inverse(words[0], alphabet)))
    raise AssertionError(args.action)


def cmd_link(args):
    model = _model(args.model)

    def answer(key, value):
        if args.json:
            print(json.dumps({"command": "link %s" % args.action,
                              "input": args.model, key: value},
                             indent=2, sort_keys=True))
        else:
            print(str(value).lower() if isinstance(value, bool) else value)
        return 0

    if args.action == "show":
        print(json.dumps(links.link_to_dict(model), indent=2, sort_keys=True))
        return 0
    if isinstance(model, links.SolidTorusLink):
        model = model.ambient_model()
    if args.action == "mu":
        if not args.index:
            raise MgkError("link mu needs --index i1,...,ik,j")
        idx = [int(p) if p.strip().isdigit() else p.strip()
               for p in args.index.split(",")]
        return answer("mu", links.mu_bar(model, idx))
    if args.action == "trivial":
        return answer("trivial", links.is_homotopically_trivial(model))
    if args.action == "almost-trivial":
        return answer("almost_trivial", links.is_almost_trivial(model))
    raise AssertionError(args.action)


def _composition_spec(args):
    lhat = _model(args.lhat)
    q = _model(args.q)
    if isinstance(lhat, links.SolidTorusLink):
        raise MgkError("the ambient link cannot be a solid-torus pattern")
    return composition.CompositionSpec(lhat, q, target=args.target)


def cmd_compose(args):
    composed = composition.compose(_composition_spec(args))
    text = json.dumps(links.link_to_dict(composed), indent=2, sort_keys=True)
    _emit(text, args.out)
    return 0


def cmd_certificate(args):
    cert = composition.essentiality_certificate(_composition_spec(args))
    ok = cert.c == cert.a * cert.b
    if args.json:
        print(json.dumps({"a": cert.a, "b": cert.b, "c": cert.c,
                          "c_equals_ab": ok}, indent=2, sort_keys=True))
    else:
        print("a = %d, b = %d, c = %d; c == a*b: %s"
              % (cert.a, cert.b, cert.c, str(ok).lower()))
    return 0 if ok else 1


def cmd_verify(args):
    config = verify.RunConfig(seed=args.seed, trials=args.trials,
                              max_generators=args.max_generators)
    if args.what == "all":
        return _finish_report(verify.run_all(config), args)
    if args.what == "sigma":
        lhat = _model(args.lhat)
        q = _model(args.q)
        report = composition.verify_sigma(
            composition.CompositionSpec(lhat, q, target=args.target),
            trials=config.trials, seed=config.seed)
        return _finish_report(report, args)
    if args.what == "certificate":
        case = verify.check_certificate(config)
        case["index"] = 0
        report = {"command": "verify certificate", "config": config.as_dict(),
                  "cases": [case],
                  "summary": {"total": 1,
                              "passed": int(case["status"] == "pass"),
                              "failed": int(case["status"] != "pass"),
                              "status": case["status"]}}
        return _finish_report(report, args)
    raise AssertionError(args.what)


# -- argument parsing ----------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="mgk",
        description="Exact computations with grope trees, free Milnor "
                    "groups, link invariants and link composition.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("grope", help="grope tree operations")
    g.add_argument("action", choices=["class", "duals", "boundary", "dot"])
    g.add_argument("tree", help="tree text, e.g. \"({* *})\"")
    g.add_argument("--names", help="comma-separated tip generator names")
    g.add_argument("--tip", help="tip path like 0L/1R (duals only)")
    g.add_argument("--closed", action="store_true",
                   help="treat the tree as closed (dot only)")
    g.add_argument("--json", action="store_true")
    g.add_argument("--out")
    g.set_defaults(func=cmd_grope)

    m = sub.add_parser("milnor", help="Milnor-group and ring operations")
    m.add_argument("action",
                   choices=["expand", "nf", "equal", "lcs-degree", "rinv"])
    m.add_argument("words", nargs="+", help="word text, e.g. \"[m2,m3]\"")
    m.add_argument("--gens", type=int,
                   help="alphabet size (default: largest mK in the input)")
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_milnor)

    l = sub.add_parser("link", help="link models and invariants")
    l.add_argument("action", choices=["mu", "trivial", "almost-trivial", "show"])
    l.add_argument("model", help="catalog name or JSON file")
    l.add_argument("--index", help="mu-bar indices, e.g. 2,3,1")
    l.add_argument("--json", action="store_true")
    l.set_defaults(func=cmd_link)

    c = sub.add_parser("compose", help="compose a pattern into a link")
    c.add_argument("lhat", help="ambient link (catalog name or JSON file)")
    c.add_argument("q", help="solid-torus pattern (catalog name or JSON file)")
    c.add_argument("--target", type=int, help="1-based target component")
    c.add_argument("--out")
    c.set_defaults(func=cmd_compose)

    e = sub.add_parser("certificate", help="essentiality certificate (a, b, c)")
    e.add_argument("lhat")
    e.add_argument("q")
    e.add_argument("--target", type=int)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_certificate)

    v = sub.add_parser("verify", help="randomized property sweeps")
    v.add_argument("what", choices=["sigma", "certificate", "all"])
    v.add_argument("--lhat", default="borromean")
    v.add_argument("--q", default="bing_double")
    v.add_argument("--target", type=int)
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-generators", type=int, default=6)
    v.add_argument("--json", action="store_true")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except (MgkError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
