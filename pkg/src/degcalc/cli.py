"""Command-line front end: ``degcalc <group> <command> ...``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage or parse
error (with the term grammar printed to stderr).
"""

import argparse
import json
import sys

from . import kb as kbmod
from .errors import DegreeError, ParseError
from .metaordinal import mo_cmp, mo_enumerate_below, mo_eval_at, mo_parse, mo_print, mo_succ
from .model import class_of, exact_degree, least, member, validate_rules
from .names import Kind, name_parse, name_print, name_to_term, term_to_name
from .ordinal import fund_seq, ord_add, ord_cmp, ord_mul, ord_parse, ord_print
from .sampling import make_rng
from .syntax import GRAMMAR_HELP


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(parser, top=False):
    default = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--format", choices=("text", "json"), default=default("text"),
                        help="output format (default: text)")
    parser.add_argument("--kb", default=default(None), metavar="PATH",
                        help="knowledge base file (default: bundled seed)")
    parser.add_argument("--seed", type=int, default=default(0), help="random seed for sampling commands")
    parser.add_argument("--samples", type=int, default=default(200), help="sample count for sampling commands")


def _leaf(sub, name, help_text, *args):
    p = sub.add_parser(name, help=help_text)
    for arg in args:
        p.add_argument(arg)
    _common(p)
    return p


def build_parser():
    parser = _Parser(prog="degcalc", description="Degrees of inaccessibility: terms, names, model and theorems.",
                     epilog=GRAMMAR_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    _common(parser, top=True)
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    ordp = groups.add_parser("ord", help="ordinal notations").add_subparsers(dest="cmd", required=True,
                                                                              parser_class=_Parser)
    _leaf(ordp, "cmp", "compare two ordinals", "a", "b")
    _leaf(ordp, "add", "ordinal sum a+b", "a", "b")
    _leaf(ordp, "mul", "ordinal product a*b", "a", "b")
    _leaf(ordp, "normalize", "print the normal form", "a")
    _leaf(ordp, "fund", "n-th term of the fundamental sequence", "k", "n")

    degp = groups.add_parser("deg", help="W-terms and degree names").add_subparsers(dest="cmd", required=True,
                                                                                    parser_class=_Parser)
    _leaf(degp, "cmp", "compare two W-terms", "s", "t")
    _leaf(degp, "succ", "successor term t+1", "t")
    _leaf(degp, "normalize", "print the normal form", "t")
    p = _leaf(degp, "name", "adjective name of a term", "t")
    p.add_argument("--kind", choices=("inaccessible", "Mahlo"), default="inaccessible")
    _leaf(degp, "unname", "term of an adjective name", "name")
    _leaf(degp, "enumerate", "n admissible terms below t with parameters below bound", "t", "bound", "n")
    _leaf(degp, "eval", "substitute the ordinal k for W", "t", "k")

    modp = groups.add_parser("model", help="canonical model").add_subparsers(dest="cmd", required=True,
                                                                              parser_class=_Parser)
    _leaf(modp, "member", "is k in the class of t-points", "t", "k")
    _leaf(modp, "least", "least t-point", "t")
    _leaf(modp, "degree", "exact degree of k", "k")
    _leaf(modp, "class", "closed form of the class of t-points", "t")
    _leaf(modp, "validate", "check operator rules against direct probes")

    kbp = groups.add_parser("kb", help="theorem knowledge base").add_subparsers(dest="cmd", required=True,
                                                                                parser_class=_Parser)
    _leaf(kbp, "implies", "does property a imply property b", "a", "b")
    _leaf(kbp, "separations", "separation theorems for a pair", "a", "b")
    _leaf(kbp, "validate", "integrity report")
    _leaf(kbp, "list", "list nodes and edges")
    return parser


# ------------------------------------------------------------------ commands

def _result(value, text=None, citations=(), path=()):
    return {"result": value, "citations": list(citations), "path": list(path)}, text


def _cmp_text(c):
    return ("LESS", "EQUAL", "GREATER")[int(c) + 1]


def _run_ord(args):
    if args.cmd == "cmp":
        return _result(_cmp_text(ord_cmp(ord_parse(args.a), ord_parse(args.b))))
    if args.cmd == "add":
        return _result(ord_print(ord_add(ord_parse(args.a), ord_parse(args.b))))
    if args.cmd == "mul":
        return _result(ord_print(ord_mul(ord_parse(args.a), ord_parse(args.b))))
    if args.cmd == "normalize":
        return _result(ord_print(ord_parse(args.a)))
    return _result(ord_print(fund_seq(ord_parse(args.k), _natural(args.n))))


def _natural(text):
    try:
        n = int(text)
    except ValueError:
        raise ParseError("expected a natural number", text, 0) from None
    if n < 0:
        raise ParseError("expected a natural number", text, 0)
    return n


def _run_deg(args):
    if args.cmd == "cmp":
        return _result(_cmp_text(mo_cmp(mo_parse(args.s), mo_parse(args.t))))
    if args.cmd == "succ":
        return _result(mo_print(mo_succ(mo_parse(args.t))))
    if args.cmd == "normalize":
        return _result(mo_print(mo_parse(args.t)))
    if args.cmd == "name":
        kind = Kind.parse(args.kind)
        return _result(name_print(term_to_name(mo_parse(args.t), kind)))
    if args.cmd == "unname":
        name = name_parse(args.name)
        out, _ = _result(mo_print(name_to_term(name)))
        out["kind"] = name.kind.value
        return out, out["result"]
    if args.cmd == "enumerate":
        terms = mo_enumerate_below(mo_parse(args.t), ord_parse(args.bound), _natural(args.n))
        values = [mo_print(t) for t in terms]
        return _result(values, "\n".join(values))
    return _result(ord_print(mo_eval_at(mo_parse(args.t), ord_parse(args.k))))


def _run_model(args):
    if args.cmd == "member":
        value = member(mo_parse(args.t), ord_parse(args.k))
        return _result(value, str(value).lower())
    if args.cmd == "least":
        return _result(ord_print(least(mo_parse(args.t))))
    if args.cmd == "degree":
        return _result(mo_print(exact_degree(ord_parse(args.k))))
    if args.cmd == "class":
        return _result(str(class_of(mo_parse(args.t))))
    report = validate_rules(make_rng(args.seed), args.samples)
    value = {rule: {"agree": a, "samples": n, "first_disagreement": bad} for rule, (a, n, bad) in report.items()}
    lines = [f"{rule}: {a}/{n}" + (f"  first disagreement {bad}" if bad else "")
             for rule, (a, n, bad) in report.items()]
    out = _result(value, "\n".join(lines))
    if any(a != n for a, n, _ in report.values()):
        _emit(args, out)
        raise _Failed()
    return out


class _Failed(Exception):
    pass


def _edge_line(e):
    flags = f" [{', '.join(e['flags'])}]" if e.get("flags") else ""
    return f"{e['kind']}: {e['from']} -> {e['to']}{flags}\n    {e['citation']}\n    \"{e['quote']}\""


def _step_line(s):
    line = f"  {s['kind']}: {s['from']} -> {s['to']}"
    if s["citation"]:
        line += f"\n      {s['citation']}"
    if s["quote"]:
        line += f"\n      \"{s['quote']}\""
    return line


def _run_kb(args):
    kb = kbmod.kb_load(args.kb)
    if args.cmd == "implies":
        res = kbmod.kb_implies(kb, args.a, args.b)
        cites = [s["citation"] for s in res.path if s["citation"]]
        text = "\n".join([str(res.holds).lower()] + [_step_line(s) for s in res.path])
        return _result(res.holds, text, cites, res.path)
    if args.cmd == "separations":
        edges = [e.to_dict() for e in kbmod.kb_separations(kb, args.a, args.b)]
        text = "\n".join(_edge_line(e) for e in edges) if edges else "none"
        return _result(edges, text, [e["citation"] for e in edges])
    if args.cmd == "validate":
        rep = kbmod.kb_validate(kb)
        value = {"violations": rep.violations, "equivalence_classes": rep.equivalence_classes}
        lines = [f"{len(kb.edges)} edges, {len(rep.violations)} violations"]
        lines += [f"  violation: {v}" for v in rep.violations]
        lines += [f"  equivalent: {' = '.join(c)}" for c in rep.equivalence_classes]
        out = _result(value, "\n".join(lines))
        if rep.violations:
            _emit(args, out)
            raise _Failed()
        return out
    listing = kbmod.kb_list(kb)
    lines = [f"node {n}" for n in listing["nodes"]] + [_edge_line(e) for e in listing["edges"]]
    return _result(listing, "\n".join(lines))


_DISPATCH = {"ord": _run_ord, "deg": _run_deg, "model": _run_model, "kb": _run_kb}


def _emit(args, out):
    obj, text = out
    if args.format == "json":
        print(json.dumps(obj, ensure_ascii=False))
    else:
        print(obj["result"] if text is None else text)


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as err:
        print(err, file=sys.stderr)
        print(GRAMMAR_HELP, file=sys.stderr, end="")
        return 2
    try:
        _emit(args, _DISPATCH[args.group](args))
    except _Failed:
        return 1
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        print(GRAMMAR_HELP, file=sys.stderr, end="")
        return 2
    except DegreeError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())
