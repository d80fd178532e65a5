"""Knowledge base of large-cardinal properties and the theorems relating them.

A KB is a JSON document with two arrays::

    {"nodes": [{"id", "display", "family", "parameter", "monotone", "flags"}, ...],
     "edges": [{"from", "to", "kind", "citation", "quote", "flags", "separates"?}, ...]}

``parameter`` is null, ``"ordinal"``, ``"meta-ordinal"`` or ``"ordinal-pair"``.
A monotone node is downward closed in its parameter: ``p(t)`` implies
``p(s)`` for ``s < t`` (for pairs, in the second component with the first
fixed).

Edge endpoints are node references ``id`` or ``id(param)``.  A parameter is
a value, ``*`` (every value), ``$x`` or ``$x+1``; pair parameters are
written ``a,b``.  Edge kinds are ``Implies``, ``Equivalent``,
``SeparatedByForcing`` (from the stronger property to the weaker one) and
``NonSeparable`` (a proven impossibility of separating the two).
"""

import json
import re
from collections import deque
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional, Tuple

import networkx as nx

from .errors import BadParameter, CycleError, DanglingRef, ParseError, SchemaError, UnknownNode
from .metaordinal import MetaOrdinal, mo_cmp, mo_parse, mo_print
from .ordinal import is_successor, ord_cmp, ord_parse, ord_pred, ord_print, ord_succ

PARAMETER_TYPES = (None, "ordinal", "meta-ordinal", "ordinal-pair")
EDGE_KINDS = ("Implies", "Equivalent", "SeparatedByForcing", "NonSeparable")
FAMILIES = ("inaccessible-degrees", "mahlo-degrees", "reflection", "compactness", "measurability",
            "supercompactness", "hugeness", "worldliness")


class _Top:
    """The parameter value ``*``: the property holds at every parameter."""

    def __repr__(self):
        return "*"


TOP = _Top()


# ------------------------------------------------------------------ records

@dataclass(frozen=True)
class PropertyNode:
    id: str
    display: str
    family: str
    parameter: Optional[str] = None
    monotone: bool = False
    flags: Tuple[str, ...] = ()
    monotone_citation: str = ""
    monotone_quote: str = ""


@dataclass(frozen=True)
class NodeRef:
    """A parsed node reference; ``pattern`` is None for unparameterized nodes."""

    id: str
    text: str
    pattern: object = None

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class TheoremEdge:
    source: NodeRef
    target: NodeRef
    kind: str
    citation: str
    quote: str
    flags: Tuple[str, ...] = ()
    separates: Optional[Tuple[NodeRef, NodeRef]] = None

    def to_dict(self):
        d = {"from": str(self.source), "to": str(self.target), "kind": self.kind,
             "citation": self.citation, "quote": self.quote, "flags": list(self.flags)}
        if self.separates:
            d["separates"] = [str(r) for r in self.separates]
        return d


@dataclass
class KnowledgeBase:
    nodes: dict
    edges: Tuple[TheoremEdge, ...]

    def node(self, node_id):
        try:
            return self.nodes[node_id]
        except KeyError:
            raise UnknownNode(f"unknown node {node_id!r}") from None


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    equivalence_classes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


@dataclass
class Implication:
    holds: bool
    path: list = field(default_factory=list)

    def __bool__(self):
        return self.holds


# --------------------------------------------------------- parameter values

def _parse_value(kind, text):
    if kind == "ordinal":
        return ord_parse(text)
    if kind == "meta-ordinal":
        return mo_parse(text)
    raise ValueError(kind)


def _split_top_level(text):
    depth, parts, start = 0, [], 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


_VAR = re.compile(r"^\$?([A-Za-z_][A-Za-z0-9_]*)\s*(\+\s*1)?$")
_RESERVED = {"w", "W", "phi"}


def _parse_atom(kind, text):
    if text == "*":
        return ("any",)
    m = _VAR.match(text)
    if m and (text.startswith("$") or m.group(1) not in _RESERVED):
        return ("var", m.group(1), 1 if m.group(2) else 0)
    return ("const", _parse_value(kind, text))


def parse_pattern(kind, text):
    if kind == "ordinal-pair":
        if text == "*":
            return ("pair", ("any",), ("any",))
        parts = _split_top_level(text)
        if len(parts) != 2:
            raise ParseError("a pair parameter needs two components", text, 0)
        return ("pair", _parse_atom("ordinal", parts[0]), _parse_atom("ordinal", parts[1]))
    return _parse_atom(kind, text)


_REF = re.compile(r"^\s*([A-Za-z0-9_-]+?)\s*(?:\((.*)\))?\s*$", re.S)


def parse_ref(kb, text, allow_unknown=False):
    """Parse ``id`` / ``id(param)`` against the node table of ``kb``."""
    m = _REF.match(text)
    if not m:
        raise ParseError("malformed node reference", text, 0)
    node_id, param = m.group(1), m.group(2)
    node = kb.nodes.get(node_id)
    if node is None:
        if allow_unknown:
            return NodeRef(node_id, text.strip(), None)
        raise UnknownNode(f"unknown node {node_id!r}")
    if node.parameter is None:
        if param is not None:
            raise BadParameter(f"{node_id} takes no parameter")
        return NodeRef(node_id, node_id, None)
    if param is None or not param.strip():
        raise BadParameter(f"{node_id} needs a {node.parameter} parameter")
    try:
        pattern = parse_pattern(node.parameter, param.strip())
    except ParseError as err:
        raise BadParameter(f"bad parameter for {node_id}: {err}") from None
    return NodeRef(node_id, f"{node_id}({param.strip()})", pattern)


def _cmp_values(kind, a, b):
    if kind == "ordinal":
        return ord_cmp(a, b)
    return mo_cmp(a, b)


def _pred_value(kind, v):
    if kind == "meta-ordinal":
        if not is_successor(v.constant):
            return None
        return MetaOrdinal(v.terms, ord_pred(v.constant))
    return ord_pred(v) if is_successor(v) else None


def _succ_value(kind, v):
    if kind == "meta-ordinal":
        return MetaOrdinal(v.terms, ord_succ(v.constant))
    return ord_succ(v)


def format_value(v):
    if v is None:
        return ""
    if v is TOP:
        return "*"
    if isinstance(v, tuple):
        return ",".join(format_value(x) for x in v)
    if isinstance(v, MetaOrdinal):
        return mo_print(v)
    return ord_print(v)


def format_instance(node_id, v):
    return node_id if v is None else f"{node_id}({format_value(v)})"


# ------------------------------------------------------------------- loading

def _require(d, key, types, where):
    if key not in d:
        raise SchemaError(where, f"missing field {key!r}")
    if not isinstance(d[key], types):
        raise SchemaError(where, f"field {key!r} has the wrong type")
    return d[key]


def _load_node(d, i):
    where = f"nodes[{i}]"
    if not isinstance(d, dict):
        raise SchemaError(where, "expected an object")
    node_id = _require(d, "id", str, where)
    if not re.fullmatch(r"[A-Za-z0-9_-]+", node_id):
        raise SchemaError(where, f"invalid id {node_id!r}")
    param = d.get("parameter")
    if param not in PARAMETER_TYPES:
        raise SchemaError(where, f"parameter must be one of {PARAMETER_TYPES}")
    family = _require(d, "family", str, where)
    if family not in FAMILIES:
        raise SchemaError(where, f"unknown family {family!r}")
    flags = d.get("flags", [])
    if not isinstance(flags, list):
        raise SchemaError(where, "flags must be a list")
    return PropertyNode(node_id, _require(d, "display", str, where), family, param,
                        bool(d.get("monotone", False)), tuple(flags),
                        d.get("monotone_citation", ""), d.get("monotone_quote", ""))


def _load_edge(kb, d, i):
    where = f"edges[{i}]"
    if not isinstance(d, dict):
        raise SchemaError(where, "expected an object")
    kind = _require(d, "kind", str, where)
    if kind not in EDGE_KINDS:
        raise SchemaError(where, f"kind must be one of {EDGE_KINDS}")
    refs = []
    for key in ("from", "to"):
        text = _require(d, key, str, where)
        try:
            ref = parse_ref(kb, text)
        except UnknownNode as err:
            raise DanglingRef(f"{where}.{key}: {err}") from None
        except (BadParameter, ParseError) as err:
            raise SchemaError(f"{where}.{key}", str(err)) from None
        refs.append(ref)
    separates = d.get("separates")
    if separates is not None:
        if not (isinstance(separates, list) and len(separates) == 2 and all(isinstance(s, str) for s in separates)):
            raise SchemaError(where, "separates must be a list of two node references")
        try:
            separates = tuple(parse_ref(kb, s) for s in separates)
        except UnknownNode as err:
            raise DanglingRef(f"{where}.separates: {err}") from None
    flags = d.get("flags", [])
    if not isinstance(flags, list):
        raise SchemaError(where, "flags must be a list")
    return TheoremEdge(refs[0], refs[1], kind, _require(d, "citation", str, where),
                       _require(d, "quote", str, where), tuple(flags), separates)


def kb_from_dict(data, check_cycles=True):
    if not isinstance(data, dict):
        raise SchemaError("<root>", "expected an object")
    for key in ("nodes", "edges"):
        if not isinstance(data.get(key), list):
            raise SchemaError("<root>", f"missing array {key!r}")
    nodes = {}
    for i, d in enumerate(data["nodes"]):
        node = _load_node(d, i)
        if node.id in nodes:
            raise SchemaError(f"nodes[{i}]", f"duplicate id {node.id!r}")
        nodes[node.id] = node
    kb = KnowledgeBase(nodes, ())
    kb.edges = tuple(_load_edge(kb, d, i) for i, d in enumerate(data["edges"]))
    if check_cycles:
        cycle = _find_cycle(kb)
        if cycle:
            raise CycleError("strict implication cycle: " + " -> ".join(cycle))
    return kb


def kb_load(path=None):
    """Load a KB file, or the bundled seed KB when ``path`` is None."""
    if path is None:
        text = resources.files("degcalc").joinpath("data/seed_kb.json").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(str(path or "seed"), f"invalid JSON ({err})") from None
    return kb_from_dict(data)


# -------------------------------------------------------------- validation

def _implication_graph(kb):
    """Node-level graph of Implies edges with Equivalent classes merged."""
    uf = nx.utils.UnionFind(kb.nodes)
    for e in kb.edges:
        if e.kind == "Equivalent":
            uf.union(e.source.id, e.target.id)
    g = nx.DiGraph()
    g.add_nodes_from(uf[n] for n in kb.nodes)
    for e in kb.edges:
        if e.kind == "Implies":
            a, b = uf[e.source.id], uf[e.target.id]
            if a != b:  # a family implying itself at other parameters is monotonicity
                g.add_edge(a, b)
    return g, uf


def _find_cycle(kb):
    g, _ = _implication_graph(kb)
    try:
        cycle = nx.find_cycle(g)
    except nx.NetworkXNoCycle:
        return None
    return [a for a, _ in cycle] + [cycle[0][0]]


def _pattern_vars(pattern):
    if pattern is None or pattern[0] in ("any", "const"):
        return {}
    if pattern[0] == "var":
        return {pattern[1]: pattern[2]}
    out = {}
    for sub in pattern[1:]:
        out.update(_pattern_vars(sub))
    return out


def kb_validate(kb):
    """Check quotes, citations, acyclicity and parameter patterns."""
    report = ValidationReport()
    for i, e in enumerate(kb.edges):
        label = f"edges[{i}] {e.source} -> {e.target}"
        if not e.quote.strip():
            report.violations.append(f"{label}: missing quote")
        if not e.citation.strip():
            report.violations.append(f"{label}: missing citation")
        src_vars, dst_vars = _pattern_vars(e.source.pattern), _pattern_vars(e.target.pattern)
        unbound = set(dst_vars) - set(src_vars)
        if unbound and e.kind in ("Implies", "Equivalent"):
            report.violations.append(f"{label}: variables {sorted(unbound)} not bound by the source")
        if e.kind in ("Implies", "Equivalent") and (any(dst_vars.values()) or any(src_vars.values())):
            report.violations.append(f"{label}: '+1' patterns are only meaningful in separations")
        if e.kind == "Equivalent" and (_has_any(e.source.pattern) or _has_any(e.target.pattern)):
            report.violations.append(f"{label}: '*' cannot appear in an equivalence")
    cycle = _find_cycle(kb)
    if cycle:
        report.violations.append("strict implication cycle: " + " -> ".join(cycle))
    # equivalence classes among unparameterized nodes
    g = nx.Graph()
    for e in kb.edges:
        if e.kind == "Equivalent" and e.source.pattern is None and e.target.pattern is None:
            g.add_edge(e.source.id, e.target.id)
    report.equivalence_classes = sorted(sorted(c) for c in nx.connected_components(g))
    return report


def _has_any(pattern):
    if pattern is None:
        return False
    if pattern[0] == "any":
        return True
    return pattern[0] == "pair" and any(_has_any(p) for p in pattern[1:])


# -------------------------------------------------------------- implication
#
# Search states are (node id, value) where value is None, TOP or a concrete
# parameter.  Values only ever come from edge constants and the query, so the
# state space is finite.

def _value_leq(node, u, w):
    """Does the instance at value ``w`` entail the instance at ``u``?"""
    if u == w or w is TOP:
        return True
    if u is TOP:
        return False
    if node.parameter == "ordinal-pair":
        return _comp_leq(u[0], w[0], False) and _comp_leq(u[1], w[1], node.monotone)
    return node.monotone and _cmp_values(node.parameter, u, w) <= 0


def _comp_leq(u, w, monotone):
    if u == w or w is TOP:
        return True
    return monotone and u is not TOP and ord_cmp(u, w) <= 0


def _component(v, i):
    return TOP if v is TOP else v[i]


def _bind(env, name, value):
    if name in env:
        return env if env[name] == value else None
    return {**env, name: value}


def _match_source(kind, pattern, v, env, monotone=False, candidates=()):
    """Match a source pattern against state value ``v``; returns the possible envs.

    On a monotone parameter the state also holds at every smaller value, so
    a variable may bind to any candidate below ``v`` as well as to ``v``.
    """
    if pattern[0] == "pair":
        envs = [env]
        for i, sub in enumerate(pattern[1:]):
            envs = [out for e in envs
                    for out in _match_source("ordinal", sub, _component(v, i), e, monotone and i == 1, candidates)]
        return envs
    if pattern[0] == "any":
        return [env] if v is TOP else []
    if pattern[0] == "var":
        _, name, offset = pattern
        if offset and v is not TOP:
            v = _pred_value(kind, v)
            if v is None:
                return []
        values = [v]
        if monotone and v is not TOP and not offset:
            values += [u for u in candidates.get(kind, ()) if _cmp_values(kind, u, v) < 0]
        return [out for out in (_bind(env, name, u) for u in values) if out is not None]
    return [env]  # constants are checked by entailment before matching


def _instantiate(kind, pattern, env):
    if pattern is None:
        return None
    if pattern[0] == "pair":
        return tuple(_instantiate("ordinal", sub, env) for sub in pattern[1:])
    if pattern[0] == "any":
        return TOP
    if pattern[0] == "const":
        return pattern[1]
    v = env[pattern[1]]
    if pattern[2] and v is not TOP:
        v = _succ_value(kind, v)
    return v


def _source_entailed(node, pattern, v):
    """Is the constant part of ``pattern`` entailed by the state value ``v``?"""
    if pattern is None:
        return v is None
    if pattern[0] == "const":
        return _value_leq(node, pattern[1], v)
    if pattern[0] == "pair":
        return all(sub[0] != "const" or _comp_leq(sub[1], _component(v, i), node.monotone and i == 1)
                   for i, sub in enumerate(pattern[1:]))
    return True


def _directed(kb):
    for e in kb.edges:
        if e.kind == "Implies":
            yield e, e.source, e.target
        elif e.kind == "Equivalent":
            yield e, e.source, e.target
            yield e, e.target, e.source


def _step(kind, src, dst, citation="", quote=""):
    return {"kind": kind, "from": src, "to": dst, "citation": citation, "quote": quote}


def _successors(kb, state, candidates):
    node_id, v = state
    node = kb.nodes[node_id]
    for e, src, dst in _directed(kb):
        if src.id != node_id or not _source_entailed(node, src.pattern, v):
            continue
        envs = [{}] if src.pattern is None else _match_source(node.parameter, src.pattern, v, {},
                                                              node.monotone, candidates)
        for env in envs:
            target_node = kb.nodes[dst.id]
            w = _instantiate(target_node.parameter, dst.pattern, env)
            at = _normal(_instantiate(node.parameter, src.pattern, env))
            steps = []
            if at != v:
                steps.append(_monotone_step(node, v, at))
            steps.append(_step(e.kind, format_instance(node_id, at), format_instance(dst.id, w),
                               e.citation, e.quote))
            yield (dst.id, _normal(w)), steps


def _normal(v):
    return TOP if isinstance(v, tuple) and all(x is TOP for x in v) else v


def _candidates(kb, goal_value):
    """Parameter values a variable may usefully bind to: edge constants and the goal's."""
    out = {"ordinal": [], "meta-ordinal": []}

    def add(x):
        if isinstance(x, tuple):
            for y in x:
                add(y)
        elif isinstance(x, MetaOrdinal):
            out["meta-ordinal"].append(x)
        elif x is not None and x is not TOP:
            out["ordinal"].append(x)

    def walk(p):
        if p is None:
            return
        if p[0] == "const":
            add(p[1])
        elif p[0] == "pair":
            for sub in p[1:]:
                walk(sub)

    add(goal_value)
    for e in kb.edges:
        walk(e.source.pattern)
        walk(e.target.pattern)
    return out


def _monotone_step(node, w, u):
    how = "instance of a universal" if w is TOP else "parameter monotonicity"
    return _step(how, format_instance(node.id, w), format_instance(node.id, u),
                 node.monotone_citation or f"{node.display} is downward closed in its parameter",
                 node.monotone_quote)


def _instance(kb, ref):
    node = kb.node(ref.id)
    p = ref.pattern
    if p is None:
        return node.id, None
    if p[0] == "pair":
        if any(sub[0] == "var" for sub in p[1:]):
            raise BadParameter("implication queries need concrete parameters or '*'")
        return node.id, (TOP if all(sub[0] == "any" for sub in p[1:]) else
                         tuple(sub[1] if sub[0] == "const" else TOP for sub in p[1:]))
    if p[0] == "var":
        raise BadParameter("implication queries need concrete parameters or '*'")
    return node.id, (TOP if p[0] == "any" else p[1])


def kb_implies(kb, a, b):
    """Does instance ``a`` imply instance ``b``?  Returns the citation path."""
    a = parse_ref(kb, a) if isinstance(a, str) else a
    b = parse_ref(kb, b) if isinstance(b, str) else b
    start, goal = _instance(kb, a), _instance(kb, b)
    if isinstance(start[1], tuple) and TOP in start[1] or isinstance(goal[1], tuple) and TOP in goal[1]:
        raise BadParameter("pair parameters must be fully concrete or '*'")
    goal_node = kb.nodes[goal[0]]
    candidates = _candidates(kb, goal[1])
    parents = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state[0] == goal[0] and _value_leq(goal_node, goal[1], state[1]):
            return Implication(True, _unwind(parents, state, goal_node, goal[1]))
        for nxt, steps in _successors(kb, state, candidates):
            if nxt not in parents:
                parents[nxt] = (state, steps)
                queue.append(nxt)
    return Implication(False, [])


def _unwind(parents, state, goal_node, goal_value):
    path = []
    if state[1] != goal_value:
        path.append(_monotone_step(goal_node, state[1], goal_value))
    while parents[state] is not None:
        state, steps = parents[state]
        path[:0] = steps
    return path


# -------------------------------------------------------------- separations

def _unify(kind, edge_pat, query_pat, env):
    if edge_pat is None or query_pat is None:
        return env if edge_pat is None and query_pat is None else None
    if edge_pat[0] == "pair":
        if query_pat[0] != "pair":
            return None
        for e_sub, q_sub in zip(edge_pat[1:], query_pat[1:]):
            env = _unify("ordinal", e_sub, q_sub, env)
            if env is None:
                return None
        return env
    if edge_pat[0] == "any":
        return env
    if query_pat[0] == "any":
        return None
    if edge_pat[0] == "const":
        return env if query_pat[0] == "const" and query_pat[1] == edge_pat[1] else None
    _, name, offset = edge_pat
    if query_pat[0] == "const":
        v = query_pat[1]
        if offset:
            v = _pred_value(kind, v)
            if v is None:
                return None
        return _bind(env, name, ("val", v))
    _, qname, qoffset = query_pat
    return _bind(env, name, ("sym", qname, qoffset - offset))


def _edge_pairs(e):
    yield e.source, e.target
    if e.separates:
        yield e.separates


def kb_separations(kb, a, b):
    """Separation (and non-separability) theorems for the unordered pair ``{a, b}``."""
    a = parse_ref(kb, a) if isinstance(a, str) else a
    b = parse_ref(kb, b) if isinstance(b, str) else b
    found = []
    for e in kb.edges:
        if e.kind not in ("SeparatedByForcing", "NonSeparable"):
            continue
        if any(_pair_matches(kb, p, q, a, b) or _pair_matches(kb, p, q, b, a) for p, q in _edge_pairs(e)):
            found.append(e)
    return found


def _pair_matches(kb, p, q, x, y):
    if p.id != x.id or q.id != y.id:
        return False
    env = _unify(kb.nodes[p.id].parameter, p.pattern, x.pattern, {})
    return env is not None and _unify(kb.nodes[q.id].parameter, q.pattern, y.pattern, env) is not None


def kb_list(kb):
    return {"nodes": [n.id for n in kb.nodes.values()], "edges": [e.to_dict() for e in kb.edges]}


__all__ = [
    "Implication", "KnowledgeBase", "NodeRef", "PropertyNode", "TheoremEdge", "TOP",
    "ValidationReport", "format_instance", "format_value", "kb_from_dict", "kb_implies", "kb_list",
    "kb_load", "kb_separations", "kb_validate", "parse_ref",
]
