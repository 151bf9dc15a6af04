"""
Reading and writing signatures, bigraphs and nets.

Signatures are line-based:

    control get free=1 binding=1
    control a free=0 binding=0 atomic

Bigraphs and nets are JSON documents; :func:`serialize_bigraph` and
:func:`serialize_net` write them canonically (sorted keys and lists, two-space indent).
"""
import json
import re
from pathlib import Path
from typing import Any, Optional, Union

from bignet import bigraph as bg
from bignet.bigraph import Bigraph, Edge, InnerName, OuterName, Place, Port
from bignet.formula import parse_formula, print_formula
from bignet.net import GenericNet, InvalidPortRef, NonTKOperation, make_net, parse_port_ref
from bignet.theory import BigSignature, Control, TheoryTK, make_signature
from bignet.util import BignetError


class FileFormatError(BignetError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


# Signatures

_control = re.compile(r"^control\s+(\S+)((?:\s+\S+)*)$")


def parse_signature(text: str) -> BigSignature:
    controls = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = _control.match(line)
        if not m:
            raise FileFormatError(f"expected 'control <name> free=<n> binding=<n> [atomic]': {line!r}", lineno)
        name, rest = m.group(1), m.group(2).split()
        arities = {}
        atomic = False
        for word in rest:
            if word == "atomic":
                atomic = True
                continue
            key, _, value = word.partition("=")
            if key not in ("free", "binding") or key in arities or not value.isdigit():
                raise FileFormatError(f"invalid arity {word!r}", lineno)
            arities[key] = int(value)
        if set(arities) != {"free", "binding"}:
            raise FileFormatError(f"control {name!r} needs both free= and binding=", lineno)
        controls.append(Control(name, arities["binding"], arities["free"], atomic))
    return make_signature(controls)


def parse_signature_file(path: Union[str, Path]) -> BigSignature:
    return parse_signature(Path(path).read_text("utf8"))


def serialize_signature(s: BigSignature) -> str:
    lines = [
        f"control {k.name} free={k.free} binding={k.binding}" + (" atomic" if k.atomic else "")
        for k in sorted(s.controls, key=lambda k: k.name)
    ]
    return "".join(line + "\n" for line in lines)


# JSON helpers

def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FileFormatError(f"invalid JSON: {e.msg}", e.lineno)
    if not isinstance(doc, dict):
        raise FileFormatError("expected a JSON object at the top level")
    return doc


def _dump(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _get(doc: dict, key: str, kind: type, where: str = "document") -> Any:
    if key not in doc:
        raise FileFormatError(f"{where} is missing key {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise FileFormatError(f"{where}: {key!r} must be a {kind.__name__}")
    return value


# Bigraphs

def _interface(doc: dict, key: str) -> bg.Interface:
    face = _get(doc, key, dict)
    width = _get(face, "width", int, key)
    loc = {}
    for entry in _get(face, "names", list, key):
        if not isinstance(entry, dict):
            raise FileFormatError(f"{key}: names must be objects with 'name' and 'loc'")
        name = _get(entry, "name", str, key)
        if name in loc:
            raise FileFormatError(f"{key}: duplicate name {name!r}")
        where = entry.get("loc")
        if where == "global":
            loc[name] = None
        elif isinstance(where, int) and not isinstance(where, bool):
            loc[name] = where
        else:
            raise FileFormatError(f"{key}: loc of {name!r} must be a site index or \"global\"")
    try:
        return bg.interface(width, loc)
    except bg.MalformedBigraph as e:
        raise FileFormatError(f"{key}: {e}")


def _place(text: str, kinds: tuple[str, ...]) -> Place:
    kind, _, key = text.partition(":")
    if kind not in kinds or not key:
        raise FileFormatError(f"invalid place {text!r}, expected one of {', '.join(k + ':...' for k in kinds)}")
    if kind == "node":
        return bg.node(key)
    if not key.isdigit():
        raise FileFormatError(f"invalid index in {text!r}")
    return Place(kind, int(key))


_port = re.compile(r"^port:(.+):(bind|free):(\d+)$")


def _point(text: str) -> bg.Point:
    m = _port.match(text)
    if m:
        return Port(m.group(1), m.group(2) == "bind", int(m.group(3)))
    if text.startswith("name:") and len(text) > 5:
        return InnerName(text[5:])
    raise FileFormatError(f"invalid link source {text!r}, expected port:<node>:<bind|free>:<k> or name:<x>")


def _link_target(text: str) -> bg.LinkTarget:
    kind, _, key = text.partition(":")
    if kind == "edge" and key:
        return Edge(key)
    if kind == "name" and key:
        return OuterName(key)
    raise FileFormatError(f"invalid link target {text!r}, expected edge:<id> or name:<y>")


def parse_bigraph(text: str, signature: BigSignature) -> Bigraph:
    """
    Parse and validate a bigraph document.

    Raises:
        FileFormatError: The document does not follow the schema.
        BignetError: The bigraph breaks one of the place graph, link graph or scope rules.
    """
    doc = _load(text)
    inner, outer = _interface(doc, "inner"), _interface(doc, "outer")
    ctrl = {}
    for entry in _get(doc, "nodes", list):
        if not isinstance(entry, dict):
            raise FileFormatError("nodes must be objects with 'id' and 'control'")
        v, k = _get(entry, "id", str, "node"), _get(entry, "control", str, "node")
        if v in ctrl:
            raise FileFormatError(f"duplicate node {v!r}")
        if k not in signature:
            raise FileFormatError(f"node {v!r} has undeclared control {k!r}")
        ctrl[v] = signature[k]
    edges = _get(doc, "edges", list)
    if not all(isinstance(e, str) for e in edges) or len(set(edges)) != len(edges):
        raise FileFormatError("edges must be a list of distinct strings")
    prnt = {
        _place(child, ("site", "node")): _place(parent, ("node", "root"))
        for child, parent in _get(doc, "prnt", dict).items()
    }
    link = {_point(point): _link_target(target) for point, target in _get(doc, "link", dict).items()}
    return bg.make_bigraph(inner, outer, ctrl, edges, prnt, link)


def parse_bigraph_file(path: Union[str, Path], signature: BigSignature) -> Bigraph:
    return parse_bigraph(Path(path).read_text("utf8"), signature)


def _place_text(p: Place) -> str:
    return f"{p.kind}:{p.key}"


def _point_text(p: bg.Point) -> str:
    if isinstance(p, Port):
        return f"port:{p.node}:{'bind' if p.binding else 'free'}:{p.index}"
    return f"name:{p.name}"


def _target_text(t: bg.LinkTarget) -> str:
    return f"edge:{t.id}" if isinstance(t, Edge) else f"name:{t.name}"


def bigraph_document(g: Bigraph) -> dict:
    def face(u: bg.Interface) -> dict:
        return {
            "width": u.width,
            "names": [{"name": x, "loc": "global" if i is None else i} for x, i in u.loc],
        }

    return {
        "inner": face(g.dom),
        "outer": face(g.cod),
        "nodes": [{"id": v, "control": g.ctrl[v].name} for v in g.nodes],
        "edges": sorted(g.edges),
        "prnt": {_place_text(c): _place_text(p) for c, p in g.prnt.items()},
        "link": {_point_text(p): _target_text(t) for p, t in g.link.items()},
    }


def serialize_bigraph(g: Bigraph) -> str:
    return _dump(bigraph_document(g))


# Nets

def parse_net(text: str, theory: TheoryTK, *, validate: bool = True) -> GenericNet:
    """
    Parse a net document: `dom` and `cod` formulas, `cells` as operation names,
    and `wires` as `{"from": <port>, "to": <port>}` objects.

    Raises:
        FileFormatError: The document does not follow the schema.
        FormulaSyntaxError: A formula does not parse.
        NonTKOperation: A cell names an operation outside of `theory`.
        BignetError: The wiring breaks the polarity, sort or unit rules.
    """
    doc = _load(text)
    dom = parse_formula(_get(doc, "dom", str))
    cod = parse_formula(_get(doc, "cod", str))
    cells = []
    for name in _get(doc, "cells", list):
        if not isinstance(name, str):
            raise FileFormatError("cells must be a list of operation names")
        if name not in theory:
            raise NonTKOperation(name)
        cells.append(theory[name])
    wires = set()
    for entry in _get(doc, "wires", list):
        if not isinstance(entry, dict):
            raise FileFormatError("wires must be objects with 'from' and 'to'")
        try:
            wire = (parse_port_ref(_get(entry, "from", str, "wire")), parse_port_ref(_get(entry, "to", str, "wire")))
        except InvalidPortRef as e:
            raise FileFormatError(str(e))
        if wire in wires:
            raise FileFormatError(f"duplicate wire {wire[0]} -> {wire[1]}")
        wires.add(wire)
    return make_net(dom, cod, cells, wires, validate=validate)


def parse_net_file(path: Union[str, Path], theory: TheoryTK) -> GenericNet:
    return parse_net(Path(path).read_text("utf8"), theory)


def net_document(n: GenericNet) -> dict:
    return {
        "dom": print_formula(n.dom),
        "cod": print_formula(n.cod),
        "cells": [c.name for c in n.cells],
        "wires": [{"from": str(s), "to": str(t)} for s, t in n.sorted_wires()],
    }


def serialize_net(n: GenericNet) -> str:
    return _dump(net_document(n))
