"""
Export nets and bigraphs as graphviz DOT.

Render with e.g. `dot -Tsvg -O net.gv`. Vertex names only depend on the input's
structure, so exporting the same value twice gives identical text.
"""
from bignet import bigraph as bg
from bignet.bigraph import Bigraph
from bignet.formula import UNIT
from bignet.net import GenericNet, PortRef, Site


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _record_label(s: str) -> str:
    for c in "{}|<>":
        s = s.replace(c, "\\" + c)
    return s


def _field(ref: PortRef) -> str:
    return ("d" if ref.site in (Site.Dom, Site.CellDom) else "c") + (ref.path or "e")


def _net_vertex(ref: PortRef) -> str:
    if ref.site is Site.Dom:
        return f"dom:{_field(ref)}"
    if ref.site is Site.Cod:
        return f"cod:{_field(ref)}"
    return f"cell{ref.cell}:{_field(ref)}"


def net_to_dot(n: GenericNet) -> str:
    """
    Cells become record vertices with one field per port, domain ports on top and codomain
    ports below. Wires are edges from source to target; `I` wires are dotted.
    """
    lines = ["digraph net {", "\tnode [shape=record];"]

    def fields(refs: list[PortRef]) -> str:
        return "|".join(f"<{_field(r)}> {_record_label(n.label(r))}" for r in refs)

    by_site: dict[tuple, list[PortRef]] = {}
    for port in n.ports:
        by_site.setdefault((port.ref.site, port.ref.cell), []).append(port.ref)

    lines.append(f"\tdom [label={_quote('{' + fields(by_site[(Site.Dom, None)]) + '}')}];")
    for i, c in enumerate(n.cells):
        ins = fields(by_site.get((Site.CellDom, i), []))
        outs = fields(by_site.get((Site.CellCod, i), []))
        label = "{{" + ins + "}|" + _record_label(c.name) + "|{" + outs + "}}"
        lines.append(f"\tcell{i} [label={_quote(label)}];")
    lines.append(f"\tcod [label={_quote('{' + fields(by_site[(Site.Cod, None)]) + '}')}];")

    for s, t in n.sorted_wires():
        style = " [style=dotted]" if n.label(s) == UNIT else ""
        lines.append(f"\t{_net_vertex(s)} -> {_net_vertex(t)}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bigraph_to_dot(g: Bigraph) -> str:
    """
    Parent edges point from child to parent. Edges and names become small vertices,
    and links from binding ports are drawn bold.
    """
    lines = ["digraph bigraph {"]
    for j in range(g.cod.width):
        lines.append(f"\t{_quote(f'root:{j}')} [shape=box, style=dashed, label={_quote(str(j))}];")
    for v in g.nodes:
        lines.append(f"\t{_quote(f'node:{v}')} [shape=ellipse, label={_quote(f'{v}: {g.ctrl[v].name}')}];")
    for i in range(g.dom.width):
        lines.append(f"\t{_quote(f'site:{i}')} [shape=box, style=filled, fillcolor=lightgrey, label={_quote(str(i))}];")
    for e in sorted(g.edges):
        lines.append(f"\t{_quote(f'edge:{e}')} [shape=point, xlabel={_quote(e)}];")
    for x in g.dom.names:
        lines.append(f"\t{_quote(f'inner:{x}')} [shape=plaintext, label={_quote(x)}];")
    for y in g.cod.names:
        lines.append(f"\t{_quote(f'outer:{y}')} [shape=plaintext, label={_quote(y)}];")

    for child, parent in sorted(g.prnt.items()):
        lines.append(f"\t{_quote(str(child.kind) + ':' + str(child.key))} -> "
                     f"{_quote(str(parent.kind) + ':' + str(parent.key))} [arrowhead=empty];")

    def target(t: bg.LinkTarget) -> str:
        return _quote(f"edge:{t.id}" if isinstance(t, bg.Edge) else f"outer:{t.name}")

    for p in g.ports():
        style = "bold" if p.binding else "solid"
        lines.append(f"\t{_quote(f'node:{p.node}')} -> {target(g.link[p])} "
                     f"[dir=none, style={style}, taillabel={_quote(str(p.index))}];")
    for x in g.dom.names:
        lines.append(f"\t{_quote(f'inner:{x}')} -> {target(g.link[bg.InnerName(x)])} [dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
